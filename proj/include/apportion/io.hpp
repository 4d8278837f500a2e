#pragma once
/**
 * @file io.hpp
 * @brief Vote and quota files, and the JSON shapes used in reports.
 *
 * Vote files: CSV with a `party,votes` header, or JSON
 *   {"seats": M, "parties": [{"name": "A", "votes": 320}, ...]}
 * Quota files: JSON {"seats": M, "quotas": ["65.91", ...], "names": [...]}.
 * Quotas must be decimal strings; JSON floats are rejected so nothing inexact gets in.
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "apportion/conditions.hpp"
#include "apportion/core.hpp"
#include "apportion/method.hpp"
#include "apportion/paradox.hpp"

namespace apportion {

using Json = nlohmann::json;

struct VotesFile {
  std::vector<std::string> names;
  std::vector<BigInt> votes;
  std::optional<std::int64_t> seats;
};

struct QuotasFile {
  std::vector<std::string> names;
  std::vector<std::string> decimals;
  std::optional<std::int64_t> seats;
};

/// `source` names the input in error messages.
VotesFile parse_votes_csv(std::string_view text, const std::string& source = "csv");
VotesFile parse_votes_json(std::string_view text, const std::string& source = "json");
QuotasFile parse_quotas_json(std::string_view text, const std::string& source = "json");

std::string read_text(const std::filesystem::path& path);

enum class VotesFormat { Csv, Json };

/// The seat count comes from `seats_flag` if given, else from the file. When both are
/// present and differ, the flag wins and a warning is appended.
ElectionProblem read_votes(const std::filesystem::path& path, VotesFormat format,
                           std::optional<std::int64_t> seats_flag, std::vector<std::string>& warnings);
QuotaVector read_quotas(const std::filesystem::path& path, std::optional<std::int64_t> seats_flag,
                        std::vector<std::string>& warnings);

// Report shapes. Integers that fit in int64 are JSON numbers, larger ones are strings;
// rationals are {"num": "...", "den": "...", "decimal": "..."}.
Json integer_json(const BigInt& value);
Json rational_json(const Rational& value);
Json seats_json(const SeatVector& m);
Json input_json(const ApportionInput& input);
Json result_json(const ApportionmentResult& result);
Json condition_json(const ConditionReport& report);
Json finding_json(const ParadoxFinding& finding);
Json scenario_fixture_json(const std::vector<Scenario>& scenarios);

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

/// {"schema", "schema_version", "tool_version", "command", "input", "results",
///  "conditions", "findings", "seed"}; `seed` is null when nothing random ran.
Json make_report(std::string_view command, Json input, Json results, Json conditions, Json findings,
                 std::optional<std::uint64_t> seed);

}  // namespace apportion
