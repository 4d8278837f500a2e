#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apportion/conditions.hpp"
#include "apportion/method.hpp"

namespace apportion {

/// One worked example: an input, a method, and the allocation it must produce.
/// `quota_decimals`, when set, is how the exact quotas must print at `quota_digits` places.
struct ScenarioCase {
  std::string label;
  ApportionInput input;
  MethodSpec method;
  SeatVector expected;
  std::vector<std::string> quota_decimals = {};
  unsigned quota_digits = 6;
  Rational::Rounding quota_rounding = Rational::Rounding::Truncate;
};

struct Scenario {
  std::string id;
  std::string title;
  std::vector<ScenarioCase> cases;
};

const std::vector<Scenario>& builtin_scenarios();

struct ParadoxFinding {
  enum class Kind { Alabama, NewState, Instability, MajorityViolation, VoteStability };

  Kind kind;
  MethodSpec method;
  ApportionInput before_input;
  ApportionInput after_input;
  SeatVector before;
  SeatVector after;
  std::vector<std::size_t> parties;  // 0-based, as numbered in after_input
  std::string trigger;
};

std::string_view to_string(ParadoxFinding::Kind kind);

/// Re-runs the method on both stored inputs; true when the stored allocations come back.
bool replay(const ParadoxFinding& finding);

struct CaseOutcome {
  std::string scenario;
  std::string label;
  std::string method;
  SeatVector expected;
  std::optional<SeatVector> actual;
  std::vector<std::string> expected_quotas;
  std::vector<std::string> actual_quotas;
  std::string error;
  bool passed = false;
};

struct ScenarioReport {
  std::vector<CaseOutcome> cases;
  std::vector<ParadoxFinding> findings;
  bool all_passed() const;
  /// One line per failing case; empty when everything matched.
  std::string diff() const;
};

ScenarioReport run_scenarios();
/// Throws ScenarioMismatch carrying the diff unless every case matched.
void require_scenarios(const ScenarioReport& report);

struct AlabamaScan {
  std::vector<ParadoxFinding> findings;      // sorted by (M, party)
  std::vector<std::int64_t> indeterminate;   // M where M -> M + 1 could not be decided
};

/// Compares the allocation at M with the one at M + 1 for M_lo <= M < M_hi.
AlabamaScan scan_alabama(const MethodSpec& method, const ElectionProblem& problem, std::int64_t seats_lo,
                         std::int64_t seats_hi);

/// Adds one party with `new_votes` votes and `added_seats` seats; reports any original party whose seats moved.
std::optional<ParadoxFinding> scan_new_state(const MethodSpec& method, const ElectionProblem& problem,
                                             const BigInt& new_votes, std::int64_t added_seats,
                                             std::string new_name = "new");

/// Change of the largest party's seats between two quota vectors of the same size and M.
struct InstabilityPair {
  std::size_t largest = 0;
  std::int64_t swing = 0;  // |m'_1 - m_1|
  Rational shift;          // |q'_1 - q_1|
  SeatVector before;
  SeatVector after;
};

InstabilityPair instability_between(const MethodSpec& method, const QuotaVector& before, const QuotaVector& after);

struct InstabilitySummary {
  std::size_t largest = 0;
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;       // negative quotas or unresolved ties
  std::int64_t max_swing = 0;
  Rational shift_at_max;           // quota change of the largest party in the worst trial
  std::optional<Rational> max_swing_per_unit;
  std::optional<ParadoxFinding> worst;
};

/// Each trial moves every non-largest quota by perturbation * u / 1000, u uniform in
/// [-1000, 1000], and lets the largest party absorb the difference so the total stays M.
InstabilitySummary scan_instability(const MethodSpec& method, const QuotaVector& quotas, const Rational& perturbation,
                                    std::uint64_t trials, std::uint64_t seed);

struct BiasSummary {
  std::uint64_t trials = 0;
  std::uint64_t favours_large = 0;
  std::uint64_t favours_small = 0;
  std::uint64_t neutral = 0;
  std::uint64_t incomparable = 0;  // top and bottom halves not separated by seats
  std::uint64_t skipped = 0;       // ties under the error policy
  std::string model;
};

/// Random votes uniform in [1, max_votes]; L and S are the top and bottom floor(n/2) parties by seats.
BiasSummary bias_report(const MethodSpec& method, std::size_t parties, std::int64_t seats, std::uint64_t trials,
                        std::uint64_t seed, std::int64_t max_votes = 1'000'000);

}  // namespace apportion
