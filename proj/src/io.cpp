#include "apportion/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace apportion {

namespace {

[[noreturn]] void format_error(const std::string& where, const std::string& why) {
  throw ApportionError(ErrorCode::FormatError, where + ": " + why);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Splits one CSV line; fields may be double-quoted with "" as an escaped quote.
std::vector<std::string> split_csv(std::string_view line, const std::string& where) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      quoted = true;
      was_quoted = true;
      field.clear();
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) format_error(where, "unterminated quote");
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

BigInt vote_count(std::string_view text, const std::string& where) {
  if (text.empty()) format_error(where, "votes: empty");
  BigInt v;
  try {
    v = parse_integer(text);
  } catch (const ApportionError&) {
    format_error(where, "votes: '" + std::string(text) + "' is not an integer");
  }
  if (v < 0) format_error(where, "votes: '" + std::string(text) + "' is negative");
  return v;
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    format_error(source, std::string("invalid JSON at byte ") + std::to_string(e.byte));
  }
}

std::optional<std::int64_t> seats_field(const Json& doc, const std::string& source) {
  if (!doc.contains("seats")) return std::nullopt;
  const Json& s = doc["seats"];
  if (!s.is_number_integer()) format_error(source, "seats: expected an integer");
  return s.get<std::int64_t>();
}

std::string decimal_of(const BigInt& num, const BigInt& den) {
  return Rational(num, den).to_decimal(6);
}

}  // namespace

VotesFile parse_votes_csv(std::string_view text, const std::string& source) {
  VotesFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    auto fields = split_csv(line, where);
    if (!header) {
      if (fields.size() != 2 || lower(fields[0]) != "party" || lower(fields[1]) != "votes") {
        format_error(where, "expected the header 'party,votes'");
      }
      header = true;
      continue;
    }
    if (fields.size() != 2) format_error(where, "expected 2 fields, found " + std::to_string(fields.size()));
    if (fields[0].empty()) format_error(where, "party: empty name");
    out.names.push_back(fields[0]);
    out.votes.push_back(vote_count(fields[1], where));
  }
  if (!header) format_error(source, "empty file; expected the header 'party,votes'");
  if (out.names.empty()) throw ApportionError(ErrorCode::EmptyInput, source + ": no party rows");
  return out;
}

VotesFile parse_votes_json(std::string_view text, const std::string& source) {
  const Json doc = parse_json(text, source);
  if (!doc.is_object()) format_error(source, "expected an object with 'parties'");
  VotesFile out;
  out.seats = seats_field(doc, source);
  if (!doc.contains("parties") || !doc["parties"].is_array()) format_error(source, "parties: expected an array");
  const Json& parties = doc["parties"];
  for (std::size_t i = 0; i < parties.size(); ++i) {
    const std::string where = source + ": parties[" + std::to_string(i) + "]";
    const Json& p = parties[i];
    if (!p.is_object()) format_error(where, "expected {\"name\": ..., \"votes\": ...}");
    if (!p.contains("name") || !p["name"].is_string()) format_error(where, "name: expected a string");
    if (!p.contains("votes")) format_error(where, "votes: missing");
    const Json& v = p["votes"];
    out.names.push_back(p["name"].get<std::string>());
    if (v.is_number_unsigned() || v.is_number_integer()) {
      out.votes.push_back(vote_count(v.dump(), where));
    } else if (v.is_string()) {
      out.votes.push_back(vote_count(v.get<std::string>(), where));
    } else {
      format_error(where, "votes: expected an integer");
    }
  }
  if (out.names.empty()) throw ApportionError(ErrorCode::EmptyInput, source + ": no parties");
  return out;
}

QuotasFile parse_quotas_json(std::string_view text, const std::string& source) {
  const Json doc = parse_json(text, source);
  if (!doc.is_object()) format_error(source, "expected an object with 'quotas'");
  QuotasFile out;
  out.seats = seats_field(doc, source);
  if (!doc.contains("quotas") || !doc["quotas"].is_array()) format_error(source, "quotas: expected an array");
  const Json& quotas = doc["quotas"];
  for (std::size_t i = 0; i < quotas.size(); ++i) {
    const Json& q = quotas[i];
    if (!q.is_string()) {
      format_error(source + ": quotas[" + std::to_string(i) + "]",
                   "found " + q.dump() + "; write quotas as decimal strings, e.g. \"0.521\", so they stay exact");
    }
    out.decimals.push_back(q.get<std::string>());
  }
  if (doc.contains("names")) {
    const Json& names = doc["names"];
    if (!names.is_array()) format_error(source, "names: expected an array of strings");
    for (const auto& n : names) {
      if (!n.is_string()) format_error(source, "names: expected an array of strings");
      out.names.push_back(n.get<std::string>());
    }
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApportionError(ErrorCode::IoError, path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ApportionError(ErrorCode::IoError, path.string() + ": read failed");
  return ss.str();
}

namespace {

std::int64_t resolve_seats(std::optional<std::int64_t> flag, std::optional<std::int64_t> file,
                           const std::string& source, std::vector<std::string>& warnings) {
  if (flag && file && *flag != *file) {
    warnings.push_back("--seats " + std::to_string(*flag) + " overrides seats = " + std::to_string(*file) + " in " +
                       source);
  }
  if (flag) return *flag;
  if (file) return *file;
  throw ApportionError(ErrorCode::NonPositiveSeats, source + ": no seat count; pass --seats");
}

}  // namespace

ElectionProblem read_votes(const std::filesystem::path& path, VotesFormat format,
                           std::optional<std::int64_t> seats_flag, std::vector<std::string>& warnings) {
  const std::string text = read_text(path);
  const std::string source = path.filename().string();
  VotesFile f = format == VotesFormat::Csv ? parse_votes_csv(text, source) : parse_votes_json(text, source);
  const std::int64_t seats = resolve_seats(seats_flag, f.seats, source, warnings);
  return build_problem(std::move(f.votes), seats, std::move(f.names));
}

QuotaVector read_quotas(const std::filesystem::path& path, std::optional<std::int64_t> seats_flag,
                        std::vector<std::string>& warnings) {
  const std::string text = read_text(path);
  const std::string source = path.filename().string();
  QuotasFile f = parse_quotas_json(text, source);
  const std::int64_t seats = resolve_seats(seats_flag, f.seats, source, warnings);
  return quotas_from_decimals(f.decimals, seats, std::move(f.names));
}

Json integer_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Json rational_json(const Rational& value) {
  return {{"num", value.numerator().str()},
          {"den", value.denominator().str()},
          {"decimal", decimal_of(value.numerator(), value.denominator())}};
}

Json seats_json(const SeatVector& m) { return Json(m.values()); }

Json input_json(const ApportionInput& input) {
  Json j;
  if (const auto* p = std::get_if<ElectionProblem>(&input)) {
    j["kind"] = "votes";
    j["names"] = p->names();
    j["seats"] = p->seats();
    Json votes = Json::array();
    for (const auto& a : p->votes()) votes.push_back(integer_json(a));
    j["votes"] = std::move(votes);
    j["total_votes"] = integer_json(p->total_votes());
  } else {
    const auto& q = std::get<QuotaVector>(input);
    j["kind"] = "quotas";
    j["names"] = q.names();
    j["seats"] = q.seats();
  }
  Json quotas = Json::array();
  const QuotaVector exact = quotas_of(input);
  for (const auto& q : exact.quotas()) quotas.push_back(rational_json(q));
  j["quotas"] = std::move(quotas);
  return j;
}

Json result_json(const ApportionmentResult& result) {
  Json j;
  j["method"] = result.method;
  j["seats"] = seats_json(result.chosen);
  j["house_size"] = result.chosen.total();
  j["tie_occurred"] = result.tie_occurred;
  if (result.all_minimal) {
    Json all = Json::array();
    for (const auto& m : *result.all_minimal) all.push_back(seats_json(m));
    j["all_minimal"] = std::move(all);
  } else {
    j["all_minimal"] = nullptr;
  }
  j["notes"] = result.notes;
  return j;
}

Json condition_json(const ConditionReport& report) {
  Json j;
  j["condition"] = report.condition;
  j["outcome"] = std::string(to_string(report.outcome));
  if (report.witness) {
    Json parties = Json::array();
    for (std::size_t p : report.witness->parties) parties.push_back(p + 1);
    j["witness"] = {{"parties", std::move(parties)}, {"detail", report.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json finding_json(const ParadoxFinding& finding) {
  Json parties = Json::array();
  for (std::size_t p : finding.parties) parties.push_back(p + 1);
  return {{"kind", std::string(to_string(finding.kind))},
          {"method", finding.method.to_string()},
          {"before_input", input_json(finding.before_input)},
          {"after_input", input_json(finding.after_input)},
          {"before", seats_json(finding.before)},
          {"after", seats_json(finding.after)},
          {"parties", std::move(parties)},
          {"trigger", finding.trigger},
          {"replayed", replay(finding)}};
}

Json scenario_fixture_json(const std::vector<Scenario>& scenarios) {
  Json list = Json::array();
  for (const auto& s : scenarios) {
    Json cases = Json::array();
    for (const auto& c : s.cases) {
      Json input;
      if (const auto* p = std::get_if<ElectionProblem>(&c.input)) {
        Json parties = Json::array();
        for (std::size_t j = 0; j < p->size(); ++j) {
          parties.push_back({{"name", p->names()[j]}, {"votes", integer_json(p->votes()[j])}});
        }
        input = {{"seats", p->seats()}, {"parties", std::move(parties)}};
      } else {
        const auto& q = std::get<QuotaVector>(c.input);
        // Decimal strings, so the fixture reads back through the quota file parser.
        Json quotas = Json::array();
        for (const auto& v : q.quotas()) {
          unsigned digits = 0;
          for (BigInt scale = 1; scale % v.denominator() != 0; scale *= 10) {
            if (++digits > 64) throw std::logic_error("scenario quota " + v.to_string() + " is not a finite decimal");
          }
          quotas.push_back(v.to_decimal(digits));
        }
        input = {{"seats", q.seats()}, {"quotas", std::move(quotas)}, {"names", q.names()}};
      }
      Json jc = {{"label", c.label}, {"method", c.method.to_string()}, {"input", std::move(input)},
                 {"expected", seats_json(c.expected)}};
      if (!c.quota_decimals.empty()) {
        jc["quota_decimals"] = c.quota_decimals;
        jc["quota_digits"] = c.quota_digits;
        jc["quota_rounding"] = c.quota_rounding == Rational::Rounding::Truncate ? "truncate" : "half-up";
      }
      cases.push_back(std::move(jc));
    }
    list.push_back({{"id", s.id}, {"title", s.title}, {"cases", std::move(cases)}});
  }
  return {{"schema", "apportion-scenarios"}, {"schema_version", kReportSchemaVersion}, {"scenarios", std::move(list)}};
}

Json make_report(std::string_view command, Json input, Json results, Json conditions, Json findings,
                 std::optional<std::uint64_t> seed) {
  Json doc;
  doc["schema"] = "apportion-report";
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool_version"] = std::string(kToolVersion);
  doc["command"] = std::string(command);
  doc["input"] = std::move(input);
  doc["results"] = std::move(results);
  doc["conditions"] = std::move(conditions);
  doc["findings"] = std::move(findings);
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  return doc;
}

}  // namespace apportion
