#include "apportion/paradox.hpp"

#include <algorithm>
#include <sstream>

#include "apportion/random.hpp"

namespace apportion {

namespace {

ElectionProblem votes(std::vector<BigInt> a, std::int64_t seats, std::vector<std::string> names = {}) {
  if (names.empty()) names = default_names(a.size());
  return build_problem(std::move(a), seats, std::move(names));
}

QuotaVector decimals(std::vector<std::string> q, std::int64_t seats) {
  return quotas_from_decimals(q, seats);
}

MethodSpec method(std::string_view name) { return parse_method(name); }

SeatVector seats(std::vector<std::int64_t> m) { return SeatVector(std::move(m)); }

const std::vector<BigInt> kAlabamaVotes = {BigInt(107890192), BigInt(197827864), BigInt(18986361)};

std::vector<Scenario> make_scenarios() {
  const std::vector<std::string> abc = {"A", "B", "C"};
  const std::vector<std::string> abcd = {"A", "B", "C", "D"};
  const auto s3a = decimals({"65.91", "0.53", "0.521", "0.52", "0.519"}, 68);
  const auto s3b = decimals({"66.075", "0.485", "0.481", "0.48", "0.479"}, 68);
  const auto s4 = decimals({"26", "7.96", "5.84", "4.78", "3.72", "1.60", "0.56", "0.54"}, 51);
  const auto s5 = decimals({"26", "8.03", "7.09", "6.12", "1.415", "1.405", "0.472", "0.468"}, 51);
  const auto s2 = votes({50600, 40650, 9750}, 101);
  const auto alabama94 = votes(kAlabamaVotes, 94);
  const auto alabama95 = votes(kAlabamaVotes, 95);

  std::vector<Scenario> out;
  out.push_back({"S1", "committee seats 1970",
                 {{"M=33", votes({253, 237, 28}, 33, {"CDU/CSU", "SPD", "FDP"}), method("dhondt"), seats({17, 15, 1})}}});
  out.push_back({"S2", "majority with 101 seats",
                 {{"hare", s2, method("hare"), seats({50, 41, 10})},
                  {"hare-majority", s2, method("hare-majority"), seats({51, 40, 10})}}});
  out.push_back({"S3", "instability with 68 seats",
                 {{"first quotas", s3a, method("sainte-lague"), seats({64, 1, 1, 1, 1})},
                  {"second quotas", s3b, method("sainte-lague"), seats({68, 0, 0, 0, 0})},
                  {"first quotas", s3a, method("hare"), seats({66, 1, 1, 0, 0})},
                  {"second quotas", s3b, method("hare"), seats({66, 1, 1, 0, 0})}}});
  out.push_back({"S4", "majority paradox with 51 seats",
                 {{"M=51", s4, method("sainte-lague"), seats({24, 8, 6, 5, 4, 2, 1, 1})}}});
  out.push_back({"S5", "vote stability with 51 seats",
                 {{"M=51", s5, method("sainte-lague"), seats({28, 8, 7, 6, 1, 1, 0, 0})}}});
  out.push_back({"S6", "new state",
                 {{"3 parties, M=37", votes({320, 238, 79}, 37, abc), method("hare"), seats({18, 14, 5}),
                   {"18.587127", "13.824175", "4.588697"}},
                  {"4 parties, M=38", votes({320, 238, 79, 17}, 38, abcd), method("hare"), seats({19, 14, 4, 1}),
                   {"18.593272", "13.828746", "4.590214", "0.987767"}}}});
  out.push_back({"S7", "alabama",
                 {{"M=94", alabama94, method("hare"), seats({31, 57, 6}), {"31.2336", "57.2700", "5.4964"}, 4,
                   Rational::Rounding::HalfUp},
                  {"M=94", alabama94, method("sainte-lague"), seats({31, 57, 6})},
                  {"M=95", alabama95, method("hare"), seats({32, 58, 5})},
                  {"M=95", alabama95, method("sainte-lague"), seats({31, 58, 6})}}});
  return out;
}

// Runs a method and returns nullopt on an unresolved tie.
std::optional<SeatVector> try_apply(const MethodSpec& m, const ApportionInput& input) {
  try {
    return apply(m, input).chosen;
  } catch (const ApportionError& e) {
    if (e.code() == ErrorCode::TieUnderErrorPolicy) return std::nullopt;
    throw;
  }
}

const QuotaVector& quota_input(const Scenario& s, std::size_t i) { return std::get<QuotaVector>(s.cases[i].input); }

void scenario_findings(const std::vector<Scenario>& table, ScenarioReport& report) {
  auto find = [&](std::string_view id) -> const Scenario& {
    return *std::find_if(table.begin(), table.end(), [&](const Scenario& s) { return s.id == id; });
  };
  const MethodSpec sainte_lague = method("sainte-lague");

  // S2: Hare leaves the absolute-majority party without a majority of seats.
  {
    const auto& c = find("S2").cases[0];
    if (auto m = try_apply(c.method, c.input)) {
      const auto check = check_majority(std::get<ElectionProblem>(c.input), *m);
      if (!check.holds()) {
        report.findings.push_back({ParadoxFinding::Kind::MajorityViolation, c.method, c.input, c.input, *m, *m,
                                   check.witness->parties, check.witness->detail});
      }
    }
  }
  // S3: the same large party swings by several seats between the two quota vectors.
  {
    const auto& s = find("S3");
    const auto pair = instability_between(sainte_lague, quota_input(s, 0), quota_input(s, 1));
    if (pair.swing > 1) {
      report.findings.push_back({ParadoxFinding::Kind::Instability, sainte_lague, s.cases[0].input, s.cases[1].input,
                                 pair.before, pair.after, {pair.largest},
                                 "quota of party " + std::to_string(pair.largest + 1) + " moved by " +
                                     pair.shift.to_string() + ", seats moved by " + std::to_string(pair.swing)});
    }
  }
  // S4: majority of quota, minority of seats.
  {
    const auto& c = find("S4").cases[0];
    if (auto m = try_apply(c.method, c.input)) {
      const auto check = check_majority(std::get<QuotaVector>(c.input), *m);
      if (!check.holds()) {
        report.findings.push_back({ParadoxFinding::Kind::MajorityViolation, c.method, c.input, c.input, *m, *m,
                                   check.witness->parties, check.witness->detail});
      }
    }
  }
  // S4 -> S5: the largest party keeps its quota but its seats move.
  {
    const auto& before = find("S4").cases[0];
    const auto& after = find("S5").cases[0];
    const auto pair = instability_between(sainte_lague, std::get<QuotaVector>(before.input),
                                          std::get<QuotaVector>(after.input));
    if (pair.shift.is_zero() && pair.swing > 0) {
      report.findings.push_back({ParadoxFinding::Kind::VoteStability, sainte_lague, before.input, after.input,
                                 pair.before, pair.after, {pair.largest},
                                 "quota of party " + std::to_string(pair.largest + 1) + " unchanged, seats moved by " +
                                     std::to_string(pair.swing)});
    }
  }
  // S6: new party plus one seat.
  {
    const auto& c = find("S6").cases[0];
    if (auto f = scan_new_state(c.method, std::get<ElectionProblem>(c.input), 17, 1, "D")) {
      report.findings.push_back(std::move(*f));
    }
  }
  // S7: Hare at 94 -> 95 seats.
  {
    const auto& c = find("S7").cases[0];
    auto scan = scan_alabama(c.method, std::get<ElectionProblem>(c.input), 94, 95);
    for (auto& f : scan.findings) report.findings.push_back(std::move(f));
  }
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> table = make_scenarios();
  return table;
}

std::string_view to_string(ParadoxFinding::Kind kind) {
  switch (kind) {
    case ParadoxFinding::Kind::Alabama: return "alabama";
    case ParadoxFinding::Kind::NewState: return "new-state";
    case ParadoxFinding::Kind::Instability: return "instability";
    case ParadoxFinding::Kind::MajorityViolation: return "majority-violation";
    case ParadoxFinding::Kind::VoteStability: return "vote-stability";
  }
  return "unknown";
}

bool replay(const ParadoxFinding& finding) {
  const auto before = try_apply(finding.method, finding.before_input);
  const auto after = try_apply(finding.method, finding.after_input);
  return before && after && *before == finding.before && *after == finding.after;
}

bool ScenarioReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseOutcome& c) { return c.passed; });
}

std::string ScenarioReport::diff() const {
  std::ostringstream os;
  for (const auto& c : cases) {
    if (c.passed) continue;
    os << c.scenario << " " << c.label << " " << c.method << ": expected " << c.expected.to_string();
    if (c.actual) os << ", got " << c.actual->to_string();
    if (!c.error.empty()) os << ", error: " << c.error;
    if (c.expected_quotas != c.actual_quotas) {
      os << ", quotas";
      for (const auto& q : c.actual_quotas) os << " " << q;
    }
    os << "\n";
  }
  return os.str();
}

ScenarioReport run_scenarios() {
  ScenarioReport report;
  const auto& table = builtin_scenarios();
  for (const auto& s : table) {
    for (const auto& c : s.cases) {
      CaseOutcome out{s.id, c.label, c.method.to_string(), c.expected, std::nullopt, c.quota_decimals, {}, {}, false};
      try {
        out.actual = apply(c.method, c.input).chosen;
        if (!c.quota_decimals.empty()) {
          const QuotaVector quotas = quotas_of(c.input);
          for (const auto& q : quotas.quotas()) {
            out.actual_quotas.push_back(q.to_decimal(c.quota_digits, c.quota_rounding));
          }
        }
      } catch (const ApportionError& e) {
        out.error = e.what();
      }
      out.passed = out.actual && *out.actual == c.expected && out.actual_quotas == c.quota_decimals;
      report.cases.push_back(std::move(out));
    }
  }
  scenario_findings(table, report);
  return report;
}

void require_scenarios(const ScenarioReport& report) {
  if (!report.all_passed()) throw ApportionError(ErrorCode::ScenarioMismatch, "\n" + report.diff());
}

AlabamaScan scan_alabama(const MethodSpec& method, const ElectionProblem& problem, std::int64_t seats_lo,
                         std::int64_t seats_hi) {
  if (seats_lo < 1) throw ApportionError(ErrorCode::NonPositiveSeats, "scan range must start at M >= 1");
  if (seats_lo > seats_hi) {
    throw ApportionError(ErrorCode::ParseError, "empty seat range " + std::to_string(seats_lo) + ".." +
                                                    std::to_string(seats_hi));
  }
  AlabamaScan scan;
  std::optional<SeatVector> previous = try_apply(method, problem.with_seats(seats_lo));
  for (std::int64_t M = seats_lo; M < seats_hi; ++M) {
    const ElectionProblem next_problem = problem.with_seats(M + 1);
    std::optional<SeatVector> next = try_apply(method, next_problem);
    if (!previous || !next) {
      scan.indeterminate.push_back(M);
    } else {
      for (std::size_t j = 0; j < problem.size(); ++j) {
        if ((*next)[j] < (*previous)[j]) {
          scan.findings.push_back({ParadoxFinding::Kind::Alabama, method, problem.with_seats(M), next_problem,
                                   *previous, *next, {j},
                                   "M " + std::to_string(M) + " -> " + std::to_string(M + 1) + ": party " +
                                       std::to_string(j + 1) + " " + std::to_string((*previous)[j]) + " -> " +
                                       std::to_string((*next)[j])});
        }
      }
    }
    previous = std::move(next);
  }
  return scan;
}

std::optional<ParadoxFinding> scan_new_state(const MethodSpec& method, const ElectionProblem& problem,
                                             const BigInt& new_votes, std::int64_t added_seats, std::string new_name) {
  if (new_votes < 0) throw ApportionError(ErrorCode::FormatError, "new party votes must be non-negative");
  if (added_seats < 0) throw ApportionError(ErrorCode::NonPositiveSeats, "added seats must be non-negative");
  std::vector<BigInt> a = problem.votes();
  std::vector<std::string> names = problem.names();
  a.push_back(new_votes);
  names.push_back(std::move(new_name));
  const ElectionProblem grown(std::move(a), problem.seats() + added_seats, std::move(names));

  const SeatVector before = apply(method, problem).chosen;
  const SeatVector after = apply(method, grown).chosen;
  std::vector<std::size_t> moved;
  std::string detail;
  for (std::size_t j = 0; j < problem.size(); ++j) {
    if (after[j] == before[j]) continue;
    moved.push_back(j);
    detail += (detail.empty() ? "" : ", ") + problem.names()[j] + " " + std::to_string(before[j]) + " -> " +
              std::to_string(after[j]);
  }
  if (moved.empty()) return std::nullopt;
  detail = "new party " + grown.names().back() + " with " + new_votes.str() + " votes and +" +
           std::to_string(added_seats) + " seat(s) gets " + std::to_string(after[problem.size()]) + "; " + detail;
  return ParadoxFinding{ParadoxFinding::Kind::NewState, method, problem, grown, before, after, std::move(moved),
                        std::move(detail)};
}

InstabilityPair instability_between(const MethodSpec& method, const QuotaVector& before, const QuotaVector& after) {
  if (before.size() != after.size() || before.seats() != after.seats()) {
    throw ApportionError(ErrorCode::LengthMismatch, "quota vectors must have the same parties and seats");
  }
  InstabilityPair out;
  const auto& q = before.quotas();
  out.largest = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
  out.before = apply(method, before).chosen;
  out.after = apply(method, after).chosen;
  out.swing = std::abs(out.after[out.largest] - out.before[out.largest]);
  out.shift = (after[out.largest] - before[out.largest]).abs();
  return out;
}

InstabilitySummary scan_instability(const MethodSpec& method, const QuotaVector& quotas, const Rational& perturbation,
                                    std::uint64_t trials, std::uint64_t seed) {
  if (perturbation.sign() < 0) throw ApportionError(ErrorCode::ParseError, "perturbation must be non-negative");
  InstabilitySummary summary;
  const auto& q = quotas.quotas();
  summary.largest = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
  const std::size_t L = summary.largest;
  const SeatVector base = apply(method, quotas).chosen;

  Rng rng(seed);
  const Rational step = perturbation / Rational(1000);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++summary.trials;
    std::vector<Rational> moved = q;
    Rational absorbed;
    for (std::size_t j = 0; j < moved.size(); ++j) {
      if (j == L) continue;
      const Rational delta = step * Rational(rng.uniform(-1000, 1000));
      moved[j] += delta;
      absorbed += delta;
    }
    moved[L] -= absorbed;
    if (std::any_of(moved.begin(), moved.end(), [](const Rational& v) { return v.sign() < 0; })) {
      ++summary.skipped;
      continue;
    }
    QuotaVector perturbed(std::move(moved), quotas.seats(), quotas.names());
    const auto after = try_apply(method, perturbed);
    if (!after) {
      ++summary.skipped;
      continue;
    }
    const std::int64_t swing = std::abs((*after)[L] - base[L]);
    const Rational shift = absorbed.abs();
    if (shift.sign() > 0) {
      Rational per_unit = Rational(swing) / shift;
      if (!summary.max_swing_per_unit || per_unit > *summary.max_swing_per_unit) summary.max_swing_per_unit = per_unit;
    }
    if (swing > summary.max_swing) {
      summary.max_swing = swing;
      summary.shift_at_max = shift;
      // A one-seat move is ordinary rounding; only larger swings are kept as findings.
      if (swing > 1) {
        summary.worst = ParadoxFinding{ParadoxFinding::Kind::Instability, method, quotas, perturbed, base, *after,
                                       {L},
                                       "trial " + std::to_string(t) + ": quota of party " + std::to_string(L + 1) +
                                           " moved by " + shift.to_string() + ", seats moved by " +
                                           std::to_string(swing)};
      }
    }
  }
  return summary;
}

BiasSummary bias_report(const MethodSpec& method, std::size_t parties, std::int64_t seats, std::uint64_t trials,
                        std::uint64_t seed, std::int64_t max_votes) {
  if (parties < 2) throw ApportionError(ErrorCode::EmptyInput, "bias needs at least two parties");
  if (max_votes < 1) throw ApportionError(ErrorCode::ZeroTotalVotes, "max votes must be >= 1");
  BiasSummary s;
  s.model = "votes uniform on [1, " + std::to_string(max_votes) + "] per party, " + std::to_string(parties) +
            " parties, M = " + std::to_string(seats) + "; L/S = top/bottom " + std::to_string(parties / 2) +
            " parties by seats";
  Rng rng(seed);
  const auto names = default_names(parties);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++s.trials;
    std::vector<BigInt> a;
    for (std::size_t j = 0; j < parties; ++j) a.emplace_back(rng.uniform(1, max_votes));
    const ElectionProblem problem(std::move(a), seats, names);
    const auto m = try_apply(method, problem);
    if (!m) {
      ++s.skipped;
      continue;
    }
    const auto partition = split_by_seats(*m);
    if (!partition) {
      ++s.incomparable;
      continue;
    }
    switch (check_bias(problem, *m, *partition).direction) {
      case BiasDirection::FavoursLarge: ++s.favours_large; break;
      case BiasDirection::FavoursSmall: ++s.favours_small; break;
      case BiasDirection::Neutral: ++s.neutral; break;
    }
  }
  return s;
}

}  // namespace apportion
