#include "apportion/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "apportion/conditions.hpp"
#include "apportion/io.hpp"
#include "apportion/method.hpp"
#include "apportion/paradox.hpp"
#include "apportion/verify.hpp"

namespace apportion {

namespace {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownMethod:
      return kExitUsage;
    case ErrorCode::ScenarioMismatch:
      return kExitMismatch;
    case ErrorCode::TieUnderErrorPolicy:
      return kExitTie;
    default:
      return kExitInput;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string votes_csv;
  std::string votes_json;
  std::string quotas;
  std::int64_t seats = 0;
  std::vector<CLI::Option*> seats_opts;  // one per subcommand sharing these flags

  std::optional<std::int64_t> seats_flag() const {
    for (const auto* o : seats_opts) {
      if (o->count() > 0) return seats;
    }
    return std::nullopt;
  }
};

struct TieFlags {
  std::string mode = "error";
  std::uint64_t seed = 0;
  std::size_t cap = 64;
  std::vector<CLI::Option*> seed_opts;

  bool seed_given() const {
    return std::any_of(seed_opts.begin(), seed_opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
  }
};

struct OutputFlags {
  std::string format = "json";
  std::string out;
};

void add_input(CLI::App* app, InputFlags& f, bool with_seats = true) {
  app->add_option("--votes-csv", f.votes_csv, "CSV file with header party,votes");
  app->add_option("--votes-json", f.votes_json, "JSON file {\"seats\": M, \"parties\": [{\"name\", \"votes\"}]}");
  app->add_option("--quotas", f.quotas, "JSON file {\"seats\": M, \"quotas\": [\"65.91\", ...]}");
  if (with_seats) f.seats_opts.push_back(app->add_option("--seats", f.seats, "house size M (overrides the file)"));
}

void add_tie(CLI::App* app, TieFlags& f, bool with_seed = true) {
  app->add_option("--tie", f.mode, "tie policy")->check(CLI::IsMember({"error", "index", "votes", "seeded"}))
      ->capture_default_str();
  if (with_seed) f.seed_opts.push_back(app->add_option("--seed", f.seed, "seed for --tie seeded"));
  app->add_option("--cap", f.cap, "list at most this many tied optimal allocations")->capture_default_str();
}

void add_output(CLI::App* app, OutputFlags& f) {
  app->add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app->add_option("--out", f.out, "write the report to this file instead of stdout");
}

TiePolicy make_policy(const TieFlags& f) {
  TiePolicy p;
  p.mode = parse_tie_mode(f.mode);
  p.enumeration_cap = f.cap;
  if (p.mode == TieMode::Seeded) {
    if (!f.seed_given()) throw UsageError("--tie seeded needs --seed");
    p.seed = f.seed;
  }
  return p;
}

std::optional<std::uint64_t> tie_seed(const TiePolicy& p) {
  return p.mode == TieMode::Seeded ? std::optional(p.seed) : std::nullopt;
}

ApportionInput load_input(const InputFlags& f, std::optional<std::int64_t> seats, std::vector<std::string>& warnings) {
  const int given = !f.votes_csv.empty() + !f.votes_json.empty() + !f.quotas.empty();
  if (given != 1) throw UsageError("give exactly one of --votes-csv, --votes-json, --quotas");
  if (!f.votes_csv.empty()) return read_votes(f.votes_csv, VotesFormat::Csv, seats, warnings);
  if (!f.votes_json.empty()) return read_votes(f.votes_json, VotesFormat::Json, seats, warnings);
  return read_quotas(f.quotas, seats, warnings);
}

// Same parties at a different house size; quota input is rescaled proportionally.
ApportionInput resize(const ApportionInput& input, std::int64_t seats) {
  if (const auto* p = std::get_if<ElectionProblem>(&input)) return p->with_seats(seats);
  const auto& q = std::get<QuotaVector>(input);
  if (seats < 1) throw ApportionError(ErrorCode::NonPositiveSeats, "seats must be >= 1");
  std::vector<Rational> scaled;
  for (const auto& v : q.quotas()) scaled.push_back(v * Rational(seats) / Rational(q.seats()));
  return QuotaVector(std::move(scaled), seats, q.names());
}

const ElectionProblem& require_votes(const ApportionInput& input, std::string_view command) {
  const auto* p = std::get_if<ElectionProblem>(&input);
  if (!p) throw UsageError(std::string(command) + " needs vote counts (--votes-csv or --votes-json)");
  return *p;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

std::vector<std::string> seat_cells(const SeatVector& m) {
  std::vector<std::string> cells;
  for (auto v : m) cells.push_back(std::to_string(v));
  return cells;
}

std::string findings_table(const std::vector<ParadoxFinding>& findings) {
  std::vector<std::vector<std::string>> rows = {{"kind", "method", "before", "after", "trigger"}};
  for (const auto& f : findings) {
    rows.push_back({std::string(to_string(f.kind)), f.method.to_string(), f.before.to_string(), f.after.to_string(),
                    f.trigger});
  }
  return render_table(rows);
}

std::string conditions_table(const std::vector<ConditionReport>& reports) {
  std::vector<std::vector<std::string>> rows = {{"condition", "outcome", "detail"}};
  for (const auto& r : reports) {
    rows.push_back({r.condition, std::string(to_string(r.outcome)), r.witness ? r.witness->detail : r.note});
  }
  return render_table(rows);
}

Json array_of(const std::vector<ConditionReport>& reports) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(condition_json(r));
  return a;
}

Json array_of(const std::vector<ParadoxFinding>& findings) {
  Json a = Json::array();
  for (const auto& f : findings) a.push_back(finding_json(f));
  return a;
}

class Emitter {
 public:
  Emitter(const OutputFlags& flags, std::ostream& out, std::ostream& err) : flags_(flags), out_(out), err_(err) {}

  void emit(const Json& doc, const std::function<std::string()>& table) {
    const std::string text = flags_.format == "table" ? table() : doc.dump(2) + "\n";
    if (flags_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(flags_.out, std::ios::binary);
    if (!file || !(file << text)) throw ApportionError(ErrorCode::IoError, flags_.out + ": cannot write");
  }

  void warn(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err_ << "warning: " << w << "\n";
  }

 private:
  const OutputFlags& flags_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact seat apportionment: divisor and rho-rounding methods, conditions and paradox scans",
               "apportion"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  InputFlags input;
  TieFlags tie;
  OutputFlags output;
  std::string method_text = "hare";
  std::vector<std::string> method_list;
  std::vector<std::int64_t> seat_list;

  auto* cmd_apportion = app.add_subcommand("apportion", "apportion seats with one method (the default command)");
  add_input(cmd_apportion, input);
  add_tie(cmd_apportion, tie);
  add_output(cmd_apportion, output);
  cmd_apportion->add_option("--method", method_text, "method name")->capture_default_str();

  auto* cmd_compare = app.add_subcommand("compare", "run several methods at several house sizes");
  add_input(cmd_compare, input, false);
  add_tie(cmd_compare, tie);
  add_output(cmd_compare, output);
  cmd_compare->add_option("--methods", method_list, "comma-separated method names")->delimiter(',')->required();
  cmd_compare->add_option("--seats", seat_list, "comma-separated house sizes (default: the file's)")
      ->delimiter(',');

  auto* cmd_check = app.add_subcommand("check", "apportion and test the fairness conditions");
  add_input(cmd_check, input);
  add_tie(cmd_check, tie);
  add_output(cmd_check, output);
  cmd_check->add_option("--method", method_text, "method name")->capture_default_str();

  auto* cmd_scan = app.add_subcommand("scan", "search for paradoxes");
  cmd_scan->require_subcommand(1);
  std::int64_t seats_from = 0, seats_to = 0, added_seats = 1, parties = 3, bias_seats = 10;
  std::int64_t max_votes = 1'000'000;
  std::string new_votes = "0", new_name = "new", perturbation = "1/10", against;
  std::uint64_t trials = 1000, seed = 0;

  auto* scan_alabama_cmd = cmd_scan->add_subcommand("alabama", "house-monotony violations over a seat range");
  add_input(scan_alabama_cmd, input, false);
  add_tie(scan_alabama_cmd, tie);
  add_output(scan_alabama_cmd, output);
  scan_alabama_cmd->add_option("--method", method_text, "method name")->capture_default_str();
  scan_alabama_cmd->add_option("--from", seats_from, "first house size")->required();
  scan_alabama_cmd->add_option("--to", seats_to, "last house size")->required();

  auto* scan_new_cmd = cmd_scan->add_subcommand("new-state", "add a party and seats, report moved seats");
  add_input(scan_new_cmd, input);
  add_tie(scan_new_cmd, tie);
  add_output(scan_new_cmd, output);
  scan_new_cmd->add_option("--method", method_text, "method name")->capture_default_str();
  scan_new_cmd->add_option("--new-votes", new_votes, "votes of the new party")->required();
  scan_new_cmd->add_option("--added-seats", added_seats, "seats added with the new party")->capture_default_str();
  scan_new_cmd->add_option("--new-name", new_name, "name of the new party")->capture_default_str();

  auto* scan_instability_cmd = cmd_scan->add_subcommand("instability", "random quota perturbations");
  add_input(scan_instability_cmd, input);
  add_tie(scan_instability_cmd, tie, false);
  add_output(scan_instability_cmd, output);
  scan_instability_cmd->add_option("--method", method_text, "method name")->capture_default_str();
  scan_instability_cmd->add_option("--perturbation", perturbation, "largest quota move per small party")
      ->capture_default_str();
  scan_instability_cmd->add_option("--trials", trials, "number of random perturbations")->capture_default_str();
  // One seed drives both the perturbations and --tie seeded.
  tie.seed_opts.push_back(
      scan_instability_cmd->add_option("--seed", tie.seed, "random seed")->capture_default_str());
  scan_instability_cmd->add_option("--against", against, "second quota file to compare with directly");

  auto* scan_bias_cmd = cmd_scan->add_subcommand("bias", "Monte-Carlo estimate of the bias direction");
  add_output(scan_bias_cmd, output);
  scan_bias_cmd->add_option("--method", method_text, "method name")->capture_default_str();
  scan_bias_cmd->add_option("--parties", parties, "number of parties")->capture_default_str();
  scan_bias_cmd->add_option("--seats", bias_seats, "house size")->capture_default_str();
  scan_bias_cmd->add_option("--trials", trials, "number of random elections")->capture_default_str();
  scan_bias_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  scan_bias_cmd->add_option("--max-votes", max_votes, "votes are uniform on [1, max-votes]")->capture_default_str();

  VerifyOptions verify_options;
  auto* cmd_verify = app.add_subcommand("verify", "compare the algorithms with exhaustive search on random instances");
  add_output(cmd_verify, output);
  cmd_verify->add_option("--max-n", verify_options.max_parties, "largest number of parties")->capture_default_str();
  cmd_verify->add_option("--max-m", verify_options.max_seats, "largest house size")->capture_default_str();
  cmd_verify->add_option("--trials", verify_options.trials, "number of random instances")->capture_default_str();
  cmd_verify->add_option("--seed", verify_options.seed, "random seed")->capture_default_str();
  cmd_verify->add_option("--max-votes", verify_options.max_votes, "votes are uniform on [1, max-votes]")
      ->capture_default_str();

  std::string export_path;
  auto* cmd_scenarios = app.add_subcommand("scenarios", "run the built-in worked examples");
  add_output(cmd_scenarios, output);
  cmd_scenarios->add_option("--export", export_path, "also write the scenario table as a JSON fixture");

  // Without a subcommand name the arguments belong to `apportion`.
  std::vector<std::string> args = args_in;
  const bool top_level_flag = !args.empty() && (args[0] == "-h" || args[0] == "--help" || args[0] == "--version");
  if (!args.empty() && !top_level_flag && !app.get_subcommand_no_throw(args[0])) {
    args.insert(args.begin(), "apportion");
  }
  std::vector<std::string> argv_store = {"apportion"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter emitter(output, out, err);
  try {
    std::vector<std::string> warnings;

    if (*cmd_apportion) {
      const TiePolicy policy = make_policy(tie);
      const MethodSpec method = parse_method(method_text, policy);
      const ApportionInput data = load_input(input, input.seats_flag(), warnings);
      emitter.warn(warnings);
      const ApportionmentResult result = apply(method, data);
      const Json doc = make_report("apportion", input_json(data), Json::array({result_json(result)}), Json::array(),
                                   Json::array(), tie_seed(policy));
      emitter.emit(doc, [&] {
        const QuotaVector q = quotas_of(data);
        std::vector<std::vector<std::string>> rows = {{"party", "quota", "seats"}};
        for (std::size_t j = 0; j < q.size(); ++j) {
          rows.push_back({q.names()[j], q[j].to_decimal(6), std::to_string(result.chosen[j])});
        }
        std::string text = "method: " + result.method + "\nseats: " + std::to_string(q.seats()) + "\n" +
                           render_table(rows);
        for (const auto& note : result.notes) text += "note: " + note + "\n";
        return text;
      });
      return kExitOk;
    }

    if (*cmd_compare) {
      const TiePolicy policy = make_policy(tie);
      std::vector<MethodSpec> methods;
      for (const auto& m : method_list) methods.push_back(parse_method(m, policy));
      // Vote files without a seat field take the first requested house size.
      const std::optional<std::int64_t> first =
          seat_list.empty() ? std::nullopt : std::optional(seat_list.front());
      const ApportionInput data = load_input(input, first, warnings);
      emitter.warn(warnings);
      if (seat_list.empty()) seat_list.push_back(seats_of(data));
      Json results = Json::array();
      std::vector<std::vector<std::string>> rows = {{"M", "method"}};
      const QuotaVector base = quotas_of(data);
      for (const auto& name : base.names()) rows[0].push_back(name);
      for (std::int64_t M : seat_list) {
        const ApportionInput sized = resize(data, M);
        for (const auto& method : methods) {
          const ApportionmentResult r = apply(method, sized);
          results.push_back(result_json(r));
          std::vector<std::string> row = {std::to_string(M), r.method};
          for (auto& cell : seat_cells(r.chosen)) row.push_back(std::move(cell));
          rows.push_back(std::move(row));
        }
      }
      const Json doc = make_report("compare", input_json(data), std::move(results), Json::array(), Json::array(),
                                   tie_seed(policy));
      emitter.emit(doc, [&] { return render_table(rows); });
      return kExitOk;
    }

    if (*cmd_check) {
      const TiePolicy policy = make_policy(tie);
      const MethodSpec method = parse_method(method_text, policy);
      const ApportionInput data = load_input(input, input.seats_flag(), warnings);
      emitter.warn(warnings);
      const ApportionmentResult result = apply(method, data);
      const QuotaVector q = quotas_of(data);
      const SeatVector& m = result.chosen;
      const auto* problem = std::get_if<ElectionProblem>(&data);

      std::vector<ConditionReport> reports;
      reports.push_back(check_monotony(q, m));
      reports.push_back(check_lower_quota(q, m));
      reports.push_back(check_upper_quota(q, m));
      reports.push_back(problem ? check_majority(*problem, m) : check_majority(q, m));
      reports.push_back(problem ? check_coalition(*problem, m) : check_coalition(q, m));
      if (const auto partition = split_by_seats(m)) {
        reports.push_back(problem ? check_bias(*problem, m, *partition).report : check_bias(q, m, *partition).report);
      } else {
        reports.push_back({"bias", Outcome::Indeterminate, std::nullopt,
                           "top and bottom halves are not separated by seat count"});
      }
      reports.push_back(check_house_monotony(method, data, q.seats()));
      if (q.is_integral()) {
        std::vector<std::int64_t> integral;
        for (const auto& v : q.quotas()) integral.push_back(to_int64(v.numerator()));
        reports.push_back(check_fixpoint(method, SeatVector(std::move(integral))));
      }
      reports.push_back(independence_not_applicable());

      const Json doc = make_report("check", input_json(data), Json::array({result_json(result)}), array_of(reports),
                                   Json::array(), tie_seed(policy));
      emitter.emit(doc, [&] {
        return "method: " + result.method + "\nseats: " + m.to_string() + "\n" + conditions_table(reports);
      });
      return kExitOk;
    }

    if (*scan_alabama_cmd) {
      const TiePolicy policy = make_policy(tie);
      const MethodSpec method = parse_method(method_text, policy);
      const ApportionInput data = load_input(input, seats_from, warnings);
      const ElectionProblem& problem = require_votes(data, "scan alabama");
      const AlabamaScan scan = scan_alabama(method, problem, seats_from, seats_to);
      const Json results = Json::array({{{"scan", "alabama"},
                                         {"method", method.to_string()},
                                         {"from", seats_from},
                                         {"to", seats_to},
                                         {"indeterminate", scan.indeterminate}}});
      const Json doc = make_report("scan alabama", input_json(data), results, Json::array(), array_of(scan.findings),
                                   tie_seed(policy));
      emitter.emit(doc, [&] {
        std::string text = "alabama scan, " + method.to_string() + ", M " + std::to_string(seats_from) + ".." +
                           std::to_string(seats_to) + "\n" + findings_table(scan.findings);
        for (auto M : scan.indeterminate) text += "indeterminate: M = " + std::to_string(M) + "\n";
        return text;
      });
      return kExitOk;
    }

    if (*scan_new_cmd) {
      const TiePolicy policy = make_policy(tie);
      const MethodSpec method = parse_method(method_text, policy);
      const ApportionInput data = load_input(input, input.seats_flag(), warnings);
      emitter.warn(warnings);
      const ElectionProblem& problem = require_votes(data, "scan new-state");
      BigInt extra;
      try {
        extra = parse_integer(new_votes);
      } catch (const ApportionError&) {
        throw UsageError("--new-votes: expected an integer");
      }
      const auto finding = scan_new_state(method, problem, extra, added_seats, new_name);
      std::vector<ParadoxFinding> findings;
      if (finding) findings.push_back(*finding);
      const Json results = Json::array({{{"scan", "new-state"},
                                         {"method", method.to_string()},
                                         {"new_votes", integer_json(extra)},
                                         {"added_seats", added_seats},
                                         {"paradox", finding.has_value()}}});
      const Json doc = make_report("scan new-state", input_json(data), results, Json::array(), array_of(findings),
                                   tie_seed(policy));
      emitter.emit(doc, [&] {
        return "new-state scan, " + method.to_string() + "\n" +
               (findings.empty() ? std::string("no original party changed seats\n") : findings_table(findings));
      });
      return kExitOk;
    }

    if (*scan_instability_cmd) {
      const TiePolicy policy = make_policy(tie);
      const MethodSpec method = parse_method(method_text, policy);
      const ApportionInput data = load_input(input, input.seats_flag(), warnings);
      emitter.warn(warnings);
      Rational step;
      try {
        step = Rational::parse(perturbation);
      } catch (const ApportionError&) {
        throw UsageError("--perturbation: expected a fraction or decimal");
      }
      const QuotaVector q = quotas_of(data);
      const InstabilitySummary s = scan_instability(method, q, step, trials, tie.seed);
      std::vector<ParadoxFinding> findings;
      if (s.worst) findings.push_back(*s.worst);
      Json summary = {{"scan", "instability"},
                      {"method", method.to_string()},
                      {"perturbation", rational_json(step)},
                      {"largest_party", s.largest + 1},
                      {"trials", s.trials},
                      {"skipped", s.skipped},
                      {"max_swing", s.max_swing},
                      {"shift_at_max", rational_json(s.shift_at_max)},
                      {"max_swing_per_unit", s.max_swing_per_unit ? rational_json(*s.max_swing_per_unit) : Json()}};
      std::string pair_text;
      if (!against.empty()) {
        const QuotaVector other = read_quotas(against, q.seats(), warnings);
        const InstabilityPair pair = instability_between(method, q, other);
        summary["against"] = {{"swing", pair.swing},
                              {"shift", rational_json(pair.shift)},
                              {"before", seats_json(pair.before)},
                              {"after", seats_json(pair.after)}};
        pair_text = "against second quotas: " + pair.before.to_string() + " -> " + pair.after.to_string() +
                    ", swing " + std::to_string(pair.swing) + " for shift " + pair.shift.to_decimal(6) + "\n";
        if (pair.swing > 1) {
          findings.push_back({ParadoxFinding::Kind::Instability, method, q, other, pair.before, pair.after,
                              {pair.largest},
                              "quota of party " + std::to_string(pair.largest + 1) + " moved by " +
                                  pair.shift.to_string() + ", seats moved by " + std::to_string(pair.swing)});
        }
      }
      const Json doc = make_report("scan instability", input_json(data), Json::array({summary}), Json::array(),
                                   array_of(findings), tie.seed);
      emitter.emit(doc, [&] {
        return "instability scan, " + method.to_string() + ", " + std::to_string(s.trials) + " trials (" +
               std::to_string(s.skipped) + " skipped)\nlargest party: " + std::to_string(s.largest + 1) +
               "\nmax swing: " + std::to_string(s.max_swing) + " seats for shift " + s.shift_at_max.to_decimal(6) +
               "\n" + pair_text;
      });
      return kExitOk;
    }

    if (*scan_bias_cmd) {
      const MethodSpec method = parse_method(method_text);
      if (parties < 2) throw UsageError("--parties must be >= 2");
      const BiasSummary s = bias_report(method, static_cast<std::size_t>(parties), bias_seats, trials, seed, max_votes);
      const Json results = Json::array({{{"scan", "bias"},
                                         {"method", method.to_string()},
                                         {"model", s.model},
                                         {"trials", s.trials},
                                         {"favours_large", s.favours_large},
                                         {"favours_small", s.favours_small},
                                         {"neutral", s.neutral},
                                         {"incomparable", s.incomparable},
                                         {"skipped", s.skipped}}});
      const Json input_doc = {{"kind", "random"}, {"parties", parties}, {"seats", bias_seats},
                              {"max_votes", max_votes}};
      const Json doc = make_report("scan bias", input_doc, results, Json::array(), Json::array(), seed);
      emitter.emit(doc, [&] {
        return "bias estimate, " + method.to_string() + "\n" + s.model + "\n" +
               render_table({{"favours-large", "favours-small", "neutral", "incomparable", "skipped"},
                             {std::to_string(s.favours_large), std::to_string(s.favours_small),
                              std::to_string(s.neutral), std::to_string(s.incomparable), std::to_string(s.skipped)}});
      });
      return kExitOk;
    }

    if (*cmd_verify) {
      if (verify_options.max_parties < 2 || verify_options.max_seats < 1 || verify_options.max_votes < 1) {
        throw UsageError("verify needs --max-n >= 2, --max-m >= 1 and --max-votes >= 1");
      }
      const VerifySummary s = verify_sweep(verify_options);
      const Json results = Json::array({{{"instances", s.instances},
                                         {"checks", s.checks},
                                         {"failures", s.failures},
                                         {"examples", s.examples},
                                         {"ok", s.ok()}}});
      const Json input_doc = {{"kind", "random"},
                              {"max_parties", verify_options.max_parties},
                              {"max_seats", verify_options.max_seats},
                              {"max_votes", verify_options.max_votes},
                              {"trials", verify_options.trials}};
      const Json doc = make_report("verify", input_doc, results, Json::array(), Json::array(), verify_options.seed);
      emitter.emit(doc, [&] {
        std::vector<std::vector<std::string>> rows = {{"check", "count", "failures"}};
        for (const auto& [name, count] : s.checks) {
          const auto it = s.failures.find(name);
          rows.push_back({name, std::to_string(count), std::to_string(it == s.failures.end() ? 0 : it->second)});
        }
        std::string text = std::to_string(s.instances) + " instances\n" + render_table(rows);
        for (const auto& e : s.examples) text += "mismatch: " + e + "\n";
        return text;
      });
      if (!s.ok()) {
        err << "verify: " << s.failures.size() << " check families failed\n";
        return kExitMismatch;
      }
      return kExitOk;
    }

    if (*cmd_scenarios) {
      const ScenarioReport report = run_scenarios();
      if (!export_path.empty()) {
        std::ofstream file(export_path, std::ios::binary);
        if (!file || !(file << scenario_fixture_json(builtin_scenarios()).dump(2) << "\n")) {
          throw ApportionError(ErrorCode::IoError, export_path + ": cannot write");
        }
      }
      Json results = Json::array();
      std::vector<std::vector<std::string>> rows = {{"scenario", "case", "method", "expected", "actual", "result"}};
      for (const auto& c : report.cases) {
        Json j = {{"scenario", c.scenario},
                  {"label", c.label},
                  {"method", c.method},
                  {"expected", seats_json(c.expected)},
                  {"actual", c.actual ? seats_json(*c.actual) : Json()},
                  {"passed", c.passed}};
        if (!c.expected_quotas.empty()) {
          j["expected_quotas"] = c.expected_quotas;
          j["actual_quotas"] = c.actual_quotas;
        }
        if (!c.error.empty()) j["error"] = c.error;
        results.push_back(std::move(j));
        rows.push_back({c.scenario, c.label, c.method, c.expected.to_string(),
                        c.actual ? c.actual->to_string() : c.error, c.passed ? "pass" : "FAIL"});
      }
      const Json doc = make_report("scenarios", Json(), std::move(results), Json::array(), array_of(report.findings),
                                   std::nullopt);
      emitter.emit(doc, [&] { return render_table(rows) + "\n" + findings_table(report.findings); });
      if (!report.all_passed()) {
        err << "scenario mismatch:\n" << report.diff();
        return kExitMismatch;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApportionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kExitUsage;
}

}  // namespace apportion
