#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "apportion/cli.hpp"
#include "apportion/error.hpp"
#include "apportion/io.hpp"

using namespace apportion;
namespace fs = std::filesystem;

namespace {

const fs::path kData = APPORTION_DATA_DIR;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ApportionError& e) {
    return e.code();
  }
  return ErrorCode::EmptyInput;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ApportionError& e) {
    return e.what();
  }
  return {};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path path = fs::temp_directory_path() / ("apportion_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Walks a report and fails on any binary floating-point number.
bool no_floats(const Json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (!no_floats(v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("io_cli") {

TEST_CASE("CSV votes") {
  const auto f = parse_votes_csv("\xEF\xBB\xBF" "Party,Votes\nCDU/CSU,253\n\"SPD, Social\",237\nFDP,28\n");
  CHECK(f.names == std::vector<std::string>{"CDU/CSU", "SPD, Social", "FDP"});
  CHECK(f.votes == std::vector<BigInt>{253, 237, 28});
  CHECK_FALSE(f.seats.has_value());

  CHECK(code_of([] { parse_votes_csv("name,count\nA,1\n"); }) == ErrorCode::FormatError);
  const auto msg = message_of([] { parse_votes_csv("party,votes\nA,1\nB,x\n", "s.csv"); });
  CHECK(msg.find("s.csv:3") != std::string::npos);
  CHECK(code_of([] { parse_votes_csv("party,votes\nA,1,2\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_votes_csv("party,votes\n"); }) == ErrorCode::EmptyInput);
}

TEST_CASE("JSON votes and quotas") {
  const auto v = parse_votes_json(R"({"seats": 37, "parties": [{"name": "A", "votes": 320}, {"name": "B", "votes": "238"}]})");
  CHECK(v.seats == 37);
  CHECK(v.votes == std::vector<BigInt>{320, 238});
  const auto q = parse_quotas_json(R"({"seats": 68, "quotas": ["65.91", "0.53", "0.521", "0.52", "0.519"]})");
  CHECK(q.decimals.size() == 5);
  const auto floats = message_of([] { parse_quotas_json(R"({"seats": 3, "quotas": [1.5, 1.5]})"); });
  CHECK(floats.find("decimal strings") != std::string::npos);
  CHECK(code_of([] { parse_quotas_json(R"({"seats": 3, "quotas": [1, 2]})"); }) == ErrorCode::FormatError);
  CHECK(code_of([] { parse_votes_json("{not json"); }) == ErrorCode::FormatError);
}

TEST_CASE("files and the seat flag") {
  std::vector<std::string> warnings;
  const auto s1 = read_votes(kData / "s1.csv", VotesFormat::Csv, 33, warnings);
  CHECK(s1.seats() == 33);
  CHECK(warnings.empty());
  CHECK(code_of([&] { read_votes(kData / "s1.csv", VotesFormat::Csv, std::nullopt, warnings); }) ==
        ErrorCode::NonPositiveSeats);

  const auto s3 = read_quotas(kData / "s3a.json", std::nullopt, warnings);
  CHECK(s3.seats() == 68);
  CHECK(s3[0] == Rational(6591, 100));

  const auto s6 = read_votes(kData / "s6.json", VotesFormat::Json, 40, warnings);
  CHECK(s6.seats() == 40);
  CHECK(warnings.size() == 1);
  CHECK(code_of([&] { read_votes(kData / "missing.csv", VotesFormat::Csv, 3, warnings); }) == ErrorCode::IoError);

  const auto off = write_temp("off.json", R"({"seats": 68, "quotas": ["65.91", "0.53"]})");
  CHECK(code_of([&] { read_quotas(off, std::nullopt, warnings); }) == ErrorCode::QuotaSumMismatch);
}

TEST_CASE("report shapes") {
  CHECK(integer_json(BigInt(42)) == Json(42));
  CHECK(integer_json(BigInt("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  const auto r = rational_json(Rational(2, 3));
  CHECK(r["num"] == "2");
  CHECK(r["den"] == "3");
  CHECK(r["decimal"] == "0.666667");
}

TEST_CASE("apportion command") {
  const auto csv = (kData / "s2.csv").string();
  const auto run = cli({"--method", "hare", "--seats", "101", "--votes-csv", csv});
  REQUIRE(run.code == kExitOk);
  const auto doc = Json::parse(run.out);
  CHECK(doc["schema"] == "apportion-report");
  CHECK(doc["schema_version"] == kReportSchemaVersion);
  CHECK(doc["results"][0]["seats"] == Json({50, 41, 10}));
  CHECK(no_floats(doc));
  // same thing through the explicit subcommand
  CHECK(cli({"apportion", "--method", "hare", "--seats", "101", "--votes-csv", csv}).out == run.out);
  const auto majority = cli({"--method", "hare-majority", "--seats", "101", "--votes-csv", csv});
  CHECK(Json::parse(majority.out)["results"][0]["seats"] == Json({51, 40, 10}));
}

TEST_CASE("compare command") {
  const auto run = cli({"compare", "--methods", "hare,sainte-lague", "--seats", "94,95", "--votes-csv",
                        (kData / "alabama.csv").string()});
  REQUIRE(run.code == kExitOk);
  const auto results = Json::parse(run.out)["results"];
  REQUIRE(results.size() == 4);
  CHECK(results[0]["seats"] == Json({31, 57, 6}));
  CHECK(results[1]["seats"] == Json({31, 57, 6}));
  CHECK(results[2]["seats"] == Json({32, 58, 5}));
  CHECK(results[3]["seats"] == Json({31, 58, 6}));
}

TEST_CASE("check and scan commands") {
  const auto check = cli({"check", "--votes-csv", (kData / "s2.csv").string(), "--seats", "101"});
  REQUIRE(check.code == kExitOk);
  bool majority_fails = false;
  const Json checked = Json::parse(check.out);
  for (const auto& c : checked["conditions"]) {
    if (c["condition"] == "majority") majority_fails = c["outcome"] == "fails";
  }
  CHECK(majority_fails);

  const auto alabama = cli({"scan", "alabama", "--votes-csv", (kData / "alabama.csv").string(), "--from", "90",
                            "--to", "100"});
  REQUIRE(alabama.code == kExitOk);
  const auto findings = Json::parse(alabama.out)["findings"];
  REQUIRE(findings.size() >= 1);
  CHECK(findings[0]["kind"] == "alabama");
  CHECK(findings[0]["replayed"] == true);

  const auto fresh = cli({"scan", "new-state", "--votes-json", (kData / "s6.json").string(), "--new-votes", "17",
                          "--new-name", "D"});
  REQUIRE(fresh.code == kExitOk);
  CHECK(Json::parse(fresh.out)["findings"][0]["after"] == Json({19, 14, 4, 1}));

  const auto inst = cli({"scan", "instability", "--quotas", (kData / "s3a.json").string(), "--against",
                         (kData / "s3b.json").string(), "--method", "sainte-lague", "--trials", "50", "--seed", "2"});
  REQUIRE(inst.code == kExitOk);
  CHECK(Json::parse(inst.out)["results"][0]["against"]["swing"] == 4);
}

TEST_CASE("exit codes") {
  const auto csv = (kData / "s2.csv").string();
  CHECK(cli({"--method", "nonsense", "--seats", "5", "--votes-csv", csv}).code == kExitUsage);
  CHECK(cli({"--method", "rho:2", "--seats", "5", "--votes-csv", csv}).code == kExitUsage);
  CHECK(cli({"apportion", "--bogus-flag"}).code == kExitUsage);
  CHECK(cli({"--votes-csv", (kData / "nope.csv").string(), "--seats", "3"}).code == kExitInput);
  CHECK(cli({"--votes-csv", csv}).code == kExitInput);  // no seat count anywhere
  const auto bad = write_temp("bad.csv", "party,votes\nA,abc\n");
  CHECK(cli({"--votes-csv", bad.string(), "--seats", "3"}).code == kExitInput);
  const auto tie = write_temp("tie.csv", "party,votes\nX,5\nY,5\n");
  const auto tied = cli({"--votes-csv", tie.string(), "--seats", "1"});
  CHECK(tied.code == kExitTie);
  CHECK(tied.err.find("TieUnderErrorPolicy") != std::string::npos);
  CHECK(cli({"--votes-csv", tie.string(), "--seats", "1", "--tie", "index"}).code == kExitOk);
  CHECK(cli({"--votes-csv", tie.string(), "--seats", "1", "--tie", "seeded"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("seeded ties are reproducible and recorded") {
  const auto tie = write_temp("tie3.csv", "party,votes\nX,5\nY,5\nZ,5\n");
  const std::vector<std::string> args = {"--votes-csv", tie.string(), "--seats", "1", "--tie", "seeded", "--seed", "77"};
  const auto a = cli(args), b = cli(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seed"] == 77);
}

TEST_CASE("--out and table format") {
  const auto path = fs::temp_directory_path() / "apportion_test_out.json";
  const auto run = cli({"--method", "dhondt", "--seats", "33", "--votes-csv", (kData / "s1.csv").string(), "--out",
                        path.string()});
  REQUIRE(run.code == kExitOk);
  CHECK(run.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["results"][0]["seats"] == Json({17, 15, 1}));
  const auto table = cli({"--method", "dhondt", "--seats", "33", "--votes-csv", (kData / "s1.csv").string(),
                          "--format", "table"});
  CHECK(table.out.find("CDU/CSU") != std::string::npos);
}

TEST_CASE("scenario fixture matches the shipped file") {
  const auto exported = fs::temp_directory_path() / "apportion_test_scenarios.json";
  const auto run = cli({"scenarios", "--export", exported.string()});
  CHECK(run.code == kExitOk);
  std::ifstream a(exported), b(kData / "scenarios.json");
  REQUIRE(b);
  const Json shipped = Json::parse(b);
  CHECK(Json::parse(a) == shipped);
  CHECK(shipped["schema"] == "apportion-scenarios");
}

}
