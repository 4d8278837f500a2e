#include <doctest.h>

#include "apportion/error.hpp"
#include "apportion/minimizer.hpp"
#include "apportion/rounding.hpp"
#include "support.hpp"

using namespace apportion;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ApportionError& e) {
    return e.code();
  }
  FAIL("no ApportionError thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("problem validation") {
  CHECK(code_of([] { build_problem({}, 5, {}); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { build_problem({0, 0}, 5, {}); }) == ErrorCode::ZeroTotalVotes);
  CHECK(code_of([] { build_problem({3, 4}, 0, {}); }) == ErrorCode::NonPositiveSeats);
  CHECK(code_of([] { build_problem({3, 4}, 5, {"A", "A"}); }) == ErrorCode::DuplicateName);
  CHECK(code_of([] { build_problem({3, 4}, 5, {"A"}); }) == ErrorCode::LengthMismatch);
  const auto p = build_problem({3, 4}, 5, {});
  CHECK(p.names() == std::vector<std::string>{"P1", "P2"});
  CHECK(p.total_votes() == 7);
}

TEST_CASE("exact quotas") {
  const auto q = exact_quotas(build_problem({320, 238, 79}, 37, {"A", "B", "C"}));
  CHECK(q[0] == Rational(320 * 37, 637));
  CHECK(q[0].to_decimal(6, Rational::Rounding::Truncate) == "18.587127");
  CHECK(q[1].to_decimal(6, Rational::Rounding::Truncate) == "13.824175");
  CHECK(q[2].to_decimal(6, Rational::Rounding::Truncate) == "4.588697");
}

TEST_CASE("quota vectors must sum to M") {
  const std::vector<std::string> ok = {"65.91", "0.53", "0.521", "0.52", "0.519"};
  CHECK(quotas_from_decimals(ok, 68).seats() == 68);
  const std::vector<std::string> off = {"65.91", "0.53", "0.521", "0.52", "0.518"};
  CHECK(code_of([&] { quotas_from_decimals(off, 68); }) == ErrorCode::QuotaSumMismatch);
  const std::vector<std::string> bad = {"1.5", "x"};
  CHECK(code_of([&] { quotas_from_decimals(bad, 2); }) == ErrorCode::MalformedDecimal);
}

}

TEST_SUITE("minimizer") {

TEST_CASE("lindiv selection matches the direct argmin") {
  // S1 at d0 = 1 (D'Hondt)
  const auto q = ref::quotas({253, 237, 28}, 33);
  const auto r = minimal_solution(lindiv_error(q, Rational(1)), TiePolicy::error());
  CHECK(r.chosen == SeatVector({17, 15, 1}));
  REQUIRE(r.all_minimal);
  CHECK(*r.all_minimal == ref::lindiv_argmin(q, Rational(1)));
}

TEST_CASE("increments of the linear-divisor error") {
  const auto q = ref::quotas({3, 1}, 4);  // quotas 3 and 1
  const auto err = lindiv_error(q, Rational(1, 2));
  // H = 2(l + d0 - 1)/q - 2
  CHECK(err.increment(0, 1) == Rational(2) * Rational(1, 2) / Rational(3) - Rational(2));
  CHECK(err.increment(1, 2) == Rational(2) * Rational(3, 2) - Rational(2));
}

TEST_CASE("zero quotas are excluded") {
  const QuotaVector q({Rational(3), Rational(0)}, 3);
  const auto err = lindiv_error(q, Rational(0));
  CHECK(err.excluded(1));
  CHECK(minimal_solution(err, TiePolicy::error()).chosen == SeatVector({3, 0}));
}

TEST_CASE("is_minimal agrees with the direct argmin at every lattice point") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto in = ref::random_instance(rng, 3, 7, 30);
    const auto q = ref::quotas(in.votes, in.seats);
    for (const Rational& rho : {Rational(0), Rational(1, 2), Rational(1)}) {
      const auto err = lp_error(rho_adjust(q, rho), 2);
      const auto best = ref::lp_argmin(q, rho, 2);
      for (const auto& m : ref::compositions(q.size(), q.seats())) {
        const bool expected = std::binary_search(best.begin(), best.end(), m);
        CAPTURE(m.to_string());
        CHECK(is_minimal(err, m) == expected);
      }
    }
  }
}

TEST_CASE("uniqueness certificate") {
  const auto q = ref::quotas({1, 1}, 1);
  const auto err = lindiv_error(q, Rational(1, 2));
  const auto tie = is_unique_minimal(err, SeatVector({1, 0}));
  CHECK(tie.verdict == Uniqueness::TieFound);
  REQUIRE(tie.alternative);
  CHECK(*tie.alternative == SeatVector({0, 1}));

  const auto clear = ref::quotas({3, 1}, 4);
  CHECK(is_unique_minimal(lindiv_error(clear, Rational(1, 2)), SeatVector({3, 1})).verdict == Uniqueness::Certified);
  CHECK(code_of([&] { is_unique_minimal(lindiv_error(clear, Rational(1, 2)), SeatVector({4, 0})); }) ==
        ErrorCode::NotMinimal);
}

TEST_CASE("ties follow the policy") {
  const auto q = ref::quotas({1, 1, 2}, 2);
  const auto err = lindiv_error(q, Rational(1));
  CHECK(code_of([&] { minimal_solution(err, TiePolicy::error()); }) == ErrorCode::TieUnderErrorPolicy);
  const auto r = minimal_solution(err, TiePolicy::index_order());
  CHECK(r.tie_occurred);
  CHECK(r.chosen == SeatVector({1, 0, 1}));
  REQUIRE(r.all_minimal);
  CHECK(*r.all_minimal == ref::lindiv_argmin(q, Rational(1)));
  const auto s1 = minimal_solution(err, TiePolicy::seeded(5));
  const auto s2 = minimal_solution(err, TiePolicy::seeded(5));
  CHECK(s1.chosen == s2.chosen);
  CHECK(std::binary_search(r.all_minimal->begin(), r.all_minimal->end(), s1.chosen));
}

TEST_CASE("tie listing respects the cap") {
  const auto q = ref::quotas({1, 1, 1, 1, 1, 1}, 3);
  auto policy = TiePolicy::index_order(5);
  const auto r = minimal_solution(lindiv_error(q, Rational(1)), policy);
  CHECK(r.tie_occurred);
  CHECK_FALSE(r.all_minimal.has_value());  // C(6,3) = 20 > 5
  CHECK(r.chosen == SeatVector({1, 1, 1, 0, 0, 0}));
}

TEST_CASE("decreasing increments are rejected") {
  const auto bad = [](std::size_t, std::int64_t l) { return Rational(-l); };
  CHECK_THROWS_AS(ErrorFunction(2, 3, bad, "bad"), std::invalid_argument);
}

}
