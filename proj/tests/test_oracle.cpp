#include <doctest.h>

#include "apportion/error.hpp"
#include "apportion/minimizer.hpp"
#include "apportion/oracle.hpp"
#include "apportion/rounding.hpp"
#include "support.hpp"

using namespace apportion;

TEST_SUITE("oracle") {

TEST_CASE("lattice size and order") {
  CHECK(lattice_size(3, 4) == 15);
  CHECK(lattice_size(1, 9) == 1);
  CHECK(lattice_size(5, 68) == 1'028'790);
  CHECK(lattice_size(8, 51) > kDefaultLatticeCap);

  const auto all = enumerate_lattice(3, 4);
  CHECK(all.size() == 15);
  CHECK(all.front() == SeatVector({0, 0, 4}));
  CHECK(all.back() == SeatVector({4, 0, 0}));
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all == ref::compositions(3, 4));
}

TEST_CASE("instances beyond the cap are refused") {
  try {
    enumerate_lattice(8, 51);
    FAIL("expected an exception");
  } catch (const ApportionError& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
  CHECK_THROWS_AS(enumerate_lattice(3, 10, 20), ApportionError);
}

TEST_CASE("brute force matches the direct definitions") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const auto in = ref::random_instance(rng, 4, 8, 25);
    const auto q = ref::quotas(in.votes, in.seats);
    for (const Rational& d0 : {Rational(0), Rational(1, 2), Rational(2)}) {
      const auto expected = ref::lindiv_argmin(q, d0);
      CHECK(brute_min(lindiv_error(q, d0)) == expected);
      CHECK(brute_min_lindiv(q, d0) == expected);
    }
    for (unsigned p : {1u, 2u, 3u}) {
      const auto adj = rho_adjust(q, Rational(1, 4));
      CHECK(brute_min(lp_error(adj, p)) == ref::lp_argmin(q, Rational(1, 4), p));
      CHECK(brute_min_norm(adj, Norm::lp(p)) == ref::lp_argmin(q, Rational(1, 4), p));
    }
    CHECK(brute_min_norm(rho_adjust(q, Rational(1, 2)), Norm::max()) == ref::max_argmin(q, Rational(1, 2)));
  }
}

TEST_CASE("separable costs with exclusions") {
  // phi_j(x) = (x - 2)^2 for both parties, M = 3, second party held at zero
  const auto phi = [](std::size_t, std::int64_t x) { return Rational((x - 2) * (x - 2)); };
  CHECK(brute_min_separable(2, 3, phi) == std::vector<SeatVector>{SeatVector({1, 2}), SeatVector({2, 1})});
  CHECK(brute_min_separable(2, 3, phi, {false, true}) == std::vector<SeatVector>{SeatVector({3, 0})});
}

TEST_CASE("large vote counts stay exact") {
  // the scaled-integer walk must fall back to big integers here
  const std::vector<BigInt> votes = {BigInt("900000000000000000007"), BigInt("300000000000000000001"),
                                     BigInt("100000000000000000003")};
  const auto q = exact_quotas(build_problem(votes, 9, {}));
  const auto expected = ref::lindiv_argmin(q, Rational(1, 2));
  CHECK(brute_min(lindiv_error(q, Rational(1, 2))) == expected);
  CHECK(brute_min_lindiv(q, Rational(1, 2)) == expected);
}

}
