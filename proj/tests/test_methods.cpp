#include <doctest.h>

#include <cmath>

#include "apportion/divisor.hpp"
#include "apportion/error.hpp"
#include "apportion/method.hpp"
#include "apportion/rounding.hpp"
#include "support.hpp"

using namespace apportion;

namespace {

// Plain highest-averages loop: seat after seat to the largest q_k / d(m_k + 1),
// lowest index first on equal quotients. Hill compares q^2 / d^2.
SeatVector highest_averages(const QuotaVector& q, const std::function<Rational(std::int64_t)>& d_squared) {
  std::vector<std::int64_t> m(q.size(), 0);
  for (std::int64_t s = 0; s < q.seats(); ++s) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k].is_zero()) continue;
      auto better = [&](std::size_t a, std::size_t b) {
        const Rational da = d_squared(m[a] + 1), db = d_squared(m[b] + 1);
        // q_a^2 / da > q_b^2 / db, with zero divisors as infinity
        if (da.is_zero() || db.is_zero()) return da.is_zero() && !db.is_zero();
        return q[a] * q[a] * db > q[b] * q[b] * da;
      };
      if (!best || better(k, *best)) best = k;
    }
    ++m[*best];
  }
  return SeatVector(m);
}

// Hamilton by hand: floors, then leftover seats to the largest remainders.
SeatVector hamilton(const QuotaVector& q) {
  std::vector<std::int64_t> m;
  std::vector<std::pair<Rational, std::size_t>> rem;
  std::int64_t left = q.seats();
  for (std::size_t j = 0; j < q.size(); ++j) {
    const auto f = to_int64(q[j].floor());
    m.push_back(f);
    left -= f;
    rem.emplace_back(q[j] - Rational(f), j);
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::int64_t i = 0; i < left; ++i) ++m[rem[static_cast<std::size_t>(i)].second];
  return SeatVector(m);
}

}  // namespace

TEST_SUITE("methods_divisor") {

TEST_CASE("catalogue divisors") {
  CHECK(named_sequence("adams").divisor(1) == Rational(0));
  CHECK(named_sequence("danish").divisor(2) == Rational(4, 3));
  CHECK(named_sequence("sainte-lague").divisor(3) == Rational(5, 2));
  CHECK(named_sequence("dhondt").divisor(1) == Rational(1));
  CHECK(named_sequence("imperiali").divisor(1) == Rational(2));
  CHECK(named_sequence("dean").divisor(2) == Rational(4, 3));  // 2 * 1 / (3/2)
  CHECK(named_sequence("hill").divisor_squared(3) == Rational(6));
  CHECK(named_sequence("condorcet").divisor(1) == Rational(2, 5));
  CHECK(named_sequence("considerant").divisor(2) == Rational(5, 3));
  CHECK_THROWS_AS(named_sequence("hill").divisor(2), std::exception);
  CHECK(named_sequence("adams").starts_at_zero());
  CHECK(named_sequence("hill").starts_at_zero());
  CHECK(named_sequence("dean").starts_at_zero());  // d_1 = 0
  CHECK_FALSE(named_sequence("danish").starts_at_zero());
}

TEST_CASE("D'Hondt on three parties") {
  const auto q = ref::quotas({253, 237, 28}, 33);
  CHECK(apportion_divisor(q, named_sequence("dhondt"), TiePolicy::error()).chosen == SeatVector({17, 15, 1}));
}

TEST_CASE("agrees with a plain highest-averages loop") {
  Rng rng(3);
  int compared = 0;
  for (int t = 0; t < 300; ++t) {
    const auto in = ref::random_instance(rng, 5, 20, 1000);
    const auto q = ref::quotas(in.votes, in.seats);
    for (const auto& name : divisor_catalogue()) {
      const auto seq = named_sequence(name);
      if (seq.starts_at_zero() && q.size() > static_cast<std::size_t>(q.seats())) continue;
      ApportionmentResult r;
      try {
        r = apportion_divisor(q, seq, TiePolicy::index_order());
      } catch (const ApportionError&) {
        FAIL("unexpected error");
      }
      if (r.tie_occurred) continue;  // the loop's tie order is not the library's contract
      CAPTURE(name);
      CAPTURE(q.seats());
      CHECK(r.chosen == highest_averages(q, [&](std::int64_t j) { return seq.divisor_squared(j); }));
      ++compared;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("Adams-like methods need n <= M") {
  const auto q = ref::quotas({5, 4, 3}, 2);
  try {
    apportion_divisor(q, named_sequence("adams"), TiePolicy::error());
    FAIL("expected an exception");
  } catch (const ApportionError& e) {
    CHECK(e.code() == ErrorCode::TooManyPartiesForAdamsLike);
  }
  // every party with votes gets its first seat
  CHECK(apportion_divisor(ref::quotas({90, 5, 5}, 3), named_sequence("hill"), TiePolicy::error()).chosen ==
        SeatVector({1, 1, 1}));
}

TEST_CASE("zero-vote parties get nothing") {
  const QuotaVector q({Rational(5), Rational(0), Rational(2)}, 7);
  for (const char* name : {"adams", "dhondt", "hill"}) {
    CHECK(apportion_divisor(q, named_sequence(name), TiePolicy::error()).chosen == SeatVector({5, 0, 2}));
  }
}

TEST_CASE("tie policies on an exact tie") {
  const auto q = ref::quotas({2, 2}, 1);
  const auto seq = named_sequence("sainte-lague");
  CHECK_THROWS_AS(apportion_divisor(q, seq, TiePolicy::error()), ApportionError);
  CHECK(apportion_divisor(q, seq, TiePolicy::index_order()).chosen == SeatVector({1, 0}));
  TiePolicy by_votes{TieMode::LargestVotes, 0, 64, {BigInt(3), BigInt(9)}};
  // priority data supplied directly
  CHECK(apportion_divisor(q, seq, by_votes).chosen == SeatVector({0, 1}));
  const auto seeded = apportion_divisor(q, seq, TiePolicy::seeded(42));
  CHECK(seeded.chosen == apportion_divisor(q, seq, TiePolicy::seeded(42)).chosen);
  REQUIRE(seeded.all_minimal);
  CHECK(seeded.all_minimal->size() == 2);
}

}

TEST_SUITE("methods_rounding") {

TEST_CASE("Hare on 101 seats") {
  const auto q = ref::quotas({50600, 40650, 9750}, 101);
  CHECK(apportion_rho(q, Rational(1, 2), TiePolicy::error()).chosen == SeatVector({50, 41, 10}));
  CHECK(apportion_rho(q, Rational(1, 2), TiePolicy::error()).method == "hare");
}

TEST_CASE("Hare with the majority fix") {
  const auto p = build_problem({50600, 40650, 9750}, 101, {});
  const auto r = apportion_hare_majority(p, TiePolicy::error());
  CHECK(r.chosen == SeatVector({51, 40, 10}));
  CHECK_FALSE(r.notes.empty());
  // no majority party: plain Hare
  const auto plain = build_problem({420, 330, 250}, 10, {});
  CHECK(apportion_hare_majority(plain, TiePolicy::error()).chosen ==
        apportion_rho(exact_quotas(plain), Rational(1, 2), TiePolicy::error()).chosen);
}

TEST_CASE("rho = 1/2 is Hamilton") {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    const auto in = ref::random_instance(rng, 6, 40, 100000);
    const auto q = ref::quotas(in.votes, in.seats);
    const auto r = apportion_rho(q, Rational(1, 2), TiePolicy::index_order());
    if (r.tie_occurred) continue;
    CHECK(r.chosen == hamilton(q));
  }
}

TEST_CASE("rho adjustment") {
  const auto q = ref::quotas({3, 1}, 4);
  const auto adj = rho_adjust(q, Rational(1));
  // q (M + 1) / M
  CHECK(adj.adjusted[0] == Rational(15, 4));
  CHECK(adj.floors[0] == 3);
  CHECK(adj.remainders[0] == Rational(3, 4));
  CHECK_THROWS_AS(rho_adjust(q, Rational(3, 2)), ApportionError);
  CHECK_THROWS_AS(rho_adjust(q, Rational(-1, 10)), ApportionError);
}

TEST_CASE("rho-rounding equals the direct l_p argmin") {
  Rng rng(21);
  for (int t = 0; t < 120; ++t) {
    const auto in = ref::random_instance(rng, 4, 9, 40);
    const auto q = ref::quotas(in.votes, in.seats);
    for (const Rational& rho : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      const auto r = apportion_rho(q, rho, TiePolicy::index_order(1 << 20));
      REQUIRE(r.all_minimal);
      CAPTURE(rho.to_string());
      CHECK(*r.all_minimal == ref::lp_argmin(q, rho, 1));
    }
  }
}

TEST_CASE("integral quotas are returned unchanged") {
  const QuotaVector q({Rational(4), Rational(2), Rational(1)}, 7);
  for (const Rational& rho : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
    CHECK(apportion_rho(q, rho, TiePolicy::error()).chosen == SeatVector({4, 2, 1}));
  }
}

}

TEST_SUITE("io_cli") {

TEST_CASE("method grammar") {
  CHECK(same_method(parse_method("rho:1/2"), parse_method("hare")));
  CHECK(same_method(parse_method("linear:d0=0.5"), parse_method("sainte-lague")));
  CHECK(same_method(parse_method("LINEAR:d0=1"), parse_method("DHondt")));
  CHECK(parse_method("linear:d0=0.5").to_string() == "sainte-lague");
  CHECK(parse_method("rho:0.25").to_string() == "rho:1/4");
  for (const char* text : {"hare", "hare-majority", "rho:1/3", "adams", "danish", "condorcet", "sainte-lague",
                           "considerant", "dhondt", "imperiali", "dean", "hill", "linear:d0=7/3"}) {
    CAPTURE(text);
    const auto m = parse_method(text);
    CHECK(same_method(parse_method(m.to_string()), m));
  }
  auto code = [](const char* text) {
    try {
      parse_method(text);
    } catch (const ApportionError& e) {
      return e.code();
    }
    return ErrorCode::EmptyInput;
  };
  CHECK(code("rho:1.5") == ErrorCode::ParseError);
  CHECK(code("rho:") == ErrorCode::ParseError);
  CHECK(code("linear:d0=-1") == ErrorCode::ParseError);
  CHECK(code("linear:x=1") == ErrorCode::ParseError);
  CHECK(code("jefferson") == ErrorCode::UnknownMethod);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_method("rho:1.5");
    FAIL("expected an exception");
  } catch (const ApportionError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

}
