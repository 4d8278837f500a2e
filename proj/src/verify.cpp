#include "apportion/verify.hpp"

#include <algorithm>

#include "apportion/divisor.hpp"
#include "apportion/minimizer.hpp"
#include "apportion/oracle.hpp"
#include "apportion/random.hpp"
#include "apportion/rounding.hpp"

namespace apportion {

namespace {

constexpr std::size_t kUnlimited = std::size_t{1} << 20;

class Tally {
 public:
  Tally(VerifySummary& summary, std::string instance) : s_(summary), instance_(std::move(instance)) {}

  void expect(const std::string& family, bool ok, const std::string& what) {
    ++s_.checks[family];
    if (ok) return;
    ++s_.failures[family];
    if (s_.examples.size() < 20) s_.examples.push_back(family + " " + instance_ + " " + what);
  }

 private:
  VerifySummary& s_;
  std::string instance_;
};

std::vector<SeatVector> optimal_set(const ApportionmentResult& r) {
  if (!r.all_minimal) throw std::logic_error("optimal set not enumerated");
  return *r.all_minimal;
}

void check_error_function(const ErrorFunction& err, Tally& tally, const std::string& label) {
  const TiePolicy everything = TiePolicy::index_order(kUnlimited);
  const auto fast = optimal_set(minimal_solution(err, everything));
  const auto slow = brute_min(err);
  tally.expect("oracle", fast == slow, label);

  for (const auto& m : enumerate_lattice(err.parties(), err.seats())) {
    const bool optimal = std::binary_search(slow.begin(), slow.end(), m);
    tally.expect("certificate", is_minimal(err, m) == optimal, label + " at " + m.to_string());
  }
}

}  // namespace

VerifySummary verify_sweep(const VerifyOptions& options) {
  VerifySummary summary;
  Rng rng(options.seed);
  const TiePolicy everything = TiePolicy::index_order(kUnlimited);
  const std::vector<Rational> offsets = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
  const std::vector<Rational> rhos = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};

  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(options.max_parties)));
    const std::int64_t M = rng.uniform(1, options.max_seats);
    std::vector<BigInt> votes;
    std::string text = "votes (";
    for (std::size_t j = 0; j < n; ++j) {
      votes.emplace_back(rng.uniform(1, options.max_votes));
      text += (j ? ", " : "") + votes.back().str();
    }
    text += "), M = " + std::to_string(M);
    const QuotaVector q = exact_quotas(build_problem(votes, M, default_names(n)));
    Tally tally(summary, text);
    ++summary.instances;

    for (const auto& d0 : offsets) {
      const std::string label = "d0=" + d0.to_string();
      const ErrorFunction err = lindiv_error(q, d0);
      check_error_function(err, tally, label);
      const auto minimal = optimal_set(minimal_solution(err, everything));
      tally.expect("direct-phi", minimal == brute_min_lindiv(q, d0), label);
      if (d0.sign() > 0 || static_cast<std::int64_t>(n) <= M) {
        const auto method = optimal_set(apportion_divisor(q, DivisorSequence::linear(d0), everything));
        tally.expect("bridge", method == minimal, label);
      }
    }
    for (const auto& rho : rhos) {
      const RhoAdjustedQuota adj = rho_adjust(q, rho);
      const auto method = optimal_set(apportion_rho(q, rho, everything));
      for (unsigned p = 1; p <= 3; ++p) {
        const std::string label = "rho=" + rho.to_string() + " p=" + std::to_string(p);
        const ErrorFunction err = lp_error(adj, p);
        check_error_function(err, tally, label);
        const auto minimal = optimal_set(minimal_solution(err, everything));
        tally.expect("direct-norm", minimal == brute_min_norm(adj, Norm::lp(p)), label);
        tally.expect("bridge", method == minimal, label);
      }
      if (rho == Rational(1, 2)) {
        const auto best = brute_min_norm(adj, Norm::max());
        const bool contained = std::all_of(method.begin(), method.end(), [&](const SeatVector& m) {
          return std::binary_search(best.begin(), best.end(), m);
        });
        tally.expect("max-norm", contained, "hare");
      }
    }
  }
  return summary;
}

}  // namespace apportion
