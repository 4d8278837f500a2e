#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's minimizer or oracle: costs are evaluated straight from their
// definitions on every composition of M.

#include <algorithm>
#include <functional>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/random.hpp"
#include "apportion/rational.hpp"

namespace ref {

using apportion::BigInt;
using apportion::QuotaVector;
using apportion::Rational;
using apportion::SeatVector;

inline void compositions_into(std::size_t n, std::int64_t left, std::vector<std::int64_t>& prefix,
                              std::vector<SeatVector>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t k = 0; k <= left; ++k) {
    prefix.push_back(k);
    compositions_into(n, left - k, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<SeatVector> compositions(std::size_t n, std::int64_t seats) {
  std::vector<SeatVector> out;
  std::vector<std::int64_t> prefix;
  compositions_into(n, seats, prefix, out);
  return out;
}

// Sorted argmin of `cost`; points where cost returns nullopt are infeasible.
inline std::vector<SeatVector> argmin(std::size_t n, std::int64_t seats,
                                      const std::function<std::optional<Rational>(const SeatVector&)>& cost) {
  std::vector<SeatVector> best;
  std::optional<Rational> best_cost;
  for (const auto& m : compositions(n, seats)) {
    const auto c = cost(m);
    if (!c) continue;
    if (!best_cost || *c < *best_cost) {
      best_cost = c;
      best = {m};
    } else if (*c == *best_cost) {
      best.push_back(m);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

// sum over q_j > 0 of (m_j - q_j + d0 - 1/2)^2 / q_j; zero-quota parties must get nothing.
inline std::vector<SeatVector> lindiv_argmin(const QuotaVector& q, const Rational& d0) {
  return argmin(q.size(), q.seats(), [&](const SeatVector& m) -> std::optional<Rational> {
    Rational sum;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j].is_zero()) {
        if (m[j] != 0) return std::nullopt;
        continue;
      }
      const Rational x = Rational(m[j]) - q[j] + d0 - Rational(1, 2);
      sum += x * x / q[j];
    }
    return sum;
  });
}

inline std::vector<Rational> rho_quotas(const QuotaVector& q, const Rational& rho) {
  std::vector<Rational> out;
  const Rational M(q.seats());
  for (const auto& v : q.quotas()) out.push_back(v * (M + Rational(2) * rho - Rational(1)) / M);
  return out;
}

// sum_j |m_j - q_j^rho|^p
inline std::vector<SeatVector> lp_argmin(const QuotaVector& q, const Rational& rho, unsigned p) {
  const auto target = rho_quotas(q, rho);
  return argmin(q.size(), q.seats(), [&](const SeatVector& m) -> std::optional<Rational> {
    Rational sum;
    for (std::size_t j = 0; j < q.size(); ++j) sum += (Rational(m[j]) - target[j]).abs().pow(p);
    return sum;
  });
}

// max_j |m_j - q_j^rho|
inline std::vector<SeatVector> max_argmin(const QuotaVector& q, const Rational& rho) {
  const auto target = rho_quotas(q, rho);
  return argmin(q.size(), q.seats(), [&](const SeatVector& m) -> std::optional<Rational> {
    Rational worst;
    for (std::size_t j = 0; j < q.size(); ++j) worst = std::max(worst, (Rational(m[j]) - target[j]).abs());
    return worst;
  });
}

inline QuotaVector quotas(const std::vector<std::int64_t>& votes, std::int64_t seats) {
  BigInt total = 0;
  for (auto v : votes) total += v;
  std::vector<Rational> q;
  for (auto v : votes) q.emplace_back(BigInt(v) * seats, total);
  return QuotaVector(std::move(q), seats);
}

struct Instance {
  std::vector<std::int64_t> votes;
  std::int64_t seats;
};

// n in [2, max_n], M in [1, max_m], votes in [1, max_votes].
inline Instance random_instance(apportion::Rng& rng, std::size_t max_n, std::int64_t max_m, std::int64_t max_votes) {
  Instance in;
  const auto n = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(max_n)));
  in.seats = rng.uniform(1, max_m);
  for (std::size_t j = 0; j < n; ++j) in.votes.push_back(rng.uniform(1, max_votes));
  return in;
}

}  // namespace ref
