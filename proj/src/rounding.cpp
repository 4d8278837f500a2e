#include "apportion/rounding.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace apportion {

namespace {

// Hands `count` extra seats to the eligible parties with the largest remainders.
// Parties whose remainder equals the cut-off value share the leftover as a tie block.
TieSet greatest_remainders(std::vector<std::int64_t> base, const std::vector<Rational>& remainders,
                           const std::vector<bool>& eligible, std::int64_t count) {
  TieSet ties;
  ties.slack.assign(base.size(), 0);
  if (count > 0) {
    std::vector<Rational> pool;
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (eligible[j]) pool.push_back(remainders[j]);
    }
    if (static_cast<std::int64_t>(pool.size()) < count) {
      throw ApportionError(ErrorCode::InsufficientSeats, "more remainder seats than eligible parties");
    }
    std::sort(pool.begin(), pool.end(), std::greater<>());
    const Rational cutoff = pool[static_cast<std::size_t>(count - 1)];
    std::int64_t above = 0;
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (!eligible[j]) continue;
      if (remainders[j] > cutoff) {
        ++base[j];
        ++above;
      } else if (remainders[j] == cutoff) {
        ties.slack[j] = 1;
      }
    }
    ties.extra = count - above;
  }
  ties.base = std::move(base);
  return ties;
}

std::string rho_method_name(const Rational& rho) {
  return rho == Rational(1, 2) ? "hare" : "rho:" + rho.to_string();
}

}  // namespace

RhoAdjustedQuota rho_adjust(const QuotaVector& quotas, const Rational& rho) {
  if (rho.sign() < 0 || rho > Rational(1)) {
    throw ApportionError(ErrorCode::RhoOutOfRange, "rho = " + rho.to_string() + " is outside [0, 1]");
  }
  const std::int64_t seats = quotas.seats();
  const Rational scale = (Rational(seats) + Rational(2) * rho - 1) / Rational(seats);

  RhoAdjustedQuota out;
  out.rho = rho;
  out.seats = seats;
  std::int64_t floor_sum = 0;
  for (const auto& q : quotas.quotas()) {
    Rational adjusted = q * scale;
    const std::int64_t mu = to_int64(adjusted.floor());
    out.remainders.push_back(adjusted - Rational(mu));
    out.floors.push_back(mu);
    out.adjusted.push_back(std::move(adjusted));
    floor_sum += mu;
  }

  const std::int64_t bound = rho.is_zero() ? seats - 1 : rho == Rational(1) ? seats + 1 : seats;
  if (floor_sum > bound) {
    throw std::logic_error("rho_adjust: floor sum " + std::to_string(floor_sum) + " exceeds bound " +
                           std::to_string(bound));
  }
  return out;
}

ApportionmentResult apportion_rho(const QuotaVector& quotas, const Rational& rho, const TiePolicy& policy) {
  const RhoAdjustedQuota adj = rho_adjust(quotas, rho);
  const std::size_t n = quotas.size();
  std::int64_t floor_sum = 0;
  for (auto mu : adj.floors) floor_sum += mu;
  const std::int64_t unallocated = quotas.seats() - floor_sum;

  std::vector<std::string> notes;
  TieSet ties;
  if (unallocated >= 0) {
    std::vector<bool> eligible(n, true);
    const bool all_whole = std::all_of(adj.remainders.begin(), adj.remainders.end(),
                                       [](const Rational& r) { return r.is_zero(); });
    if (all_whole && unallocated > 0) {
      // rho = 0 with integral adjusted quotas: the extra seat goes to one of the parties with votes.
      for (std::size_t j = 0; j < n; ++j) eligible[j] = quotas[j].sign() > 0;
    }
    ties = greatest_remainders(adj.floors, adj.remainders, eligible, unallocated);
  } else {
    // rho = 1 with integral adjusted quotas: one seat too many, taken from a party above its exact quota.
    std::vector<bool> eligible(n);
    std::int64_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      eligible[j] = Rational(adj.floors[j]) > quotas[j];
      count += eligible[j] ? 1 : 0;
    }
    if (count == 0) {
      const auto top = *std::max_element(adj.floors.begin(), adj.floors.end());
      for (std::size_t j = 0; j < n; ++j) {
        eligible[j] = adj.floors[j] == top;
        count += eligible[j] ? 1 : 0;
      }
      notes.emplace_back("no party exceeds its exact quota; seat removed from a party with the most seats");
    }
    ties.base = adj.floors;
    ties.slack.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (eligible[j]) {
        --ties.base[j];
        ties.slack[j] = 1;
      }
    }
    ties.extra = count + unallocated;
  }

  ApportionmentResult result = resolve_ties(ties, policy, rho_method_name(rho));
  result.notes.insert(result.notes.end(), notes.begin(), notes.end());
  return result;
}

ApportionmentResult apportion_hare_majority(const QuotaVector& quotas, const TiePolicy& policy) {
  const std::size_t n = quotas.size();
  const std::int64_t seats = quotas.seats();

  std::optional<std::size_t> majority;
  for (std::size_t j = 0; j < n; ++j) {
    if (Rational(2) * quotas[j] > Rational(seats)) majority = j;
  }
  if (!majority) {
    ApportionmentResult result = apportion_rho(quotas, Rational(1, 2), policy);
    result.method = "hare-majority";
    return result;
  }

  std::vector<std::int64_t> guaranteed(n);
  std::vector<Rational> remainders(n);
  std::int64_t assigned = 0;
  for (std::size_t j = 0; j < n; ++j) {
    guaranteed[j] = to_int64(quotas[j].floor());
    remainders[j] = quotas[j] - Rational(guaranteed[j]);
  }
  guaranteed[*majority] = std::max(guaranteed[*majority], seats / 2 + 1);
  for (auto g : guaranteed) assigned += g;
  if (assigned > seats) {
    throw ApportionError(ErrorCode::InsufficientSeats,
                         "lower quotas plus the majority guarantee need " + std::to_string(assigned) + " seats");
  }

  std::vector<bool> eligible(n);
  for (std::size_t j = 0; j < n; ++j) eligible[j] = Rational(guaranteed[j]) < Rational(quotas[j].ceil());

  TieSet ties = greatest_remainders(guaranteed, remainders, eligible, seats - assigned);
  ApportionmentResult result = resolve_ties(ties, policy, "hare-majority");
  if (guaranteed[*majority] > to_int64(quotas[*majority].floor())) {
    result.notes.push_back("party " + std::to_string(*majority + 1) + " lifted to an absolute majority of seats");
  }
  return result;
}

ApportionmentResult apportion_hare_majority(const ElectionProblem& problem, const TiePolicy& policy) {
  return apportion_hare_majority(exact_quotas(problem), policy);
}

}  // namespace apportion
