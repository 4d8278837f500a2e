#pragma once

#include <cstdint>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/tie.hpp"

namespace apportion {

/// Quotas rescaled for a rho-rounding method: q_j^rho = (q_j / M)(M + 2 rho - 1),
/// split into integer part mu_j and remainder r_j in [0, 1).
struct RhoAdjustedQuota {
  Rational rho;
  std::int64_t seats = 0;
  std::vector<Rational> adjusted;
  std::vector<std::int64_t> floors;
  std::vector<Rational> remainders;

  std::size_t size() const { return adjusted.size(); }
};

/// Throws RhoOutOfRange unless 0 <= rho <= 1.
RhoAdjustedQuota rho_adjust(const QuotaVector& quotas, const Rational& rho);

/// Floors of the adjusted quotas plus one extra seat for each of the largest remainders.
/// rho = 1/2 is the Hare (Hamilton, greatest remainder) method.
ApportionmentResult apportion_rho(const QuotaVector& quotas, const Rational& rho, const TiePolicy& policy);

/// Hare with the majority fix: a party holding more than half the votes is guaranteed
/// floor(M/2) + 1 seats, everyone keeps the lower quota, and the leftover seats go by
/// greatest remainder to parties still below their upper quota.
ApportionmentResult apportion_hare_majority(const QuotaVector& quotas, const TiePolicy& policy);
ApportionmentResult apportion_hare_majority(const ElectionProblem& problem, const TiePolicy& policy);

}  // namespace apportion
