#pragma once

/**
 * @file minimizer.hpp
 * @brief Decomposable error functions and their exact minimization over the seat lattice.
 *
 * An error function psi(m) = sum_j phi_j(m_j) is handled purely through its
 * increments H_j(l) = phi_j(l) - phi_j(l - 1), l = 1..M. When every column of
 * the M x n increment matrix is non-decreasing, an allocation is optimal exactly
 * when its seats pick out M smallest entries of the matrix, which is what
 * minimal_solution() computes with a frontier over the n column heads.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/tie.hpp"

namespace apportion {

struct RhoAdjustedQuota;

class ErrorFunction {
 public:
  /// H(party, seat) with party in [0, n) and seat in [1, M].
  using Increment = std::function<Rational(std::size_t party, std::int64_t seat)>;

  /// Materializes every increment and rejects columns that decrease.
  /// Parties flagged in `excluded` never receive a seat (their column is treated as +infinity).
  ErrorFunction(std::size_t parties, std::int64_t seats, const Increment& increment, std::string descriptor,
                std::vector<bool> excluded = {}, std::optional<Rational> base = std::nullopt);

  std::size_t parties() const { return parties_; }
  std::int64_t seats() const { return seats_; }
  const Rational& increment(std::size_t party, std::int64_t seat) const;
  bool excluded(std::size_t party) const { return excluded_[party]; }
  const std::string& descriptor() const { return descriptor_; }
  const std::optional<Rational>& base() const { return base_; }

  /// psi(m) - psi(0), the increment sum.
  Rational relative_error(const SeatVector& m) const;

 private:
  std::size_t parties_;
  std::int64_t seats_;
  std::vector<std::vector<Rational>> table_;
  std::vector<bool> excluded_;
  std::string descriptor_;
  std::optional<Rational> base_;
};

/// Linear-divisor error with phi_j(x) = (x - q_j + d0 - 1/2)^2 / q_j, so
/// H_j(l) = 2(l + d0 - 1)/q_j - 2. Parties with q_j = 0 are excluded and stay at zero seats.
ErrorFunction lindiv_error(const QuotaVector& quotas, const Rational& d0);

/// l_p distance to the rho-adjusted quotas: H_j(l) = |l - q_j^rho|^p - |l - 1 - q_j^rho|^p.
ErrorFunction lp_error(const RhoAdjustedQuota& adjusted, unsigned p);

ApportionmentResult minimal_solution(const ErrorFunction& err, const TiePolicy& policy);

/// H_j(m_j + 1) >= H_k(m_k) for all j, k, with H_j(M + 1) = +infinity and the
/// right side vacuous when m_k = 0.
bool is_minimal(const ErrorFunction& err, const SeatVector& m);

enum class Uniqueness { Certified, TieFound };

struct UniquenessReport {
  Uniqueness verdict;
  /// Another optimal allocation when the strict inequality fails.
  std::optional<SeatVector> alternative;
};

/// Strict version of the minimality test over j != k. Throws NotMinimal if m is not optimal.
UniquenessReport is_unique_minimal(const ErrorFunction& err, const SeatVector& m);

}  // namespace apportion
