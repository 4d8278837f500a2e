#pragma once
/**
 * @file oracle.hpp
 * @brief Brute-force ground truth over the seat lattice.
 *
 * Everything here walks every composition of M into n parts and compares
 * exact values. It is slow on purpose and shares nothing with the selection
 * algorithm beyond the ErrorFunction's increment table.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "apportion/core.hpp"

namespace apportion {

class ErrorFunction;
struct RhoAdjustedQuota;

inline constexpr std::uint64_t kDefaultLatticeCap = 10'000'000;

/// C(M + n - 1, n - 1), saturated at UINT64_MAX.
std::uint64_t lattice_size(std::size_t n, std::int64_t seats);

/// Walks the compositions of M into n non-negative parts in lexicographic order,
/// from (0, ..., 0, M) up to (M, 0, ..., 0).
class LatticeIterator {
 public:
  LatticeIterator(std::size_t n, std::int64_t seats);

  bool done() const { return done_; }
  const SeatVector& operator*() const { return current_; }
  LatticeIterator& operator++();

 private:
  SeatVector current_;
  bool done_ = false;
};

/// Throws InstanceTooLarge when the lattice has more than `cap` points.
std::vector<SeatVector> enumerate_lattice(std::size_t n, std::int64_t seats, std::uint64_t cap = kDefaultLatticeCap);

/// Exact argmin of sum_j sum_{l <= m_j} H_j(l), sorted. Excluded parties are held at zero.
std::vector<SeatVector> brute_min(const ErrorFunction& err, std::uint64_t cap = kDefaultLatticeCap);

struct Norm {
  enum class Kind { Lp, Max };
  Kind kind = Kind::Lp;
  unsigned p = 2;

  static Norm lp(unsigned p) { return {Kind::Lp, p}; }
  static Norm max() { return {Kind::Max, 0}; }
};

/// Exact argmin of ||m - q^rho|| over the lattice, sorted.
std::vector<SeatVector> brute_min_norm(const RhoAdjustedQuota& adjusted, Norm norm, std::uint64_t cap = kDefaultLatticeCap);

/// Argmin of sum_j phi_j(m_j), evaluating phi directly; parties in `excluded` stay at zero.
using PartyCost = std::function<Rational(std::size_t party, std::int64_t seats)>;
std::vector<SeatVector> brute_min_separable(std::size_t n, std::int64_t seats, const PartyCost& phi,
                                            const std::vector<bool>& excluded = {},
                                            std::uint64_t cap = kDefaultLatticeCap);

/// phi_j(x) = (x - q_j + d0 - 1/2)^2 / q_j evaluated directly; zero-quota parties stay at zero.
std::vector<SeatVector> brute_min_lindiv(const QuotaVector& quotas, const Rational& d0,
                                         std::uint64_t cap = kDefaultLatticeCap);

}  // namespace apportion
