#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apportion/error.hpp"
#include "apportion/rational.hpp"

namespace apportion {

/// Vote counts a_1..a_n for n labelled parties and a house size M.
class ElectionProblem {
 public:
  ElectionProblem(std::vector<BigInt> votes, std::int64_t seats, std::vector<std::string> names);

  std::size_t size() const { return votes_.size(); }
  const std::vector<BigInt>& votes() const { return votes_; }
  const std::vector<std::string>& names() const { return names_; }
  std::int64_t seats() const { return seats_; }
  const BigInt& total_votes() const { return total_; }

  ElectionProblem with_seats(std::int64_t seats) const;

 private:
  std::vector<BigInt> votes_;
  std::vector<std::string> names_;
  std::int64_t seats_;
  BigInt total_;
};

/// Exact quotas q_1..q_n, non-negative and summing to M.
class QuotaVector {
 public:
  QuotaVector(std::vector<Rational> quotas, std::int64_t seats, std::vector<std::string> names = {});

  std::size_t size() const { return quotas_.size(); }
  const Rational& operator[](std::size_t j) const { return quotas_[j]; }
  const std::vector<Rational>& quotas() const { return quotas_; }
  std::int64_t seats() const { return seats_; }
  const std::vector<std::string>& names() const { return names_; }

  bool is_integral() const;
  /// Number of parties with a strictly positive quota.
  std::size_t positive_count() const;

 private:
  std::vector<Rational> quotas_;
  std::int64_t seats_;
  std::vector<std::string> names_;
};

/// A point of the seat lattice: non-negative integers m_1..m_n.
class SeatVector {
 public:
  SeatVector() = default;
  explicit SeatVector(std::vector<std::int64_t> seats);

  std::size_t size() const { return seats_.size(); }
  std::int64_t operator[](std::size_t j) const { return seats_[j]; }
  std::int64_t& operator[](std::size_t j) { return seats_[j]; }
  const std::vector<std::int64_t>& values() const { return seats_; }
  auto begin() const { return seats_.begin(); }
  auto end() const { return seats_.end(); }

  std::int64_t total() const;
  std::string to_string() const;

  friend bool operator==(const SeatVector&, const SeatVector&) = default;
  friend auto operator<=>(const SeatVector&, const SeatVector&) = default;

 private:
  std::vector<std::int64_t> seats_;
};

struct ApportionmentResult {
  SeatVector chosen;
  /// Every optimal allocation, sorted; absent when their number exceeds the tie cap.
  std::optional<std::vector<SeatVector>> all_minimal;
  bool tie_occurred = false;
  std::string method;
  std::vector<std::string> notes;
};

/// Empty `names` means P1, P2, ...
ElectionProblem build_problem(std::vector<BigInt> votes, std::int64_t seats, std::vector<std::string> names);

/// q_j = a_j * M / A.
QuotaVector exact_quotas(const ElectionProblem& problem);

QuotaVector quotas_from_decimals(std::span<const std::string> decimals, std::int64_t seats,
                                 std::vector<std::string> names = {});

/// "P1", "P2", ... used whenever input carries no labels.
std::vector<std::string> default_names(std::size_t n);

/// Applies a permutation: result[i] = values[perm[i]].
template <class T>
std::vector<T> permute(const std::vector<T>& values, std::span<const std::size_t> perm) {
  std::vector<T> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) out.push_back(values[i]);
  return out;
}

}  // namespace apportion
