#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/tie.hpp"

namespace apportion {

/// Divisor sequences d_1 < d_2 < ...:
///   Linear  d_j = d0 + (j - 1)
///   Dean    d_j = j(j - 1) / (j - 1/2)
///   Hill    d_j = sqrt(j(j - 1))
struct DivisorSequence {
  enum class Kind { Linear, Dean, Hill };

  Kind kind = Kind::Linear;
  Rational d0;  // Linear only

  static DivisorSequence linear(Rational d0) { return {Kind::Linear, std::move(d0)}; }
  static DivisorSequence dean() { return {Kind::Dean, {}}; }
  static DivisorSequence hill() { return {Kind::Hill, {}}; }

  /// d_j for the rational sequences; Hill throws (use divisor_squared).
  Rational divisor(std::int64_t j) const;
  Rational divisor_squared(std::int64_t j) const;
  /// True when d_1 = 0, so every party with votes is seated before any second seat.
  bool starts_at_zero() const;

  std::string name() const;

  friend bool operator==(const DivisorSequence&, const DivisorSequence&) = default;
};

/// adams, danish, condorcet, sainte-lague, considerant, dhondt, imperiali, dean, hill.
DivisorSequence named_sequence(std::string_view name);
const std::vector<std::string>& divisor_catalogue();

/// Gives M seats to the M largest quotients q_k / d_j, compared exactly.
ApportionmentResult apportion_divisor(const QuotaVector& quotas, const DivisorSequence& seq, const TiePolicy& policy);

}  // namespace apportion
