#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apportion/core.hpp"
#include "apportion/method.hpp"

namespace apportion {

enum class Outcome { Holds, Fails, Indeterminate };
std::string_view to_string(Outcome outcome);

struct Witness {
  std::vector<std::size_t> parties;  // 0-based
  std::string detail;
};

struct ConditionReport {
  std::string condition;
  Outcome outcome = Outcome::Holds;
  std::optional<Witness> witness;  // set when the condition fails
  std::string note;                // e.g. why a check was indeterminate

  bool holds() const { return outcome == Outcome::Holds; }
};

/// q_j < q_k implies m_j <= m_k.
ConditionReport check_monotony(const QuotaVector& quotas, const SeatVector& m);
/// floor(q_j) <= m_j.
ConditionReport check_lower_quota(const QuotaVector& quotas, const SeatVector& m);
/// m_j <= ceil(q_j).
ConditionReport check_upper_quota(const QuotaVector& quotas, const SeatVector& m);

/// A party with more than half the votes gets more than half the seats.
ConditionReport check_majority(const ElectionProblem& problem, const SeatVector& m);
/// Quota form for quota-only input: 2 q_j > M implies 2 m_j > M.
ConditionReport check_majority(const QuotaVector& quotas, const SeatVector& m);
/// A party with less than half the votes gets less than half the seats.
ConditionReport check_coalition(const ElectionProblem& problem, const SeatVector& m);
ConditionReport check_coalition(const QuotaVector& quotas, const SeatVector& m);

struct BiasPartition {
  std::vector<std::size_t> large;
  std::vector<std::size_t> small;
};

enum class BiasDirection { FavoursLarge, FavoursSmall, Neutral };
std::string_view to_string(BiasDirection direction);

struct BiasReport {
  BiasDirection direction = BiasDirection::Neutral;
  Rational large_rate;  // sum_L m / sum_L a
  Rational small_rate;  // sum_S m / sum_S a
  ConditionReport report;  // fails unless neutral; the witness carries the comparison
};

/// Throws InvalidPartition unless L and S are disjoint, non-empty, in range, have positive
/// vote totals, and every party in L holds more seats than every party in S.
BiasReport check_bias(const ElectionProblem& problem, const SeatVector& m, const BiasPartition& partition);
/// Same comparison with quotas in place of votes (the ratios differ only by the factor M/A).
BiasReport check_bias(const QuotaVector& quotas, const SeatVector& m, const BiasPartition& partition);

/// Top floor(n/2) parties by seats against the bottom floor(n/2); nullopt when the two
/// halves are not strictly separated by seat count.
std::optional<BiasPartition> split_by_seats(const SeatVector& m);

/// Runs the method at M and M + 1 and compares coordinatewise. A tie under the Error
/// policy at either size makes the outcome Indeterminate.
ConditionReport check_house_monotony(const MethodSpec& method, const ApportionInput& input, std::int64_t seats);

/// For integral quotas, the method must return exactly those quotas and nothing else.
ConditionReport check_fixpoint(const MethodSpec& method, const SeatVector& integral_quotas);

/// Not checked: the condition only holds in degenerate cases (n <= 2 or equal seat counts).
ConditionReport independence_not_applicable();

}  // namespace apportion
