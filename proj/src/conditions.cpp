#include "apportion/conditions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace apportion {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string_view to_string(BiasDirection direction) {
  switch (direction) {
    case BiasDirection::FavoursLarge: return "favours-large";
    case BiasDirection::FavoursSmall: return "favours-small";
    case BiasDirection::Neutral: return "neutral";
  }
  return "neutral";
}

namespace {

void require_length(std::size_t expected, const SeatVector& m) {
  if (m.size() != expected) {
    throw ApportionError(ErrorCode::LengthMismatch, "seat vector has " + std::to_string(m.size()) +
                                                        " entries for " + std::to_string(expected) + " parties");
  }
}

ConditionReport fails(std::string condition, std::vector<std::size_t> parties, std::string detail) {
  return {std::move(condition), Outcome::Fails, Witness{std::move(parties), std::move(detail)}, {}};
}

std::string party(std::size_t j) { return "party " + std::to_string(j + 1); }

// Shared shape of the two quota conditions: collect every offender.
template <class Bad>
ConditionReport quota_check(std::string name, const QuotaVector& quotas, const SeatVector& m, Bad bad) {
  require_length(quotas.size(), m);
  std::vector<std::size_t> offenders;
  std::string detail;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (auto why = bad(j)) {
      offenders.push_back(j);
      detail += (detail.empty() ? "" : "; ") + *why;
    }
  }
  if (offenders.empty()) return {std::move(name), Outcome::Holds, std::nullopt, {}};
  return fails(std::move(name), std::move(offenders), std::move(detail));
}

// 2 * share > total, and 2 * share < total, done on integers or rationals alike.
template <class T>
bool over_half(const T& share, const T& total) {
  return T(2) * share > total;
}

ConditionReport majority_check(std::string name, std::size_t n, const SeatVector& m, bool majority_trigger,
                               auto&& triggered, auto&& describe) {
  require_length(n, m);
  for (std::size_t j = 0; j < n; ++j) {
    if (!triggered(j)) continue;
    const bool over = 2 * m[j] > m.total();
    const bool under = 2 * m[j] < m.total();
    if (majority_trigger ? !over : !under) return fails(name, {j}, describe(j));
  }
  return {std::move(name), Outcome::Holds, std::nullopt, {}};
}

}  // namespace

ConditionReport check_monotony(const QuotaVector& quotas, const SeatVector& m) {
  require_length(quotas.size(), m);
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (quotas[j] < quotas[k] && m[j] > m[k]) {
        return fails("monotony", {j, k},
                     party(j) + " has quota " + quotas[j].to_string() + " < " + quotas[k].to_string() + " of " +
                         party(k) + " but " + std::to_string(m[j]) + " > " + std::to_string(m[k]) + " seats");
      }
    }
  }
  return {"monotony", Outcome::Holds, std::nullopt, {}};
}

ConditionReport check_lower_quota(const QuotaVector& quotas, const SeatVector& m) {
  return quota_check("lower-quota", quotas, m, [&](std::size_t j) -> std::optional<std::string> {
    const BigInt floor = quotas[j].floor();
    if (BigInt(m[j]) >= floor) return std::nullopt;
    return party(j) + ": " + std::to_string(m[j]) + " < floor(" + quotas[j].to_string() + ") = " + floor.str();
  });
}

ConditionReport check_upper_quota(const QuotaVector& quotas, const SeatVector& m) {
  return quota_check("upper-quota", quotas, m, [&](std::size_t j) -> std::optional<std::string> {
    const BigInt ceil = quotas[j].ceil();
    if (BigInt(m[j]) <= ceil) return std::nullopt;
    return party(j) + ": " + std::to_string(m[j]) + " > ceil(" + quotas[j].to_string() + ") = " + ceil.str();
  });
}

ConditionReport check_majority(const ElectionProblem& problem, const SeatVector& m) {
  const auto& a = problem.votes();
  return majority_check(
      "majority", problem.size(), m, true, [&](std::size_t j) { return over_half(a[j], problem.total_votes()); },
      [&](std::size_t j) {
        return party(j) + " has " + a[j].str() + " of " + problem.total_votes().str() + " votes but " +
               std::to_string(m[j]) + " of " + std::to_string(m.total()) + " seats";
      });
}

ConditionReport check_majority(const QuotaVector& quotas, const SeatVector& m) {
  const Rational seats(quotas.seats());
  return majority_check(
      "majority", quotas.size(), m, true, [&](std::size_t j) { return over_half(quotas[j], seats); },
      [&](std::size_t j) {
        return party(j) + " has quota " + quotas[j].to_string() + " > M/2 but " + std::to_string(m[j]) + " of " +
               std::to_string(m.total()) + " seats";
      });
}

ConditionReport check_coalition(const ElectionProblem& problem, const SeatVector& m) {
  const auto& a = problem.votes();
  return majority_check(
      "coalition", problem.size(), m, false,
      [&](std::size_t j) { return BigInt(2) * a[j] < problem.total_votes(); },
      [&](std::size_t j) {
        return party(j) + " has " + a[j].str() + " of " + problem.total_votes().str() + " votes but " +
               std::to_string(m[j]) + " of " + std::to_string(m.total()) + " seats";
      });
}

ConditionReport check_coalition(const QuotaVector& quotas, const SeatVector& m) {
  const Rational seats(quotas.seats());
  return majority_check(
      "coalition", quotas.size(), m, false, [&](std::size_t j) { return Rational(2) * quotas[j] < seats; },
      [&](std::size_t j) {
        return party(j) + " has quota " + quotas[j].to_string() + " < M/2 but " + std::to_string(m[j]) + " of " +
               std::to_string(m.total()) + " seats";
      });
}

namespace {

// Seats per unit of weight on each side, where the weights are votes or quotas.
BiasReport bias_impl(const std::vector<Rational>& weight, const SeatVector& m, const BiasPartition& partition) {
  require_length(weight.size(), m);
  auto invalid = [](const std::string& why) { throw ApportionError(ErrorCode::InvalidPartition, why); };
  if (partition.large.empty() || partition.small.empty()) invalid("both L and S must be non-empty");
  std::set<std::size_t> seen;
  for (const auto* side : {&partition.large, &partition.small}) {
    for (std::size_t j : *side) {
      if (j >= weight.size()) invalid("party index " + std::to_string(j + 1) + " out of range");
      if (!seen.insert(j).second) invalid(party(j) + " appears twice");
    }
  }
  for (std::size_t j : partition.large) {
    for (std::size_t i : partition.small) {
      if (m[j] <= m[i]) invalid(party(j) + " in L does not hold more seats than " + party(i) + " in S");
    }
  }
  auto rate = [&](const std::vector<std::size_t>& side) {
    Rational total;
    std::int64_t seats = 0;
    for (std::size_t j : side) {
      total += weight[j];
      seats += m[j];
    }
    if (total.is_zero()) invalid("a side of the partition has no votes");
    return Rational(seats) / total;
  };

  BiasReport out;
  out.large_rate = rate(partition.large);
  out.small_rate = rate(partition.small);
  const auto cmp = out.large_rate <=> out.small_rate;
  out.direction = cmp > 0 ? BiasDirection::FavoursLarge : cmp < 0 ? BiasDirection::FavoursSmall : BiasDirection::Neutral;
  if (out.direction == BiasDirection::Neutral) {
    out.report = {"bias", Outcome::Holds, std::nullopt, {}};
  } else {
    std::vector<std::size_t> parties = partition.large;
    parties.insert(parties.end(), partition.small.begin(), partition.small.end());
    const char* rel = out.direction == BiasDirection::FavoursLarge ? " > " : " < ";
    out.report = fails("bias", std::move(parties),
                       std::string(to_string(out.direction)) + ": seats per vote " + out.large_rate.to_string() +
                           rel + out.small_rate.to_string());
  }
  return out;
}

}  // namespace

BiasReport check_bias(const ElectionProblem& problem, const SeatVector& m, const BiasPartition& partition) {
  return bias_impl(std::vector<Rational>(problem.votes().begin(), problem.votes().end()), m, partition);
}

BiasReport check_bias(const QuotaVector& quotas, const SeatVector& m, const BiasPartition& partition) {
  return bias_impl(quotas.quotas(), m, partition);
}

std::optional<BiasPartition> split_by_seats(const SeatVector& m) {
  const std::size_t half = m.size() / 2;
  if (half == 0) return std::nullopt;
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
  BiasPartition p;
  p.large.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(half));
  p.small.assign(order.end() - static_cast<std::ptrdiff_t>(half), order.end());
  if (m[p.large.back()] <= m[p.small.front()]) return std::nullopt;
  std::sort(p.large.begin(), p.large.end());
  std::sort(p.small.begin(), p.small.end());
  return p;
}

ConditionReport check_house_monotony(const MethodSpec& method, const ApportionInput& input, std::int64_t seats) {
  const std::string name = "house-monotony";
  auto at = [&](std::int64_t M) -> std::optional<SeatVector> {
    try {
      if (const auto* p = std::get_if<ElectionProblem>(&input)) return apply(method, p->with_seats(M)).chosen;
      // Quota input: rescale to M seats.
      const QuotaVector& q = std::get<QuotaVector>(input);
      std::vector<Rational> scaled;
      for (const auto& v : q.quotas()) scaled.push_back(v * Rational(M) / Rational(q.seats()));
      return apply(method, QuotaVector(std::move(scaled), M, q.names())).chosen;
    } catch (const ApportionError& e) {
      if (e.code() == ErrorCode::TieUnderErrorPolicy) return std::nullopt;
      throw;
    }
  };
  const auto before = at(seats);
  const auto after = at(seats + 1);
  if (!before || !after) {
    return {name, Outcome::Indeterminate, std::nullopt,
            "tie at M = " + std::to_string(before ? seats + 1 : seats) + " under the error policy"};
  }
  for (std::size_t j = 0; j < before->size(); ++j) {
    if ((*after)[j] < (*before)[j]) {
      return fails(name, {j},
                   party(j) + ": " + std::to_string((*before)[j]) + " seats at M = " + std::to_string(seats) +
                       ", " + std::to_string((*after)[j]) + " at M = " + std::to_string(seats + 1));
    }
  }
  return {name, Outcome::Holds, std::nullopt, {}};
}

ConditionReport check_fixpoint(const MethodSpec& method, const SeatVector& integral_quotas) {
  std::vector<Rational> q(integral_quotas.begin(), integral_quotas.end());
  ApportionmentResult r;
  const std::string name = "fixpoint";
  try {
    r = apply(method, QuotaVector(std::move(q), integral_quotas.total()));
  } catch (const ApportionError& e) {
    if (e.code() != ErrorCode::TieUnderErrorPolicy) throw;
    return fails(name, {}, std::string("several results: ") + e.what());
  }
  if (r.tie_occurred) {
    return fails(name, {}, "several results, e.g. " + r.chosen.to_string());
  }
  if (r.chosen != integral_quotas) {
    std::vector<std::size_t> moved;
    for (std::size_t j = 0; j < r.chosen.size(); ++j) {
      if (r.chosen[j] != integral_quotas[j]) moved.push_back(j);
    }
    return fails(name, std::move(moved), "returned " + r.chosen.to_string() + " for " + integral_quotas.to_string());
  }
  return {name, Outcome::Holds, std::nullopt, {}};
}

ConditionReport independence_not_applicable() {
  return {"independence", Outcome::Indeterminate, std::nullopt,
          "not checked: holds only when n <= 2 or all seat counts are equal"};
}

}  // namespace apportion
