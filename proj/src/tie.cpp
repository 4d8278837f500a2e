#include "apportion/tie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "apportion/random.hpp"

namespace apportion {

std::string_view to_string(TieMode mode) {
  switch (mode) {
    case TieMode::Error: return "error";
    case TieMode::IndexOrder: return "index";
    case TieMode::LargestVotes: return "votes";
    case TieMode::Seeded: return "seeded";
  }
  return "error";
}

TieMode parse_tie_mode(std::string_view text) {
  if (text == "error") return TieMode::Error;
  if (text == "index") return TieMode::IndexOrder;
  if (text == "votes") return TieMode::LargestVotes;
  if (text == "seeded") return TieMode::Seeded;
  throw ApportionError(ErrorCode::ParseError,
                       "tie policy '" + std::string(text) + "': expected one of error, index, votes, seeded");
}

std::uint64_t TieSet::count(std::uint64_t limit) const {
  const std::uint64_t saturated = limit + 1;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(extra) + 1, 0);
  ways[0] = 1;
  for (std::int64_t s : slack) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t total = 0; total < ways.size(); ++total) {
      if (ways[total] == 0) continue;
      for (std::int64_t t = 0; t <= s && total + static_cast<std::size_t>(t) < ways.size(); ++t) {
        auto& cell = next[total + static_cast<std::size_t>(t)];
        cell = std::min(saturated, cell + ways[total]);
      }
    }
    ways = std::move(next);
  }
  return ways.back();
}

namespace {

void enumerate_into(const TieSet& ties, std::size_t j, std::int64_t remaining, std::vector<std::int64_t>& current,
                    const std::vector<std::int64_t>& capacity_after, std::vector<SeatVector>& out) {
  if (j == ties.base.size()) {
    if (remaining == 0) out.emplace_back(current);
    return;
  }
  const std::int64_t hi = std::min(ties.slack[j], remaining);
  for (std::int64_t t = 0; t <= hi; ++t) {
    if (remaining - t > capacity_after[j + 1]) continue;
    current[j] = ties.base[j] + t;
    enumerate_into(ties, j + 1, remaining - t, current, capacity_after, out);
  }
  current[j] = ties.base[j];
}

std::vector<std::int64_t> greedy_fill(const TieSet& ties, const std::vector<std::size_t>& order) {
  std::vector<std::int64_t> m = ties.base;
  std::int64_t remaining = ties.extra;
  for (std::size_t j : order) {
    const std::int64_t take = std::min(ties.slack[j], remaining);
    m[j] += take;
    remaining -= take;
  }
  return m;
}

}  // namespace

std::vector<SeatVector> TieSet::enumerate() const {
  std::vector<std::int64_t> capacity_after(base.size() + 1, 0);
  for (std::size_t j = base.size(); j-- > 0;) capacity_after[j] = capacity_after[j + 1] + slack[j];
  std::vector<SeatVector> out;
  std::vector<std::int64_t> current = base;
  enumerate_into(*this, 0, extra, current, capacity_after, out);
  return out;
}

std::string TieSet::describe() const {
  std::ostringstream os;
  os << extra << " seat(s) undecided among parties ";
  bool first = true;
  for (std::size_t j = 0; j < slack.size(); ++j) {
    if (slack[j] == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << (j + 1) << " (up to " << slack[j] << ")";
  }
  os << " after forced allocation " << SeatVector(base).to_string();
  return os.str();
}

ApportionmentResult resolve_ties(const TieSet& ties, const TiePolicy& policy, std::string method) {
  ApportionmentResult result;
  result.method = std::move(method);

  const std::uint64_t count = ties.count(policy.enumeration_cap);
  result.tie_occurred = count > 1;
  if (count <= policy.enumeration_cap) result.all_minimal = ties.enumerate();

  std::vector<std::size_t> order(ties.base.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  switch (policy.mode) {
    case TieMode::Error:
      if (result.tie_occurred) {
        throw ApportionError(ErrorCode::TieUnderErrorPolicy, result.method + ": " + ties.describe());
      }
      result.chosen = SeatVector(greedy_fill(ties, order));
      break;
    case TieMode::IndexOrder:
      result.chosen = SeatVector(greedy_fill(ties, order));
      break;
    case TieMode::LargestVotes:
      if (policy.votes.size() == ties.base.size()) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return policy.votes[a] > policy.votes[b]; });
      }
      result.chosen = SeatVector(greedy_fill(ties, order));
      break;
    case TieMode::Seeded: {
      Rng rng(policy.seed);
      if (result.all_minimal) {
        result.chosen = (*result.all_minimal)[rng.below(result.all_minimal->size())];
      } else {
        std::vector<std::size_t> slots;
        for (std::size_t j = 0; j < ties.slack.size(); ++j) {
          for (std::int64_t s = 0; s < ties.slack[j]; ++s) slots.push_back(j);
        }
        std::vector<std::int64_t> m = ties.base;
        for (std::int64_t k = 0; k < ties.extra; ++k) {
          const std::size_t pick = static_cast<std::size_t>(k) +
                                   rng.below(slots.size() - static_cast<std::size_t>(k));
          std::swap(slots[static_cast<std::size_t>(k)], slots[pick]);
          ++m[slots[static_cast<std::size_t>(k)]];
        }
        result.chosen = SeatVector(std::move(m));
      }
      break;
    }
  }
  if (result.tie_occurred) result.notes.push_back("tie: " + ties.describe());
  return result;
}

}  // namespace apportion
