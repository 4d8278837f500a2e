#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apportion/core.hpp"

namespace apportion {

enum class TieMode { Error, IndexOrder, LargestVotes, Seeded };

std::string_view to_string(TieMode mode);
TieMode parse_tie_mode(std::string_view text);

struct TiePolicy {
  TieMode mode = TieMode::Error;
  std::uint64_t seed = 0;
  /// Upper bound on how many optimal allocations are listed in a result.
  std::size_t enumeration_cap = 64;
  /// Priority data for LargestVotes; empty means quota-only input (falls back to index order).
  std::vector<BigInt> votes;

  static TiePolicy error() { return {}; }
  static TiePolicy index_order(std::size_t cap = 64) { return {TieMode::IndexOrder, 0, cap, {}}; }
  static TiePolicy seeded(std::uint64_t seed) { return {TieMode::Seeded, seed, 64, {}}; }
};

/// The family of optimal allocations left after every strictly-better seat has been
/// handed out: m = base + t with 0 <= t_j <= slack_j and sum(t) = extra.
struct TieSet {
  std::vector<std::int64_t> base;
  std::vector<std::int64_t> slack;
  std::int64_t extra = 0;

  /// Number of members, saturated at `limit + 1`.
  std::uint64_t count(std::uint64_t limit) const;
  std::vector<SeatVector> enumerate() const;
  std::string describe() const;
};

/// Picks the reported allocation according to the policy and fills the optimal set.
/// Throws TieUnderErrorPolicy when the set has more than one member under TieMode::Error.
ApportionmentResult resolve_ties(const TieSet& ties, const TiePolicy& policy, std::string method);

}  // namespace apportion
