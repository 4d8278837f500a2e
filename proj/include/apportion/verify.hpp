#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace apportion {

struct VerifyOptions {
  std::size_t max_parties = 4;
  std::int64_t max_seats = 12;
  std::uint64_t trials = 500;
  std::uint64_t seed = 0;
  std::int64_t max_votes = 50;
};

/// Counts per check family and the first few mismatches, each replayable from its text.
struct VerifySummary {
  std::uint64_t instances = 0;
  std::map<std::string, std::uint64_t> checks;
  std::map<std::string, std::uint64_t> failures;
  std::vector<std::string> examples;

  bool ok() const { return failures.empty(); }
};

/// Random instances with 2..max_parties parties, 1..max_seats seats and votes in
/// [1, max_votes]. For every linear-divisor and l_p error function checks that the
/// selection algorithm's optimal set equals the exhaustive argmin, that the named
/// methods return the same set, that the minimality test agrees with the oracle at
/// every lattice point, and that Hare's results minimise the maximum deviation.
VerifySummary verify_sweep(const VerifyOptions& options);

}  // namespace apportion
