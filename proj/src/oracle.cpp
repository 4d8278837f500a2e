#include "apportion/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include <boost/integer/common_factor_rt.hpp>

#include "apportion/minimizer.hpp"
#include "apportion/rounding.hpp"

namespace apportion {

std::uint64_t lattice_size(std::size_t n, std::int64_t seats) {
  if (n == 0 || seats < 0) return 0;
  // C(M + k, k) with k = n - 1, built up one factor at a time so every step is exact.
  const std::uint64_t k = n - 1;
  const std::uint64_t m = static_cast<std::uint64_t>(seats);
  BigInt value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (m + i) / i;
    if (value > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(value);
}

LatticeIterator::LatticeIterator(std::size_t n, std::int64_t seats) {
  if (n == 0 || seats < 0) {
    done_ = true;
    return;
  }
  std::vector<std::int64_t> start(n, 0);
  start.back() = seats;
  current_ = SeatVector(std::move(start));
}

LatticeIterator& LatticeIterator::operator++() {
  if (done_) return *this;
  const std::size_t n = current_.size();
  // Next composition in lexicographic order: find the rightmost position i < n-1
  // with something to its right, bump it, and push the rest to the last slot.
  std::int64_t tail = current_[n - 1];
  std::size_t i = n - 1;
  while (i > 0) {
    --i;
    if (tail > 0) {
      ++current_[i];
      for (std::size_t k = i + 1; k + 1 < n; ++k) current_[k] = 0;
      current_[n - 1] = tail - 1;
      return *this;
    }
    tail += current_[i];
  }
  done_ = true;
  return *this;
}

namespace {

void require_cap(std::size_t n, std::int64_t seats, std::uint64_t cap) {
  const std::uint64_t size = lattice_size(n, seats);
  if (size > cap) {
    throw ApportionError(ErrorCode::InstanceTooLarge, "lattice for n = " + std::to_string(n) + ", M = " +
                                                          std::to_string(seats) + " has " + std::to_string(size) +
                                                          " points, cap is " + std::to_string(cap));
  }
}

// Per-party cost tables cost[j][m], m = 0..M, combined either by sum or by max.
// Values are rescaled to a common denominator so the walk compares integers;
// int64 is used when every partial result provably fits.
enum class Combine { Sum, Max };

struct CostTable {
  std::vector<std::vector<Rational>> cost;
  std::vector<bool> excluded;
};

template <class Int>
class ArgminWalk {
 public:
  ArgminWalk(std::vector<std::vector<Int>> table, const std::vector<bool>& excluded, std::int64_t seats,
             Combine combine)
      : table_(std::move(table)), excluded_(excluded), seats_(seats), combine_(combine), point_(table_.size(), 0) {}

  std::vector<SeatVector> run() {
    visit(0, seats_, Int(0), false);
    std::sort(best_.begin(), best_.end());
    return std::move(best_);
  }

 private:
  Int combine(const Int& acc, const Int& value, bool started) const {
    if (combine_ == Combine::Sum) return acc + value;
    return started ? std::max(acc, value) : value;
  }

  void visit(std::size_t j, std::int64_t left, const Int& acc, bool started) {
    const std::size_t n = table_.size();
    if (j + 1 == n) {
      if (excluded_[j] && left > 0) return;
      point_[j] = left;
      record(combine(acc, table_[j][static_cast<std::size_t>(left)], started));
      return;
    }
    const std::int64_t top = excluded_[j] ? 0 : left;
    for (std::int64_t m = 0; m <= top; ++m) {
      point_[j] = m;
      visit(j + 1, left - m, combine(acc, table_[j][static_cast<std::size_t>(m)], started), true);
    }
  }

  void record(const Int& value) {
    if (!best_value_ || value < *best_value_) {
      best_value_ = value;
      best_.clear();
    } else if (value != *best_value_) {
      return;
    }
    best_.emplace_back(point_);
  }

  std::vector<std::vector<Int>> table_;
  const std::vector<bool>& excluded_;
  std::int64_t seats_;
  Combine combine_;
  std::vector<std::int64_t> point_;
  std::optional<Int> best_value_;
  std::vector<SeatVector> best_;
};

std::vector<SeatVector> argmin(const CostTable& t, std::int64_t seats, Combine combine) {
  BigInt common = 1;
  for (const auto& column : t.cost) {
    for (const auto& v : column) common = boost::integer::lcm(common, v.denominator());
  }
  std::vector<std::vector<BigInt>> scaled(t.cost.size());
  BigInt largest = 0;
  for (std::size_t j = 0; j < t.cost.size(); ++j) {
    for (const auto& v : t.cost[j]) {
      scaled[j].push_back(v.numerator() * (common / v.denominator()));
      largest = std::max(largest, BigInt(abs(scaled[j].back())));
    }
  }
  // A sum of n entries must stay below 2^62.
  const BigInt limit = BigInt(1) << 62;
  if (largest * BigInt(t.cost.size()) < limit) {
    std::vector<std::vector<std::int64_t>> narrow(scaled.size());
    for (std::size_t j = 0; j < scaled.size(); ++j) {
      for (const auto& v : scaled[j]) narrow[j].push_back(static_cast<std::int64_t>(v));
    }
    return ArgminWalk<std::int64_t>(std::move(narrow), t.excluded, seats, combine).run();
  }
  return ArgminWalk<BigInt>(std::move(scaled), t.excluded, seats, combine).run();
}

}  // namespace

std::vector<SeatVector> enumerate_lattice(std::size_t n, std::int64_t seats, std::uint64_t cap) {
  require_cap(n, seats, cap);
  std::vector<SeatVector> out;
  for (LatticeIterator it(n, seats); !it.done(); ++it) out.push_back(*it);
  return out;
}

std::vector<SeatVector> brute_min(const ErrorFunction& err, std::uint64_t cap) {
  const std::size_t n = err.parties();
  const std::int64_t seats = err.seats();
  require_cap(n, seats, cap);
  CostTable t;
  t.cost.resize(n);
  t.excluded.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    t.excluded[j] = err.excluded(j);
    Rational running;
    t.cost[j].push_back(running);
    for (std::int64_t l = 1; l <= seats; ++l) {
      if (!t.excluded[j]) running += err.increment(j, l);
      t.cost[j].push_back(running);
    }
  }
  return argmin(t, seats, Combine::Sum);
}

std::vector<SeatVector> brute_min_norm(const RhoAdjustedQuota& adjusted, Norm norm, std::uint64_t cap) {
  const std::size_t n = adjusted.size();
  const std::int64_t seats = adjusted.seats;
  require_cap(n, seats, cap);
  if (norm.kind == Norm::Kind::Lp && norm.p < 1) throw ApportionError(ErrorCode::ParseError, "p must be >= 1");
  CostTable t;
  t.cost.resize(n);
  t.excluded.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::int64_t m = 0; m <= seats; ++m) {
      Rational distance = (Rational(m) - adjusted.adjusted[j]).abs();
      t.cost[j].push_back(norm.kind == Norm::Kind::Max ? distance : distance.pow(norm.p));
    }
  }
  return argmin(t, seats, norm.kind == Norm::Kind::Max ? Combine::Max : Combine::Sum);
}

std::vector<SeatVector> brute_min_separable(std::size_t n, std::int64_t seats, const PartyCost& phi,
                                            const std::vector<bool>& excluded, std::uint64_t cap) {
  require_cap(n, seats, cap);
  CostTable t;
  t.cost.resize(n);
  t.excluded = excluded.empty() ? std::vector<bool>(n, false) : excluded;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::int64_t m = 0; m <= seats; ++m) t.cost[j].push_back(t.excluded[j] && m > 0 ? Rational() : phi(j, m));
  }
  return argmin(t, seats, Combine::Sum);
}

std::vector<SeatVector> brute_min_lindiv(const QuotaVector& quotas, const Rational& d0, std::uint64_t cap) {
  std::vector<bool> excluded(quotas.size());
  for (std::size_t j = 0; j < quotas.size(); ++j) excluded[j] = quotas[j].is_zero();
  const Rational shift = d0 - Rational(1, 2);
  auto phi = [&](std::size_t j, std::int64_t x) {
    Rational d = Rational(x) - quotas[j] + shift;
    return d * d / quotas[j];
  };
  return brute_min_separable(quotas.size(), quotas.seats(), phi, excluded, cap);
}

}  // namespace apportion
