#include "apportion/divisor.hpp"

#include <stdexcept>
#include <utility>

#include "apportion/detail/column_select.hpp"

namespace apportion {

namespace {

struct NamedDivisor {
  const char* name;
  std::int64_t num;
  std::int64_t den;
};

constexpr NamedDivisor kLinearCatalogue[] = {
    {"adams", 0, 1},       {"danish", 1, 3}, {"condorcet", 2, 5}, {"sainte-lague", 1, 2},
    {"considerant", 2, 3}, {"dhondt", 1, 1}, {"imperiali", 2, 1},
};

// q / d_j, with d_j = 0 mapped to an infinite quotient ranked by quota.
struct Quotient {
  bool infinite = false;
  Rational value;
};

bool larger(const Quotient& a, const Quotient& b) {
  if (a.infinite != b.infinite) return a.infinite;
  return a.value > b.value;
}

}  // namespace

Rational DivisorSequence::divisor(std::int64_t j) const {
  switch (kind) {
    case Kind::Linear: return d0 + Rational(j - 1);
    case Kind::Dean: return Rational(2 * j * (j - 1), 2 * j - 1);
    case Kind::Hill: break;
  }
  throw std::logic_error("Hill divisors are irrational; use divisor_squared");
}

Rational DivisorSequence::divisor_squared(std::int64_t j) const {
  if (kind == Kind::Hill) return Rational(j * (j - 1));
  Rational d = divisor(j);
  return d * d;
}

bool DivisorSequence::starts_at_zero() const {
  return kind != Kind::Linear || d0.is_zero();
}

std::string DivisorSequence::name() const {
  switch (kind) {
    case Kind::Dean: return "dean";
    case Kind::Hill: return "hill";
    case Kind::Linear:
      for (const auto& entry : kLinearCatalogue) {
        if (d0 == Rational(entry.num, entry.den)) return entry.name;
      }
      return "linear:d0=" + d0.to_string();
  }
  return "linear:d0=" + d0.to_string();
}

const std::vector<std::string>& divisor_catalogue() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kLinearCatalogue) out.emplace_back(entry.name);
    out.emplace_back("dean");
    out.emplace_back("hill");
    return out;
  }();
  return names;
}

DivisorSequence named_sequence(std::string_view name) {
  for (const auto& entry : kLinearCatalogue) {
    if (name == entry.name) return DivisorSequence::linear(Rational(entry.num, entry.den));
  }
  if (name == "dean") return DivisorSequence::dean();
  if (name == "hill") return DivisorSequence::hill();
  std::string known;
  for (const auto& n : divisor_catalogue()) known += (known.empty() ? "" : ", ") + n;
  throw ApportionError(ErrorCode::UnknownMethod, "'" + std::string(name) + "'; known divisor methods: " + known);
}

ApportionmentResult apportion_divisor(const QuotaVector& quotas, const DivisorSequence& seq, const TiePolicy& policy) {
  const std::size_t n = quotas.size();
  const std::int64_t seats = quotas.seats();
  std::vector<bool> active(n);
  for (std::size_t j = 0; j < n; ++j) active[j] = quotas[j].sign() > 0;

  const std::size_t positive = quotas.positive_count();
  if (seq.starts_at_zero() && static_cast<std::int64_t>(positive) > seats) {
    throw ApportionError(ErrorCode::TooManyPartiesForAdamsLike,
                         seq.name() + ": " + std::to_string(positive) + " parties with votes but only " +
                             std::to_string(seats) + " seats");
  }

  // Hill's quotients are compared through their squares; every quotient is non-negative.
  std::vector<Rational> squared_quota;
  if (seq.kind == DivisorSequence::Kind::Hill) {
    for (const auto& q : quotas.quotas()) squared_quota.push_back(q * q);
  }

  auto key = [&](std::size_t j, std::int64_t row) -> Quotient {
    if (seq.kind == DivisorSequence::Kind::Hill) {
      Rational d2 = seq.divisor_squared(row);
      if (d2.is_zero()) return {true, quotas[j]};
      return {false, squared_quota[j] / d2};
    }
    Rational d = seq.divisor(row);
    if (d.is_zero()) return {true, quotas[j]};
    return {false, quotas[j] / d};
  };

  TieSet ties = detail::select_best<Quotient>(n, seats, active, key, larger);
  return resolve_ties(ties, policy, seq.name());
}

}  // namespace apportion
