#include "apportion/minimizer.hpp"

#include <stdexcept>

#include "apportion/detail/column_select.hpp"
#include "apportion/rounding.hpp"

namespace apportion {

ErrorFunction::ErrorFunction(std::size_t parties, std::int64_t seats, const Increment& increment,
                             std::string descriptor, std::vector<bool> excluded, std::optional<Rational> base)
    : parties_(parties),
      seats_(seats),
      table_(parties),
      excluded_(std::move(excluded)),
      descriptor_(std::move(descriptor)),
      base_(std::move(base)) {
  if (parties_ == 0) throw ApportionError(ErrorCode::EmptyInput, "error function: no parties");
  if (seats_ < 1) throw ApportionError(ErrorCode::NonPositiveSeats, "error function: seats must be >= 1");
  if (excluded_.empty()) excluded_.assign(parties_, false);
  if (excluded_.size() != parties_) throw ApportionError(ErrorCode::LengthMismatch, "error function: exclusion mask");

  for (std::size_t j = 0; j < parties_; ++j) {
    if (excluded_[j]) continue;
    auto& column = table_[j];
    column.reserve(static_cast<std::size_t>(seats_));
    for (std::int64_t l = 1; l <= seats_; ++l) {
      column.push_back(increment(j, l));
      if (l > 1 && column[l - 1] < column[l - 2]) {
        throw std::invalid_argument(descriptor_ + ": increments of party " + std::to_string(j + 1) +
                                    " decrease at seat " + std::to_string(l));
      }
    }
  }
}

const Rational& ErrorFunction::increment(std::size_t party, std::int64_t seat) const {
  if (excluded_[party]) throw std::logic_error("increment requested for an excluded party");
  return table_[party][static_cast<std::size_t>(seat - 1)];
}

Rational ErrorFunction::relative_error(const SeatVector& m) const {
  Rational sum;
  for (std::size_t j = 0; j < parties_; ++j) {
    for (std::int64_t l = 1; l <= m[j]; ++l) sum += increment(j, l);
  }
  return sum;
}

ErrorFunction lindiv_error(const QuotaVector& quotas, const Rational& d0) {
  if (d0.sign() < 0) throw ApportionError(ErrorCode::ParseError, "d0 must be non-negative");
  std::vector<bool> excluded(quotas.size());
  std::vector<Rational> inverse(quotas.size());
  for (std::size_t j = 0; j < quotas.size(); ++j) {
    excluded[j] = quotas[j].is_zero();
    if (!excluded[j]) inverse[j] = Rational(2) / quotas[j];
  }
  auto h = [&](std::size_t j, std::int64_t l) { return inverse[j] * (Rational(l) + d0 - 1) - 2; };
  return {quotas.size(), quotas.seats(), h, "lindiv(d0=" + d0.to_string() + ")", std::move(excluded)};
}

ErrorFunction lp_error(const RhoAdjustedQuota& adjusted, unsigned p) {
  if (p < 1) throw ApportionError(ErrorCode::ParseError, "p must be >= 1");
  auto h = [&](std::size_t j, std::int64_t l) {
    const Rational& q = adjusted.adjusted[j];
    return (Rational(l) - q).abs().pow(p) - (Rational(l - 1) - q).abs().pow(p);
  };
  return {adjusted.size(), adjusted.seats, h,
          "lp(p=" + std::to_string(p) + ", rho=" + adjusted.rho.to_string() + ")"};
}

ApportionmentResult minimal_solution(const ErrorFunction& err, const TiePolicy& policy) {
  const std::size_t n = err.parties();
  std::vector<bool> active(n);
  for (std::size_t j = 0; j < n; ++j) active[j] = !err.excluded(j);

  TieSet ties = detail::select_best<Rational>(
      n, err.seats(), active, [&](std::size_t j, std::int64_t l) { return err.increment(j, l); },
      [](const Rational& a, const Rational& b) { return a < b; });

  ApportionmentResult result = resolve_ties(ties, policy, err.descriptor());
  for (std::size_t j = 0; j < n; ++j) {
    if (err.excluded(j)) result.notes.push_back("party " + std::to_string(j + 1) + " has zero quota; fixed at 0 seats");
  }
  return result;
}

namespace {

void require_shape(const ErrorFunction& err, const SeatVector& m) {
  if (m.size() != err.parties()) {
    throw ApportionError(ErrorCode::LengthMismatch, "seat vector has " + std::to_string(m.size()) +
                                                        " entries, error function has " +
                                                        std::to_string(err.parties()));
  }
  if (m.total() != err.seats()) {
    throw ApportionError(ErrorCode::LengthMismatch, "seat vector sums to " + std::to_string(m.total()) +
                                                        ", expected " + std::to_string(err.seats()));
  }
}

// H_j(m_j + 1), or nullptr for +infinity.
const Rational* next_increment(const ErrorFunction& err, const SeatVector& m, std::size_t j) {
  if (err.excluded(j) || m[j] + 1 > err.seats()) return nullptr;
  return &err.increment(j, m[j] + 1);
}

// H_k(m_k), or nullptr when party k holds no seat.
const Rational* last_increment(const ErrorFunction& err, const SeatVector& m, std::size_t k) {
  if (m[k] == 0) return nullptr;
  return &err.increment(k, m[k]);
}

}  // namespace

bool is_minimal(const ErrorFunction& err, const SeatVector& m) {
  require_shape(err, m);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] < 0 || (err.excluded(j) && m[j] > 0)) return false;
  }
  // The j == k pairs hold by monotonicity, so the condition is min_j H_j(m_j+1) >= max_k H_k(m_k).
  const Rational* lowest_next = nullptr;
  const Rational* highest_last = nullptr;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (const Rational* h = next_increment(err, m, j); h && (!lowest_next || *h < *lowest_next)) lowest_next = h;
    if (const Rational* h = last_increment(err, m, j); h && (!highest_last || *h > *highest_last)) highest_last = h;
  }
  return !lowest_next || !highest_last || *lowest_next >= *highest_last;
}

UniquenessReport is_unique_minimal(const ErrorFunction& err, const SeatVector& m) {
  if (!is_minimal(err, m)) {
    throw ApportionError(ErrorCode::NotMinimal, m.to_string() + " is not a minimal solution of " + err.descriptor());
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    const Rational* gain = next_increment(err, m, j);
    if (!gain) continue;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == j) continue;
      const Rational* loss = last_increment(err, m, k);
      // Given minimality, failure of the strict inequality means equality: moving a
      // seat from k to j leaves psi unchanged.
      if (loss && !(*gain > *loss)) {
        SeatVector other = m;
        ++other[j];
        --other[k];
        return {Uniqueness::TieFound, std::move(other)};
      }
    }
  }
  return {Uniqueness::Certified, std::nullopt};
}

}  // namespace apportion
