#include "apportion/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace apportion {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroTotalVotes: return "ZeroTotalVotes";
    case ErrorCode::NonPositiveSeats: return "NonPositiveSeats";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::QuotaSumMismatch: return "QuotaSumMismatch";
    case ErrorCode::MalformedDecimal: return "MalformedDecimal";
    case ErrorCode::TieUnderErrorPolicy: return "TieUnderErrorPolicy";
    case ErrorCode::TooManyPartiesForAdamsLike: return "TooManyPartiesForAdamsLike";
    case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorCode::InsufficientSeats: return "InsufficientSeats";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::ScenarioMismatch: return "ScenarioMismatch";
  }
  return "Unknown";
}

namespace {

void check_unique(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw ApportionError(ErrorCode::DuplicateName, "names: '" + name + "' appears more than once");
    }
  }
}

}  // namespace

ElectionProblem::ElectionProblem(std::vector<BigInt> votes, std::int64_t seats, std::vector<std::string> names)
    : votes_(std::move(votes)), names_(std::move(names)), seats_(seats) {
  if (votes_.empty()) throw ApportionError(ErrorCode::EmptyInput, "votes: no parties given");
  if (names_.empty()) throw ApportionError(ErrorCode::EmptyInput, "names: no party labels given");
  if (votes_.size() != names_.size()) {
    throw ApportionError(ErrorCode::LengthMismatch, "votes/names: " + std::to_string(votes_.size()) +
                                                        " vote counts but " + std::to_string(names_.size()) + " names");
  }
  if (seats_ < 1) throw ApportionError(ErrorCode::NonPositiveSeats, "seats: must be >= 1, got " + std::to_string(seats_));
  total_ = 0;
  for (std::size_t j = 0; j < votes_.size(); ++j) {
    if (votes_[j] < 0) {
      throw ApportionError(ErrorCode::FormatError, "votes[" + std::to_string(j) + "]: negative vote count");
    }
    total_ += votes_[j];
  }
  if (total_ == 0) throw ApportionError(ErrorCode::ZeroTotalVotes, "votes: total is zero");
  check_unique(names_);
}

ElectionProblem ElectionProblem::with_seats(std::int64_t seats) const { return {votes_, seats, names_}; }

QuotaVector::QuotaVector(std::vector<Rational> quotas, std::int64_t seats, std::vector<std::string> names)
    : quotas_(std::move(quotas)), seats_(seats), names_(std::move(names)) {
  if (quotas_.empty()) throw ApportionError(ErrorCode::EmptyInput, "quotas: no parties given");
  if (seats_ < 1) throw ApportionError(ErrorCode::NonPositiveSeats, "seats: must be >= 1, got " + std::to_string(seats_));
  if (names_.empty()) names_ = default_names(quotas_.size());
  if (names_.size() != quotas_.size()) {
    throw ApportionError(ErrorCode::LengthMismatch, "quotas/names: lengths differ");
  }
  check_unique(names_);
  Rational sum;
  for (std::size_t j = 0; j < quotas_.size(); ++j) {
    if (quotas_[j].sign() < 0) {
      throw ApportionError(ErrorCode::MalformedDecimal, "quotas[" + std::to_string(j) + "]: negative quota");
    }
    sum += quotas_[j];
  }
  if (sum != Rational(seats_)) {
    throw ApportionError(ErrorCode::QuotaSumMismatch,
                         "quotas sum to " + sum.to_string() + " but seats = " + std::to_string(seats_));
  }
}

bool QuotaVector::is_integral() const {
  return std::all_of(quotas_.begin(), quotas_.end(), [](const Rational& q) { return q.is_integer(); });
}

std::size_t QuotaVector::positive_count() const {
  return static_cast<std::size_t>(
      std::count_if(quotas_.begin(), quotas_.end(), [](const Rational& q) { return q.sign() > 0; }));
}

SeatVector::SeatVector(std::vector<std::int64_t> seats) : seats_(std::move(seats)) {}

std::int64_t SeatVector::total() const { return std::accumulate(seats_.begin(), seats_.end(), std::int64_t{0}); }

std::string SeatVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < seats_.size(); ++j) {
    if (j) os << ", ";
    os << seats_[j];
  }
  os << ')';
  return os.str();
}

ElectionProblem build_problem(std::vector<BigInt> votes, std::int64_t seats, std::vector<std::string> names) {
  if (names.empty()) names = default_names(votes.size());
  return {std::move(votes), seats, std::move(names)};
}

QuotaVector exact_quotas(const ElectionProblem& problem) {
  std::vector<Rational> quotas;
  quotas.reserve(problem.size());
  for (const auto& a : problem.votes()) {
    quotas.emplace_back(a * problem.seats(), problem.total_votes());
  }
  return {std::move(quotas), problem.seats(), problem.names()};
}

QuotaVector quotas_from_decimals(std::span<const std::string> decimals, std::int64_t seats,
                                 std::vector<std::string> names) {
  if (decimals.empty()) throw ApportionError(ErrorCode::EmptyInput, "quotas: no parties given");
  std::vector<Rational> quotas;
  quotas.reserve(decimals.size());
  for (std::size_t j = 0; j < decimals.size(); ++j) {
    Rational q = Rational::parse_decimal(decimals[j]);
    if (q.sign() < 0) {
      throw ApportionError(ErrorCode::MalformedDecimal, "quotas[" + std::to_string(j) + "]: '" + decimals[j] +
                                                            "' is negative");
    }
    quotas.push_back(std::move(q));
  }
  return {std::move(quotas), seats, std::move(names)};
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t j = 0; j < n; ++j) names.push_back("P" + std::to_string(j + 1));
  return names;
}

}  // namespace apportion
