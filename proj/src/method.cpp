#include "apportion/method.hpp"

#include <algorithm>
#include <cctype>

#include "apportion/rounding.hpp"

namespace apportion {

MethodSpec MethodSpec::from_divisor(DivisorSequence seq, TiePolicy policy) {
  MethodSpec m;
  m.family = Family::Divisor;
  m.divisor = std::move(seq);
  m.policy = std::move(policy);
  return m;
}

MethodSpec MethodSpec::from_rho(Rational rho, TiePolicy policy) {
  MethodSpec m;
  m.family = Family::Rho;
  m.rho = std::move(rho);
  m.policy = std::move(policy);
  return m;
}

MethodSpec MethodSpec::hare_majority(TiePolicy policy) {
  MethodSpec m;
  m.family = Family::HareMajority;
  m.policy = std::move(policy);
  return m;
}

std::string MethodSpec::to_string() const {
  switch (family) {
    case Family::Divisor: return divisor.name();
    case Family::Rho: return rho == Rational(1, 2) ? "hare" : "rho:" + rho.to_string();
    case Family::HareMajority: return "hare-majority";
  }
  return {};
}

bool same_method(const MethodSpec& a, const MethodSpec& b) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case MethodSpec::Family::Divisor: return a.divisor == b.divisor;
    case MethodSpec::Family::Rho: return a.rho == b.rho;
    case MethodSpec::Family::HareMajority: return true;
  }
  return false;
}

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, std::string_view expected) {
  throw ApportionError(ErrorCode::ParseError, "method '" + std::string(text) + "' at position " +
                                                  std::to_string(pos) + ": expected " + std::string(expected));
}

Rational parse_parameter(std::string_view original, std::size_t pos, std::string_view value) {
  if (value.empty()) parse_error(original, pos, "a fraction p/q or a decimal");
  try {
    return Rational::parse(value);
  } catch (const ApportionError&) {
    parse_error(original, pos, "a fraction p/q or a decimal");
  } catch (const std::domain_error&) {
    parse_error(original, pos, "a non-zero denominator");
  }
}

}  // namespace

MethodSpec parse_method(std::string_view text, TiePolicy policy) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::string_view s = lower;

  if (s == "hare") return MethodSpec::from_rho(Rational(1, 2), std::move(policy));
  if (s == "hare-majority") return MethodSpec::hare_majority(std::move(policy));

  constexpr std::string_view rho_prefix = "rho:";
  if (s.starts_with(rho_prefix)) {
    Rational rho = parse_parameter(text, rho_prefix.size(), s.substr(rho_prefix.size()));
    if (rho.sign() < 0 || rho > Rational(1)) parse_error(text, rho_prefix.size(), "rho in [0, 1]");
    return MethodSpec::from_rho(std::move(rho), std::move(policy));
  }

  constexpr std::string_view linear_prefix = "linear:";
  if (s.starts_with(linear_prefix)) {
    constexpr std::string_view key = "d0=";
    const std::string_view rest = s.substr(linear_prefix.size());
    if (!rest.starts_with(key)) parse_error(text, linear_prefix.size(), "'d0='");
    const std::size_t pos = linear_prefix.size() + key.size();
    Rational d0 = parse_parameter(text, pos, s.substr(pos));
    if (d0.sign() < 0) parse_error(text, pos, "d0 >= 0");
    return MethodSpec::from_divisor(DivisorSequence::linear(std::move(d0)), std::move(policy));
  }

  if (s.find(':') != std::string_view::npos) parse_error(text, 0, "'rho:' or 'linear:d0=' before the parameter");
  return MethodSpec::from_divisor(named_sequence(s), std::move(policy));
}

QuotaVector quotas_of(const ApportionInput& input) {
  if (const auto* p = std::get_if<ElectionProblem>(&input)) return exact_quotas(*p);
  return std::get<QuotaVector>(input);
}

std::int64_t seats_of(const ApportionInput& input) {
  return std::visit([](const auto& v) { return v.seats(); }, input);
}

std::size_t parties_of(const ApportionInput& input) {
  return std::visit([](const auto& v) { return v.size(); }, input);
}

ApportionmentResult apply(const MethodSpec& method, const QuotaVector& quotas) {
  switch (method.family) {
    case MethodSpec::Family::Divisor: return apportion_divisor(quotas, method.divisor, method.policy);
    case MethodSpec::Family::Rho: return apportion_rho(quotas, method.rho, method.policy);
    case MethodSpec::Family::HareMajority: return apportion_hare_majority(quotas, method.policy);
  }
  throw std::logic_error("unknown method family");
}

ApportionmentResult apply(const MethodSpec& method, const ElectionProblem& problem) {
  MethodSpec with_votes = method;
  if (with_votes.policy.votes.empty()) with_votes.policy.votes = problem.votes();
  return apply(with_votes, exact_quotas(problem));
}

ApportionmentResult apply(const MethodSpec& method, const ApportionInput& input) {
  return std::visit([&](const auto& v) { return apply(method, v); }, input);
}

}  // namespace apportion
