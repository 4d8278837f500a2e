#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "apportion/core.hpp"
#include "apportion/divisor.hpp"
#include "apportion/tie.hpp"

namespace apportion {

/// One apportionment method plus the tie policy it runs under.
/// The string form covers the method only; see to_string().
struct MethodSpec {
  enum class Family { Divisor, Rho, HareMajority };

  Family family = Family::Rho;
  DivisorSequence divisor;        // Family::Divisor
  Rational rho = Rational(1, 2);  // Family::Rho
  TiePolicy policy;

  static MethodSpec from_divisor(DivisorSequence seq, TiePolicy policy = {});
  static MethodSpec from_rho(Rational rho, TiePolicy policy = {});
  static MethodSpec hare_majority(TiePolicy policy = {});

  bool is_linear_divisor() const { return family == Family::Divisor && divisor.kind == DivisorSequence::Kind::Linear; }

  /// Canonical name: catalogue names where one exists ("hare", "dhondt", ...),
  /// otherwise "rho:<r>" or "linear:d0=<r>". parse_method(to_string()) gives back the same method.
  std::string to_string() const;
};

bool same_method(const MethodSpec& a, const MethodSpec& b);

/// hare | hare-majority | rho:<r> | adams | danish | condorcet | sainte-lague | considerant
/// | dhondt | imperiali | dean | hill | linear:d0=<r>, with r a fraction "p/q" or a finite decimal.
/// Case-insensitive. Throws ParseError (with the position and what was expected) or UnknownMethod.
MethodSpec parse_method(std::string_view text, TiePolicy policy = {});

/// Either form of input a method can run on.
using ApportionInput = std::variant<ElectionProblem, QuotaVector>;

QuotaVector quotas_of(const ApportionInput& input);
std::int64_t seats_of(const ApportionInput& input);
std::size_t parties_of(const ApportionInput& input);

ApportionmentResult apply(const MethodSpec& method, const QuotaVector& quotas);
/// Runs on the problem's exact quotas; LargestVotes ties use the problem's votes.
ApportionmentResult apply(const MethodSpec& method, const ElectionProblem& problem);
ApportionmentResult apply(const MethodSpec& method, const ApportionInput& input);

}  // namespace apportion
