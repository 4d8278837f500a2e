#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every quantity that takes part in a seat decision (quotas, remainders,
 * quotients, error increments) is a Rational. Values are always kept in
 * lowest terms with a positive denominator, so equality is structural and
 * ties are decided exactly.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace apportion {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p/q", an integer, or a finite decimal such as "65.91" or "-.5".
  static Rational parse(std::string_view text);
  /// Accepts only integers and finite decimals (no fractions, no exponents).
  static Rational parse_decimal(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const;
  bool is_zero() const { return value_ == 0; }
  int sign() const;

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;
  Rational pow(unsigned exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "p/q", or "p" for integers.
  std::string to_string() const;

  enum class Rounding { Truncate, HalfUp };
  /// Fixed-point rendering with exactly `digits` fractional digits.
  std::string to_decimal(unsigned digits, Rounding rounding = Rounding::HalfUp) const;

  /// Report formatting only; never used in method logic.
  double to_double() const;

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Base-10 integer with optional sign; leading zeros are ordinary digits. Throws MalformedDecimal.
BigInt parse_integer(std::string_view text);

/// Lossless conversion used for seat arithmetic; throws std::overflow_error if out of range.
std::int64_t to_int64(const BigInt& value);

}  // namespace apportion
