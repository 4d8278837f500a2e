#include "apportion/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "apportion/error.hpp"

namespace apportion {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix, so strip zeros first.
BigInt from_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw ApportionError(ErrorCode::MalformedDecimal,
                       "'" + std::string(text) + "': " + std::string(why));
}

Rational parse_decimal_body(std::string_view full, std::string_view body, bool negative) {
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (dot != std::string_view::npos && frac_part.find('.') != std::string_view::npos) {
    malformed(full, "more than one decimal point");
  }
  if (int_part.empty() && frac_part.empty()) malformed(full, "no digits");
  if (!int_part.empty() && !all_digits(int_part)) malformed(full, "expected digits before the decimal point");
  if (!frac_part.empty() && !all_digits(frac_part)) malformed(full, "expected digits after the decimal point");
  if (dot != std::string_view::npos && frac_part.empty() && int_part.empty()) malformed(full, "no digits");

  BigInt num = int_part.empty() ? BigInt(0) : from_digits(int_part);
  BigInt den = 1;
  if (!frac_part.empty()) {
    den = pow10(static_cast<unsigned>(frac_part.size()));
    num = num * den + from_digits(frac_part);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  // cpp_rational wants the sign on the numerator
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) malformed(text, "empty");
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view p = body.substr(0, slash);
    std::string_view q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) malformed(text, "expected p/q with decimal digits");
    BigInt den = from_digits(q);
    if (den == 0) malformed(text, "zero denominator");
    BigInt num = from_digits(p);
    return Rational(negative ? BigInt(-num) : num, den);
  }
  return parse_decimal_body(text, body, negative);
}

Rational Rational::parse_decimal(std::string_view text) {
  if (text.empty()) malformed(text, "empty");
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  return parse_decimal_body(text, body, negative);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_integer() const { return denominator() == 1; }

int Rational::sign() const {
  if (value_ > 0) return 1;
  if (value_ < 0) return -1;
  return 0;
}

BigInt Rational::floor() const {
  BigInt n = numerator();
  BigInt d = denominator();
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

BigInt Rational::ceil() const {
  BigInt n = numerator();
  BigInt d = denominator();
  if (n >= 0) return (n + d - 1) / d;
  return -((-n) / d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

std::string Rational::to_decimal(unsigned digits, Rounding rounding) const {
  BigInt n = numerator();
  BigInt d = denominator();
  bool negative = n < 0;
  if (negative) n = -n;
  BigInt scale = pow10(digits);
  BigInt scaled = n * scale;
  BigInt q = scaled / d;
  BigInt r = scaled % d;
  if (rounding == Rounding::HalfUp && 2 * r >= d) q += 1;

  std::string magnitude = q.str();
  if (digits > 0) {
    if (magnitude.size() <= digits) magnitude.insert(0, digits + 1 - magnitude.size(), '0');
    magnitude.insert(magnitude.size() - digits, ".");
  }
  if (negative && q != 0) magnitude.insert(0, "-");
  return magnitude;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt parse_integer(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) malformed(text, "expected an integer");
  BigInt value = from_digits(body);
  return negative ? BigInt(-value) : value;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace apportion
