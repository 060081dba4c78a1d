#include "iqa/decimal.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "iqa/errors.hpp"

namespace iqa {
namespace {

using boost::multiprecision::cpp_rational;

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t v = 0;
  for (char c : digits) {
    if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, c - '0', &v)) {
      throw Error(ErrorCode::InvalidArgument, "numeric literal too large: '" + std::string(whole) + "'");
    }
  }
  return v;
}

// Leading zeros are stripped: the cpp_int string constructor reads them as octal.
BigInt big_digits(std::string_view digits) {
  while (!digits.empty() && digits.front() == '0') digits.remove_prefix(1);
  return digits.empty() ? BigInt(0) : BigInt(std::string(digits));
}

BigInt pow10(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

// floor(|num| * 10^places / den + 1/2), the magnitude rounded half up.
BigInt round_scaled(const Rational& value, int places) {
  const BigInt num = boost::multiprecision::abs(value.numerator());
  const BigInt den = value.denominator();
  return (2 * num * pow10(places) + den) / (2 * den);
}

struct DecimalParts {
  bool negative = false;
  std::string_view integral;
  std::string_view fraction;
};

DecimalParts split_decimal(std::string_view text) {
  DecimalParts parts;
  std::string_view s = text;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    parts.negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  parts.integral = s.substr(0, dot);
  if (dot != std::string_view::npos) parts.fraction = s.substr(dot + 1);
  const bool has_dot = dot != std::string_view::npos;
  if ((parts.integral.empty() && parts.fraction.empty()) || !all_digits(parts.integral) ||
      !all_digits(parts.fraction) || (has_dot && parts.fraction.empty())) {
    throw Error(ErrorCode::InvalidArgument, "not a decimal literal: '" + std::string(text) + "'");
  }
  return parts;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  // Boost 1.74 rejects a negative denominator, so move the sign first.
  BigInt num(numerator);
  BigInt den(denominator);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  value_ = cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational top = parse(text.substr(0, slash));
    const Rational bottom = parse(text.substr(slash + 1));
    if (bottom.is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    }
    return top / bottom;
  }
  const DecimalParts parts = split_decimal(text);
  const BigInt scale = pow10(static_cast<int>(parts.fraction.size()));
  BigInt num = big_digits(parts.integral) * scale + big_digits(parts.fraction);
  if (parts.negative) num = -num;
  return Rational(cpp_rational(num, scale));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_fixed(int places) const {
  if (places < 0) throw std::invalid_argument("to_fixed: negative places");
  const BigInt rounded = round_scaled(*this, places);
  std::string digits = rounded.str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (is_negative() && rounded != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

std::string Rational::to_string() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
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
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(cpp_rational(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& value) { return value.is_negative() ? -value : value; }

Hundredths Hundredths::parse(std::string_view text) {
  const DecimalParts parts = split_decimal(text);
  if (parts.fraction.size() > 2) {
    // Trailing zeros beyond the second digit are still more precision than
    // the format allows; "0.560" is rejected like "0.561".
    throw Error(ErrorCode::PrecisionError,
                "more than two fractional digits: '" + std::string(text) + "'");
  }
  std::int64_t units = parts.integral.empty() ? 0 : parse_digits(parts.integral, text);
  std::int64_t frac = parts.fraction.empty() ? 0 : parse_digits(parts.fraction, text);
  if (parts.fraction.size() == 1) frac *= 10;
  if (__builtin_mul_overflow(units, 100, &units) || __builtin_add_overflow(units, frac, &units)) {
    throw Error(ErrorCode::InvalidArgument, "numeric literal too large: '" + std::string(text) + "'");
  }
  return Hundredths(parts.negative ? -units : units);
}

std::string Hundredths::to_string() const { return Rational(units_, 100).to_fixed(2); }

Hundredths round_to_hundredths(const Rational& value) {
  const BigInt rounded = round_scaled(value, 2);
  if (rounded > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("value too large for hundredths");
  }
  const auto units = rounded.convert_to<std::int64_t>();
  return Hundredths(value.is_negative() ? -units : units);
}

}  // namespace iqa
