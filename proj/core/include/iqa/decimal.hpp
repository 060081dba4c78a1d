#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace iqa {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number of unbounded size, always normalized (positive
// denominator, lowest terms). Weighted means over many devices produce
// denominators that outgrow any fixed-width integer, hence the big ints.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  // Accepts "12", "-3.125", "0.56" or "2/3".
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_negative() const noexcept { return value_.sign() < 0; }

  double to_double() const;

  // Decimal rendering with `places` fractional digits, rounding half away
  // from zero (half-up for the nonnegative values this library produces).
  std::string to_fixed(int places) const;

  // "p" or "p/q".
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

Rational abs(const Rational& value);

// A decimal value held exactly as an integer count of hundredths. Factor
// scores, percentages read from files and checklist levels all use it.
class Hundredths {
 public:
  constexpr Hundredths() = default;
  constexpr explicit Hundredths(std::int64_t units) : units_(units) {}

  // Parses a plain decimal literal ("0.56", "1", "38.19", ".5"). Throws
  // Error(PrecisionError) for more than two fractional digits and
  // Error(InvalidArgument) for anything that is not a decimal literal.
  static Hundredths parse(std::string_view text);

  constexpr std::int64_t units() const noexcept { return units_; }
  Rational to_rational() const { return Rational(units_, 100); }

  // Always two fractional digits: "0.56", "1.00", "-0.05".
  std::string to_string() const;

  friend constexpr auto operator<=>(const Hundredths&, const Hundredths&) = default;

 private:
  std::int64_t units_ = 0;
};

// Rounds a rational to the nearest hundredth, ties away from zero.
Hundredths round_to_hundredths(const Rational& value);

}  // namespace iqa
