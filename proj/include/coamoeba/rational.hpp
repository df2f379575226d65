#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace coamoeba {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored reduced with a positive denominator. Intermediate products
/// are formed in 128 bits; a result that does not fit back into 64 bits
/// throws Error(Overflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  bool is_integer() const noexcept { return den_ == 1; }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const noexcept;

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  /// Accepts "n", "-n", "n/d"; throws Error(ParseError) on anything else or d == 0.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept;

/// Narrow a 128-bit intermediate, throwing Error(Overflow) when it does not fit.
std::int64_t checked_narrow(__int128 value);

}  // namespace coamoeba
