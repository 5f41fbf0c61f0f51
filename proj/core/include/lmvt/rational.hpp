#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lmvt {

// Exact rational on 64-bit components. Always normalized: den > 0 and
// gcd(|num|, den) == 1. Holds problem parameters (lead coefficients,
// thresholds, epsilon); solver internals switch to arbitrary precision
// where intermediate products can outgrow 64 bits.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t value) : num(value) {}
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Parses "p/q" with q > 0, or a bare integer "p". Throws Error on
  // anything else.
  static Rational parse(std::string_view text);

  // Serializes as "p/q", always with an explicit denominator.
  std::string str() const;

  bool positive() const { return num > 0; }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
};

}  // namespace lmvt
