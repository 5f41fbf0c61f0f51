#include "lmvt/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "lmvt/errors.hpp"

namespace lmvt {

namespace {

using Wide = __int128;

// Reduces p/q (q != 0) and range-checks the result back into 64 bits.
Rational reduce(Wide p, Wide q) {
  if (q == 0) throw Error("rational denominator must be nonzero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Wide a = p < 0 ? -p : p;
  Wide b = q;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    p /= a;
    q /= a;
  }
  constexpr Wide lo = INT64_MIN;
  constexpr Wide hi = INT64_MAX;
  if (p < lo || p > hi || q > hi) throw CapacityError("rational overflows 64 bits");
  Rational r;
  r.num = static_cast<std::int64_t>(p);
  r.den = static_cast<std::int64_t>(q);
  return r;
}

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw Error(std::string("invalid rational: bad ") + what);
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error("rational denominator must be nonzero");
  *this = reduce(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "integer"));
  std::int64_t p = parse_int(text.substr(0, slash), "numerator");
  std::int64_t q = parse_int(text.substr(slash + 1), "denominator");
  if (q <= 0) throw Error("invalid rational: denominator must be positive");
  return Rational(p, q);
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num) * b.den;
  Wide rhs = Wide(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.den + Wide(b.num) * a.den, Wide(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.den - Wide(b.num) * a.den, Wide(a.den) * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(Wide(a.num) * b.num, Wide(a.den) * b.den);
}

}  // namespace lmvt
