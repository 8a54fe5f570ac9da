#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

#include "ballq/error.hpp"

namespace ballq {

// All integer arithmetic in the library runs on arbitrary-precision
// integers; nothing downstream may assume 64-bit ranges.
using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division; b must be nonzero.
Int floor_div(const Int& a, const Int& b);
// a - floor_div(a, b) * b, always in [0, |b|).
Int floor_mod(const Int& a, const Int& b);

// Canonical rational: den > 0, gcd(num, den) = 1, zero is 0/1.
struct Rational {
  Int num{0};
  Int den{1};

  Rational() = default;
  Rational(int n) : num(n), den(1) {}
  Rational(Int n) : num(std::move(n)), den(1) {}
  Rational(Int n, Int d);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  int sign() const { return num == 0 ? 0 : (num > 0 ? 1 : -1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Int l = a.num * b.den, r = b.num * a.den;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// Largest integer <= q.
Int rational_floor(const Rational& q);
// q - floor(q), in [0, 1).
Rational frac(const Rational& q);

std::string to_string(const Int& n);
std::string to_string(const Rational& q);

// Exact literal parser for "p" or "p/q" with optional leading sign.
// Rejects decimals, whitespace, and empty input.
Rational parse_rational(const std::string& text);

}  // namespace ballq
