#pragma once

#include <compare>
#include <string>

#include "ballq/numeric.hpp"

namespace ballq {

// Element of Z[i].
struct GaussianInteger {
  Int re{0};
  Int im{0};

  GaussianInteger() = default;
  GaussianInteger(int r) : re(r) {}
  GaussianInteger(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }
  GaussianInteger conj() const { return {re, -im}; }
  Int norm() const { return re * re + im * im; }

  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInteger operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) = default;
  friend std::strong_ordering operator<=>(const GaussianInteger& a, const GaussianInteger& b) {
    if (a.re != b.re)
      return a.re < b.re ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.im != b.im)
      return a.im < b.im ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// Nearest-integer division in Z[i]; remainder norm is at most half of |b|'s.
GaussianInteger gauss_div_round(const GaussianInteger& a, const GaussianInteger& b);
// Euclidean gcd, normalized so the result is 0 or has canonical unit form
// (first of re > 0, or re == 0 && im > 0).
GaussianInteger gauss_gcd(GaussianInteger a, GaussianInteger b);
// True when b divides a exactly in Z[i].
bool gauss_divides(const GaussianInteger& b, const GaussianInteger& a);
GaussianInteger gauss_exact_div(const GaussianInteger& a, const GaussianInteger& b);

// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int r) : re(r) {}
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(const GaussianInteger& g) : re(g.re), im(g.im) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_gaussian_integer() const { return re.is_integer() && im.is_integer(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }
};

inline GaussianRational gr_i() { return {Rational(0), Rational(1)}; }

// Canonical printing: "0", "3/2", "i", "-i", "1/2*i", "1/2+1/2*i", "1-2*i".
std::string to_string(const GaussianInteger& g);
std::string to_string(const GaussianRational& g);

// Literal grammar (no whitespace, no decimals): [s]term or [s]term s term,
// where term is p[/q] optionally "*i", or bare "i"; a real term must come
// before an imaginary one and each may appear once.
GaussianRational parse_gaussian_rational(const std::string& text);
// Same grammar restricted to integer components.
GaussianInteger parse_gaussian_integer(const std::string& text);

}  // namespace ballq
