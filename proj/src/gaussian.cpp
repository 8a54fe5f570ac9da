#include "ballq/gaussian.hpp"

#include <cctype>

namespace ballq {

namespace {

// Nearest integer to p/q (ties toward +infinity); used by Gaussian division.
Int round_quotient(const Int& p, const Int& q) {
  // floor((2p + q) / (2q))
  return floor_div(2 * p + q, 2 * q);
}

}  // namespace

GaussianInteger gauss_div_round(const GaussianInteger& a, const GaussianInteger& b) {
  check(!b.is_zero(), Err::Degenerate, "gaussian division by zero");
  // a / b = a * conj(b) / N(b)
  GaussianInteger num = a * b.conj();
  Int n = b.norm();
  return {round_quotient(num.re, n), round_quotient(num.im, n)};
}

GaussianInteger gauss_gcd(GaussianInteger a, GaussianInteger b) {
  while (!b.is_zero()) {
    GaussianInteger q = gauss_div_round(a, b);
    GaussianInteger r = a - q * b;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  // normalize by units {1, i, -1, -i}: first of re > 0, or re == 0, im > 0
  while (!(a.re > 0 || (a.re == 0 && a.im > 0))) a = a * GaussianInteger(Int(0), Int(1));
  return a;
}

bool gauss_divides(const GaussianInteger& b, const GaussianInteger& a) {
  if (b.is_zero()) return a.is_zero();
  GaussianInteger num = a * b.conj();
  Int n = b.norm();
  return num.re % n == 0 && num.im % n == 0;
}

GaussianInteger gauss_exact_div(const GaussianInteger& a, const GaussianInteger& b) {
  check(gauss_divides(b, a), Err::Internal, "inexact gaussian division");
  GaussianInteger num = a * b.conj();
  Int n = b.norm();
  return {num.re / n, num.im / n};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  check(!b.is_zero(), Err::Degenerate, "gaussian division by zero");
  GaussianRational num = a * b.conj();
  Rational n = b.norm();
  return {num.re / n, num.im / n};
}

std::string to_string(const GaussianInteger& g) {
  return to_string(GaussianRational(g));
}

std::string to_string(const GaussianRational& g) {
  auto imag_part = [](const Rational& v) -> std::string {
    if (v == Rational(1)) return "i";
    if (v == Rational(-1)) return "-i";
    return to_string(v) + "*i";
  };
  if (g.im.is_zero()) return to_string(g.re);
  if (g.re.is_zero()) return imag_part(g.im);
  std::string s = to_string(g.re);
  if (g.im.sign() > 0) s += "+";
  return s + imag_part(g.im);
}

namespace {

struct GaussParser {
  const std::string& text;
  size_t i = 0;

  [[noreturn]] void die(const std::string& why) const {
    fail(Err::Syntax, why + " in literal \"" + text + "\"");
  }

  bool at_end() const { return i >= text.size(); }
  char peek() const { return text[i]; }

  Int digits(const std::string& what) {
    size_t start = i;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i;
    if (i == start) die("expected " + what);
    if (!at_end() && peek() == '.') die("decimal literals are not accepted");
    return Int(text.substr(start, i - start));
  }

  // term := int [/ posint] [* i] | i ; returns value and whether imaginary
  std::pair<Rational, bool> term(bool negative) {
    if (!at_end() && peek() == 'i') {
      ++i;
      return {Rational(negative ? -1 : 1), true};
    }
    Int n = digits("digits");
    Int d = 1;
    if (!at_end() && peek() == '/') {
      ++i;
      d = digits("denominator");
      if (d == 0) die("zero denominator");
    }
    bool imag = false;
    if (!at_end() && peek() == '*') {
      ++i;
      if (at_end() || peek() != 'i') die("expected i after *");
      ++i;
      imag = true;
    }
    if (negative) n = -n;
    return {Rational(n, d), imag};
  }

  GaussianRational parse() {
    if (at_end()) die("empty literal");
    GaussianRational out;
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++i;
    }
    auto [v1, imag1] = term(neg);
    if (imag1)
      out.im = v1;
    else
      out.re = v1;
    if (!at_end()) {
      if (peek() != '+' && peek() != '-') die("unexpected character");
      if (imag1) die("imaginary part must come last");
      neg = peek() == '-';
      ++i;
      auto [v2, imag2] = term(neg);
      if (!imag2) die("second term must be imaginary");
      out.im = v2;
    }
    if (!at_end()) die("trailing characters");
    return out;
  }
};

}  // namespace

GaussianRational parse_gaussian_rational(const std::string& text) {
  GaussParser p{text};
  return p.parse();
}

GaussianInteger parse_gaussian_integer(const std::string& text) {
  GaussianRational g = parse_gaussian_rational(text);
  check(g.is_gaussian_integer(), Err::Syntax,
        "expected Gaussian integer, got \"" + text + "\"");
  return {g.re.num, g.im.num};
}

}  // namespace ballq
