#include "ballq/numeric.hpp"

#include <cctype>

namespace ballq {

Int floor_div(const Int& a, const Int& b) {
  check(b != 0, Err::Degenerate, "division by zero");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Rational::Rational(Int n, Int d) {
  check(d != 0, Err::Degenerate, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = gcd_int(abs_int(n), d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = std::move(n);
  den = std::move(d);
}

Rational operator/(const Rational& a, const Rational& b) {
  check(b.num != 0, Err::Degenerate, "rational division by zero");
  return Rational(a.num * b.den, a.den * b.num);
}

Int rational_floor(const Rational& q) { return floor_div(q.num, q.den); }

Rational frac(const Rational& q) {
  Rational r;
  r.num = floor_mod(q.num, q.den);
  r.den = q.den;
  // numerator reduced mod den keeps gcd(num, den) = 1 except when num hits 0
  if (r.num == 0) r.den = 1;
  return r;
}

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (q.den == 1) return q.num.str();
  return q.num.str() + "/" + q.den.str();
}

namespace {

// Digits starting at text[i]; advances i. Fails on empty or decimal point.
Int parse_digits(const std::string& text, size_t& i, const std::string& what) {
  size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  check(i > start, Err::Syntax, "expected " + what + " in \"" + text + "\"");
  check(i >= text.size() || text[i] != '.', Err::Syntax,
        "decimal literals are not accepted: \"" + text + "\"");
  return Int(text.substr(start, i - start));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  check(!text.empty(), Err::Syntax, "empty rational literal");
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  Int n = parse_digits(text, i, "numerator");
  Int d = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    d = parse_digits(text, i, "denominator");
    check(d != 0, Err::Syntax, "zero denominator in \"" + text + "\"");
  }
  check(i == text.size(), Err::Syntax, "trailing characters in rational \"" + text + "\"");
  if (neg) n = -n;
  return Rational(n, d);
}

}  // namespace ballq
