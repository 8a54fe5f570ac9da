#include "ballq/congruence.hpp"

#include <algorithm>

namespace ballq {

SolutionSet solve_torus_congruence(const IntMatrix& a, const std::vector<Rational>& b) {
  check(b.size() == a.rows, Err::Internal, "congruence rhs length mismatch");
  SNFResult s = smith_normal_form(a);
  size_t r = s.divisors.size();
  size_t n = a.cols;

  // c = U * b; rows past r constrain nothing on x, so they must be integral.
  std::vector<Rational> c(a.rows, Rational(0));
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.rows; ++j)
      if (s.u.at(i, j) != 0) c[i] += Rational(s.u.at(i, j)) * b[j];

  SolutionSet out;
  for (size_t i = r; i < a.rows; ++i)
    if (!c[i].is_integer()) {
      out.kind = SolutionSet::Kind::NoSolution;
      return out;
    }

  auto recombine = [&](const std::vector<Rational>& y) {
    std::vector<Rational> x(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j)
        if (s.v.at(i, j) != 0 && !y[j].is_zero()) x[i] += Rational(s.v.at(i, j)) * y[j];
      x[i] = frac(x[i]);
    }
    return x;
  };

  if (r < n) {
    out.kind = SolutionSet::Kind::PositiveDimensional;
    std::vector<Rational> y(n, Rational(0));
    for (size_t i = 0; i < r; ++i) y[i] = frac(c[i] / Rational(s.divisors[i]));
    out.particular = recombine(y);
    return out;
  }

  out.kind = SolutionSet::Kind::Finite;
  if (n == 0) {
    out.points.emplace_back();
    return out;
  }
  std::vector<Rational> y(n, Rational(0));
  std::vector<Int> k(n, Int(0));
  for (;;) {
    for (size_t i = 0; i < n; ++i)
      y[i] = frac((c[i] + Rational(k[i])) / Rational(s.divisors[i]));
    out.points.push_back(recombine(y));
    size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++k[pos] < s.divisors[pos]) break;
      k[pos] = 0;
      if (pos == 0) {
        std::sort(out.points.begin(), out.points.end());
        return out;
      }
    }
  }
}

}  // namespace ballq
