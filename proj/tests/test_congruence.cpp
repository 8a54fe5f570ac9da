#include <doctest.h>

#include <vector>

#include "ballq/congruence.hpp"
#include "testutil.hpp"

using namespace ballq;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = Int(rows[i][j]);
  return m;
}

bool satisfies(const IntMatrix& a, const std::vector<Rational>& b,
               const std::vector<Rational>& x) {
  for (size_t i = 0; i < a.rows; ++i) {
    Rational acc(0);
    for (size_t j = 0; j < a.cols; ++j) acc += Rational(a.at(i, j)) * x[j];
    if (!(acc - b[i]).is_integer()) return false;
  }
  return true;
}

// Enumerate candidate solutions on the grid (1/den)Z^n and count matches.
size_t brute_count(const IntMatrix& a, const std::vector<Rational>& b, long den) {
  size_t n = a.cols, count = 0;
  std::vector<long> idx(n, 0);
  while (true) {
    std::vector<Rational> x(n);
    for (size_t j = 0; j < n; ++j) x[j] = Rational(Int(idx[j]), Int(den));
    if (satisfies(a, b, x)) ++count;
    size_t p = 0;
    while (p < n && ++idx[p] == den) idx[p++] = 0;
    if (p == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("congruence solver fixed cases") {
  SolutionSet s = solve_torus_congruence(from_rows({{2, 0}, {0, 2}}), {Rational(0), Rational(0)});
  REQUIRE(s.kind == SolutionSet::Kind::Finite);
  REQUIRE(s.count() == 4);
  CHECK(s.points[0] == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(s.points[1] == std::vector<Rational>{Rational(0), Rational(1, 2)});
  CHECK(s.points[2] == std::vector<Rational>{Rational(1, 2), Rational(0)});
  CHECK(s.points[3] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  // incompatible congruences on one unknown
  s = solve_torus_congruence(from_rows({{1}, {1}}), {Rational(0), Rational(1, 2)});
  CHECK(s.kind == SolutionSet::Kind::NoSolution);

  // rank-deficient but consistent
  s = solve_torus_congruence(from_rows({{0}}), {Rational(0)});
  CHECK(s.kind == SolutionSet::Kind::PositiveDimensional);
  s = solve_torus_congruence(from_rows({{0}}), {Rational(1, 2)});
  CHECK(s.kind == SolutionSet::Kind::NoSolution);
  s = solve_torus_congruence(from_rows({{1, -1}}), {Rational(1, 3)});
  REQUIRE(s.kind == SolutionSet::Kind::PositiveDimensional);
  CHECK(satisfies(from_rows({{1, -1}}), {Rational(1, 3)}, s.particular));

  // single unknown, rational target
  s = solve_torus_congruence(from_rows({{2}}), {Rational(1, 3)});
  REQUIRE(s.kind == SolutionSet::Kind::Finite);
  REQUIRE(s.count() == 2);
  CHECK(s.points[0] == std::vector<Rational>{Rational(1, 6)});
  CHECK(s.points[1] == std::vector<Rational>{Rational(2, 3)});
}

TEST_CASE("congruence solver counts match brute force") {
  auto rng = testutil::seeded_rng(77);
  int done = 0;
  while (done < 200) {
    size_t n = size_t(testutil::rand_between(rng, 1, 3));
    IntMatrix a(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a.at(i, j) = Int(testutil::rand_between(rng, -3, 3));
    Int d = abs_int(det(a));
    if (d == 0 || d > 12) continue;
    ++done;
    std::vector<Rational> b(n);
    for (size_t i = 0; i < n; ++i) b[i] = Rational(Int(testutil::rand_between(rng, -4, 4)));
    SolutionSet s = solve_torus_congruence(a, b);
    REQUIRE(s.kind == SolutionSet::Kind::Finite);
    CHECK(Int(s.count()) == d);
    CHECK(size_t(s.count()) == brute_count(a, b, long(d)));
    for (size_t k = 0; k < s.points.size(); ++k) {
      CHECK(satisfies(a, b, s.points[k]));
      for (const Rational& v : s.points[k]) {
        CHECK(v >= Rational(0));
        CHECK(v < Rational(1));
      }
      if (k > 0) CHECK(s.points[k - 1] < s.points[k]);
    }
  }
}

TEST_CASE("congruence solver rational targets") {
  auto rng = testutil::seeded_rng(88);
  int done = 0;
  while (done < 100) {
    size_t n = size_t(testutil::rand_between(rng, 1, 2));
    IntMatrix a(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a.at(i, j) = Int(testutil::rand_between(rng, -3, 3));
    Int d = abs_int(det(a));
    if (d == 0 || d > 8) continue;
    ++done;
    std::vector<Rational> b(n);
    for (size_t i = 0; i < n; ++i)
      b[i] = Rational(Int(testutil::rand_between(rng, -6, 6)), Int(6));
    SolutionSet s = solve_torus_congruence(a, b);
    REQUIRE(s.kind == SolutionSet::Kind::Finite);
    CHECK(Int(s.count()) == d);
    // solutions live on the (1 / (6 det)) grid
    CHECK(size_t(s.count()) == brute_count(a, b, long(d) * 6));
    for (const auto& x : s.points) CHECK(satisfies(a, b, x));
  }
}
