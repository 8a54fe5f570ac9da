#pragma once

#include <vector>

#include "ballq/intmatrix.hpp"

namespace ballq {

// Solutions of A * x = b (mod Z^rows) for x in the torus (R/Z)^cols.
struct SolutionSet {
  enum class Kind { Finite, NoSolution, PositiveDimensional } kind;
  // Finite: all representatives, coordinates in [0,1), lexicographic order.
  std::vector<std::vector<Rational>> points;
  // PositiveDimensional: one representative of the solution subtorus.
  std::vector<Rational> particular;

  bool solvable() const { return kind != Kind::NoSolution; }
  size_t count() const { return points.size(); }
};

// Exact solver via Smith normal form. For square A with det != 0 the result
// is Finite with exactly |det A| representatives.
SolutionSet solve_torus_congruence(const IntMatrix& a, const std::vector<Rational>& b);

}  // namespace ballq
