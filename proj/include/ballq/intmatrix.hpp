#pragma once

#include <utility>
#include <vector>

#include "ballq/numeric.hpp"

namespace ballq {

// Dense integer matrix, row-major.
struct IntMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(size_t n);
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) = default;
};

// Exact determinant (fraction-free Bareiss). Square input.
Int det(const IntMatrix& m);

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr > 0.
struct SNFResult {
  IntMatrix u;      // rows x rows
  IntMatrix v;      // cols x cols
  IntMatrix d;      // rows x cols
  std::vector<Int> divisors;  // nonzero diagonal entries, in chain order
};

SNFResult smith_normal_form(IntMatrix a);

// Invariant factors only (no transforms); same chain as smith_normal_form.
std::vector<Int> invariant_factors(IntMatrix a);

// Sparse row: sorted (column, coefficient) pairs, coefficients nonzero.
using SparseRow = std::vector<std::pair<size_t, Int>>;

// Invariant factors of a sparse integer matrix. Unit pivots are eliminated
// with Markowitz-style fill control before the dense residue is handed to
// invariant_factors; this keeps group-presentation matrices tractable.
std::vector<Int> invariant_factors_sparse(std::vector<SparseRow> rows, size_t ncols);

// Row-style Hermite form of the row lattice: returns a basis (as matrix rows,
// echelon, pivots positive) of the subgroup of Z^cols generated by the rows.
IntMatrix row_lattice_basis(const IntMatrix& m);

}  // namespace ballq
