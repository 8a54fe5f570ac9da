#include "ballq/intmatrix.hpp"

#include <algorithm>
#include <map>

namespace ballq {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  check(x.cols == y.rows, Err::Internal, "matrix product shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

Int det(const IntMatrix& m) {
  check(m.rows == m.cols, Err::Internal, "determinant of non-square matrix");
  size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

// Shared dense Smith reduction; transform accumulation is optional.
struct SmithWorker {
  IntMatrix a;
  IntMatrix u, v;
  bool track;

  SmithWorker(IntMatrix m, bool with_transforms)
      : a(std::move(m)), track(with_transforms) {
    if (track) {
      u = IntMatrix::identity(a.rows);
      v = IntMatrix::identity(a.cols);
    }
  }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track)
      for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track)
      for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row k
  void row_sub(size_t i, size_t k, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(k, c);
    if (track)
      for (size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(k, c);
  }
  void col_sub(size_t j, size_t k, const Int& q) {
    if (q == 0) return;
    for (size_t r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, k);
    if (track)
      for (size_t r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, k);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    if (track)
      for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // Smallest nonzero |entry| in the submatrix at (k, k); ties by position.
  bool find_pivot(size_t k, size_t& pi, size_t& pj) const {
    bool found = false;
    Int best;
    for (size_t i = k; i < a.rows; ++i)
      for (size_t j = k; j < a.cols; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    size_t n = std::min(a.rows, a.cols);
    for (size_t k = 0; k < n; ++k) {
      size_t pi, pj;
      if (!find_pivot(k, pi, pj)) break;
      swap_rows(k, pi);
      swap_cols(k, pj);
      // clear row and column k; reselect the pivot whenever a remainder
      // smaller than it appears
      for (;;) {
        bool dirty = false;
        for (size_t i = k + 1; i < a.rows; ++i) {
          if (a.at(i, k) == 0) continue;
          Int q = floor_div(a.at(i, k), a.at(k, k));
          row_sub(i, k, q);
          if (a.at(i, k) != 0) {
            swap_rows(k, i);
            dirty = true;
          }
        }
        for (size_t j = k + 1; j < a.cols; ++j) {
          if (a.at(k, j) == 0) continue;
          Int q = floor_div(a.at(k, j), a.at(k, k));
          col_sub(j, k, q);
          if (a.at(k, j) != 0) {
            swap_cols(k, j);
            dirty = true;
          }
        }
        if (!dirty) break;
      }
      if (a.at(k, k) < 0) negate_row(k);
      // enforce the divisibility chain: fold any non-divisible entry into
      // column k and redo this step
      bool redo = false;
      for (size_t i = k + 1; i < a.rows && !redo; ++i)
        for (size_t j = k + 1; j < a.cols && !redo; ++j)
          if (a.at(i, j) % a.at(k, k) != 0) {
            col_sub(k, j, Int(-1));  // col k += col j
            redo = true;
          }
      if (redo) --k;
    }
  }

  std::vector<Int> divisors() const {
    std::vector<Int> d;
    size_t n = std::min(a.rows, a.cols);
    for (size_t k = 0; k < n && a.at(k, k) != 0; ++k) d.push_back(a.at(k, k));
    return d;
  }
};

}  // namespace

SNFResult smith_normal_form(IntMatrix a) {
  SmithWorker w(std::move(a), true);
  w.run();
  std::vector<Int> d = w.divisors();
  return {std::move(w.u), std::move(w.v), std::move(w.a), std::move(d)};
}

std::vector<Int> invariant_factors(IntMatrix a) {
  SmithWorker w(std::move(a), false);
  w.run();
  return w.divisors();
}

std::vector<Int> invariant_factors_sparse(std::vector<SparseRow> rows, size_t ncols) {
  // Phase 1: repeatedly eliminate on +-1 pivots, choosing the entry with the
  // smallest Markowitz fill score. Each elimination contributes one trivial
  // invariant factor and removes a row and a column.
  for (auto& r : rows) std::sort(r.begin(), r.end());
  std::vector<bool> row_dead(rows.size(), false), col_dead(ncols, false);
  size_t ones = 0;

  auto row_nnz = [&](const SparseRow& r) {
    size_t n = 0;
    for (auto& [c, v] : r)
      if (!col_dead[c] && v != 0) ++n;
    return n;
  };

  std::vector<size_t> col_count(ncols, 0);
  auto recount_cols = [&] {
    std::fill(col_count.begin(), col_count.end(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (row_dead[i]) continue;
      for (auto& [c, v] : rows[i])
        if (!col_dead[c] && v != 0) ++col_count[c];
    }
  };
  recount_cols();

  for (;;) {
    size_t best_row = rows.size();
    size_t best_col = 0;
    size_t best_score = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (row_dead[i]) continue;
      size_t rn = row_nnz(rows[i]);
      if (rn == 0) {
        row_dead[i] = true;
        continue;
      }
      for (auto& [c, v] : rows[i]) {
        if (col_dead[c] || v == 0) continue;
        if (v != 1 && v != -1) continue;
        size_t score = (rn - 1) * (col_count[c] - 1);
        if (score < best_score) {
          best_score = score;
          best_row = i;
          best_col = c;
          if (score == 0) break;
        }
      }
      if (best_score == 0) break;
    }
    if (best_row == rows.size()) break;

    // normalize pivot row sign so the pivot is +1
    Int pv;
    for (auto& [c, v] : rows[best_row])
      if (c == best_col) pv = v;
    if (pv < 0)
      for (auto& [c, v] : rows[best_row]) v = -v;

    // eliminate best_col from all other rows
    const SparseRow pivot_row = rows[best_row];
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == best_row || row_dead[i]) continue;
      Int coef;
      bool has = false;
      for (auto& [c, v] : rows[i])
        if (c == best_col && v != 0) {
          coef = v;
          has = true;
          break;
        }
      if (!has) continue;
      // rows[i] -= coef * pivot_row (sparse merge)
      SparseRow merged;
      merged.reserve(rows[i].size() + pivot_row.size());
      auto it1 = rows[i].begin(), e1 = rows[i].end();
      auto it2 = pivot_row.begin(), e2 = pivot_row.end();
      while (it1 != e1 || it2 != e2) {
        if (it2 == e2 || (it1 != e1 && it1->first < it2->first)) {
          merged.push_back(*it1++);
        } else if (it1 == e1 || it2->first < it1->first) {
          merged.emplace_back(it2->first, -coef * it2->second);
          ++it2;
        } else {
          Int v = it1->second - coef * it2->second;
          if (v != 0) merged.emplace_back(it1->first, std::move(v));
          ++it1;
          ++it2;
        }
      }
      rows[i] = std::move(merged);
    }
    row_dead[best_row] = true;
    col_dead[best_col] = true;
    ++ones;
    recount_cols();
  }

  // Phase 2: densify the residue and finish with the generic reduction.
  std::vector<size_t> live_cols;
  for (size_t c = 0; c < ncols; ++c)
    if (!col_dead[c]) live_cols.push_back(c);
  std::map<size_t, size_t> col_index;
  for (size_t k = 0; k < live_cols.size(); ++k) col_index[live_cols[k]] = k;

  std::vector<SparseRow> live_rows;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (row_dead[i]) continue;
    SparseRow r;
    for (auto& [c, v] : rows[i])
      if (!col_dead[c] && v != 0) r.emplace_back(col_index[c], v);
    if (!r.empty()) live_rows.push_back(std::move(r));
  }
  IntMatrix dense(live_rows.size(), live_cols.size());
  for (size_t i = 0; i < live_rows.size(); ++i)
    for (auto& [c, v] : live_rows[i]) dense.at(i, c) = v;

  std::vector<Int> inv = invariant_factors(std::move(dense));
  std::vector<Int> out(ones, Int(1));
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

IntMatrix row_lattice_basis(const IntMatrix& m) {
  // Column-echelon row reduction over Z (Hermite-style), pivots positive.
  IntMatrix w = m;
  size_t r = 0;
  for (size_t c = 0; c < w.cols && r < w.rows; ++c) {
    // gcd the column below r into one row via euclidean row ops
    for (;;) {
      size_t p = w.rows;
      Int best;
      for (size_t i = r; i < w.rows; ++i) {
        if (w.at(i, c) == 0) continue;
        Int ax = abs_int(w.at(i, c));
        if (p == w.rows || ax < best) {
          p = i;
          best = ax;
        }
      }
      if (p == w.rows) break;  // column is zero
      if (p != r)
        for (size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
      bool clean = true;
      for (size_t i = r + 1; i < w.rows; ++i) {
        if (w.at(i, c) == 0) continue;
        Int q = floor_div(w.at(i, c), w.at(r, c));
        for (size_t j = 0; j < w.cols; ++j) w.at(i, j) -= q * w.at(r, j);
        if (w.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w.at(r, c) == 0) continue;
    if (w.at(r, c) < 0)
      for (size_t j = 0; j < w.cols; ++j) w.at(r, j) = -w.at(r, j);
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < r; ++i) {
      Int q = floor_div(w.at(i, c), w.at(r, c));
      for (size_t j = 0; j < w.cols; ++j) w.at(i, j) -= q * w.at(r, j);
    }
    ++r;
  }
  IntMatrix out(r, w.cols);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < w.cols; ++j) out.at(i, j) = w.at(i, j);
  return out;
}

}  // namespace ballq
