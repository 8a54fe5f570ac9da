#include "ballq/rewrite.hpp"

#include <map>

#include "ballq/error.hpp"
#include "ballq/intmatrix.hpp"

namespace ballq {

std::string to_string(const AbelianInvariants& inv) {
  std::string out;
  if (inv.free_rank > 0) {
    out = "Z";
    if (inv.free_rank > 1) out += "^" + to_string(inv.free_rank);
  }
  for (const Int& d : inv.torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + to_string(d);
  }
  return out.empty() ? "trivial" : out;
}

namespace {

AbelianInvariants from_factors(const std::vector<Int>& factors, size_t n_cols) {
  AbelianInvariants inv;
  inv.free_rank = Int(n_cols) - Int(factors.size());
  for (const Int& d : factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace

AbelianInvariants abelianization(const Presentation& pres) {
  IntMatrix m(pres.relators.size(), pres.n_gens());
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (int letter : pres.relators[r].letters) {
      size_t g = size_t(letter > 0 ? letter : -letter) - 1;
      check(g < pres.n_gens(), Err::Internal, "letter outside the presentation");
      m.at(r, g) += letter > 0 ? 1 : -1;
    }
  return from_factors(invariant_factors(std::move(m)), pres.n_gens());
}

CosetTable kernel_coset_table(const Presentation& pres, const FiniteImage& img,
                              long max_cosets) {
  check(img.generator_images.size() == pres.n_gens(), Err::BadFile,
        "image does not match the presentation");
  check(Int(max_cosets) >= img.order, Err::BoundExceeded,
        "kernel index " + to_string(img.order) + " exceeds the coset bound");

  // The cosets of the kernel are exactly the image elements; the table is
  // the image's Cayley graph under right multiplication.
  std::vector<Perm> elements{identity_perm(img.degree)};
  std::map<Perm, long> index{{elements.front(), 0}};
  size_t n_gens = pres.n_gens();
  std::vector<long> entries;
  for (size_t idx = 0; idx < elements.size(); ++idx) {
    entries.resize((idx + 1) * 2 * n_gens, 0);
    for (size_t g = 0; g < n_gens; ++g) {
      Perm next = mul(elements[idx], img.generator_images[g]);
      auto it = index.find(next);
      if (it == index.end()) {
        it = index.emplace(std::move(next), long(elements.size())).first;
        elements.push_back(it->first);
      }
      entries[idx * 2 * n_gens + 2 * g] = it->second + 1;
    }
  }
  check(Int(elements.size()) == img.order, Err::Internal,
        "Cayley graph size disagrees with the image order");

  CosetTable table;
  table.n_cosets = long(elements.size());
  table.n_gens = n_gens;
  table.entries = std::move(entries);
  for (long c = 1; c <= table.n_cosets; ++c)
    for (size_t g = 0; g < n_gens; ++g) {
      long t = table.entries[size_t(c - 1) * 2 * n_gens + 2 * g];
      table.entries[size_t(t - 1) * 2 * n_gens + 2 * g + 1] = c;
    }
  validate_table(table, pres);
  return table;
}

AbelianInvariants subgroup_abelianization(const Presentation& pres, const FiniteImage& img,
                                          long max_cosets) {
  CosetTable table = kernel_coset_table(pres, img, max_cosets);
  long n = table.n_cosets;
  size_t n_gens = pres.n_gens();

  // Spanning tree by breadth-first search over positive letters (every
  // coset is reachable that way since the image is finite); tree pairs give
  // trivial Schreier generators, the rest get column numbers in (coset,
  // generator) order.
  std::vector<long> schreier_col(size_t(n) * n_gens, -2);  // -2 unseen, -1 tree
  std::vector<long> queue{1};
  std::vector<char> visited(size_t(n) + 1, 0);
  visited[1] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long c = queue[qi];
    for (size_t g = 0; g < n_gens; ++g) {
      long t = table.act(c, int(g) + 1);
      if (visited[size_t(t)]) continue;
      visited[size_t(t)] = 1;
      schreier_col[size_t(c - 1) * n_gens + g] = -1;
      queue.push_back(t);
    }
  }
  check(long(queue.size()) == n, Err::Internal, "coset graph is not connected");
  size_t n_cols = 0;
  for (long c = 1; c <= n; ++c)
    for (size_t g = 0; g < n_gens; ++g) {
      long& tag = schreier_col[size_t(c - 1) * n_gens + g];
      if (tag == -2) tag = long(n_cols++);
    }
  check(n_cols == size_t(n) * n_gens - size_t(n) + 1, Err::Internal,
        "Schreier generator count is off");

  // Rewrite u_c r u_c^-1 for every coset c and relator r; only exponent
  // sums are needed, so each row accumulates directly.
  std::vector<SparseRow> rows;
  rows.reserve(size_t(n) * pres.relators.size());
  for (long c = 1; c <= n; ++c) {
    for (const Word& r : pres.relators) {
      std::map<size_t, Int> exps;
      long pos = c;
      for (int letter : r.letters) {
        if (letter > 0) {
          long tag = schreier_col[size_t(pos - 1) * n_gens + size_t(letter - 1)];
          if (tag >= 0) exps[size_t(tag)] += 1;
          pos = table.act(pos, letter);
        } else {
          pos = table.act(pos, letter);
          long tag = schreier_col[size_t(pos - 1) * n_gens + size_t(-letter - 1)];
          if (tag >= 0) exps[size_t(tag)] -= 1;
        }
      }
      check(pos == c, Err::Internal, "relator trace left its coset");
      SparseRow row;
      for (auto& [col, v] : exps)
        if (v != 0) row.emplace_back(col, v);
      rows.push_back(std::move(row));
    }
  }
  return from_factors(invariant_factors_sparse(std::move(rows), n_cols), n_cols);
}

Int coset_index_of_image_subgroup(const FiniteImage& img, const std::vector<Word>& sub_words) {
  std::vector<Perm> sub_images;
  sub_images.reserve(sub_words.size());
  for (const Word& w : sub_words)
    sub_images.push_back(eval_word(img.generator_images, img.degree, w));
  Int sub_order = perm_group_order(sub_images);
  check(img.order % sub_order == 0, Err::Internal, "subgroup order violates Lagrange");
  return img.order / sub_order;
}

Rational euler_cover(const Rational& chi_orb, const Int& index) {
  check(index >= 1, Err::Degenerate, "covering index must be at least 1");
  return chi_orb * Rational(index);
}

}  // namespace ballq
