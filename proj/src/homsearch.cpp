#include "ballq/homsearch.hpp"

#include <algorithm>
#include <set>

#include "ballq/error.hpp"

namespace ballq {

namespace {

// gcd of |exponent sums| of relators supported on a single generator; 0
// when no such relator constrains it.
std::vector<Int> power_constraints(const Presentation& pres) {
  std::vector<Int> bound(pres.n_gens(), Int(0));
  for (const Word& r : pres.relators) {
    int gen = 0;
    bool single = true;
    Int exp = 0;
    for (int letter : r.letters) {
      int g = letter > 0 ? letter : -letter;
      if (gen == 0) gen = g;
      if (g != gen) {
        single = false;
        break;
      }
      exp += letter > 0 ? 1 : -1;
    }
    if (single && gen != 0 && exp != 0)
      bound[size_t(gen - 1)] = gcd_int(bound[size_t(gen - 1)], abs_int(exp));
  }
  return bound;
}

}  // namespace

HomSearchResult find_homomorphisms(const Presentation& pres,
                                   const std::vector<Perm>& target_gens, long node_limit,
                                   bool up_to_conjugacy, size_t element_cap) {
  check(node_limit >= 1, Err::BadFile, "node limit must be at least 1");
  std::vector<Perm> elements = enumerate_perm_group(target_gens, element_cap);
  int degree = int(elements.front().size());
  size_t n = pres.n_gens();

  // Candidate images per generator, in element discovery order.
  std::vector<Int> bound = power_constraints(pres);
  std::vector<std::vector<const Perm*>> candidates(n);
  for (size_t g = 0; g < n; ++g)
    for (const Perm& e : elements) {
      if (bound[g] != 0 && perm_order(e) != 0 && bound[g] % perm_order(e) != 0) continue;
      candidates[g].push_back(&e);
    }

  // A relator is checked at the first level where all its letters have
  // images assigned.
  std::vector<std::vector<const Word*>> checks(n + 1);
  for (const Word& r : pres.relators) {
    size_t top = 0;
    for (int letter : r.letters) top = std::max(top, size_t(letter > 0 ? letter : -letter));
    checks[top].push_back(&r);
  }

  HomSearchResult result;
  std::vector<Perm> assignment(n);
  bool out_of_nodes = false;

  auto descend = [&](auto&& self, size_t level) -> void {
    if (out_of_nodes) return;
    if (level == n) {
      result.homs.push_back(assignment);
      return;
    }
    for (const Perm* image : candidates[level]) {
      if (result.nodes >= node_limit) {
        out_of_nodes = true;
        return;
      }
      ++result.nodes;
      assignment[level] = *image;
      bool ok = true;
      for (const Word* r : checks[level + 1])
        if (!is_identity_perm(eval_word(assignment, degree, *r))) {
          ok = false;
          break;
        }
      if (ok) self(self, level + 1);
      if (out_of_nodes) return;
    }
  };
  if (n == 0) {
    result.homs.push_back({});
  } else {
    descend(descend, 0);
  }
  result.complete = !out_of_nodes;

  if (up_to_conjugacy) {
    // Keep one representative per conjugacy class of image tuples: the
    // lexicographically least conjugate.
    std::set<std::vector<Perm>> reps;
    for (const auto& hom : result.homs) {
      std::vector<Perm> best = hom;
      for (const Perm& t : elements) {
        Perm tinv = inverse_perm(t);
        std::vector<Perm> conj(hom.size());
        for (size_t g = 0; g < hom.size(); ++g) conj[g] = mul(mul(tinv, hom[g]), t);
        if (conj < best) best = std::move(conj);
      }
      reps.insert(std::move(best));
    }
    result.homs.assign(reps.begin(), reps.end());
  } else {
    std::sort(result.homs.begin(), result.homs.end());
  }
  return result;
}

}  // namespace ballq
