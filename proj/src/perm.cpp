#include "ballq/perm.hpp"

#include <map>

#include "ballq/error.hpp"

namespace ballq {

Perm identity_perm(int degree) {
  Perm p(static_cast<size_t>(degree));
  for (int x = 0; x < degree; ++x) p[size_t(x)] = x;
  return p;
}

bool is_identity_perm(const Perm& p) {
  for (size_t x = 0; x < p.size(); ++x)
    if (p[x] != int(x)) return false;
  return true;
}

Perm mul(const Perm& a, const Perm& b) {
  check(a.size() == b.size(), Err::Internal, "permutation degrees differ");
  Perm out(a.size());
  for (size_t x = 0; x < a.size(); ++x) out[x] = b[size_t(a[x])];
  return out;
}

Perm inverse_perm(const Perm& p) {
  Perm out(p.size());
  for (size_t x = 0; x < p.size(); ++x) out[size_t(p[x])] = int(x);
  return out;
}

Int perm_order(const Perm& p) {
  Int order = 1;
  std::vector<char> seen(p.size(), 0);
  for (size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    Int len = 0;
    size_t y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = size_t(p[y]);
      ++len;
    }
    order = lcm_int(order, len);
  }
  return order;
}

Perm eval_word(const std::vector<Perm>& gen_images, int degree, const Word& w) {
  Perm out = identity_perm(degree);
  for (int letter : w.letters) {
    size_t g = size_t(letter > 0 ? letter : -letter) - 1;
    check(g < gen_images.size(), Err::UnknownGenerator, "word letter outside the image");
    out = letter > 0 ? mul(out, gen_images[g]) : mul(out, inverse_perm(gen_images[g]));
  }
  return out;
}

namespace {

// One level of a stabilizer chain: generators fixing all earlier base
// points, the orbit of this level's base under them, and a transversal
// element per orbit point mapping base to it.
struct Level {
  int base = 0;
  std::vector<Perm> gens;
  std::vector<int> orbit;
  std::vector<Perm> transversal;  // indexed by point, empty when outside
};

struct Chain {
  int degree;
  std::vector<Level> levels;

  void add_generator(size_t i, const Perm& g) {
    if (is_identity_perm(g)) return;
    if (i == levels.size()) {
      Level lv;
      for (int x = 0; x < degree; ++x)
        if (g[size_t(x)] != x) {
          lv.base = x;
          break;
        }
      lv.transversal.resize(size_t(degree));
      levels.push_back(std::move(lv));
    }
    for (const Perm& have : levels[i].gens)
      if (have == g) return;
    levels[i].gens.push_back(g);
    close(i);
  }

  // Rebuild the orbit at level i and push every nontrivial Schreier
  // generator one level down; Schreier's lemma makes the next level a full
  // generating set for the stabilizer of this base. The recursion can grow
  // `levels`, so all Schreier generators are collected before descending.
  void close(size_t i) {
    std::vector<Perm> schreier_gens;
    {
      Level& lv = levels[i];
      lv.orbit.assign(1, lv.base);
      for (auto& t : lv.transversal) t.clear();
      lv.transversal[size_t(lv.base)] = identity_perm(degree);
      for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        int x = lv.orbit[idx];
        for (const Perm& s : lv.gens) {
          int y = s[size_t(x)];
          if (lv.transversal[size_t(y)].empty()) {
            lv.transversal[size_t(y)] = mul(lv.transversal[size_t(x)], s);
            lv.orbit.push_back(y);
          }
        }
      }
      for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        int x = lv.orbit[idx];
        for (const Perm& s : lv.gens) {
          int y = s[size_t(x)];
          schreier_gens.push_back(mul(mul(lv.transversal[size_t(x)], s),
                                      inverse_perm(lv.transversal[size_t(y)])));
        }
      }
    }
    for (const Perm& g : schreier_gens) add_generator(i + 1, g);
  }
};

}  // namespace

Int perm_group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  int degree = int(gens.front().size());
  Chain chain{degree, {}};
  for (const Perm& g : gens) {
    check(int(g.size()) == degree, Err::BadFile, "permutation degrees differ");
    chain.add_generator(0, g);
  }
  Int order = 1;
  for (const Level& lv : chain.levels) order *= Int(lv.orbit.size());
  return order;
}

std::vector<Perm> enumerate_perm_group(const std::vector<Perm>& gens, size_t cap) {
  int degree = gens.empty() ? 1 : int(gens.front().size());
  std::vector<Perm> elements{identity_perm(degree)};
  std::map<Perm, size_t> seen{{elements.front(), 0}};
  for (size_t idx = 0; idx < elements.size(); ++idx) {
    for (const Perm& g : gens) {
      Perm next = mul(elements[idx], g);
      if (seen.count(next)) continue;
      check(elements.size() < cap, Err::NotFinite,
            "group has more than " + std::to_string(cap) + " elements");
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

FiniteImage verify_finite_image(const Presentation& pres, const std::vector<Perm>& images) {
  check(images.size() == pres.n_gens(), Err::BadFile,
        "need exactly one image per generator");
  FiniteImage img;
  img.degree = images.empty() ? 1 : int(images.front().size());
  check(img.degree >= 1, Err::BadFile, "permutation degree must be positive");
  for (const Perm& p : images) {
    check(int(p.size()) == img.degree, Err::BadFile, "permutation degrees differ");
    std::vector<char> hit(p.size(), 0);
    for (int v : p) {
      check(0 <= v && v < img.degree && !hit[size_t(v)], Err::BadFile,
            "image table is not a permutation");
      hit[size_t(v)] = 1;
    }
  }
  img.generator_images = images;
  for (size_t r = 0; r < pres.relators.size(); ++r) {
    if (!is_identity_perm(eval_word(images, img.degree, pres.relators[r])))
      fail(Err::RelatorFails, "relator " + std::to_string(r + 1) + " '" +
                                  to_string(pres.relators[r], pres) +
                                  "' maps to a nonidentity permutation");
  }
  img.order = perm_group_order(images);
  return img;
}

bool kernel_membership(const FiniteImage& img, const Word& w) {
  return is_identity_perm(eval_word(img.generator_images, img.degree, w));
}

}  // namespace ballq
