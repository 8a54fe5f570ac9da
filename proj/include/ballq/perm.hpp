#pragma once

#include <vector>

#include "ballq/numeric.hpp"
#include "ballq/word.hpp"

namespace ballq {

// Permutation of {0..degree-1} stored as an image table: p[x] is where x
// goes. Products compose as right actions: mul(a, b) applies a first.
using Perm = std::vector<int>;

Perm identity_perm(int degree);
bool is_identity_perm(const Perm& p);
Perm mul(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);
Int perm_order(const Perm& p);
// Letters evaluate left to right; the empty word is the identity.
Perm eval_word(const std::vector<Perm>& gen_images, int degree, const Word& w);

// Order of <gens> from a deterministic Schreier-Sims stabilizer chain
// (product of the basic orbit lengths).
Int perm_group_order(const std::vector<Perm>& gens);

// All elements of <gens>, breadth-first from the identity in generator
// order. Err::NotFinite past the cap.
std::vector<Perm> enumerate_perm_group(const std::vector<Perm>& gens, size_t cap);

// Verified homomorphism from a presentation to a permutation group.
struct FiniteImage {
  int degree = 0;
  std::vector<Perm> generator_images;
  Int order{1};
};

// Checks one image per generator, equal degrees, bijectivity (Err::BadFile)
// and that every relator maps to the identity (Err::RelatorFails naming the
// first violated relator), then computes the image order.
FiniteImage verify_finite_image(const Presentation& pres, const std::vector<Perm>& images);

// True iff w lies in the kernel, i.e. maps to the identity permutation.
bool kernel_membership(const FiniteImage& img, const Word& w);

}  // namespace ballq
