#pragma once

#include <string>
#include <vector>

#include "ballq/numeric.hpp"
#include "ballq/perm.hpp"
#include "ballq/toddcox.hpp"
#include "ballq/word.hpp"

namespace ballq {

// Z^free_rank x prod Z/d for the torsion chain d1 | d2 | ..., each >= 2.
struct AbelianInvariants {
  Int free_rank{0};
  std::vector<Int> torsion;
  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) = default;
};

// "Z^2 x Z/4", "trivial", ...
std::string to_string(const AbelianInvariants& inv);

// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& pres);

// Coset table of ker(img) inside the free group on pres's generators:
// cosets are the image-group elements discovered breadth-first from the
// identity (= coset 1). Err::BoundExceeded when img.order > max_cosets.
CosetTable kernel_coset_table(const Presentation& pres, const FiniteImage& img,
                              long max_cosets);

// Reidemeister-Schreier: Schreier generators over a spanning-tree
// transversal of kernel_coset_table (index*gens - index + 1 of them),
// relator conjugates rewritten through it (index*relators rows), then SNF
// of the exponent matrix.
AbelianInvariants subgroup_abelianization(const Presentation& pres, const FiniteImage& img,
                                          long max_cosets);

// img.order / order of the subgroup generated by the images of sub_words.
Int coset_index_of_image_subgroup(const FiniteImage& img, const std::vector<Word>& sub_words);

// Orbifold Euler characteristic of a degree-index cover: chi_orb * index.
Rational euler_cover(const Rational& chi_orb, const Int& index);

}  // namespace ballq
