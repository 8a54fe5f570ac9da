#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ballq/torus.hpp"
#include "ballq/word.hpp"

namespace ballq {

// Exact: both parts of the composite equal the identity map of C^2.
// ModLattice: linear part exactly the identity, translation in the
// surface's period lattices (equality as a surface automorphism).
enum class EqualityMode { Exact, ModLattice };

// Concrete affine realization of a presentation: each generator names an
// AffineMap, relators are checked as exact (or mod-lattice) identities.
struct AffineGroupSpec {
  std::vector<std::pair<std::string, AffineMap>> generators;
  Presentation presentation;
  EqualityMode mode = EqualityMode::Exact;
  SurfacePtr surface;  // required for ModLattice
};

struct RelatorCheck {
  std::string word;
  bool pass = false;
};

struct VerifyReport {
  bool all_pass = true;
  std::vector<RelatorCheck> relators;
};

// Words evaluate left to right as function composition: g1*g2 is g1 o g2.
AffineMap eval_affine_word(const std::vector<AffineMap>& gen_maps, const Word& w);

// Checks every relator of spec.presentation against the named maps.
// Err::BadFile when a presentation generator has no map (or ModLattice has
// no surface); failures are report entries, not errors.
VerifyReport verify_presentation(const AffineGroupSpec& spec);

// Substitution source -> target: each source generator is sent to a word in
// the target's generators; every source relator must then evaluate to the
// identity under the target's equality mode.
VerifyReport verify_substitution(const Presentation& source, const AffineGroupSpec& target,
                                 const std::vector<std::pair<std::string, Word>>& images);

// Bagnera-de Franchis type of the finite group generated mod lattice:
// 1 Z/2, 2 Z/2 x Z/2, 3 Z/4, 4 Z/4 x Z/2, 5 Z/3, 6 Z/3 x Z/3, 7 Z/6.
// The seven types are distinguished by group order plus element-order
// counts. Err::NotFinite past the closure cap, Err::NotInTable for any
// other group (including the trivial one).
int bagnera_classify(const std::vector<AffineAuto>& gens);

}  // namespace ballq
