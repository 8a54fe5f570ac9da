#pragma once

#include <vector>

#include "ballq/perm.hpp"
#include "ballq/word.hpp"

namespace ballq {

struct HomSearchResult {
  // Generator-image tuples, sorted lexicographically; deduplicated up to
  // conjugation in the target when requested.
  std::vector<std::vector<Perm>> homs;
  bool complete = true;  // false when the node limit cut the search short
  long nodes = 0;
};

// Backtracking over generator images drawn from the target group's
// elements. Candidates for a generator are pre-restricted by its pure-power
// relators (image order must divide the gcd of the exponents); every
// relator is checked as soon as all its generators have images. The node
// limit bounds assignment attempts; hitting it flags the (still valid)
// partial result rather than throwing. element_cap bounds the target
// enumeration (Err::NotFinite past it).
HomSearchResult find_homomorphisms(const Presentation& pres,
                                   const std::vector<Perm>& target_gens, long node_limit,
                                   bool up_to_conjugacy = false,
                                   size_t element_cap = 200000);

}  // namespace ballq
