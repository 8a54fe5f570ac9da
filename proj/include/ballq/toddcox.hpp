#pragma once

#include <vector>

#include "ballq/numeric.hpp"
#include "ballq/word.hpp"

namespace ballq {

// Complete coset table of a finite-index subgroup. Cosets are 1..n_cosets
// with coset 1 the subgroup itself; columns come in (generator, inverse)
// pairs. Completeness and compatibility are re-checked by replay after
// every enumeration (validate_table), independent of the strategy.
struct CosetTable {
  long n_cosets = 0;
  size_t n_gens = 0;
  std::vector<long> entries;  // row-major, 2*n_gens columns
  std::vector<Word> subgroup_generators;

  // letter as in Word: +k generator k-1, -k its inverse.
  long act(long coset, int letter) const;
  long trace(long coset, const Word& w) const;
};

// HLT enumeration: relator scanning with gap filling, coincidences handled
// by union-find with immediate merging, one lookahead compaction pass when
// the live-coset bound is hit. Coset numbering is definition order, so
// tables are reproducible. Err::BoundExceeded when the enumeration does not
// complete within max_cosets live cosets (never a statement about the
// group; the index may still be finite).
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup,
                        long max_cosets);

// Replays every relator at every coset and every subgroup generator at
// coset 1; Err::Internal on any mismatch (a completed table that fails
// replay is an enumeration bug, not bad input).
void validate_table(const CosetTable& table, const Presentation& pres);

}  // namespace ballq
