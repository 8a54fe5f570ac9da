#pragma once

#include <string>
#include <vector>

namespace ballq {

// Group word over an indexed generating set. Letters are nonzero signed
// indices: +k is generator k-1 of the owning presentation, -k its inverse.
// Construction keeps words freely reduced.
struct Word {
  std::vector<int> letters;
  friend bool operator==(const Word& a, const Word& b) = default;
};

// Free reduction (cancels adjacent x x^-1 pairs).
Word reduce_word(std::vector<int> letters);
Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
Word power(const Word& w, long n);
// [a, b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);
// Strips matching inverse letters from both ends.
Word cyclic_reduce(const Word& w);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;  // freely and cyclically reduced, never empty

  size_t n_gens() const { return generator_names.size(); }
  Word generator(size_t k) const { return Word{{int(k) + 1}}; }
};

// Text format: `gens a,b ; rels a^2, (a*b)^3, [a,b]`. Word grammar: `*`
// composition, `^n` powers (n may be negative), `[x,y]` = x^-1 y^-1 x y,
// parentheses; names are [A-Za-z_][A-Za-z0-9_]*; `#` starts a comment. The
// rels section may be empty or absent (free group). Err::Syntax with
// line:col, Err::UnknownGenerator for undeclared names, Err::TrivialRelator
// when a relator reduces to the empty word. source names error positions.
Presentation parse_presentation(const std::string& text, const std::string& source = "");

// One word in the generators of pres; same grammar and errors.
Word parse_word(const std::string& text, const Presentation& pres,
                const std::string& source = "");

// Runs of one letter print as name^k; round-trips through parse_word.
std::string to_string(const Word& w, const Presentation& pres);
// `gens ... ; rels ...` line; round-trips through parse_presentation.
std::string to_string(const Presentation& pres);

}  // namespace ballq
