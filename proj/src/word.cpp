#include "ballq/word.hpp"

#include <cctype>
#include <set>

#include "ballq/error.hpp"

namespace ballq {

Word reduce_word(std::vector<int> letters) {
  std::vector<int> out;
  for (int x : letters) {
    check(x != 0, Err::Internal, "zero letter in word");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word{std::move(out)};
}

Word concat(const Word& a, const Word& b) {
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return reduce_word(std::move(letters));
}

Word inverse(const Word& w) {
  std::vector<int> letters;
  letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) letters.push_back(-*it);
  return Word{std::move(letters)};
}

Word power(const Word& w, long n) {
  Word base = n < 0 ? inverse(w) : w;
  long reps = n < 0 ? -n : n;
  Word out;
  for (long k = 0; k < reps; ++k) out = concat(out, base);
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

Word cyclic_reduce(const Word& w) {
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word{{w.letters.begin() + long(lo), w.letters.begin() + long(hi)}};
}

namespace {

// Single-pass scanner with line/column tracking for error positions.
struct Cursor {
  const std::string& text;
  std::string source;
  size_t pos = 0;
  long line = 1;
  long col = 1;

  [[noreturn]] void die(const std::string& what) const {
    std::string where = std::to_string(line) + ":" + std::to_string(col);
    if (!source.empty()) where = source + ":" + where;
    fail(Err::Syntax, where + ": " + what);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void advance() {
    if (done()) return;
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (!done()) {
      char c = peek();
      if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eat(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) die(std::string("expected '") + c + "' " + what);
  }

  std::string ident() {
    skip_space();
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      die("expected a name");
    std::string out;
    while (!done()) {
      c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) break;
      out.push_back(c);
      advance();
    }
    return out;
  }

  long integer() {
    skip_space();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) die("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) die("exponent too large");
      advance();
    }
    return neg ? -v : v;
  }
};

struct WordParser {
  Cursor& cur;
  const std::vector<std::string>& names;

  int gen_index(const std::string& name, long line, long col) {
    for (size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return int(k) + 1;
    std::string where = std::to_string(line) + ":" + std::to_string(col);
    if (!cur.source.empty()) where = cur.source + ":" + where;
    fail(Err::UnknownGenerator, where + ": unknown generator '" + name + "'");
  }

  Word atom() {
    cur.skip_space();
    char c = cur.peek();
    if (c == '(') {
      cur.advance();
      Word w = word();
      cur.expect(')', "to close the group");
      return w;
    }
    if (c == '[') {
      cur.advance();
      Word a = word();
      cur.expect(',', "between commutator arguments");
      Word b = word();
      cur.expect(']', "to close the commutator");
      return commutator(a, b);
    }
    long line = cur.line, col = cur.col;
    std::string name = cur.ident();
    return Word{{gen_index(name, line, col)}};
  }

  Word factor() {
    Word base = atom();
    if (cur.eat('^')) return power(base, cur.integer());
    return base;
  }

  Word word() {
    Word out = factor();
    while (cur.eat('*')) out = concat(out, factor());
    return out;
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text, const std::string& source) {
  Cursor cur{text, source};
  cur.skip_space();
  if (cur.ident() != "gens") cur.die("presentation must start with 'gens'");

  Presentation pres;
  std::set<std::string> seen;
  do {
    std::string name = cur.ident();
    if (!seen.insert(name).second) cur.die("generator '" + name + "' declared twice");
    pres.generator_names.push_back(name);
  } while (cur.eat(','));

  cur.skip_space();
  if (!cur.done()) {
    cur.expect(';', "between sections");
    cur.skip_space();
    if (!cur.done()) {
      if (cur.ident() != "rels") cur.die("expected 'rels'");
      cur.skip_space();
      if (!cur.done()) {
        WordParser wp{cur, pres.generator_names};
        do {
          long line = cur.line, col = cur.col;
          Word w = cyclic_reduce(wp.word());
          if (w.letters.empty()) {
            std::string where = std::to_string(line) + ":" + std::to_string(col);
            if (!source.empty()) where = source + ":" + where;
            fail(Err::TrivialRelator, where + ": relator reduces to the identity");
          }
          pres.relators.push_back(std::move(w));
        } while (cur.eat(','));
      }
    }
  }
  cur.skip_space();
  if (!cur.done()) cur.die("unexpected trailing text");
  return pres;
}

Word parse_word(const std::string& text, const Presentation& pres, const std::string& source) {
  Cursor cur{text, source};
  WordParser wp{cur, pres.generator_names};
  Word w = wp.word();
  cur.skip_space();
  if (!cur.done()) cur.die("unexpected trailing text");
  return w;
}

std::string to_string(const Word& w, const Presentation& pres) {
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    int letter = w.letters[i];
    size_t gen = size_t(letter > 0 ? letter : -letter) - 1;
    check(gen < pres.n_gens(), Err::Internal, "letter outside the presentation");
    long exp = long(j - i) * (letter > 0 ? 1 : -1);
    if (!out.empty()) out += "*";
    out += pres.generator_names[gen];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

std::string to_string(const Presentation& pres) {
  std::string out = "gens ";
  for (size_t k = 0; k < pres.generator_names.size(); ++k) {
    if (k) out += ",";
    out += pres.generator_names[k];
  }
  out += " ; rels ";
  for (size_t r = 0; r < pres.relators.size(); ++r) {
    if (r) out += ", ";
    out += to_string(pres.relators[r], pres);
  }
  return out;
}

}  // namespace ballq
