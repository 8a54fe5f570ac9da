#include "ballq/toddcox.hpp"

#include <deque>
#include <numeric>

#include "ballq/error.hpp"

namespace ballq {

namespace {

size_t column(int letter) {
  return letter > 0 ? 2 * size_t(letter - 1) : 2 * size_t(-letter - 1) + 1;
}

constexpr long kUndef = -1;

// Working table over 0-based cosets. Rows are appended in definition order
// and never reordered; merges keep the smaller index, so the processed
// prefix of the main loop survives every coincidence. The symmetric
// invariant tab(x, col) == y  <=>  tab(y, col^1) == x holds whenever the
// coincidence queue is drained.
struct Enumerator {
  size_t cols;
  long max_live;
  std::vector<long> tab;
  std::vector<long> rep;  // union-find over all rows ever defined
  long live = 1;
  std::deque<std::pair<long, long>> pending;

  Enumerator(size_t n_gens, long bound) : cols(2 * n_gens), max_live(bound) {
    tab.assign(cols, kUndef);
    rep.assign(1, 0);
  }

  long total() const { return long(rep.size()); }
  bool dead(long c) { return find(c) != c; }
  long& at(long c, size_t col) { return tab[size_t(c) * cols + col]; }

  long find(long c) {
    long root = c;
    while (rep[size_t(root)] != root) root = rep[size_t(root)];
    while (rep[size_t(c)] != c) {
      long next = rep[size_t(c)];
      rep[size_t(c)] = root;
      c = next;
    }
    return root;
  }

  // False when the live bound is full (caller compacts and retries).
  bool define(long c, size_t col) {
    if (live >= max_live) return false;
    long n = total();
    tab.resize(tab.size() + cols, kUndef);
    rep.push_back(n);
    ++live;
    at(c, col) = n;
    at(n, col ^ 1) = c;
    return true;
  }

  void coincide(long a, long b) {
    pending.emplace_back(a, b);
    process();
  }

  // Union-find merge with immediate edge migration. Every table edge of a
  // dying coset either moves to the survivor or reappears as a queued
  // coincidence, so no relation information is ever dropped.
  void process() {
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      long a = find(x), b = find(y);
      if (a == b) continue;
      long s = a < b ? a : b;  // smaller index survives
      long d = a < b ? b : a;
      rep[size_t(d)] = s;
      --live;
      for (size_t col = 0; col < cols; ++col) {
        long t_raw = at(d, col);
        if (t_raw == kUndef) continue;
        at(d, col) = kUndef;
        if (at(t_raw, col ^ 1) == d) at(t_raw, col ^ 1) = kUndef;
        long t = find(t_raw);
        long u = at(s, col);
        if (u != kUndef) {
          pending.emplace_back(u, t);
        } else if (long back = at(t, col ^ 1); back != kUndef) {
          // t already has a col-predecessor, so it coincides with s.
          pending.emplace_back(back, s);
        } else {
          at(s, col) = t;
          at(t, col ^ 1) = s;
        }
      }
    }
  }

  // Holt-style scan of one relator at coset c. fill = define cosets at gaps
  // (false for the lookahead pass). Returns false only on a full table.
  bool scan(long c, const Word& w, bool fill) {
    long f = c, b = c;
    size_t i = 0, r = w.letters.size();
    while (true) {
      while (i < r && at(f, column(w.letters[i])) != kUndef) {
        f = at(f, column(w.letters[i]));
        ++i;
      }
      if (i == r) {
        if (f != b) coincide(f, b);
        return true;
      }
      while (r > i && at(b, column(w.letters[r - 1]) ^ 1) != kUndef) {
        b = at(b, column(w.letters[r - 1]) ^ 1);
        --r;
      }
      if (r == i) {
        if (f != b) coincide(f, b);
        return true;
      }
      if (r == i + 1) {
        size_t col = column(w.letters[i]);
        at(f, col) = b;
        at(b, col ^ 1) = f;
        return true;
      }
      if (!fill) return true;  // lookahead leaves the gap open
      if (!define(f, column(w.letters[i]))) return false;
    }
  }

  // Deduction-only sweep over all live cosets, then dead-row removal.
  // Returns the remapped value of the caller's cursor.
  long lookahead_and_compact(long cursor, const std::vector<Word>& relators) {
    for (long c = 0; c < total(); ++c) {
      if (dead(c)) continue;
      for (const Word& w : relators) {
        scan(c, w, false);
        if (dead(c)) break;
      }
    }
    check(pending.empty(), Err::Internal, "coincidences left after lookahead");

    std::vector<long> newindex(rep.size(), kUndef);
    long n = 0;
    for (long c = 0; c < total(); ++c)
      if (find(c) == c) newindex[size_t(c)] = n++;
    check(n == live, Err::Internal, "live count does not match the table");

    std::vector<long> fresh(size_t(n) * cols, kUndef);
    for (long c = 0; c < total(); ++c) {
      if (find(c) != c) continue;
      for (size_t col = 0; col < cols; ++col) {
        long t = at(c, col);
        if (t != kUndef)
          fresh[size_t(newindex[size_t(c)]) * cols + col] = newindex[size_t(find(t))];
      }
    }
    tab = std::move(fresh);
    rep.resize(size_t(n));
    std::iota(rep.begin(), rep.end(), 0);

    long mapped = cursor;
    while (mapped >= 0 && newindex[size_t(mapped)] == kUndef) --mapped;  // never hits -1: coset 0 survives
    return mapped < 0 ? 0 : newindex[size_t(mapped)];
  }
};

}  // namespace

long CosetTable::act(long coset, int letter) const {
  check(1 <= coset && coset <= n_cosets, Err::Internal, "coset out of range");
  size_t col = column(letter);
  check(col < 2 * n_gens, Err::Internal, "letter outside the presentation");
  return entries[size_t(coset - 1) * 2 * n_gens + col];
}

long CosetTable::trace(long coset, const Word& w) const {
  for (int letter : w.letters) coset = act(coset, letter);
  return coset;
}

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup,
                        long max_cosets) {
  check(max_cosets >= 1, Err::BadFile, "coset bound must be at least 1");
  size_t n_gens = pres.n_gens();
  auto check_letters = [&](const Word& w) {
    for (int letter : w.letters) {
      size_t g = size_t(letter > 0 ? letter : -letter);
      check(g >= 1 && g <= n_gens, Err::UnknownGenerator,
            "word letter outside the presentation");
    }
  };
  for (const Word& w : subgroup) check_letters(w);

  Enumerator e(n_gens, max_cosets);
  auto bound_exceeded = [&]() {
    fail(Err::BoundExceeded, "enumeration needs more than " + std::to_string(max_cosets) +
                                 " cosets (not a proof of infinite index)");
  };

  for (const Word& w : subgroup) {
    if (!e.scan(0, w, true)) {
      long before = e.live;
      e.lookahead_and_compact(0, pres.relators);
      if (e.live >= before || !e.scan(0, w, true)) bound_exceeded();
    }
  }

  long a = 0;
  bool compacted = false;
  while (a < e.total()) {
    if (e.dead(a)) {
      ++a;
      continue;
    }
    bool full = false;
    for (const Word& w : pres.relators) {
      if (!e.scan(a, w, true)) {
        full = true;
        break;
      }
      if (e.dead(a)) break;
    }
    if (!full && !e.dead(a)) {
      // Complete the row so every generator image exists even when some
      // generator appears in no relator.
      for (size_t col = 0; col < e.cols && !full; ++col)
        if (e.at(a, col) == kUndef && !e.define(a, col)) full = true;
    }
    if (full) {
      long before = e.live;
      a = e.lookahead_and_compact(a, pres.relators);
      if (e.live >= before) {
        if (compacted) bound_exceeded();
        compacted = true;
      }
      continue;  // retry the same coset from scratch
    }
    compacted = false;
    if (!e.dead(a)) ++a;
  }

  // Final renumbering; definition order is preserved.
  long root = e.lookahead_and_compact(0, pres.relators);
  check(root == 0, Err::Internal, "subgroup coset was renumbered");

  CosetTable table;
  table.n_cosets = e.live;
  table.n_gens = n_gens;
  table.subgroup_generators = subgroup;
  table.entries.resize(size_t(e.live) * 2 * n_gens);
  for (long c = 0; c < e.live; ++c)
    for (size_t col = 0; col < 2 * n_gens; ++col) {
      long t = e.at(c, col);
      check(t != kUndef, Err::Internal, "incomplete row after enumeration");
      table.entries[size_t(c) * 2 * n_gens + col] = t + 1;
    }

  validate_table(table, pres);
  return table;
}

void validate_table(const CosetTable& table, const Presentation& pres) {
  check(table.n_gens == pres.n_gens(), Err::Internal, "generator count mismatch");
  for (long c = 1; c <= table.n_cosets; ++c) {
    for (size_t col = 0; col < 2 * table.n_gens; ++col) {
      long t = table.entries[size_t(c - 1) * 2 * table.n_gens + col];
      check(1 <= t && t <= table.n_cosets, Err::Internal, "table entry out of range");
    }
    for (const Word& w : pres.relators)
      check(table.trace(c, w) == c, Err::Internal,
            "relator does not stabilize coset " + std::to_string(c));
  }
  for (const Word& w : table.subgroup_generators)
    check(table.trace(1, w) == 1, Err::Internal, "subgroup word moves coset 1");
}

}  // namespace ballq
