#include "ballq/files.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ballq/error.hpp"

namespace ballq {
namespace {

// Token plus its 1-based starting column. Tokens split on whitespace, but
// (...) groups swallow whitespace so point ids like "(1/2, 0)" stay whole.
struct Tok {
  std::string text;
  size_t col = 0;
};

[[noreturn]] void fail_at(const std::string& path, size_t line, size_t col,
                          const std::string& msg) {
  fail(Err::Syntax,
       path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::vector<Tok> split_fields(const std::string& line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    int depth = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == '(') ++depth;
      if (c == ')' && depth > 0) --depth;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) break;
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Comma split at parenthesis depth 0 ('[' counts too, for word lists).
std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      char c = text[i];
      if (c == '(' || c == '[') ++depth;
      if ((c == ')' || c == ']') && depth > 0) --depth;
      if (c != ',' || depth > 0) continue;
    }
    out.push_back(text.substr(start, i - start));
    start = i + 1;
  }
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Strips "key=" from a field of that exact shape.
std::string field_value(const std::string& path, size_t line, const Tok& t,
                        const std::string& key) {
  const std::string prefix = key + "=";
  if (t.text.rfind(prefix, 0) != 0)
    fail_at(path, line, t.col, "expected " + prefix + "..., got '" + t.text + "'");
  return t.text.substr(prefix.size());
}

GaussianRational parse_gr_at(const std::string& path, size_t line, size_t col,
                             const std::string& text) {
  try {
    return parse_gaussian_rational(text);
  } catch (const BallqError& e) {
    fail_at(path, line, col, e.what());
  }
}

GaussianInteger parse_gi_at(const std::string& path, size_t line, size_t col,
                            const std::string& text) {
  try {
    return parse_gaussian_integer(text);
  } catch (const BallqError& e) {
    fail_at(path, line, col, e.what());
  }
}

Int parse_int_at(const std::string& path, size_t line, size_t col,
                 const std::string& text) {
  size_t k = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  bool ok = k < text.size();
  for (size_t i = k; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) ok = false;
  if (!ok) fail_at(path, line, col, "expected an integer, got '" + text + "'");
  return Int(text);
}

long parse_long_at(const std::string& path, size_t line, size_t col,
                   const std::string& text) {
  Int n = parse_int_at(path, line, col, text);
  check(n >= 0 && n <= 1000000000, Err::Syntax,
        path + ":" + std::to_string(line) + ":" + std::to_string(col) +
            ": value out of range: '" + text + "'");
  return static_cast<long>(n);
}

// Exactly n gaussian literals split by top-level commas.
std::vector<GaussianRational> gr_list(const std::string& path, size_t line, const Tok& t,
                                      const std::string& key, size_t n) {
  std::string value = field_value(path, line, t, key);
  std::vector<std::string> parts = split_commas(value);
  if (parts.size() != n)
    fail_at(path, line, t.col,
            key + "= needs " + std::to_string(n) + " comma-separated values");
  std::vector<GaussianRational> out;
  for (const auto& p : parts) out.push_back(parse_gr_at(path, line, t.col, p));
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string name_field(const std::string& path, size_t line,
                       const std::vector<Tok>& toks, size_t idx,
                       const std::string& what) {
  if (idx >= toks.size())
    fail_at(path, line, toks.back().col + toks.back().text.size(), "missing " + what);
  if (!valid_name(toks[idx].text))
    fail_at(path, line, toks[idx].col, "bad " + what + " '" + toks[idx].text + "'");
  return toks[idx].text;
}

void require_fields(const std::string& path, size_t line, const std::vector<Tok>& toks,
                    size_t count, const std::string& shape) {
  if (toks.size() != count)
    fail_at(path, line, toks[0].col, "expected: " + shape);
}

// Per-line driver: strips comments, hands (lineno, fields) to the callback.
template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<Tok> toks = split_fields(line);
    if (!toks.empty()) fn(lineno, toks);
  }
}

SurfacePtr parse_surface_line(const std::string& path, size_t lineno,
                              const std::vector<Tok>& toks) {
  require_fields(path, lineno, toks, 3, "surface lambda1=<g>,<g> lambda2=<g>,<g>");
  auto l1 = gr_list(path, lineno, toks[1], "lambda1", 2);
  auto l2 = gr_list(path, lineno, toks[2], "lambda2", 2);
  try {
    return make_surface(Lattice2(l1[0], l1[1]), Lattice2(l2[0], l2[1]));
  } catch (const BallqError& e) {
    fail_at(path, lineno, toks[1].col, e.what());
  }
}

AffineMap parse_map_fields(const std::string& path, size_t lineno, const Tok& m_tok,
                           const Tok& t_tok) {
  auto m = gr_list(path, lineno, m_tok, "m", 4);
  auto t = gr_list(path, lineno, t_tok, "t", 2);
  AffineMap f;
  f.m11 = m[0];
  f.m12 = m[1];
  f.m21 = m[2];
  f.m22 = m[3];
  f.t1 = t[0];
  f.t2 = t[1];
  return f;
}

}  // namespace

std::vector<std::string> split_word_list(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& item : split_commas(text)) {
    std::string t = trimmed(item);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::string base = std::filesystem::path(path).filename().string();
    fail(Err::MissingFixture, "missing fixture " + base + " (resolved path " + path + ")");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Arrangement read_arrangement(const std::string& path) {
  Arrangement arr;
  for_each_line(read_text_file(path), [&](size_t lineno, const std::vector<Tok>& toks) {
    const std::string& kw = toks[0].text;
    if (kw == "surface") {
      if (arr.surface)
        fail_at(path, lineno, toks[0].col, "duplicate surface line");
      arr.surface = parse_surface_line(path, lineno, toks);
    } else if (kw == "line") {
      require_fields(path, lineno, toks, 5, "line <name> a=<gi> b=<gi> c=<g>");
      if (!arr.surface)
        fail_at(path, lineno, toks[0].col, "line before the surface line");
      std::string name = name_field(path, lineno, toks, 1, "line name");
      for (const auto& n : arr.names)
        if (n == name) fail_at(path, lineno, toks[1].col, "duplicate line '" + name + "'");
      GaussianInteger a =
          parse_gi_at(path, lineno, toks[2].col, field_value(path, lineno, toks[2], "a"));
      GaussianInteger b =
          parse_gi_at(path, lineno, toks[3].col, field_value(path, lineno, toks[3], "b"));
      GaussianRational c =
          parse_gr_at(path, lineno, toks[4].col, field_value(path, lineno, toks[4], "c"));
      try {
        TorusLine l(arr.surface, a, b, c);
        if (arr.has_line(l))
          fail_at(path, lineno, toks[1].col,
                  "line '" + name + "' duplicates '" + arr.name_of(l) + "'");
        arr.names.push_back(name);
        arr.lines.push_back(std::move(l));
      } catch (const BallqError& e) {
        if (e.kind == Err::Syntax) throw;
        fail_at(path, lineno, toks[2].col, e.what());
      }
    } else if (kw == "auto") {
      require_fields(path, lineno, toks, 4, "auto <name> m=<g>,<g>,<g>,<g> t=<g>,<g>");
      std::string name = name_field(path, lineno, toks, 1, "automorphism name");
      for (const auto& [n, f] : arr.autos)
        if (n == name)
          fail_at(path, lineno, toks[1].col, "duplicate automorphism '" + name + "'");
      arr.autos.emplace_back(name, parse_map_fields(path, lineno, toks[2], toks[3]));
    } else if (kw == "group") {
      if (toks.size() < 4 || toks[2].text != "=")
        fail_at(path, lineno, toks[0].col, "expected: group <name> = <auto names...>");
      std::string name = name_field(path, lineno, toks, 1, "group name");
      for (const auto& [n, g] : arr.groups)
        if (n == name) fail_at(path, lineno, toks[1].col, "duplicate group '" + name + "'");
      std::vector<std::string> members;
      for (size_t k = 3; k < toks.size(); ++k) {
        bool known = false;
        for (const auto& [n, f] : arr.autos) known = known || n == toks[k].text;
        if (!known)
          fail_at(path, lineno, toks[k].col, "unknown automorphism '" + toks[k].text + "'");
        members.push_back(toks[k].text);
      }
      arr.groups.emplace_back(name, std::move(members));
    } else {
      fail_at(path, lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  });
  check(static_cast<bool>(arr.surface), Err::BadFile, path + ": no surface line");
  return arr;
}

Presentation read_presentation(const std::string& path) {
  return parse_presentation(read_text_file(path), path);
}

BlowupLedger read_ledger(const std::string& path) {
  BlowupLedger ledger;
  bool have_base = false;
  for_each_line(read_text_file(path), [&](size_t lineno, const std::vector<Tok>& toks) {
    const std::string& kw = toks[0].text;
    if (kw == "base") {
      require_fields(path, lineno, toks, 2, "base abelian|bielliptic:<n>|explicit:<K2>,<e>");
      if (have_base) fail_at(path, lineno, toks[0].col, "duplicate base line");
      const std::string& spec = toks[1].text;
      if (spec == "abelian") {
        ledger.base = abelian_base();
      } else if (spec.rfind("bielliptic:", 0) == 0) {
        ledger.base = bielliptic_base(parse_int_at(path, lineno, toks[1].col, spec.substr(11)));
      } else if (spec.rfind("explicit:", 0) == 0) {
        std::vector<std::string> parts = split_commas(spec.substr(9));
        if (parts.size() != 2)
          fail_at(path, lineno, toks[1].col, "explicit base needs <K2>,<e>");
        ledger.base = explicit_base(parse_int_at(path, lineno, toks[1].col, parts[0]),
                                    parse_int_at(path, lineno, toks[1].col, parts[1]));
      } else {
        fail_at(path, lineno, toks[1].col, "unknown base '" + spec + "'");
      }
      have_base = true;
    } else if (kw == "blow") {
      require_fields(path, lineno, toks, 2, "blow <point-id>");
      if (ledger.is_blown(toks[1].text))
        fail_at(path, lineno, toks[1].col, "point blown twice: '" + toks[1].text + "'");
      ledger.blown_points.push_back(toks[1].text);
    } else if (kw == "curve") {
      if (toks.size() != 4 && toks.size() != 5)
        fail_at(path, lineno, toks[0].col,
                "expected: curve <name> selfint=<int> genus=elliptic|rational "
                "[mults=<id>:<m>,...]");
      CurveRecord rec;
      rec.name = name_field(path, lineno, toks, 1, "curve name");
      for (const auto& c : ledger.curves)
        if (c.name == rec.name)
          fail_at(path, lineno, toks[1].col, "duplicate curve '" + rec.name + "'");
      rec.self_int = parse_int_at(path, lineno, toks[2].col,
                                  field_value(path, lineno, toks[2], "selfint"));
      std::string genus = field_value(path, lineno, toks[3], "genus");
      if (genus == "elliptic")
        rec.normalization_genus = GenusClass::Elliptic;
      else if (genus == "rational")
        rec.normalization_genus = GenusClass::Rational;
      else
        fail_at(path, lineno, toks[3].col, "genus must be elliptic or rational");
      if (toks.size() == 5) {
        for (const std::string& item :
             split_commas(field_value(path, lineno, toks[4], "mults"))) {
          size_t colon = item.rfind(':');
          if (colon == std::string::npos)
            fail_at(path, lineno, toks[4].col, "mults entries are <point-id>:<m>");
          std::string id = trimmed(item.substr(0, colon));
          Int m = parse_int_at(path, lineno, toks[4].col, item.substr(colon + 1));
          if (m < 1) fail_at(path, lineno, toks[4].col, "multiplicities are >= 1");
          if (!rec.point_multiplicities.emplace(id, m).second)
            fail_at(path, lineno, toks[4].col, "point listed twice: '" + id + "'");
        }
      }
      ledger.curves.push_back(std::move(rec));
    } else if (kw == "boundary") {
      for (size_t k = 1; k < toks.size(); ++k) {
        bool known = false;
        for (const auto& c : ledger.curves) known = known || c.name == toks[k].text;
        if (!known)
          fail_at(path, lineno, toks[k].col, "unknown curve '" + toks[k].text + "'");
        if (ledger.is_boundary(toks[k].text))
          fail_at(path, lineno, toks[k].col, "curve listed twice: '" + toks[k].text + "'");
        ledger.boundary.push_back(toks[k].text);
      }
    } else if (kw == "pair") {
      if (toks.size() != 5 || toks[3].text != "=")
        fail_at(path, lineno, toks[0].col, "expected: pair <name> <name> = <int>");
      std::pair<std::string, std::string> key(toks[1].text, toks[2].text);
      if (key.second < key.first) std::swap(key.first, key.second);
      Int value = parse_int_at(path, lineno, toks[4].col, toks[4].text);
      if (!ledger.pair_int.emplace(key, value).second)
        fail_at(path, lineno, toks[1].col, "pair given twice");
    } else {
      fail_at(path, lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  });
  check(have_base, Err::BadFile, path + ": no base line");
  return ledger;
}

namespace {

std::string resolve_relative(const std::string& anchor_file, const std::string& rel) {
  std::filesystem::path p(rel);
  if (p.is_absolute()) return p.lexically_normal().string();
  return (std::filesystem::path(anchor_file).parent_path() / p).lexically_normal().string();
}

}  // namespace

AffineGroupSpec read_affine_spec(const std::string& path) {
  AffineGroupSpec spec;
  bool have_pres = false, have_mode = false;
  for_each_line(read_text_file(path), [&](size_t lineno, const std::vector<Tok>& toks) {
    const std::string& kw = toks[0].text;
    if (kw == "presentation") {
      require_fields(path, lineno, toks, 2, "presentation <file.grp>");
      if (have_pres) fail_at(path, lineno, toks[0].col, "duplicate presentation line");
      spec.presentation = read_presentation(resolve_relative(path, toks[1].text));
      have_pres = true;
    } else if (kw == "mode") {
      require_fields(path, lineno, toks, 2, "mode exact|modlattice");
      if (have_mode) fail_at(path, lineno, toks[0].col, "duplicate mode line");
      if (toks[1].text == "exact")
        spec.mode = EqualityMode::Exact;
      else if (toks[1].text == "modlattice")
        spec.mode = EqualityMode::ModLattice;
      else
        fail_at(path, lineno, toks[1].col, "mode must be exact or modlattice");
      have_mode = true;
    } else if (kw == "affine") {
      require_fields(path, lineno, toks, 4, "affine <name> m=<g>,<g>,<g>,<g> t=<g>,<g>");
      std::string name = name_field(path, lineno, toks, 1, "generator name");
      for (const auto& [n, f] : spec.generators)
        if (n == name) fail_at(path, lineno, toks[1].col, "duplicate affine '" + name + "'");
      spec.generators.emplace_back(name, parse_map_fields(path, lineno, toks[2], toks[3]));
    } else if (kw == "surface") {
      if (spec.surface) fail_at(path, lineno, toks[0].col, "duplicate surface line");
      spec.surface = parse_surface_line(path, lineno, toks);
    } else {
      fail_at(path, lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  });
  check(have_pres, Err::BadFile, path + ": no presentation line");
  check(have_mode, Err::BadFile, path + ": no mode line");
  check(spec.mode == EqualityMode::Exact || spec.surface != nullptr, Err::BadFile,
        path + ": mod-lattice mode needs a surface line");
  return spec;
}

PermFixture read_perm_fixture(const std::string& path) {
  PermFixture fix;
  bool have_degree = false;
  for_each_line(read_text_file(path), [&](size_t lineno, const std::vector<Tok>& toks) {
    const std::string& kw = toks[0].text;
    if (kw == "degree") {
      require_fields(path, lineno, toks, 2, "degree <n>");
      if (have_degree) fail_at(path, lineno, toks[0].col, "duplicate degree line");
      long n = parse_long_at(path, lineno, toks[1].col, toks[1].text);
      if (n < 1 || n > 10000000)
        fail_at(path, lineno, toks[1].col, "degree out of range");
      fix.degree = static_cast<int>(n);
      have_degree = true;
    } else if (kw == "perm") {
      if (toks.size() < 4 || toks[2].text != "=")
        fail_at(path, lineno, toks[0].col, "expected: perm <name> = <k0>,<k1>,...");
      if (!have_degree) fail_at(path, lineno, toks[0].col, "perm before the degree line");
      std::string name = name_field(path, lineno, toks, 1, "generator name");
      for (const auto& [n, p] : fix.images)
        if (n == name) fail_at(path, lineno, toks[1].col, "duplicate perm '" + name + "'");
      // The image table may wrap across fields; rejoin, then split on commas.
      std::string body;
      for (size_t k = 3; k < toks.size(); ++k) body += toks[k].text;
      Perm p;
      for (const std::string& item : split_commas(body)) {
        long v = parse_long_at(path, lineno, toks[3].col, trimmed(item));
        if (v >= fix.degree)
          fail_at(path, lineno, toks[3].col,
                  "image " + std::to_string(v) + " outside 0.." +
                      std::to_string(fix.degree - 1));
        p.push_back(static_cast<int>(v));
      }
      if (p.size() != static_cast<size_t>(fix.degree))
        fail_at(path, lineno, toks[3].col,
                "expected " + std::to_string(fix.degree) + " images, got " +
                    std::to_string(p.size()));
      fix.images.emplace_back(name, std::move(p));
    } else if (kw == "stabilizer") {
      std::string body;
      for (size_t k = 1; k < toks.size(); ++k) {
        if (k > 1) body += " ";
        body += toks[k].text;
      }
      for (const std::string& item : split_commas(body)) {
        std::string word = trimmed(item);
        if (word.empty()) fail_at(path, lineno, toks[0].col, "empty stabilizer word");
        fix.stabilizer.push_back(word);
      }
    } else {
      fail_at(path, lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  });
  check(have_degree, Err::BadFile, path + ": no degree line");
  return fix;
}

std::vector<Perm> ordered_images(const PermFixture& fix, const Presentation& pres) {
  for (const auto& [name, p] : fix.images) {
    bool known = false;
    for (const auto& g : pres.generator_names) known = known || g == name;
    check(known, Err::BadFile,
          "fixture names a generator '" + name + "' the presentation lacks");
  }
  std::vector<Perm> out;
  for (const auto& g : pres.generator_names) {
    const Perm* found = nullptr;
    for (const auto& [name, p] : fix.images)
      if (name == g) found = &p;
    check(found != nullptr, Err::BadFile, "fixture has no image for generator '" + g + "'");
    out.push_back(*found);
  }
  return out;
}

PipelineSpec read_pipeline(const std::string& path) {
  PipelineSpec spec;
  bool have_arr = false, have_base = false;
  for_each_line(read_text_file(path), [&](size_t lineno, const std::vector<Tok>& toks) {
    const std::string& kw = toks[0].text;
    if (kw == "arrangement") {
      require_fields(path, lineno, toks, 2, "arrangement <file.arr>");
      if (have_arr) fail_at(path, lineno, toks[0].col, "duplicate arrangement line");
      spec.arrangement_path = resolve_relative(path, toks[1].text);
      have_arr = true;
    } else if (kw == "quotient") {
      require_fields(path, lineno, toks, 2, "quotient <group-name>");
      if (!spec.group.empty()) fail_at(path, lineno, toks[0].col, "duplicate quotient line");
      spec.group = name_field(path, lineno, toks, 1, "group name");
    } else if (kw == "base") {
      require_fields(path, lineno, toks, 2, "base abelian|bielliptic:<n>|explicit:<K2>,<e>");
      if (have_base) fail_at(path, lineno, toks[0].col, "duplicate base line");
      const std::string& b = toks[1].text;
      if (b == "abelian") {
        spec.base = abelian_base();
      } else if (b.rfind("bielliptic:", 0) == 0) {
        spec.base = bielliptic_base(parse_int_at(path, lineno, toks[1].col, b.substr(11)));
      } else if (b.rfind("explicit:", 0) == 0) {
        std::vector<std::string> parts = split_commas(b.substr(9));
        if (parts.size() != 2)
          fail_at(path, lineno, toks[1].col, "explicit base needs <K2>,<e>");
        spec.base = explicit_base(parse_int_at(path, lineno, toks[1].col, parts[0]),
                                  parse_int_at(path, lineno, toks[1].col, parts[1]));
      } else {
        fail_at(path, lineno, toks[1].col, "unknown base '" + b + "'");
      }
      have_base = true;
    } else if (kw == "rename") {
      require_fields(path, lineno, toks, 2, "rename <names,comma-separated>");
      if (!spec.rename.empty()) fail_at(path, lineno, toks[0].col, "duplicate rename line");
      for (const std::string& item : split_commas(toks[1].text)) {
        if (!valid_name(item))
          fail_at(path, lineno, toks[1].col, "bad curve name '" + item + "'");
        spec.rename.push_back(item);
      }
    } else {
      fail_at(path, lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  });
  check(have_arr, Err::BadFile, path + ": no arrangement line");
  check(have_base, Err::BadFile, path + ": no base line");
  return spec;
}

std::vector<AffineAuto> arrangement_group(const Arrangement& arr, const std::string& name) {
  std::vector<AffineAuto> gens;
  for (const auto& g : arr.group_gens(name)) gens.emplace_back(arr.surface, arr.auto_map(g));
  return generate_group(gens);
}

QuotientConfig pipeline_config(const PipelineSpec& spec) {
  Arrangement arr = read_arrangement(spec.arrangement_path);
  std::vector<AffineAuto> group;
  if (!spec.group.empty()) group = arrangement_group(arr, spec.group);
  QuotientConfig cfg = build_quotient_config(arr, group);
  if (!spec.rename.empty()) rename_image_curves(cfg, spec.rename);
  return cfg;
}

BlowupLedger pipeline_ledger(const PipelineSpec& spec) {
  return make_ledger(pipeline_config(spec), spec.base);
}

}  // namespace ballq
