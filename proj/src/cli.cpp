#include "ballq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "ballq/error.hpp"
#include "ballq/files.hpp"
#include "ballq/ledger.hpp"
#include "ballq/quotient.hpp"
#include "ballq/rep.hpp"
#include "ballq/rewrite.hpp"
#include "ballq/toddcox.hpp"

namespace ballq {

const char* Report::status() const {
  return exit_code == 0 ? "pass" : exit_code == 1 ? "fail" : "error";
}

void Report::fact(std::string key, std::string value) {
  facts.emplace_back(std::move(key), std::move(value));
}

std::string render(const Report& report) {
  if (!report.raw.empty()) return report.raw;
  const char* sep = report.porcelain ? "=" : " = ";
  std::string out;
  for (const auto& [k, v] : report.facts) out += k + sep + v + "\n";
  if (!report.porcelain)
    for (const auto& d : report.diagnostics) out += d + "\n";
  out += "status" + std::string(sep) + report.status() + "\n";
  return out;
}

namespace {

GaussianRational gq(long rn, long rd, long in, long id) {
  return GaussianRational(Rational(rn, rd), Rational(in, id));
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

const char* pass_str(const VerifyReport& v) { return v.all_pass ? "pass" : "fail"; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::string join_ints(const std::vector<Int>& values) {
  std::vector<std::string> parts;
  for (const Int& v : values) parts.push_back(to_string(v));
  return join(parts);
}

std::string fixture_dir() {
  const char* env = std::getenv("BALLQ_FIXTURE_DIR");
  if (env && *env) return env;
  return BALLQ_FIXTURE_DIR;
}

std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

long max_cosets_limit() {
  const char* env = std::getenv("BALLQ_MAX_COSETS");
  if (!env || !*env) return 1000000;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  check(end && *end == '\0' && v > 0, Err::BadFile,
        "BALLQ_MAX_COSETS must be a positive integer, not '" + std::string(env) + "'");
  return v;
}

std::vector<Word> parse_word_list(const std::string& text, const Presentation& pres,
                                  const std::string& source) {
  std::vector<Word> out;
  for (const std::string& item : split_word_list(text))
    out.push_back(parse_word(item, pres, source));
  return out;
}

// Straight comparison of 3*c2 against c1sq; the boundary inequality admits
// equality exactly for ball quotient covers.
std::string bmy_verdict(const LogChernReport& r) {
  Int bound = 3 * r.c2_log;
  if (r.c1sq_log == bound) return "equal";
  return r.c1sq_log < bound ? "strict" : "violated";
}

BlowupLedger load_ledger(const std::string& path) {
  if (path.size() >= 9 && path.ends_with(".pipeline"))
    return pipeline_ledger(read_pipeline(path));
  if (path.ends_with(".ledger")) return read_ledger(path);
  fail(Err::BadFile, path + ": expected a .pipeline or .ledger file");
}

// Emits the computed value and downgrades the run to fail on mismatch, so
// example output stays honest about what was actually computed.
struct Checker {
  Report& report;
  bool ok = true;

  void fact(const std::string& key, std::string value) { report.fact(key, std::move(value)); }

  void fact_expect(const std::string& key, const std::string& got, const std::string& want) {
    report.fact(key, got);
    if (got != want) {
      report.diagnostics.push_back("expected " + key + " = " + want + ", got " + got);
      ok = false;
    }
  }

  void finish() {
    if (!ok && report.exit_code == 0) report.exit_code = 1;
  }
};

void chern_facts(Checker& c, const LogChernReport& lc, const std::string& c1sq,
                 const std::string& c2, const std::string& bmy, const std::string& cusps) {
  c.fact_expect("c1sq", to_string(lc.c1sq_log), c1sq);
  c.fact_expect("c2", to_string(lc.c2_log), c2);
  c.fact_expect("bmy", bmy_verdict(lc), bmy);
  c.fact_expect("cusps", to_string(lc.cusp_count), cusps);
}

// Number of singular points where the named image curve has branch count m.
int mult_count(const QuotientConfig& cfg, const std::string& name, long m) {
  int n = 0;
  for (const SingularPoint& sp : cfg.singular_points) {
    auto it = sp.branch_mult.find(name);
    if (it != sp.branch_mult.end() && it->second == m) ++n;
  }
  return n;
}

Int max_mult(const QuotientConfig& cfg, const std::string& name) {
  Int best{0};
  for (const SingularPoint& sp : cfg.singular_points) {
    auto it = sp.branch_mult.find(name);
    if (it != sp.branch_mult.end() && it->second > best) best = it->second;
  }
  return best;
}

const AffineMap& map_of(const AffineGroupSpec& spec, const std::string& name) {
  for (const auto& [n, m] : spec.generators)
    if (n == name) return m;
  fail(Err::BadFile, "affine spec has no generator '" + name + "'");
}

// ---- verbs ----------------------------------------------------------------

void run_arr_intersect(const std::string& path, Report& report) {
  Arrangement arr = read_arrangement(path);
  report.fact("curves", std::to_string(arr.names.size()));
  std::set<TorusPoint> points;
  for (size_t i = 0; i < arr.lines.size(); ++i)
    for (size_t j = i + 1; j < arr.lines.size(); ++j) {
      report.fact("pair." + arr.names[i] + "." + arr.names[j],
                  to_string(intersection_number(arr.lines[i], arr.lines[j])));
      for (const TorusPoint& p : intersect_lines(arr.lines[i], arr.lines[j]))
        points.insert(p);
    }
  report.fact("points", std::to_string(points.size()));
  size_t k = 0;
  for (const TorusPoint& p : points) {
    ++k;
    report.fact("point." + std::to_string(k), to_string(p));
    int through = 0;
    for (const TorusLine& l : arr.lines)
      if (point_on_line(l, p)) ++through;
    report.fact("through." + std::to_string(k), std::to_string(through));
  }
}

void run_arr_quotient(const std::string& path, const std::string& group_name,
                      Report& report) {
  Arrangement arr = read_arrangement(path);
  std::vector<AffineAuto> group;
  if (!group_name.empty()) group = arrangement_group(arr, group_name);
  QuotientConfig cfg = build_quotient_config(arr, group);
  report.fact("group_order", std::to_string(cfg.group.size()));
  report.fact("image_curves", std::to_string(cfg.image_curves.size()));
  for (const ImageCurve& ic : cfg.image_curves) {
    report.fact("curve." + ic.name, join(ic.preimages));
    report.fact("selfint." + ic.name, to_string(selfint_via_pullback(ic.name, cfg)));
  }
  report.fact("singular_points", std::to_string(cfg.singular_points.size()));
  size_t k = 0;
  for (const SingularPoint& sp : cfg.singular_points) {
    ++k;
    report.fact("sing." + std::to_string(k), to_string(sp.rep));
    report.fact("total." + std::to_string(k), to_string(sp.total));
    std::vector<std::string> profile;
    for (const auto& [name, m] : sp.branch_mult)
      profile.push_back(name + ":" + to_string(m));
    report.fact("profile." + std::to_string(k), join(profile));
  }
}

void run_arr_blowup(const std::string& path, Report& report) {
  BlowupLedger ledger = load_ledger(path);
  report.fact("blown_points", std::to_string(ledger.blown_points.size()));
  for (const CurveRecord& c : ledger.curves)
    report.fact("selfint." + c.name, to_string(c.self_int));
  try {
    DisjointnessReport d = disjointness_check(ledger);
    report.fact("disjoint", bool_str(d.ok));
    if (!d.ok) {
      report.fact("obstruction", d.kind);
      report.fact("first", d.first);
      report.fact("second", d.second);
      if (d.kind == "pair") report.fact("residual", to_string(d.residual));
      report.exit_code = 1;
    }
  } catch (const BallqError& e) {
    // Handwritten ledgers may omit pair lines; everything else still prints.
    if (e.kind != Err::BadFile) throw;
    report.diagnostics.push_back(std::string(e.what()) + "; disjointness not checked");
  }
  auto threshold = ample_threshold(ledger);
  report.fact("ample_threshold", threshold ? to_string(*threshold) : "none");
}

void run_arr_chern(const std::string& path, Report& report) {
  BlowupLedger ledger = load_ledger(path);
  LogChernReport lc;
  try {
    lc = log_chern(ledger);
  } catch (const BallqError& e) {
    // Missing pair data falls back to the ungated arithmetic; a boundary
    // that genuinely still meets itself stays an error.
    if (e.kind != Err::BadFile) throw;
    lc = log_chern_numbers(ledger);
    report.diagnostics.push_back(std::string(e.what()) + "; using ungated arithmetic");
  }
  report.fact("c1sq", to_string(lc.c1sq_log));
  report.fact("c2", to_string(lc.c2_log));
  report.fact("bmy", bmy_verdict(lc));
  report.fact("cusps", to_string(lc.cusp_count));
  for (const std::string& note : lc.notes) report.diagnostics.push_back(note);
}

void run_grp_index(const std::string& path, const std::string& subgroup, Report& report) {
  Presentation pres = read_presentation(path);
  CosetTable table =
      todd_coxeter(pres, parse_word_list(subgroup, pres, path), max_cosets_limit());
  report.fact("index", std::to_string(table.n_cosets));
}

void run_grp_abel(const std::string& path, Report& report) {
  AbelianInvariants inv = abelianization(read_presentation(path));
  report.fact("rank", to_string(inv.free_rank));
  report.fact("torsion", inv.torsion.empty() ? "none" : join_ints(inv.torsion));
}

void run_grp_kernel_abel(const std::string& path, const std::string& fix_path,
                         Report& report) {
  Presentation pres = read_presentation(path);
  PermFixture fix = read_perm_fixture(fix_path);
  FiniteImage img = verify_finite_image(pres, ordered_images(fix, pres));
  report.fact("image_order", to_string(img.order));
  AbelianInvariants inv = subgroup_abelianization(pres, img, max_cosets_limit());
  report.fact("rank", to_string(inv.free_rank));
  report.fact("torsion", inv.torsion.empty() ? "none" : join_ints(inv.torsion));
}

void run_grp_cusps(const std::string& path, const std::string& fix_path, Report& report) {
  Presentation pres = read_presentation(path);
  PermFixture fix = read_perm_fixture(fix_path);
  check(!fix.stabilizer.empty(), Err::BadFile,
        fix_path + ": fixture has no stabilizer words");
  FiniteImage img = verify_finite_image(pres, ordered_images(fix, pres));
  std::vector<Word> words;
  for (const std::string& text : fix.stabilizer)
    words.push_back(parse_word(text, pres, fix_path));
  Int cusps = coset_index_of_image_subgroup(img, words);
  report.fact("image_order", to_string(img.order));
  report.fact("subgroup_order", to_string(img.order / cusps));
  report.fact("cusps", to_string(cusps));
}

void run_rep_verify(const std::string& path, const std::string& substitute,
                    const std::string& images_text, Report& report) {
  AffineGroupSpec spec = read_affine_spec(path);
  VerifyReport vr;
  if (substitute.empty()) {
    check(images_text.empty(), Err::BadFile, "--images needs --substitute");
    vr = verify_presentation(spec);
  } else {
    check(!images_text.empty(), Err::BadFile, "--substitute needs --images");
    Presentation source = read_presentation(substitute);
    std::vector<std::pair<std::string, Word>> images;
    for (const std::string& item : split_word_list(images_text)) {
      size_t eq = item.find('=');
      check(eq != std::string::npos, Err::BadFile,
            "image '" + item + "' is not name=word");
      std::string name = item.substr(0, eq);
      while (!name.empty() && name.back() == ' ') name.pop_back();
      images.emplace_back(name, parse_word(item.substr(eq + 1), spec.presentation));
    }
    vr = verify_substitution(source, spec, images);
  }
  report.fact("relators", std::to_string(vr.relators.size()));
  size_t passed = 0, k = 0;
  for (const RelatorCheck& rc : vr.relators)
    if (rc.pass) ++passed;
  report.fact("passed", std::to_string(passed));
  for (const RelatorCheck& rc : vr.relators)
    if (!rc.pass) report.fact("fail." + std::to_string(++k), rc.word);
  if (!vr.all_pass) report.exit_code = 1;
}

void run_rep_classify(const std::string& path, const std::string& group_name,
                      Report& report) {
  Arrangement arr = read_arrangement(path);
  std::vector<AffineAuto> gens;
  for (const std::string& g : arr.group_gens(group_name))
    gens.emplace_back(arr.surface, arr.auto_map(g));
  report.fact("type", std::to_string(bagnera_classify(gens)));
  report.fact("group_order", std::to_string(generate_group(gens).size()));
}

// ---- bundled examples ------------------------------------------------------

void example_z2_abelian(Report& report) {
  Checker c{report};
  PipelineSpec spec = read_pipeline(fixture_path("z2_abelian.pipeline"));
  Arrangement arr = read_arrangement(spec.arrangement_path);
  c.fact_expect("curves", std::to_string(arr.names.size()), "8");

  // E1 meets E3 in the four 2-torsion points of the diagonal.
  std::set<std::string> e13;
  for (const TorusPoint& p : intersect_lines(arr.line("E1"), arr.line("E3")))
    e13.insert(to_string(p));
  const std::set<std::string> e13_want = {"(0, 0)", "(1/2, 1/2)", "(1/2*i, 1/2*i)",
                                          "(1/2+1/2*i, 1/2+1/2*i)"};
  c.fact_expect("e1_e3_points", std::to_string(e13.size()), "4");
  c.fact_expect("e1_e3_match", bool_str(e13 == e13_want), "true");

  // Six multiple points, four curves through each.
  QuotientConfig cfg = build_quotient_config(arr, {});
  c.fact_expect("singular_points", std::to_string(cfg.singular_points.size()), "6");
  std::set<std::string> pts;
  bool four_through = true;
  for (const SingularPoint& sp : cfg.singular_points) {
    pts.insert(to_string(sp.rep));
    int incident = 0;
    for (const auto& [name, m] : sp.branch_mult)
      if (m >= 1) ++incident;
    four_through = four_through && sp.total == 4 && incident == 4;
  }
  const std::set<std::string> pts_want = {
      "(0, 0)",           "(1/2, 1/2)",        "(1/2*i, 1/2*i)",
      "(1/2+1/2*i, 0)",   "(0, 1/2+1/2*i)",    "(1/2+1/2*i, 1/2+1/2*i)"};
  c.fact_expect("points_match", bool_str(pts == pts_want), "true");
  c.fact_expect("through_each", four_through ? "4" : "mixed", "4");

  chern_facts(c, log_chern(pipeline_ledger(spec)), "18", "6", "equal", "8");
  c.finish();
}

void example_z2_bielliptic(Report& report) {
  Checker c{report};
  PipelineSpec spec = read_pipeline(fixture_path("z2_bielliptic.pipeline"));
  QuotientConfig cfg = pipeline_config(spec);
  c.fact_expect("group_order", std::to_string(cfg.group.size()), "2");
  c.fact_expect("image_curves", std::to_string(cfg.image_curves.size()), "4");
  c.fact_expect("singular_points", std::to_string(cfg.singular_points.size()), "3");
  // The elliptic images acquire two nodes each; the fiber images stay smooth.
  c.fact_expect("g1_nodes", std::to_string(mult_count(cfg, "G1", 2)), "2");
  c.fact_expect("g2_nodes", std::to_string(mult_count(cfg, "G2", 2)), "2");
  c.fact_expect("h1_smooth", bool_str(max_mult(cfg, "H1") <= 1), "true");
  c.fact_expect("h2_smooth", bool_str(max_mult(cfg, "H2") <= 1), "true");

  BlowupLedger ledger = make_ledger(cfg, spec.base);
  c.fact_expect("selfint.G1", to_string(ledger.curve("G1").self_int), "-4");
  c.fact_expect("selfint.G2", to_string(ledger.curve("G2").self_int), "-4");
  c.fact_expect("selfint.H1", to_string(ledger.curve("H1").self_int), "-2");
  c.fact_expect("selfint.H2", to_string(ledger.curve("H2").self_int), "-2");
  c.fact_expect("disjoint", bool_str(disjointness_check(ledger).ok), "true");

  chern_facts(c, log_chern(ledger), "9", "3", "equal", "4");
  auto threshold = ample_threshold(ledger);
  c.fact_expect("ample_threshold", threshold ? to_string(*threshold) : "none", "1/4");
  c.finish();
}

void example_z4_abelian(Report& report) {
  Checker c{report};
  PipelineSpec spec = read_pipeline(fixture_path("z4_abelian.pipeline"));
  Arrangement arr = read_arrangement(spec.arrangement_path);
  c.fact_expect("curves", std::to_string(arr.names.size()), "14");

  QuotientConfig cfg = build_quotient_config(arr, {});
  c.fact_expect("points", std::to_string(cfg.singular_points.size()), "24");

  // Expected incidence table: six point families, one per j = 0..3.
  std::map<std::string, std::set<std::string>> want;
  auto pt = [&](const GaussianRational& w, const GaussianRational& z) {
    return to_string(make_point(arr.surface, w, z));
  };
  const GaussianRational zero = gq(0, 1, 0, 1);
  const GaussianRational half = gq(1, 2, 0, 1);
  const GaussianRational ihalf = gq(0, 1, 1, 2);
  const GaussianRational h = gq(1, 2, 1, 2);
  for (long j = 0; j < 4; ++j) {
    const GaussianRational jj = gq(j, 1, 0, 1);
    const std::string f1j = "F1_" + std::to_string(j);
    const std::string f2j = "F2_" + std::to_string(j);
    want[pt(zero, jj)] = {"E1", "E3", f1j, "F3"};
    want[pt(half, half + jj)] = {"E1", "E2", "E3", "E4"};
    want[pt(ihalf, ihalf + jj)] = {"E1", "E2", "E3", "E4"};
    want[pt(h, h + jj)] = {"E1", "E3", f2j, "F4"};
    want[pt(h, jj)] = {"E2", "E4", f1j, "F4"};
    want[pt(zero, h + jj)] = {"E2", "E4", f2j, "F3"};
  }
  bool table_ok = want.size() == 24 && cfg.singular_points.size() == 24;
  for (const SingularPoint& sp : cfg.singular_points) {
    std::set<std::string> got;
    for (const auto& [name, m] : sp.branch_mult)
      if (m >= 1) got.insert(name);
    auto it = want.find(to_string(sp.rep));
    if (it == want.end() || it->second != got) {
      report.diagnostics.push_back("unexpected incidence at " + to_string(sp.rep));
      table_ok = false;
    }
  }
  c.fact_expect("table_match", bool_str(table_ok), "true");

  chern_facts(c, log_chern(pipeline_ledger(spec)), "72", "24", "equal", "14");
  c.finish();
}

void example_z4_bielliptic(Report& report) {
  Checker c{report};
  PipelineSpec spec = read_pipeline(fixture_path("z4_bielliptic.pipeline"));
  QuotientConfig cfg = pipeline_config(spec);
  c.fact_expect("group_order", std::to_string(cfg.group.size()), "4");
  c.fact_expect("image_curves", std::to_string(cfg.image_curves.size()), "4");
  c.fact_expect("singular_points", std::to_string(cfg.singular_points.size()), "6");
  // The elliptic image G1 carries four nodes and two fourfold points; the
  // three fiber images are smooth.
  c.fact_expect("g1_nodes", std::to_string(mult_count(cfg, "G1", 2)), "4");
  c.fact_expect("g1_quads", std::to_string(mult_count(cfg, "G1", 4)), "2");
  c.fact_expect("g2_smooth", bool_str(max_mult(cfg, "G2") <= 1), "true");
  c.fact_expect("g3_smooth", bool_str(max_mult(cfg, "G3") <= 1), "true");
  c.fact_expect("g4_smooth", bool_str(max_mult(cfg, "G4") <= 1), "true");

  BlowupLedger ledger = make_ledger(cfg, spec.base);
  c.fact_expect("selfint.G1", to_string(ledger.curve("G1").self_int), "-16");
  c.fact_expect("selfint.G2", to_string(ledger.curve("G2").self_int), "-2");
  c.fact_expect("selfint.G3", to_string(ledger.curve("G3").self_int), "-2");
  c.fact_expect("selfint.G4", to_string(ledger.curve("G4").self_int), "-4");
  c.fact_expect("disjoint", bool_str(disjointness_check(ledger).ok), "true");

  chern_facts(c, log_chern(ledger), "18", "6", "equal", "4");
  auto threshold = ample_threshold(ledger);
  c.fact_expect("ample_threshold", threshold ? to_string(*threshold) : "none", "1/4");

  // The same inequality is already an equality one level up.
  Arrangement arr = read_arrangement(spec.arrangement_path);
  LogChernReport up = log_chern(make_ledger(build_quotient_config(arr, {}), abelian_base()));
  c.fact_expect("upstairs_c1sq", to_string(up.c1sq_log), "72");
  c.fact_expect("upstairs_c2", to_string(up.c2_log), "24");
  c.fact_expect("upstairs_bmy", bmy_verdict(up), "equal");
  c.finish();
}

void example_holzapfel(Report& report) {
  Checker c{report};
  Arrangement hz = read_arrangement(fixture_path("holzapfel.arr"));
  Arrangement z2 = read_arrangement(fixture_path("z2_abelian.arr"));
  c.fact_expect("lines", std::to_string(hz.names.size()), "8");
  c.fact("translation", "1/2,1/2");
  Arrangement moved = translate_arrangement(hz, gq(1, 2, 0, 1), gq(1, 2, 0, 1));
  c.fact_expect("set_equal", bool_str(same_line_set(moved, z2)), "true");
  c.finish();
}

void example_gz4_covers(Report& report) {
  Checker c{report};
  AffineGroupSpec g = read_affine_spec(fixture_path("g_z4.affine"));
  AffineGroupSpec hp = read_affine_spec(fixture_path("hprime.affine"));
  c.fact_expect("g_relators", pass_str(verify_presentation(g)), "pass");
  c.fact_expect("hprime_relators", pass_str(verify_presentation(hp)), "pass");

  // The glide extension sits inside the twist extension: x, y go to the
  // antidiagonal translations, v to d^2, s to d*a^-1.
  std::vector<std::pair<std::string, Word>> images = {
      {"x", parse_word("b*a^-1", g.presentation)},
      {"y", parse_word("a^-1*b^-1", g.presentation)},
      {"u", parse_word("c", g.presentation)},
      {"v", parse_word("d^2", g.presentation)},
      {"r", parse_word("e", g.presentation)},
      {"s", parse_word("d*a^-1", g.presentation)}};
  c.fact_expect("substitution", pass_str(verify_substitution(hp.presentation, g, images)),
                "pass");

  // psi conjugates phi onto the standard involution as surface automorphisms;
  // the affine-level residual is the lattice translation 2i in w.
  Arrangement arr = read_arrangement(fixture_path("z2_abelian.arr"));
  AffineMap conj = compose(compose(arr.auto_map("psi"), arr.auto_map("phi")),
                           inverse(arr.auto_map("psi")));
  const AffineMap phi1 = arr.auto_map("phi1");
  c.fact_expect("conjugation_mod_lattice",
                bool_str(same_auto_mod_lattice(AffineAuto(arr.surface, conj),
                                               AffineAuto(arr.surface, phi1))),
                "true");
  bool linear_same = conj.m11 == phi1.m11 && conj.m12 == phi1.m12 &&
                     conj.m21 == phi1.m21 && conj.m22 == phi1.m22;
  c.fact_expect("conjugation_linear_equal", bool_str(linear_same), "true");
  c.fact_expect("conjugation_residual",
                to_string(conj.t1 - phi1.t1) + "," + to_string(conj.t2 - phi1.t2),
                "2*i,0");

  // Both parity covers have index two.
  long limit = max_cosets_limit();
  CosetTable th = todd_coxeter(
      g.presentation,
      parse_word_list("b*a^-1, a^-1*b^-1, c, d*a^-1, e", g.presentation, "g_z4.affine"),
      limit);
  c.fact_expect("index_h_in_g", std::to_string(th.n_cosets), "2");
  CosetTable tc = todd_coxeter(
      hp.presentation, parse_word_list("x, y, u, s, r^2", hp.presentation, "hprime.affine"),
      limit);
  c.fact_expect("index_cover_in_hprime", std::to_string(tc.n_cosets), "2");

  // Bagnera-de Franchis types of the induced free actions.
  c.fact_expect("type_phi",
                std::to_string(bagnera_classify({AffineAuto(arr.surface, arr.auto_map("phi"))})),
                "1");
  Arrangement z4 = read_arrangement(fixture_path("z4_abelian.arr"));
  c.fact_expect("type_z4",
                std::to_string(bagnera_classify({AffineAuto(z4.surface, z4.auto_map("phi"))})),
                "3");
  const AffineMap& rm = map_of(hp, "r");
  const AffineMap& sm = map_of(hp, "s");
  c.fact_expect("type_hprime",
                std::to_string(bagnera_classify(
                    {AffineAuto(arr.surface, rm), AffineAuto(arr.surface, sm)})),
                "4");
  c.fact_expect("type_cover",
                std::to_string(bagnera_classify(
                    {AffineAuto(arr.surface, compose(rm, rm)), AffineAuto(arr.surface, sm)})),
                "2");
  c.finish();
}

void example_appendix(Report& report) {
  Checker c{report};
  Presentation gamma = read_presentation(fixture_path("gamma_picard.grp"));
  // The permutation images of the generators are external data; without the
  // fixture the run stops here with a missing-fixture diagnostic.
  PermFixture fix = read_perm_fixture(fixture_path("rho_images.fix"));
  FiniteImage img = verify_finite_image(gamma, ordered_images(fix, gamma));
  c.fact_expect("image_order", to_string(img.order), "1536");

  AbelianInvariants inv = subgroup_abelianization(gamma, img, max_cosets_limit());
  c.fact_expect("rank", to_string(inv.free_rank), "0");
  c.fact_expect("torsion", join_ints(inv.torsion), "2,2,2,2,2,2,2,2,2,4,4,4,4,4,4");

  check(!fix.stabilizer.empty(), Err::BadFile, "rho_images.fix: no stabilizer words");
  std::vector<Word> words;
  for (const std::string& text : fix.stabilizer)
    words.push_back(parse_word(text, gamma, "rho_images.fix"));
  c.fact_expect("cusps", to_string(coset_index_of_image_subgroup(img, words)), "24");
  c.fact_expect("euler", to_string(euler_cover(Rational(1, 32), img.order)), "48");

  CharNumbers cn = char_numbers(Int(48), std::vector<Int>(24, Int(-4)), Int(0));
  c.fact_expect("k_sq", to_string(cn.k_sq), "48");
  c.fact_expect("chi", to_string(cn.chi), "8");
  c.fact_expect("p_g", to_string(cn.p_g), "7");

  // Bundled cross-check: the cusp kernel presentation abelianizes to Z^2 x Z/4.
  AbelianInvariants ck = abelianization(read_presentation(fixture_path("cusp_b_kernel.grp")));
  c.fact_expect("cusp_kernel_rank", to_string(ck.free_rank), "2");
  c.fact_expect("cusp_kernel_torsion", join_ints(ck.torsion), "4");

  std::string cusp_b = fixture_path("cusp_b.grp");
  if (std::filesystem::exists(cusp_b)) {
    c.fact("cusp_b_abel", to_string(abelianization(read_presentation(cusp_b))));
  } else {
    report.diagnostics.push_back("cusp_b.grp not bundled; stabilizer cross-check skipped");
  }
  c.finish();
}

void run_example(const std::string& name, Report& report) {
  if (name == "z2-abelian") return example_z2_abelian(report);
  if (name == "z2-bielliptic") return example_z2_bielliptic(report);
  if (name == "z4-abelian") return example_z4_abelian(report);
  if (name == "z4-bielliptic") return example_z4_bielliptic(report);
  if (name == "holzapfel") return example_holzapfel(report);
  if (name == "gz4-covers") return example_gz4_covers(report);
  if (name == "appendix") return example_appendix(report);
  fail(Err::BadFile,
       "unknown example '" + name +
           "' (choose from z2-abelian, z2-bielliptic, z4-abelian, z4-bielliptic, "
           "holzapfel, gz4-covers, appendix)");
}

void apply_expectations(const std::vector<std::string>& expects, Report& report) {
  for (const std::string& e : expects) {
    size_t eq = e.find('=');
    check(eq != std::string::npos && eq > 0, Err::BadFile,
          "expectation '" + e + "' is not key=value");
    std::string key = e.substr(0, eq);
    std::string want = e.substr(eq + 1);
    const std::string* got = nullptr;
    for (const auto& [k, v] : report.facts)
      if (k == key) got = &v;
    if (!got) {
      report.diagnostics.push_back("expected " + key + " = " + want + ", but no such fact");
      if (report.exit_code == 0) report.exit_code = 1;
    } else if (*got != want) {
      report.diagnostics.push_back("expected " + key + " = " + want + ", got " + *got);
      if (report.exit_code == 0) report.exit_code = 1;
    }
  }
}

void run_verb(std::vector<std::string> args, Report& report) {
  CLI::App app{
      "exact arithmetic for elliptic curve arrangements, free quotients, "
      "blowup ledgers, and lattice group presentations"};
  app.name("ballq");
  app.require_subcommand(1);

  struct {
    std::string path;
    std::string fix_path;
    std::string group;
    std::string subgroup;
    std::string substitute;
    std::string images;
    std::string example_name;
    std::vector<std::string> expects;
    bool porcelain = false;
  } opt;

  app.add_flag("--porcelain", opt.porcelain, "print key=value lines only");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--expect", opt.expects, "facts that must hold, as key=value")
        ->take_all();
    sub->fallthrough();
    return sub;
  };

  CLI::App* arr_intersect = add_common(app.add_subcommand(
      "arr-intersect", "pairwise intersection numbers and multiple points"));
  arr_intersect->add_option("file", opt.path, "arrangement file (.arr)")->required();

  CLI::App* arr_quotient = add_common(
      app.add_subcommand("arr-quotient", "image curves and singular points of a quotient"));
  arr_quotient->add_option("file", opt.path, "arrangement file (.arr)")->required();
  arr_quotient->add_option("--group", opt.group, "automorphism group name (default trivial)");

  CLI::App* arr_blowup = add_common(app.add_subcommand(
      "arr-blowup", "blowup ledger: transforms, disjointness, ample threshold"));
  arr_blowup->add_option("file", opt.path, "pipeline (.pipeline) or ledger (.ledger)")
      ->required();

  CLI::App* arr_chern = add_common(
      app.add_subcommand("arr-chern", "logarithmic Chern numbers of a blown-up boundary"));
  arr_chern->add_option("file", opt.path, "pipeline (.pipeline) or ledger (.ledger)")
      ->required();

  CLI::App* grp_index =
      add_common(app.add_subcommand("grp-index", "coset enumeration index of a subgroup"));
  grp_index->add_option("file", opt.path, "presentation file (.grp)")->required();
  grp_index->add_option("--subgroup", opt.subgroup,
                        "comma-separated subgroup generator words (default trivial)");

  CLI::App* grp_abel =
      add_common(app.add_subcommand("grp-abel", "abelianization invariants"));
  grp_abel->add_option("file", opt.path, "presentation file (.grp)")->required();

  CLI::App* grp_kernel_abel = add_common(app.add_subcommand(
      "grp-kernel-abel", "abelianization of the kernel of a finite permutation image"));
  grp_kernel_abel->add_option("file", opt.path, "presentation file (.grp)")->required();
  grp_kernel_abel->add_option("fixture", opt.fix_path, "permutation images (.fix)")
      ->required();

  CLI::App* grp_cusps = add_common(app.add_subcommand(
      "grp-cusps", "cusp count from stabilizer words under a finite image"));
  grp_cusps->add_option("file", opt.path, "presentation file (.grp)")->required();
  grp_cusps->add_option("fixture", opt.fix_path, "permutation images (.fix)")->required();

  CLI::App* rep_verify = add_common(
      app.add_subcommand("rep-verify", "check relators against affine generator maps"));
  rep_verify->add_option("file", opt.path, "affine spec (.affine)")->required();
  rep_verify->add_option("--substitute", opt.substitute,
                         "source presentation (.grp) to substitute into the spec");
  rep_verify->add_option("--images", opt.images, "comma-separated name=word images");

  CLI::App* rep_classify = add_common(app.add_subcommand(
      "rep-classify", "Bagnera-de Franchis type of a finite free action"));
  rep_classify->add_option("file", opt.path, "arrangement file (.arr)")->required();
  rep_classify->add_option("--group", opt.group, "automorphism group name")->required();

  CLI::App* example =
      add_common(app.add_subcommand("example", "run a bundled worked example"));
  example
      ->add_option("name", opt.example_name,
                   "one of: z2-abelian, z2-bielliptic, z4-abelian, z4-bielliptic, "
                   "holzapfel, gz4-covers, appendix")
      ->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    report.raw = app.help();
    return;
  } catch (const CLI::CallForAllHelp&) {
    report.raw = app.help("", CLI::AppFormatMode::All);
    return;
  } catch (const CLI::ParseError& e) {
    fail(Err::BadFile, std::string("argument error: ") + e.what());
  }
  report.porcelain = opt.porcelain;

  if (arr_intersect->parsed()) run_arr_intersect(opt.path, report);
  else if (arr_quotient->parsed()) run_arr_quotient(opt.path, opt.group, report);
  else if (arr_blowup->parsed()) run_arr_blowup(opt.path, report);
  else if (arr_chern->parsed()) run_arr_chern(opt.path, report);
  else if (grp_index->parsed()) run_grp_index(opt.path, opt.subgroup, report);
  else if (grp_abel->parsed()) run_grp_abel(opt.path, report);
  else if (grp_kernel_abel->parsed()) run_grp_kernel_abel(opt.path, opt.fix_path, report);
  else if (grp_cusps->parsed()) run_grp_cusps(opt.path, opt.fix_path, report);
  else if (rep_verify->parsed()) run_rep_verify(opt.path, opt.substitute, opt.images, report);
  else if (rep_classify->parsed()) run_rep_classify(opt.path, opt.group, report);
  else if (example->parsed()) run_example(opt.example_name, report);

  apply_expectations(opt.expects, report);
}

}  // namespace

Report run_command(const std::vector<std::string>& args) {
  Report report;
  try {
    run_verb(args, report);
  } catch (const BallqError& e) {
    report.diagnostics.push_back(e.what());
    report.exit_code = is_input_error(e.kind) ? 2 : 1;
  } catch (const std::exception& e) {
    report.diagnostics.push_back(std::string("InternalError: ") + e.what());
    report.exit_code = 1;
  }
  return report;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  Report report = run_command(args);
  std::fputs(render(report).c_str(), stdout);
  return report.exit_code;
}

}  // namespace ballq
