#include <algorithm>
#include <set>

#include "ballq/error.hpp"
#include "ballq/examples.hpp"
#include "ballq/quotient.hpp"
#include "doctest.h"

using namespace ballq;

namespace {

GaussianRational gr(long rn, long rd, long in, long id) {
  return {Rational(rn, rd), Rational(in, id)};
}

const GaussianRational kHalf = gr(1, 2, 0, 1);
const GaussianRational kHalfI = gr(0, 1, 1, 2);
const GaussianRational kH = gr(1, 2, 1, 2);
const GaussianRational kZero = gr(0, 1, 0, 1);

std::vector<AffineAuto> named_group(const Arrangement& arr, const char* name) {
  std::vector<AffineAuto> gens;
  for (const auto& g : arr.group_gens(name)) gens.emplace_back(arr.surface, arr.auto_map(g));
  return generate_group(gens);
}

Int recount_branches(const QuotientConfig& cfg, const SingularPoint& sp,
                     const ImageCurve& curve) {
  Int hits = 0;
  for (const auto& p : sp.fiber)
    for (const auto& name : curve.preimages)
      if (point_on_line(cfg.upstairs.line(name), p)) hits += 1;
  return hits;
}

}  // namespace

TEST_CASE("z2 quotient: orbits, branch profiles, pairings") {
  Arrangement arr = z2_arrangement();
  auto group = named_group(arr, "bielliptic");
  REQUIRE(group.size() == 2);

  QuotientConfig cfg = build_quotient_config(arr, group);
  REQUIRE(cfg.image_curves.size() == 4);
  CHECK(cfg.image_curves[0].preimages == std::vector<std::string>{"E1", "E3"});
  CHECK(cfg.image_curves[1].preimages == std::vector<std::string>{"E2", "E4"});
  CHECK(cfg.image_curves[2].preimages == std::vector<std::string>{"F1", "F2"});
  CHECK(cfg.image_curves[3].preimages == std::vector<std::string>{"F3", "F4"});
  rename_image_curves(cfg, {"G1", "G2", "H1", "H2"});

  REQUIRE(cfg.singular_points.size() == 3);

  // Node of G1 at the orbit of (0,0); H1 and H2 cross it transversally.
  const SingularPoint* origin = cfg.singular_at(make_point(arr.surface, kZero, kZero));
  REQUIRE(origin != nullptr);
  CHECK(origin->fiber == std::vector<TorusPoint>{make_point(arr.surface, kZero, kZero),
                                                 make_point(arr.surface, kH, kH)});
  CHECK(origin->branch_mult ==
        std::map<std::string, Int>{{"G1", 2}, {"H1", 1}, {"H2", 1}});
  CHECK(origin->total == 4);

  // Node of G2 at the orbit of ((1+i)/2, 0).
  const SingularPoint* corner = cfg.singular_at(make_point(arr.surface, kH, kZero));
  REQUIRE(corner != nullptr);
  CHECK(corner == cfg.singular_at(make_point(arr.surface, kZero, kH)));
  CHECK(corner->branch_mult ==
        std::map<std::string, Int>{{"G2", 2}, {"H1", 1}, {"H2", 1}});

  // Common node of G1 and G2 at the orbit of (1/2, 1/2).
  const SingularPoint* middle = cfg.singular_at(make_point(arr.surface, kHalf, kHalf));
  REQUIRE(middle != nullptr);
  CHECK(middle == cfg.singular_at(make_point(arr.surface, kHalfI, kHalfI)));
  CHECK(middle->branch_mult == std::map<std::string, Int>{{"G1", 2}, {"G2", 2}});

  // G1 and G2 have exactly two nodes each; H1 and H2 are smooth.
  auto nodes_of = [&](const std::string& name) {
    int nodes = 0;
    for (const auto& sp : cfg.singular_points) {
      auto it = sp.branch_mult.find(name);
      if (it != sp.branch_mult.end() && it->second >= 2) ++nodes;
    }
    return nodes;
  };
  CHECK(nodes_of("G1") == 2);
  CHECK(nodes_of("G2") == 2);
  CHECK(nodes_of("H1") == 0);
  CHECK(nodes_of("H2") == 0);

  // Pullback pairings on the quotient.
  CHECK(cfg.pairing("G1", "G1") == 4);
  CHECK(cfg.pairing("G2", "G2") == 4);
  CHECK(cfg.pairing("H1", "H1") == 0);
  CHECK(cfg.pairing("H2", "H2") == 0);
  CHECK(cfg.pairing("G1", "G2") == 4);
  CHECK(cfg.pairing("G1", "H1") == 2);
  CHECK(cfg.pairing("G1", "H2") == 2);
  CHECK(cfg.pairing("G2", "H1") == 2);
  CHECK(cfg.pairing("H1", "H2") == 2);
  CHECK(cfg.pairing("H2", "H1") == 2);  // argument order irrelevant
}

TEST_CASE("z2 quotient: fiber op") {
  Arrangement arr = z2_arrangement();
  QuotientConfig cfg = build_quotient_config(arr, named_group(arr, "bielliptic"));
  auto f = fiber(make_point(arr.surface, kZero, kZero), cfg);
  CHECK(f == std::vector<TorusPoint>{make_point(arr.surface, kZero, kZero),
                                     make_point(arr.surface, kH, kH)});
  auto g = fiber(make_point(arr.surface, kHalf, kHalf), cfg);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == make_point(arr.surface, kHalfI, kHalfI));
  CHECK(g[1] == make_point(arr.surface, kHalf, kHalf));
}

TEST_CASE("trivial group: curves stay lines, all crossings simple") {
  Arrangement arr = z2_arrangement();
  QuotientConfig cfg = build_quotient_config(arr, {});
  REQUIRE(cfg.group.size() == 1);
  REQUIRE(cfg.image_curves.size() == 8);
  for (const auto& c : cfg.image_curves) {
    CHECK(c.preimages == std::vector<std::string>{c.name});
    CHECK(cfg.pairing(c.name, c.name) == 0);
  }
  REQUIRE(cfg.singular_points.size() == 6);
  for (const auto& sp : cfg.singular_points) {
    CHECK(sp.fiber.size() == 1);
    CHECK(sp.total == 4);
    for (const auto& [name, m] : sp.branch_mult) CHECK(m == 1);
  }
  // The six points of the paper's list, via fiber membership.
  for (const auto& [w, z] : std::vector<std::pair<GaussianRational, GaussianRational>>{
           {kZero, kZero},
           {kHalf, kHalf},
           {kHalfI, kHalfI},
           {kH, kZero},
           {kZero, kH},
           {kH, kH}})
    CHECK(cfg.singular_at(make_point(arr.surface, w, z)) != nullptr);
  CHECK(cfg.pairing("E1", "E3") == 4);
  CHECK(cfg.pairing("E1", "E2") == 2);
  CHECK(cfg.pairing("F1", "F2") == 0);
  CHECK(cfg.pairing("E1", "F1") == 1);
}

TEST_CASE("orbit of a line under a stabilizing subgroup") {
  // Translation by ((1+i)/2, (1+i)/2) preserves E1 = {w - z = 0} but swaps
  // the two horizontal fibers; the E1 orbit is shorter than the group.
  Arrangement arr;
  arr.surface = square_gaussian_surface();
  arr.names = {"E1", "F1", "F2"};
  arr.lines = {TorusLine(arr.surface, {1, 0}, {-1, 0}, kZero),
               TorusLine(arr.surface, {0, 0}, {1, 0}, kZero),
               TorusLine(arr.surface, {0, 0}, {1, 0}, kH)};
  auto group = generate_group({AffineAuto(arr.surface, AffineMap::translation(kH, kH))});
  REQUIRE(group.size() == 2);

  QuotientConfig cfg = build_quotient_config(arr, group);
  REQUIRE(cfg.image_curves.size() == 2);
  CHECK(cfg.image_curves[0].preimages == std::vector<std::string>{"E1"});
  CHECK(cfg.image_curves[1].preimages == std::vector<std::string>{"F1", "F2"});

  // One downstairs crossing: the orbit {(0,0), (h,h)}, simple on both curves.
  REQUIRE(cfg.singular_points.size() == 1);
  CHECK(cfg.singular_points[0].branch_mult ==
        std::map<std::string, Int>{{"E1", 1}, {"F1", 1}});
  CHECK(cfg.pairing("E1", "E1") == 0);
  CHECK(cfg.pairing("E1", "F1") == 1);
  CHECK(cfg.pairing("F1", "F1") == 0);
}

TEST_CASE("rejections: unfree actions, unstable arrangements, bad elements") {
  Arrangement arr = z2_arrangement();

  // (w, z) -> (-w, z) fixes (0, 0).
  AffineMap neg;
  neg.m11 = gr(-1, 1, 0, 1);
  auto fixing = generate_group({AffineAuto(arr.surface, neg)});
  CHECK_THROWS_WITH_AS(build_quotient_config(arr, fixing),
                       doctest::Contains("fixes"), BallqError);

  // phi moves E1 to E3, which the stripped arrangement lacks.
  Arrangement partial;
  partial.surface = arr.surface;
  partial.names = {"E1", "F1", "F2"};
  partial.lines = {arr.line("E1"), arr.line("F1"), arr.line("F2")};
  CHECK_THROWS_WITH_AS(build_quotient_config(partial, named_group(arr, "bielliptic")),
                       doctest::Contains("maps outside the arrangement"), BallqError);

  // An element list that is not closed under composition.
  AffineAuto quarter(arr.surface, AffineMap::translation(gr(1, 4, 0, 1), kZero));
  AffineAuto id(arr.surface, AffineMap{});
  CHECK_THROWS_AS(build_quotient_config(arr, {id, quarter}), BallqError);

  // Duplicate lines are refused before any group work.
  Arrangement doubled = arr;
  doubled.names.push_back("E1bis");
  doubled.lines.push_back(arr.line("E1"));
  CHECK_THROWS_WITH_AS(build_quotient_config(doubled, {}),
                       doctest::Contains("duplicate line"), BallqError);
}

TEST_CASE("branch counts replay against an independent recount") {
  Arrangement arr = z2_arrangement();
  QuotientConfig cfg = build_quotient_config(arr, named_group(arr, "bielliptic"));
  const Int order = static_cast<long>(cfg.group.size());
  for (const auto& sp : cfg.singular_points) {
    CHECK(sp.fiber.size() == cfg.group.size());
    Int total = 0;
    for (const auto& curve : cfg.image_curves) {
      Int hits = recount_branches(cfg, sp, curve);
      auto it = sp.branch_mult.find(curve.name);
      Int recorded = it == sp.branch_mult.end() ? Int(0) : it->second;
      CHECK(recorded * order == hits);
      total += recorded;
    }
    CHECK(total == sp.total);
    CHECK(total >= 2);
  }
}

TEST_CASE("pullback pairing conservation") {
  Arrangement arr = z2_arrangement();
  QuotientConfig cfg = build_quotient_config(arr, named_group(arr, "bielliptic"));
  const Int order = static_cast<long>(cfg.group.size());
  for (const auto& ca : cfg.image_curves)
    for (const auto& cb : cfg.image_curves) {
      Int upstairs = 0;
      for (const auto& na : ca.preimages)
        for (const auto& nb : cb.preimages) {
          if (na == nb) continue;
          upstairs += intersection_number(arr.line(na), arr.line(nb));
        }
      CHECK(cfg.pairing(ca.name, cb.name) * order == upstairs);
    }
}
