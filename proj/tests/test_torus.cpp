#include <doctest.h>

#include <vector>

#include "ballq/torus.hpp"
#include "testutil.hpp"

using namespace ballq;

namespace {

GaussianInteger gi(long r, long i) { return GaussianInteger(Int(r), Int(i)); }

GaussianRational gr(long rn, long rd, long in, long id) {
  return GaussianRational(Rational(Int(rn), Int(rd)), Rational(Int(in), Int(id)));
}

GaussianRational half_h() { return gr(1, 2, 1, 2); }  // (1+i)/2

SurfacePtr sq() {
  static SurfacePtr s = square_gaussian_surface();
  return s;
}

// mirror-translation generator of the order-2 quotient example
AffineAuto phi2() {
  AffineMap f;
  f.m11 = GaussianRational(-1);
  f.t1 = half_h();
  f.t2 = half_h();
  return AffineAuto(sq(), f);
}

}  // namespace

TEST_CASE("lattice coordinates and reduction") {
  Lattice2 zi(GaussianRational(1), gr_i());
  CHECK(zi.contains(gr(3, 1, -2, 1)));
  CHECK(!zi.contains(gr(1, 2, 0, 1)));
  auto [p, q] = zi.coords(gr(3, 4, -1, 6));
  CHECK(p == Rational(3, 4));
  CHECK(q == Rational(-1, 6));
  CHECK(zi.reduce(gr(-3, 2, 7, 3)) == gr(1, 2, 1, 3));

  // skew lattice containing half-integer vectors
  Lattice2 skew(GaussianRational(1), half_h());
  CHECK(skew.contains(half_h()));
  CHECK(skew.contains(gr(0, 1, 1, 1)));  // i = (1+i) - 1
  CHECK(!skew.contains(gr(1, 2, 0, 1)));
  CHECK(skew.reduce(gr(1, 2, 1, 1)) == gr(1, 2, 0, 1));
  CHECK(skew.reduce(gr(1, 2, 1, 1)) == skew.reduce(gr(1, 2, 1, 1) + half_h() * GaussianRational(2)));

  CHECK_THROWS_AS(Lattice2(GaussianRational(1), GaussianRational(2)), BallqError);
}

TEST_CASE("point canonical form") {
  TorusPoint p = make_point(sq(), gr(3, 2, 0, 1), gr(-1, 2, 7, 3));
  CHECK(p.w == gr(1, 2, 0, 1));
  CHECK(p.z == gr(1, 2, 1, 3));
  CHECK(make_point(sq(), gr(5, 1, -4, 1), gr(0, 1, 0, 1)) ==
        make_point(sq(), GaussianRational(), GaussianRational()));
}

TEST_CASE("line canonical form") {
  // content and unit scaling give one representative per locus
  TorusLine l1(sq(), gi(2, 0), gi(0, 2), half_h());
  TorusLine l2(sq(), gi(1, 0), gi(0, 1), GaussianRational(Rational(1, 4), Rational(1, 4)));
  CHECK(l1.a == gi(1, 0));
  CHECK(l1.b == gi(0, 1));
  CHECK(l1.c == GaussianRational(Rational(1, 4), Rational(1, 4)));
  CHECK(l1 == l2);

  TorusLine m1(sq(), gi(0, 2), gi(2, 2), GaussianRational());
  TorusLine m2(sq(), gi(0, 1), gi(1, -1) * gi(0, 1), GaussianRational());
  CHECK(m1 == m2);

  // scaling by a unit preserves the locus and the canonical form
  TorusLine u1(sq(), gi(1, -2), gi(3, 0), half_h());
  TorusLine u2(sq(), gi(1, -2) * gi(0, 1), gi(3, 0) * gi(0, 1), half_h() * gr_i());
  CHECK(u1 == u2);
  // first nonzero coefficient entry is positive
  CHECK(u1.a.re > 0);

  // residue of c is canonical
  TorusLine r1(sq(), gi(0, 0), gi(1, 0), gr(7, 2, -3, 2));
  TorusLine r2(sq(), gi(0, 0), gi(1, 0), half_h());
  CHECK(r1 == r2);

  CHECK_THROWS_AS(TorusLine(sq(), gi(0, 0), gi(0, 0), half_h()), BallqError);
}

TEST_CASE("line membership across representations") {
  TorusLine l(sq(), gi(1, 1), gi(1, -1), gr(1, 2, 0, 1));
  TorusLine scaled(sq(), gi(1, 1) * gi(2, 1), gi(1, -1) * gi(2, 1),
                   gr(1, 2, 0, 1) * GaussianRational(Rational(2), Rational(1)));
  CHECK(l == scaled);
  // (1+i) w = 1/2 at w = (1-i)/4, and the value lattice is (1+i)Z[i]
  TorusPoint p = make_point(sq(), gr(1, 4, -1, 4), GaussianRational());
  CHECK(point_on_line(l, p));
  CHECK(point_on_line(scaled, p));
  CHECK(!point_on_line(l, make_point(sq(), gr(1, 2, 0, 1), GaussianRational())));
}

TEST_CASE("intersections on the square surface") {
  TorusLine e1(sq(), gi(1, 0), gi(-1, 0), GaussianRational());
  TorusLine e3(sq(), gi(1, 0), gi(1, 0), GaussianRational());
  TorusLine e2(sq(), gi(1, 0), gi(0, -1), half_h());
  TorusLine f1(sq(), gi(0, 0), gi(1, 0), GaussianRational());  // z = 0
  TorusLine f2(sq(), gi(0, 0), gi(1, 0), half_h());            // z = (1+i)/2

  SUBCASE("transversal pairs") {
    auto pts = intersect_lines(e1, f1);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == make_point(sq(), GaussianRational(), GaussianRational()));
    CHECK(intersection_number(e1, f1) == 1);

    pts = intersect_lines(e1, e3);
    CHECK(intersection_number(e1, e3) == 4);
    REQUIRE(pts.size() == 4);
    for (const auto& p : pts) {
      CHECK(point_on_line(e1, p));
      CHECK(point_on_line(e3, p));
    }
    CHECK(pts[0] == make_point(sq(), GaussianRational(), GaussianRational()));
    // returned points are sorted and distinct
    for (size_t k = 1; k < pts.size(); ++k) CHECK(pts[k - 1] < pts[k]);

    pts = intersect_lines(e2, f1);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == make_point(sq(), half_h(), GaussianRational()));
    CHECK(point_on_line(e2, make_point(sq(), half_h(), GaussianRational())));
  }

  SUBCASE("parallel and equal") {
    CHECK(parallel(f1, f2));
    CHECK(intersect_lines(f1, f2).empty());
    CHECK(intersection_number(f1, f2) == 0);
    CHECK_THROWS_AS(intersect_lines(f1, f1), BallqError);
    CHECK_THROWS_AS(intersection_number(e1, e1), BallqError);
  }

  SUBCASE("different surfaces rejected") {
    SurfacePtr other = make_surface(Lattice2(GaussianRational(1), gr_i()),
                                    Lattice2(GaussianRational(2), gr_i()));
    TorusLine g(other, gi(1, 0), gi(0, 0), GaussianRational());
    CHECK_THROWS_AS(intersect_lines(e1, g), BallqError);
  }
}

TEST_CASE("affine maps compose and invert") {
  AffineMap f;
  f.m11 = gr_i();
  f.m22 = GaussianRational(-1);
  f.t1 = half_h();
  AffineMap g = AffineMap::translation(gr(1, 3, 0, 1), gr(0, 1, 1, 2));
  AffineMap fg = compose(f, g);
  auto [w1, z1] = fg.apply(gr(1, 7, 0, 1), gr(2, 5, 1, 1));
  auto [w2, z2] = g.apply(gr(1, 7, 0, 1), gr(2, 5, 1, 1));
  auto [w3, z3] = f.apply(w2, z2);
  CHECK(w1 == w3);
  CHECK(z1 == z3);
  AffineMap id = compose(f, inverse(f));
  CHECK(id.is_identity());
  CHECK(compose(inverse(g), g).is_identity());
}

TEST_CASE("automorphism validation") {
  AffineMap ok;
  ok.m11 = gr_i();
  CHECK_NOTHROW(AffineAuto(sq(), ok));

  AffineMap shear;
  shear.m12 = GaussianRational(1);
  CHECK_NOTHROW(AffineAuto(sq(), shear));

  AffineMap nonintegral;
  nonintegral.m11 = GaussianRational(Rational(1, 2));
  CHECK_THROWS_AS(AffineAuto(sq(), nonintegral), BallqError);

  AffineMap proper_sub;  // maps the lattice strictly into itself
  proper_sub.m11 = GaussianRational(2);
  CHECK_THROWS_AS(AffineAuto(sq(), proper_sub), BallqError);

  // half-integer translations are fine; only the linear part is constrained
  AffineMap tr = AffineMap::translation(gr(1, 2, 0, 1), GaussianRational());
  CHECK_NOTHROW(AffineAuto(sq(), tr));
}

TEST_CASE("images of points and lines") {
  AffineAuto f = phi2();
  TorusPoint o = make_point(sq(), GaussianRational(), GaussianRational());
  CHECK(image_point(f, o) == make_point(sq(), half_h(), half_h()));

  TorusLine e1(sq(), gi(1, 0), gi(-1, 0), GaussianRational());
  TorusLine e3(sq(), gi(1, 0), gi(1, 0), GaussianRational());
  CHECK(image_line(f, e1) == e3);
  CHECK(image_line(f, e3) == e1);

  TorusLine e2(sq(), gi(1, 0), gi(0, -1), half_h());
  TorusLine e4(sq(), gi(1, 0), gi(0, 1), half_h());
  CHECK(image_line(f, e2) == e4);
  CHECK(image_line(f, e4) == e2);

  // the vertical fiber through 0 swaps with the fiber through (1+i)/2
  TorusLine fz(sq(), gi(1, 0), gi(0, 0), GaussianRational());
  CHECK(image_line(f, fz) == TorusLine(sq(), gi(1, 0), gi(0, 0), half_h()));
  CHECK(image_line(f, image_line(f, fz)) == fz);

  // membership is preserved pointwise
  auto rng = testutil::seeded_rng(99);
  for (int it = 0; it < 50; ++it) {
    GaussianRational z = gr(testutil::rand_between(rng, -6, 6), 4,
                            testutil::rand_between(rng, -6, 6), 4);
    // w = c + i z lies on e2
    GaussianRational w = half_h() + gr_i() * z;
    TorusPoint p = make_point(sq(), w, z);
    REQUIRE(point_on_line(e2, p));
    CHECK(point_on_line(image_line(f, e2), image_point(f, p)));
  }

  // inverse transport is a two-sided identity on lines
  AffineAuto finv(sq(), inverse(f.map));
  CHECK(image_line(finv, image_line(f, e2)) == e2);
}

TEST_CASE("automorphism order") {
  CHECK(auto_order(phi2()) == Int(2));

  AffineAuto tr(sq(), AffineMap::translation(gr(1, 2, 0, 1), GaussianRational()));
  CHECK(auto_order(tr) == Int(2));

  AffineMap f4;
  f4.m11 = gr_i();
  f4.t1 = half_h();
  f4.t2 = GaussianRational(1);
  CHECK(auto_order(AffineAuto(sq(), f4)) == Int(4));

  AffineMap shear;
  shear.m12 = GaussianRational(1);
  CHECK(!auto_order(AffineAuto(sq(), shear)).has_value());
}

TEST_CASE("group generation") {
  auto g2 = generate_group({phi2()});
  CHECK(g2.size() == 2);
  CHECK(g2[0].map.is_identity());

  AffineMap f4;
  f4.m11 = gr_i();
  f4.t1 = half_h();
  auto g4 = generate_group({AffineAuto(sq(), f4)});
  CHECK(g4.size() == 4);

  AffineMap shear;
  shear.m12 = GaussianRational(1);
  CHECK_THROWS_AS(generate_group({AffineAuto(sq(), shear)}, 16), BallqError);
}

TEST_CASE("freeness of actions") {
  auto g2 = generate_group({phi2()});
  FreeReport rep = is_free_action(g2);
  CHECK(rep.free_action);

  AffineMap neg;
  neg.m11 = GaussianRational(-1);
  neg.m22 = GaussianRational(-1);
  auto gneg = generate_group({AffineAuto(sq(), neg)});
  rep = is_free_action(gneg);
  CHECK(!rep.free_action);
  TorusPoint fp = rep.fixed_point;
  CHECK(image_point(gneg[rep.element_index], fp) == fp);

  // not closed under composition
  AffineAuto quarter(sq(), AffineMap::translation(gr(1, 4, 0, 1), GaussianRational()));
  AffineAuto id(sq(), AffineMap{});
  CHECK_THROWS_AS(is_free_action({id, quarter}), BallqError);
  // identity missing
  CHECK_THROWS_AS(is_free_action({phi2()}), BallqError);
}

TEST_CASE("orbit partition") {
  auto g2 = generate_group({phi2()});
  TorusPoint a = make_point(sq(), GaussianRational(), GaussianRational());
  TorusPoint b = make_point(sq(), gr(1, 2, 0, 1), gr(1, 2, 0, 1));
  TorusPoint c = make_point(sq(), gr(0, 1, 1, 2), gr(0, 1, 1, 2));
  auto orbits = orbit_partition(g2, {a, b, c});
  REQUIRE(orbits.size() == 2);
  REQUIRE(orbits[0].size() == 2);
  REQUIRE(orbits[1].size() == 2);
  CHECK(orbits[0][0] == a);
  CHECK(orbits[0][1] == make_point(sq(), half_h(), half_h()));
  CHECK(orbits[1][0] == c);
  CHECK(orbits[1][1] == b);
}

TEST_CASE("arrangement translation and comparison") {
  Arrangement arr;
  arr.surface = sq();
  arr.names = {"E1", "F1"};
  arr.lines = {TorusLine(sq(), gi(1, 0), gi(-1, 0), GaussianRational()),
               TorusLine(sq(), gi(0, 0), gi(1, 0), GaussianRational())};
  Arrangement moved = translate_arrangement(arr, half_h(), half_h());
  CHECK(moved.lines[0] == arr.lines[0]);  // direction (1, -1) kills the shift
  CHECK(moved.lines[1] == TorusLine(sq(), gi(0, 0), gi(1, 0), half_h()));
  CHECK(!same_line_set(arr, moved));
  CHECK(same_line_set(arr, arr));
  CHECK(arr.line("E1") == arr.lines[0]);
  CHECK(arr.has_line(moved.lines[0]));
  CHECK(!arr.has_line(moved.lines[1]));
  CHECK(arr.name_of(arr.lines[1]) == "F1");
  CHECK_THROWS_AS(arr.line("nope"), BallqError);
}
