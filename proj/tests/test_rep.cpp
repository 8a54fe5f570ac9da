#include "ballq/rep.hpp"

#include <doctest.h>

#include <vector>

#include "ballq/error.hpp"
#include "testutil.hpp"

using namespace ballq;

namespace {

GaussianRational gr(long rn, long rd, long in, long id) {
  return GaussianRational(Rational(Int(rn), Int(rd)), Rational(Int(in), Int(id)));
}

SurfacePtr sq() {
  static SurfacePtr s = square_gaussian_surface();
  return s;
}

AffineMap translation(const GaussianRational& t1, const GaussianRational& t2) {
  return AffineMap::translation(t1, t2);
}

// The four-fold twist: (w, z) -> (i w, z + 1/4).
AffineMap twist_map() {
  AffineMap e;
  e.m11 = gr_i();
  e.t2 = gr(1, 4, 0, 1);
  return e;
}

Presentation g_pres() {
  return parse_presentation(
      "gens a,b,c,d,e ; rels [a,b], [a,c], [a,d], [b,c], [b,d], [c,d], "
      "e*a*e^-1*b^-1, e*b*e^-1*a, [e,c], [e,d], e^4*c^-1");
}

Presentation hprime_pres() {
  return parse_presentation(
      "gens x,y,u,v,r,s ; rels [x,y], [x,u], [x,v], [y,u], [y,v], [u,v], "
      "r*x*r^-1*y^-1, r*y*r^-1*x, [r,u], [r,v], r^4*u^-1, "
      "[s,x], [s,y], [s,u], [s,v], r*s*r^-1*x*s^-1, s^2*v^-1*y^-1*x^-1");
}

// a,b translate the first coordinate by 1, i; c,d the second; e twists.
std::vector<std::pair<std::string, AffineMap>> g_generators() {
  return {{"a", translation(GaussianRational(1), GaussianRational())},
          {"b", translation(gr_i(), GaussianRational())},
          {"c", translation(GaussianRational(), GaussianRational(1))},
          {"d", translation(GaussianRational(), gr_i())},
          {"e", twist_map()}};
}

// x,y,u,v are the unit translations, r the twist, s the half-lattice glide.
std::vector<std::pair<std::string, AffineMap>> hprime_generators() {
  return {{"x", translation(GaussianRational(1), GaussianRational())},
          {"y", translation(gr_i(), GaussianRational())},
          {"u", translation(GaussianRational(), GaussianRational(1))},
          {"v", translation(GaussianRational(), gr_i())},
          {"r", twist_map()},
          {"s", translation(gr(1, 2, 1, 2), gr(0, 1, 1, 2))}};
}

AffineGroupSpec g_spec() { return {g_generators(), g_pres(), EqualityMode::Exact, nullptr}; }

AffineGroupSpec hprime_spec() {
  return {hprime_generators(), hprime_pres(), EqualityMode::Exact, nullptr};
}

// phi(w,z) = (-w + (1+i)/2, z + (1+i)/2), the free order-2 action.
AffineMap phi_map() {
  AffineMap f;
  f.m11 = GaussianRational(-1);
  f.t1 = gr(1, 2, 1, 2);
  f.t2 = gr(1, 2, 1, 2);
  return f;
}

// psi(w,z) = (i w + (1+3i)/4, z + (3+i)/4).
AffineMap psi_map() {
  AffineMap f;
  f.m11 = gr_i();
  f.t1 = gr(1, 4, 3, 4);
  f.t2 = gr(3, 4, 1, 4);
  return f;
}

// The standard involution phi1(w,z) = (-w, z + (1+i)/2).
AffineMap phi1_map() {
  AffineMap f;
  f.m11 = GaussianRational(-1);
  f.t2 = gr(1, 2, 1, 2);
  return f;
}

}  // namespace

TEST_CASE("affine words evaluate as composition") {
  auto maps = std::vector<AffineMap>{twist_map(),
                                     translation(GaussianRational(), GaussianRational(1))};
  Presentation pres = parse_presentation("gens e,c");
  // e^4 collapses to the unit z-translation.
  CHECK(eval_affine_word(maps, parse_word("e^4", pres)) == maps[1]);
  CHECK(eval_affine_word(maps, parse_word("e^4*c^-1", pres)).is_identity());
  CHECK(eval_affine_word(maps, Word{}).is_identity());
  CHECK(eval_affine_word(maps, parse_word("e*e^-1", pres)).is_identity());
  // g1*g2 is g1 o g2.
  CHECK(eval_affine_word(maps, parse_word("e*c", pres)) == compose(maps[0], maps[1]));
  CHECK_THROWS_AS(eval_affine_word(maps, Word{{3}}), BallqError);
}

TEST_CASE("four-fold twist presentation holds exactly") {
  VerifyReport report = verify_presentation(g_spec());
  CHECK(report.all_pass);
  CHECK(report.relators.size() == 11);
  for (const RelatorCheck& rc : report.relators) CHECK(rc.pass);
  CHECK(report.relators[6].word == "e*a*e^-1*b^-1");

  // The conjugation identities behind relators 7 and 8, directly.
  AffineMap a = translation(GaussianRational(1), GaussianRational());
  AffineMap b = translation(gr_i(), GaussianRational());
  CHECK(compose(compose(twist_map(), a), inverse(twist_map())) == b);
  CHECK(compose(compose(twist_map(), b), inverse(twist_map())) ==
        translation(GaussianRational(-1), GaussianRational()));
}

TEST_CASE("glide extension presentation holds exactly") {
  VerifyReport report = verify_presentation(hprime_spec());
  CHECK(report.all_pass);
  CHECK(report.relators.size() == 17);
  // The glide squares to the three unit translations.
  CHECK(report.relators[16].word == "s^2*v^-1*y^-1*x^-1");
  CHECK(report.relators[16].pass);
  AffineMap s = translation(gr(1, 2, 1, 2), gr(0, 1, 1, 2));
  CHECK(compose(s, s) == translation(gr(1, 1, 1, 1), gr(0, 1, 1, 1)));
}

TEST_CASE("quotient grading of the twist generator") {
  // Modding out the four translations sends e to a generator of Z/4: every
  // relator has e-exponent divisible by 4, and only e^4*c^-1 consumes a
  // translation generator while doing so.
  Presentation pres = g_pres();
  for (size_t idx = 0; idx < pres.relators.size(); ++idx) {
    long e_exp = 0;
    long c_exp = 0;
    for (int letter : pres.relators[idx].letters) {
      if (letter == 5) ++e_exp;
      if (letter == -5) --e_exp;
      if (letter == 3) ++c_exp;
      if (letter == -3) --c_exp;
    }
    if (idx == 10) {
      CHECK(e_exp == 4);
      CHECK(c_exp == -1);
    } else {
      CHECK(e_exp % 4 == 0);
    }
  }
}

TEST_CASE("conjugating the free involution into the standard one") {
  AffineMap conj = compose(compose(psi_map(), phi_map()), inverse(psi_map()));
  AffineMap phi1 = phi1_map();

  // As surface automorphisms the two agree...
  CHECK(same_auto_mod_lattice(AffineAuto(sq(), conj), AffineAuto(sq(), phi1)));
  CHECK(conj.m11 == phi1.m11);
  CHECK(conj.m12 == phi1.m12);
  CHECK(conj.m21 == phi1.m21);
  CHECK(conj.m22 == phi1.m22);
  CHECK(conj.t2 == phi1.t2);

  // ...but not as affine maps of the plane: the first translation picks up
  // the full period 2i, so the displayed identity is equality on the
  // surface, not in the plane.
  CHECK(conj != phi1);
  CHECK(conj.t1 - phi1.t1 == gr(0, 1, 2, 1));

  // Same period shows up comparing psi o phi with phi1 o psi.
  AffineMap left = compose(psi_map(), phi_map());
  AffineMap right = compose(phi1, psi_map());
  CHECK(same_auto_mod_lattice(AffineAuto(sq(), left), AffineAuto(sq(), right)));
  CHECK(left.t1 - right.t1 == gr(0, 1, 2, 1));
  CHECK(left.t2 == right.t2);
}

TEST_CASE("equality mode: exact versus on the surface") {
  Presentation order2 = parse_presentation("gens g ; rels g^2");
  AffineGroupSpec exact{{{"g", phi_map()}}, order2, EqualityMode::Exact, nullptr};
  // phi^2 is translation by (0, 1+i): nonzero in the plane.
  CHECK_FALSE(verify_presentation(exact).all_pass);

  AffineGroupSpec mod{{{"g", phi_map()}}, order2, EqualityMode::ModLattice, sq()};
  CHECK(verify_presentation(mod).all_pass);

  // Mod-lattice comparison requires a surface.
  AffineGroupSpec bad{{{"g", phi_map()}}, order2, EqualityMode::ModLattice, nullptr};
  CHECK_THROWS_AS(verify_presentation(bad), BallqError);

  // Every presentation generator needs a map.
  AffineGroupSpec missing{{{"a", phi_map()}}, parse_presentation("gens a,b ; rels a^2"),
                          EqualityMode::Exact, nullptr};
  CHECK_THROWS_AS(verify_presentation(missing), BallqError);
  try {
    verify_presentation(missing);
  } catch (const BallqError& e) {
    CHECK(e.kind == Err::BadFile);
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }
}

TEST_CASE("perturbed generators fail exactly the affected relators") {
  auto gens = g_generators();
  gens[2].second = translation(GaussianRational(), gr(4, 3, 0, 1));  // c off by 1/3
  AffineGroupSpec spec{gens, g_pres(), EqualityMode::Exact, nullptr};
  VerifyReport report = verify_presentation(spec);
  CHECK_FALSE(report.all_pass);
  // Translations still commute with everything they commuted with, so the
  // only broken relator is e^4 = c.
  for (size_t k = 0; k < report.relators.size(); ++k)
    CHECK(report.relators[k].pass == (k != 10));
  CHECK(report.relators[10].word == "e^4*c^-1");
}

TEST_CASE("substitution of the glide extension into the twist extension") {
  Presentation hp = hprime_pres();
  std::vector<std::pair<std::string, Word>> images = {
      {"x", parse_word("b*a^-1", g_pres())}, {"y", parse_word("a^-1*b^-1", g_pres())},
      {"u", parse_word("c", g_pres())},      {"v", parse_word("d^2", g_pres())},
      {"r", parse_word("e", g_pres())},      {"s", parse_word("d*a^-1", g_pres())}};
  VerifyReport report = verify_substitution(hp, g_spec(), images);
  CHECK(report.all_pass);
  CHECK(report.relators.size() == 17);

  // Identity substitution passes trivially.
  Presentation g = g_pres();
  std::vector<std::pair<std::string, Word>> identity;
  for (size_t k = 0; k < g.n_gens(); ++k)
    identity.emplace_back(g.generator_names[k], g.generator(k));
  CHECK(verify_substitution(g, g_spec(), identity).all_pass);

  // Swapping the images of x and y breaks the twist conjugation relator.
  auto swapped = images;
  std::swap(swapped[0].second, swapped[1].second);
  VerifyReport broken = verify_substitution(hp, g_spec(), swapped);
  CHECK_FALSE(broken.all_pass);
  CHECK_FALSE(broken.relators[6].pass);  // r*x*r^-1*y^-1

  // Every source generator needs an image.
  auto partial = images;
  partial.pop_back();
  CHECK_THROWS_AS(verify_substitution(hp, g_spec(), partial), BallqError);
}

TEST_CASE("bagnera type tags") {
  // Type 1: the free involution alone.
  CHECK(bagnera_classify({AffineAuto(sq(), phi_map())}) == 1);

  // Type 3: the order-4 twist on the index-4 sublattice surface.
  SurfacePtr aprime = make_surface(Lattice2(GaussianRational(1), gr_i()),
                                   Lattice2(GaussianRational(4), gr_i()));
  AffineMap z4;
  z4.m11 = gr_i();
  z4.t1 = gr(1, 2, 1, 2);
  z4.t2 = GaussianRational(1);
  CHECK(bagnera_classify({AffineAuto(aprime, z4)}) == 3);

  // Type 2: involution plus an order-2 translation on the first factor.
  AffineAuto half(sq(), translation(gr(1, 2, 0, 1), GaussianRational()));
  CHECK(bagnera_classify({AffineAuto(sq(), phi_map()), half}) == 2);

  // Type 4: twist and glide together, Z/4 x Z/2.
  AffineAuto r(sq(), twist_map());
  AffineAuto s(sq(), translation(gr(1, 2, 1, 2), gr(0, 1, 1, 2)));
  CHECK(bagnera_classify({r, s}) == 4);

  // Type 2 again: the index-two subaction <r^2, s>.
  AffineAuto r2(sq(), compose(twist_map(), twist_map()));
  CHECK(bagnera_classify({r2, s}) == 2);

  // Types 5, 6, 7 via an order-3 matrix mixing the coordinates.
  AffineMap m3;
  m3.m11 = GaussianRational(0);
  m3.m12 = GaussianRational(-1);
  m3.m21 = GaussianRational(1);
  m3.m22 = GaussianRational(-1);
  CHECK(bagnera_classify({AffineAuto(sq(), m3)}) == 5);

  AffineAuto t3(sq(), translation(gr(1, 3, 0, 1), gr(2, 3, 0, 1)));
  CHECK(bagnera_classify({AffineAuto(sq(), m3), t3}) == 6);

  AffineMap m6;
  m6.m11 = GaussianRational(0);
  m6.m12 = GaussianRational(1);
  m6.m21 = GaussianRational(-1);
  m6.m22 = GaussianRational(1);
  CHECK(bagnera_classify({AffineAuto(sq(), m6)}) == 7);
}

TEST_CASE("bagnera rejections") {
  // The trivial group is not in the table.
  CHECK_THROWS_AS(bagnera_classify({AffineAuto(sq(), AffineMap{})}), BallqError);
  try {
    bagnera_classify({AffineAuto(sq(), AffineMap{})});
  } catch (const BallqError& e) {
    CHECK(e.kind == Err::NotInTable);
  }

  // Nonabelian order 6 (the coordinate swap inverts the rotation).
  AffineMap m3;
  m3.m12 = GaussianRational(-1);
  m3.m21 = GaussianRational(1);
  m3.m22 = GaussianRational(-1);
  m3.m11 = GaussianRational(0);
  AffineMap swap;
  swap.m11 = GaussianRational(0);
  swap.m12 = GaussianRational(1);
  swap.m21 = GaussianRational(1);
  swap.m22 = GaussianRational(0);
  CHECK_THROWS_AS(bagnera_classify({AffineAuto(sq(), m3), AffineAuto(sq(), swap)}),
                  BallqError);

  // Z/2 x Z/2 x Z/2 is order 8 but not Z/4 x Z/2.
  AffineAuto h1(sq(), translation(gr(1, 2, 0, 1), GaussianRational()));
  AffineAuto h2(sq(), translation(gr(0, 1, 1, 2), GaussianRational()));
  AffineAuto h3(sq(), translation(GaussianRational(), gr(1, 2, 0, 1)));
  CHECK_THROWS_AS(bagnera_classify({h1, h2, h3}), BallqError);

  // Infinite order mod the lattice: never finishes closing.
  AffineMap shear;
  shear.m12 = GaussianRational(1);
  CHECK_THROWS_AS(bagnera_classify({AffineAuto(sq(), shear)}), BallqError);
  try {
    bagnera_classify({AffineAuto(sq(), shear)});
  } catch (const BallqError& e) {
    CHECK(e.kind == Err::NotFinite);
  }
}

TEST_CASE("bagnera is conjugation invariant") {
  AffineAuto r(sq(), twist_map());
  AffineAuto s(sq(), translation(gr(1, 2, 1, 2), gr(0, 1, 1, 2)));
  AffineMap psi = psi_map();
  auto conjugate = [&](const AffineAuto& g) {
    return AffineAuto(sq(), compose(compose(psi, g.map), inverse(psi)));
  };
  CHECK(bagnera_classify({conjugate(r), conjugate(s)}) == 4);
  CHECK(bagnera_classify({conjugate(AffineAuto(sq(), phi_map()))}) == 1);

  // Translation conjugation as well.
  AffineMap shift = AffineMap::translation(gr(3, 4, 1, 4), gr(1, 4, 0, 1));
  auto shifted = [&](const AffineAuto& g) {
    return AffineAuto(sq(), compose(compose(shift, g.map), inverse(shift)));
  };
  CHECK(bagnera_classify({shifted(r), shifted(s)}) == 4);
}
