#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballq/gaussian.hpp"
#include "ballq/intmatrix.hpp"

namespace ballq {

// Rank-2 lattice in C spanned by w1, w2 (R-linearly independent).
struct Lattice2 {
  GaussianRational w1;
  GaussianRational w2;

  Lattice2() = default;
  Lattice2(GaussianRational a, GaussianRational b);

  // Coordinates of x in the (w1, w2) basis; always rational for Q(i) input.
  std::pair<Rational, Rational> coords(const GaussianRational& x) const;
  bool contains(const GaussianRational& x) const;
  // Representative of x mod the lattice with coordinates in [0,1).
  GaussianRational reduce(const GaussianRational& x) const;

  friend bool operator==(const Lattice2& a, const Lattice2& b) = default;
};

// Product abelian surface C^2 / (lambda1 x lambda2).
struct AbelianSurface {
  Lattice2 lambda1;  // w-coordinate periods
  Lattice2 lambda2;  // z-coordinate periods
  friend bool operator==(const AbelianSurface& a, const AbelianSurface& b) = default;
};

using SurfacePtr = std::shared_ptr<const AbelianSurface>;

SurfacePtr make_surface(Lattice2 l1, Lattice2 l2);
// Both coordinate lattices Z[i]; the default playground.
SurfacePtr square_gaussian_surface();

void require_same_surface(const SurfacePtr& a, const SurfacePtr& b, const char* what);

// Point of the surface, stored by its canonical representative: lattice-basis
// coordinates of each component lie in [0,1).
struct TorusPoint {
  SurfacePtr surface;
  GaussianRational w;
  GaussianRational z;

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
    return a.w == b.w && a.z == b.z && *a.surface == *b.surface;
  }
  // Order ignores the surface; callers only compare points on one surface.
  friend std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.z <=> b.z;
  }
};

TorusPoint make_point(SurfacePtr s, const GaussianRational& w, const GaussianRational& z);
std::string to_string(const TorusPoint& p);

// Elliptic curve {a*w + b*z = c mod (a*lambda1 + b*lambda2)} on a surface.
// Canonical form: (a, b) divided by their Gaussian gcd, then scaled by the
// unit in {1, i, -1, -i} that lexicographically maximizes
// (re a, im a, re b, im b); c is the canonical residue mod the value lattice.
struct TorusLine {
  SurfacePtr surface;
  GaussianInteger a;
  GaussianInteger b;
  GaussianRational c;
  Lattice2 value_lattice;  // a*lambda1 + b*lambda2

  TorusLine() = default;
  TorusLine(SurfacePtr s, GaussianInteger a_, GaussianInteger b_, GaussianRational c_);

  friend bool operator==(const TorusLine& x, const TorusLine& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && *x.surface == *y.surface;
  }
  friend std::strong_ordering operator<=>(const TorusLine& x, const TorusLine& y) {
    if (auto r = x.a <=> y.a; r != 0) return r;
    if (auto r = x.b <=> y.b; r != 0) return r;
    return x.c <=> y.c;
  }
};

std::string to_string(const TorusLine& l);

bool point_on_line(const TorusLine& l, const TorusPoint& p);
bool parallel(const TorusLine& l1, const TorusLine& l2);

// All intersection points of two distinct lines (empty when parallel).
std::vector<TorusPoint> intersect_lines(const TorusLine& l1, const TorusLine& l2);
// Homological intersection number; equals N(a1*b2 - a2*b1) when both
// lattices are Z[i], and |det| of the realified 4x4 system in general.
Int intersection_number(const TorusLine& l1, const TorusLine& l2);

// Affine self-map of C^2: (w, z) -> M * (w, z) + t, M invertible over Q(i).
struct AffineMap {
  GaussianRational m11{1}, m12{0}, m21{0}, m22{1};
  GaussianRational t1{0}, t2{0};

  static AffineMap translation(const GaussianRational& a, const GaussianRational& b);
  std::pair<GaussianRational, GaussianRational> apply(const GaussianRational& w,
                                                      const GaussianRational& z) const;
  bool is_identity() const;
  bool linear_is_identity() const;
  friend bool operator==(const AffineMap& a, const AffineMap& b) = default;
};

// Function composition: (f * g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);
std::string to_string(const AffineMap& f);

// Automorphism of an abelian surface: the linear part maps lambda1 x lambda2
// onto itself (integral realified matrix with |det| = 1, checked).
struct AffineAuto {
  SurfacePtr surface;
  AffineMap map;

  AffineAuto() = default;
  AffineAuto(SurfacePtr s, AffineMap f);

  friend bool operator==(const AffineAuto& a, const AffineAuto& b) {
    return a.map == b.map && *a.surface == *b.surface;
  }
};

// Equality as maps of the surface (translations compared mod the lattices).
bool same_auto_mod_lattice(const AffineAuto& f, const AffineAuto& g);
// Normalize the translation part to canonical lattice residues.
AffineAuto reduce_auto(const AffineAuto& f);

TorusPoint image_point(const AffineAuto& f, const TorusPoint& p);
TorusLine image_line(const AffineAuto& f, const TorusLine& l);

// Order of the automorphism modulo the lattices; nullopt when the linear
// part is not of finite order.
std::optional<Int> auto_order(const AffineAuto& f);

// Closure of the generators under composition mod lattice, identity first,
// breadth-first discovery order. Err::NotFinite past the cap.
std::vector<AffineAuto> generate_group(const std::vector<AffineAuto>& gens, size_t cap = 512);

struct FreeReport {
  bool free_action = true;
  size_t element_index = 0;   // offending element when not free
  TorusPoint fixed_point;     // witness when not free
};

// elements must form a finite group mod lattice (identity included);
// Err::NotAGroup otherwise. Tests every non-identity element for fixed points.
FreeReport is_free_action(const std::vector<AffineAuto>& elements);

// Partition points into group orbits; orbits sorted by their least member,
// members sorted ascending. Every orbit of a free action has |group| points.
std::vector<std::vector<TorusPoint>> orbit_partition(const std::vector<AffineAuto>& group,
                                                     const std::vector<TorusPoint>& points);

// Named arrangement of lines with optional named automorphisms and groups.
struct Arrangement {
  SurfacePtr surface;
  std::vector<std::string> names;
  std::vector<TorusLine> lines;
  std::vector<std::pair<std::string, AffineMap>> autos;
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;

  const TorusLine& line(const std::string& name) const;
  bool has_line(const TorusLine& l) const;
  std::string name_of(const TorusLine& l) const;
  const AffineMap& auto_map(const std::string& name) const;
  const std::vector<std::string>& group_gens(const std::string& name) const;
};

// Shift every line by the translation (t1, t2) (names preserved).
Arrangement translate_arrangement(const Arrangement& arr, const GaussianRational& t1,
                                  const GaussianRational& t2);
// Equality of underlying line sets, ignoring names.
bool same_line_set(const Arrangement& a, const Arrangement& b);

}  // namespace ballq
