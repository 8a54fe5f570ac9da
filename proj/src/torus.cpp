#include "ballq/torus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ballq/congruence.hpp"

namespace ballq {

namespace {

Rational basis_det(const GaussianRational& w1, const GaussianRational& w2) {
  return w1.re * w2.im - w2.re * w1.im;
}

// The four basis vectors of lambda1 x lambda2 as (w, z) pairs.
std::array<std::pair<GaussianRational, GaussianRational>, 4> surface_basis(
    const AbelianSurface& s) {
  return {{{s.lambda1.w1, GaussianRational()},
           {s.lambda1.w2, GaussianRational()},
           {GaussianRational(), s.lambda2.w1},
           {GaussianRational(), s.lambda2.w2}}};
}

// a * lambda1 + b * lambda2 as a lattice; rank 2 whenever (a, b) != (0, 0).
Lattice2 value_lattice_of(const AbelianSurface& s, const GaussianInteger& a,
                          const GaussianInteger& b) {
  std::vector<GaussianRational> gens;
  if (!a.is_zero()) {
    gens.push_back(GaussianRational(a) * s.lambda1.w1);
    gens.push_back(GaussianRational(a) * s.lambda1.w2);
  }
  if (!b.is_zero()) {
    gens.push_back(GaussianRational(b) * s.lambda2.w1);
    gens.push_back(GaussianRational(b) * s.lambda2.w2);
  }
  Int d(1);
  for (const auto& g : gens) d = lcm_int(lcm_int(d, g.re.den), g.im.den);
  IntMatrix m(gens.size(), 2);
  for (size_t i = 0; i < gens.size(); ++i) {
    m.at(i, 0) = gens[i].re.num * (d / gens[i].re.den);
    m.at(i, 1) = gens[i].im.num * (d / gens[i].im.den);
  }
  IntMatrix h = row_lattice_basis(m);
  check(h.rows == 2, Err::Degenerate, "value lattice of the line is not full rank");
  return Lattice2(GaussianRational(Rational(h.at(0, 0), d), Rational(h.at(0, 1), d)),
                  GaussianRational(Rational(h.at(1, 0), d), Rational(h.at(1, 1), d)));
}

// Realified linear part, columns = lattice coordinates of M applied to the
// four surface basis vectors. Integral exactly when M maps the lattice into
// itself.
IntMatrix realified_linear(const AbelianSurface& s, const AffineMap& f) {
  auto basis = surface_basis(s);
  IntMatrix m(4, 4);
  for (size_t j = 0; j < 4; ++j) {
    GaussianRational w = f.m11 * basis[j].first + f.m12 * basis[j].second;
    GaussianRational z = f.m21 * basis[j].first + f.m22 * basis[j].second;
    auto [x1, x2] = s.lambda1.coords(w);
    auto [x3, x4] = s.lambda2.coords(z);
    const Rational* co[4] = {&x1, &x2, &x3, &x4};
    for (size_t i = 0; i < 4; ++i) {
      check(co[i]->is_integer(), Err::NotStable,
            "linear part does not preserve the period lattice");
      m.at(i, j) = co[i]->num;
    }
  }
  return m;
}

// Two matrix rows + right-hand entries expressing membership of a surface
// point in the line, in value-lattice coordinates. Integral by construction.
void line_rows(const TorusLine& l, IntMatrix& m, std::vector<Rational>& rhs, size_t row0) {
  auto basis = surface_basis(*l.surface);
  GaussianRational ga(l.a), gb(l.b);
  for (size_t j = 0; j < 4; ++j) {
    GaussianRational val = ga * basis[j].first + gb * basis[j].second;
    auto [x, y] = l.value_lattice.coords(val);
    check(x.is_integer() && y.is_integer(), Err::Internal,
          "line membership system must be integral");
    m.at(row0, j) = x.num;
    m.at(row0 + 1, j) = y.num;
  }
  auto [cx, cy] = l.value_lattice.coords(l.c);
  rhs[row0] = cx;
  rhs[row0 + 1] = cy;
}

TorusPoint point_from_coords(const SurfacePtr& s, const std::vector<Rational>& x) {
  GaussianRational w =
      GaussianRational(x[0]) * s->lambda1.w1 + GaussianRational(x[1]) * s->lambda1.w2;
  GaussianRational z =
      GaussianRational(x[2]) * s->lambda2.w1 + GaussianRational(x[3]) * s->lambda2.w2;
  return make_point(s, w, z);
}

}  // namespace

Lattice2::Lattice2(GaussianRational a, GaussianRational b) : w1(std::move(a)), w2(std::move(b)) {
  check(!basis_det(w1, w2).is_zero(), Err::Degenerate,
        "lattice basis vectors are R-linearly dependent");
}

std::pair<Rational, Rational> Lattice2::coords(const GaussianRational& x) const {
  Rational d = basis_det(w1, w2);
  return {(x.re * w2.im - w2.re * x.im) / d, (w1.re * x.im - x.re * w1.im) / d};
}

bool Lattice2::contains(const GaussianRational& x) const {
  auto [p, q] = coords(x);
  return p.is_integer() && q.is_integer();
}

GaussianRational Lattice2::reduce(const GaussianRational& x) const {
  auto [p, q] = coords(x);
  return GaussianRational(frac(p)) * w1 + GaussianRational(frac(q)) * w2;
}

SurfacePtr make_surface(Lattice2 l1, Lattice2 l2) {
  return std::make_shared<AbelianSurface>(AbelianSurface{std::move(l1), std::move(l2)});
}

SurfacePtr square_gaussian_surface() {
  Lattice2 zi(GaussianRational(1), gr_i());
  return make_surface(zi, zi);
}

void require_same_surface(const SurfacePtr& a, const SurfacePtr& b, const char* what) {
  check(a && b && *a == *b, Err::DifferentSurface,
        std::string(what) + " requires objects on one surface");
}

TorusPoint make_point(SurfacePtr s, const GaussianRational& w, const GaussianRational& z) {
  TorusPoint p;
  p.w = s->lambda1.reduce(w);
  p.z = s->lambda2.reduce(z);
  p.surface = std::move(s);
  return p;
}

std::string to_string(const TorusPoint& p) {
  return "(" + to_string(p.w) + ", " + to_string(p.z) + ")";
}

TorusLine::TorusLine(SurfacePtr s, GaussianInteger a_, GaussianInteger b_, GaussianRational c_)
    : surface(std::move(s)), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  check(!(a.is_zero() && b.is_zero()), Err::Degenerate, "line requires (a, b) != (0, 0)");
  GaussianInteger g = gauss_gcd(a, b);
  a = gauss_exact_div(a, g);
  b = gauss_exact_div(b, g);
  c = c / GaussianRational(g);
  GaussianInteger ua = a, ub = b;
  GaussianRational uc = c;
  const GaussianInteger unit_i(Int(0), Int(1));
  for (int k = 0; k < 3; ++k) {
    ua = ua * unit_i;
    ub = ub * unit_i;
    uc = uc * GaussianRational(unit_i);
    if (std::pair(ua, ub) > std::pair(a, b)) {
      a = ua;
      b = ub;
      c = uc;
    }
  }
  value_lattice = value_lattice_of(*surface, a, b);
  c = value_lattice.reduce(c);
}

std::string to_string(const TorusLine& l) {
  return "a=" + to_string(l.a) + " b=" + to_string(l.b) + " c=" + to_string(l.c);
}

bool point_on_line(const TorusLine& l, const TorusPoint& p) {
  require_same_surface(l.surface, p.surface, "line membership");
  GaussianRational val = GaussianRational(l.a) * p.w + GaussianRational(l.b) * p.z;
  return l.value_lattice.contains(val - l.c);
}

bool parallel(const TorusLine& l1, const TorusLine& l2) {
  require_same_surface(l1.surface, l2.surface, "parallelism");
  return (l1.a * l2.b - l2.a * l1.b).is_zero();
}

std::vector<TorusPoint> intersect_lines(const TorusLine& l1, const TorusLine& l2) {
  require_same_surface(l1.surface, l2.surface, "line intersection");
  check(!(l1 == l2), Err::SameCurve, "intersection requires two distinct curves");
  if (parallel(l1, l2)) return {};
  IntMatrix m(4, 4);
  std::vector<Rational> rhs(4);
  line_rows(l1, m, rhs, 0);
  line_rows(l2, m, rhs, 2);
  SolutionSet sol = solve_torus_congruence(m, rhs);
  check(sol.kind == SolutionSet::Kind::Finite, Err::Internal,
        "transversal intersection system must be finite");
  std::vector<TorusPoint> pts;
  pts.reserve(sol.points.size());
  for (const auto& x : sol.points) pts.push_back(point_from_coords(l1.surface, x));
  std::sort(pts.begin(), pts.end());
  return pts;
}

Int intersection_number(const TorusLine& l1, const TorusLine& l2) {
  require_same_surface(l1.surface, l2.surface, "intersection number");
  check(!(l1 == l2), Err::SameCurve, "intersection number requires two distinct curves");
  if (parallel(l1, l2)) return 0;
  IntMatrix m(4, 4);
  std::vector<Rational> rhs(4);
  line_rows(l1, m, rhs, 0);
  line_rows(l2, m, rhs, 2);
  return abs_int(det(m));
}

AffineMap AffineMap::translation(const GaussianRational& a, const GaussianRational& b) {
  AffineMap f;
  f.t1 = a;
  f.t2 = b;
  return f;
}

std::pair<GaussianRational, GaussianRational> AffineMap::apply(const GaussianRational& w,
                                                               const GaussianRational& z) const {
  return {m11 * w + m12 * z + t1, m21 * w + m22 * z + t2};
}

bool AffineMap::linear_is_identity() const {
  return m11 == GaussianRational(1) && m22 == GaussianRational(1) && m12.is_zero() &&
         m21.is_zero();
}

bool AffineMap::is_identity() const {
  return linear_is_identity() && t1.is_zero() && t2.is_zero();
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  AffineMap h;
  h.m11 = f.m11 * g.m11 + f.m12 * g.m21;
  h.m12 = f.m11 * g.m12 + f.m12 * g.m22;
  h.m21 = f.m21 * g.m11 + f.m22 * g.m21;
  h.m22 = f.m21 * g.m12 + f.m22 * g.m22;
  h.t1 = f.m11 * g.t1 + f.m12 * g.t2 + f.t1;
  h.t2 = f.m21 * g.t1 + f.m22 * g.t2 + f.t2;
  return h;
}

AffineMap inverse(const AffineMap& f) {
  GaussianRational d = f.m11 * f.m22 - f.m12 * f.m21;
  check(!d.is_zero(), Err::Degenerate, "affine map is not invertible");
  AffineMap g;
  g.m11 = f.m22 / d;
  g.m12 = -f.m12 / d;
  g.m21 = -f.m21 / d;
  g.m22 = f.m11 / d;
  g.t1 = -(g.m11 * f.t1 + g.m12 * f.t2);
  g.t2 = -(g.m21 * f.t1 + g.m22 * f.t2);
  return g;
}

std::string to_string(const AffineMap& f) {
  return "m=[" + to_string(f.m11) + "," + to_string(f.m12) + ";" + to_string(f.m21) + "," +
         to_string(f.m22) + "] t=(" + to_string(f.t1) + "," + to_string(f.t2) + ")";
}

AffineAuto::AffineAuto(SurfacePtr s, AffineMap f) : surface(std::move(s)), map(std::move(f)) {
  IntMatrix b = realified_linear(*surface, map);
  check(abs_int(det(b)) == 1, Err::NotStable,
        "linear part does not map the period lattice onto itself");
}

bool same_auto_mod_lattice(const AffineAuto& f, const AffineAuto& g) {
  require_same_surface(f.surface, g.surface, "automorphism comparison");
  return f.map.m11 == g.map.m11 && f.map.m12 == g.map.m12 && f.map.m21 == g.map.m21 &&
         f.map.m22 == g.map.m22 && f.surface->lambda1.contains(f.map.t1 - g.map.t1) &&
         f.surface->lambda2.contains(f.map.t2 - g.map.t2);
}

AffineAuto reduce_auto(const AffineAuto& f) {
  AffineMap m = f.map;
  m.t1 = f.surface->lambda1.reduce(m.t1);
  m.t2 = f.surface->lambda2.reduce(m.t2);
  return AffineAuto(f.surface, std::move(m));
}

TorusPoint image_point(const AffineAuto& f, const TorusPoint& p) {
  require_same_surface(f.surface, p.surface, "point image");
  auto [w, z] = f.map.apply(p.w, p.z);
  return make_point(f.surface, w, z);
}

TorusLine image_line(const AffineAuto& f, const TorusLine& l) {
  require_same_surface(f.surface, l.surface, "line image");
  const AffineMap& m = f.map;
  // direction (b, -a) is transported by the linear part; the new normal is
  // perpendicular to the transported direction
  GaussianRational dw(l.b), dz = -GaussianRational(l.a);
  GaussianRational p = m.m11 * dw + m.m12 * dz;
  GaussianRational q = m.m21 * dw + m.m22 * dz;
  Int d(1);
  for (const Rational* r : {&q.re, &q.im, &p.re, &p.im}) d = lcm_int(d, r->den);
  GaussianInteger na(q.re.num * (d / q.re.den), q.im.num * (d / q.im.den));
  GaussianInteger nb(-(p.re.num * (d / p.re.den)), -(p.im.num * (d / p.im.den)));
  GaussianRational w0, z0;
  if (!l.a.is_zero()) {
    w0 = l.c / GaussianRational(l.a);
  } else {
    z0 = l.c / GaussianRational(l.b);
  }
  auto [w1, z1] = m.apply(w0, z0);
  GaussianRational nc = GaussianRational(na) * w1 + GaussianRational(nb) * z1;
  return TorusLine(f.surface, na, nb, nc);
}

std::optional<Int> auto_order(const AffineAuto& f) {
  AffineMap lin = f.map;
  lin.t1 = GaussianRational();
  lin.t2 = GaussianRational();
  AffineMap acc = lin;
  Int n1 = 1;
  while (!acc.linear_is_identity()) {
    acc = compose(acc, lin);
    ++n1;
    // a finite-order lattice automorphism of rank 4 has order at most 12
    if (n1 > 24) return std::nullopt;
  }
  AffineMap pw;
  for (Int k = 0; k < n1; ++k) pw = compose(pw, f.map);
  auto [a1, a2] = f.surface->lambda1.coords(pw.t1);
  auto [b1, b2] = f.surface->lambda2.coords(pw.t2);
  return n1 * lcm_int(lcm_int(a1.den, a2.den), lcm_int(b1.den, b2.den));
}

std::vector<AffineAuto> generate_group(const std::vector<AffineAuto>& gens, size_t cap) {
  check(!gens.empty(), Err::Degenerate, "group closure requires at least one generator");
  SurfacePtr s = gens.front().surface;
  for (const auto& g : gens) require_same_surface(s, g.surface, "group closure");
  std::vector<AffineAuto> elems;
  std::map<std::string, size_t> seen;
  auto push = [&](const AffineAuto& e) {
    std::string key = to_string(e.map);
    if (seen.count(key)) return false;
    seen.emplace(std::move(key), elems.size());
    elems.push_back(e);
    return true;
  };
  push(reduce_auto(AffineAuto(s, AffineMap{})));
  for (size_t head = 0; head < elems.size(); ++head) {
    AffineAuto cur = elems[head];
    for (const auto& g : gens) {
      AffineAuto next = reduce_auto(AffineAuto(s, compose(cur.map, g.map)));
      if (push(next))
        check(elems.size() <= cap, Err::NotFinite,
              "group closure exceeded " + std::to_string(cap) + " elements");
    }
  }
  return elems;
}

FreeReport is_free_action(const std::vector<AffineAuto>& elements) {
  check(!elements.empty(), Err::NotAGroup, "empty element list");
  SurfacePtr s = elements.front().surface;
  std::set<std::string> keys;
  for (const auto& e : elements) {
    require_same_surface(s, e.surface, "group action");
    keys.insert(to_string(reduce_auto(e).map));
  }
  check(keys.size() == elements.size(), Err::NotAGroup, "element list has repeats mod lattice");
  AffineAuto id = reduce_auto(AffineAuto(s, AffineMap{}));
  check(keys.count(to_string(id.map)) == 1, Err::NotAGroup, "identity is missing");
  for (const auto& e : elements)
    for (const auto& g : elements) {
      AffineAuto prod = reduce_auto(AffineAuto(s, compose(e.map, g.map)));
      check(keys.count(to_string(prod.map)) == 1, Err::NotAGroup,
            "element list is not closed under composition");
    }
  FreeReport rep;
  for (size_t idx = 0; idx < elements.size(); ++idx) {
    const AffineAuto e = reduce_auto(elements[idx]);
    if (e.map.is_identity()) continue;
    // fixed points solve (M - I) x = -t against the lattice
    IntMatrix b = realified_linear(*s, e.map);
    for (size_t i = 0; i < 4; ++i) b.at(i, i) -= 1;
    auto [r1, r2] = s->lambda1.coords(-e.map.t1);
    auto [r3, r4] = s->lambda2.coords(-e.map.t2);
    SolutionSet sol = solve_torus_congruence(b, {r1, r2, r3, r4});
    if (sol.solvable()) {
      rep.free_action = false;
      rep.element_index = idx;
      rep.fixed_point = point_from_coords(
          s, sol.kind == SolutionSet::Kind::Finite ? sol.points.front() : sol.particular);
      return rep;
    }
  }
  return rep;
}

std::vector<std::vector<TorusPoint>> orbit_partition(const std::vector<AffineAuto>& group,
                                                     const std::vector<TorusPoint>& points) {
  std::map<TorusPoint, std::set<TorusPoint>> orbits;
  std::set<TorusPoint> used;
  for (const auto& p0 : points) {
    TorusPoint p = make_point(p0.surface, p0.w, p0.z);
    if (used.count(p)) continue;
    std::set<TorusPoint> orb;
    for (const auto& g : group) orb.insert(image_point(g, p));
    used.insert(orb.begin(), orb.end());
    orbits.emplace(*orb.begin(), std::move(orb));
  }
  std::vector<std::vector<TorusPoint>> out;
  out.reserve(orbits.size());
  for (auto& [key, orb] : orbits) out.emplace_back(orb.begin(), orb.end());
  return out;
}

const TorusLine& Arrangement::line(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return lines[i];
  fail(Err::BadFile, "unknown line '" + name + "'");
}

bool Arrangement::has_line(const TorusLine& l) const {
  return std::find(lines.begin(), lines.end(), l) != lines.end();
}

std::string Arrangement::name_of(const TorusLine& l) const {
  for (size_t i = 0; i < lines.size(); ++i)
    if (lines[i] == l) return names[i];
  fail(Err::Internal, "line has no name in the arrangement");
}

const AffineMap& Arrangement::auto_map(const std::string& name) const {
  for (const auto& [n, f] : autos)
    if (n == name) return f;
  fail(Err::BadFile, "unknown automorphism '" + name + "'");
}

const std::vector<std::string>& Arrangement::group_gens(const std::string& name) const {
  for (const auto& [n, g] : groups)
    if (n == name) return g;
  fail(Err::BadFile, "unknown group '" + name + "'");
}

Arrangement translate_arrangement(const Arrangement& arr, const GaussianRational& t1,
                                  const GaussianRational& t2) {
  Arrangement out = arr;
  out.lines.clear();
  for (const auto& l : arr.lines) {
    GaussianRational nc = l.c + GaussianRational(l.a) * t1 + GaussianRational(l.b) * t2;
    out.lines.emplace_back(arr.surface, l.a, l.b, nc);
  }
  return out;
}

bool same_line_set(const Arrangement& a, const Arrangement& b) {
  if (a.lines.size() != b.lines.size()) return false;
  std::vector<TorusLine> x = a.lines, y = b.lines;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace ballq
