#include "ballq/examples.hpp"

namespace ballq {
namespace {

GaussianRational gr(long rn, long rd, long in, long id) {
  return {Rational(rn, rd), Rational(in, id)};
}

GaussianInteger gi(long r, long i) { return {Int(r), Int(i)}; }

struct Builder {
  Arrangement arr;

  void line(const char* name, GaussianInteger a, GaussianInteger b, GaussianRational c) {
    arr.names.emplace_back(name);
    arr.lines.emplace_back(arr.surface, a, b, c);
  }
};

}  // namespace

Arrangement z2_arrangement() {
  Builder b;
  b.arr.surface = square_gaussian_surface();
  const GaussianRational h = gr(1, 2, 1, 2);
  const GaussianRational zero = gr(0, 1, 0, 1);
  // (z, z), (iz + h, z), (-z, z), (-iz + h, z) as a*w + b*z = c
  b.line("E1", gi(1, 0), gi(-1, 0), zero);
  b.line("E2", gi(1, 0), gi(0, -1), h);
  b.line("E3", gi(1, 0), gi(1, 0), zero);
  b.line("E4", gi(1, 0), gi(0, 1), h);
  // horizontal fibers (w, 0), (w, h); vertical fibers (0, z), (h, z)
  b.line("F1", gi(0, 0), gi(1, 0), zero);
  b.line("F2", gi(0, 0), gi(1, 0), h);
  b.line("F3", gi(1, 0), gi(0, 0), zero);
  b.line("F4", gi(1, 0), gi(0, 0), h);

  AffineMap phi;
  phi.m11 = gr(-1, 1, 0, 1);
  phi.t1 = h;
  phi.t2 = h;
  AffineMap psi;
  psi.m11 = gr(0, 1, 1, 1);
  psi.t1 = gr(1, 4, 3, 4);
  psi.t2 = gr(3, 4, 1, 4);
  AffineMap phi1;
  phi1.m11 = gr(-1, 1, 0, 1);
  phi1.t2 = h;
  b.arr.autos = {{"phi", phi}, {"psi", psi}, {"phi1", phi1}};
  b.arr.groups = {{"bielliptic", {"phi"}}};
  return b.arr;
}

Arrangement z4_arrangement() {
  Builder b;
  b.arr.surface = make_surface(Lattice2(gr(1, 1, 0, 1), gr(0, 1, 1, 1)),
                               Lattice2(gr(4, 1, 0, 1), gr(0, 1, 1, 1)));
  const GaussianRational h = gr(1, 2, 1, 2);
  const GaussianRational zero = gr(0, 1, 0, 1);
  b.line("E1", gi(1, 0), gi(-1, 0), zero);
  b.line("E2", gi(1, 0), gi(0, -1), h);
  b.line("E3", gi(1, 0), gi(1, 0), zero);
  b.line("E4", gi(1, 0), gi(0, 1), h);
  // horizontal fibers z = j and z = j + (1+i)/2 for j = 0..3
  for (long j = 0; j < 4; ++j) {
    std::string name = "F1_" + std::to_string(j);
    b.line(name.c_str(), gi(0, 0), gi(1, 0), gr(j, 1, 0, 1));
  }
  for (long j = 0; j < 4; ++j) {
    std::string name = "F2_" + std::to_string(j);
    b.line(name.c_str(), gi(0, 0), gi(1, 0), gr(2 * j + 1, 2, 1, 2));
  }
  // vertical fibers w = 0 and w = (1+i)/2
  b.line("F3", gi(1, 0), gi(0, 0), zero);
  b.line("F4", gi(1, 0), gi(0, 0), h);

  AffineMap phi;
  phi.m11 = gr(0, 1, 1, 1);
  phi.t1 = h;
  phi.t2 = gr(1, 1, 0, 1);
  b.arr.autos = {{"phi", phi}};
  b.arr.groups = {{"bielliptic", {"phi"}}};
  return b.arr;
}

Arrangement holzapfel_arrangement() {
  Builder b;
  b.arr.surface = square_gaussian_surface();
  const GaussianRational zero = gr(0, 1, 0, 1);
  // (z, z), (-z, z), (iz, z), (-iz, z)
  b.line("E1", gi(1, 0), gi(-1, 0), zero);
  b.line("E2", gi(1, 0), gi(1, 0), zero);
  b.line("E3", gi(1, 0), gi(0, -1), zero);
  b.line("E4", gi(1, 0), gi(0, 1), zero);
  // (w, 1/2), (w, i/2), (1/2, z), (i/2, z)
  b.line("F1", gi(0, 0), gi(1, 0), gr(1, 2, 0, 1));
  b.line("F2", gi(0, 0), gi(1, 0), gr(0, 1, 1, 2));
  b.line("F3", gi(1, 0), gi(0, 0), gr(1, 2, 0, 1));
  b.line("F4", gi(1, 0), gi(0, 0), gr(0, 1, 1, 2));
  return b.arr;
}

}  // namespace ballq
