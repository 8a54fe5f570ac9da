#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballq/numeric.hpp"
#include "ballq/quotient.hpp"

namespace ballq {

enum class BaseKind { Abelian, Bielliptic, Explicit };

// Minimal surface the blowups start from. Abelian and bielliptic bases have
// K^2 = e = 0 (K numerically trivial); explicit bases carry their own pair.
struct BaseSurface {
  BaseKind kind = BaseKind::Abelian;
  Int group_order{0};  // bielliptic only: order of the classifying group
  Int k_sq{0};
  Int euler{0};
};

BaseSurface abelian_base();
BaseSurface bielliptic_base(const Int& group_order);
BaseSurface explicit_base(const Int& k_sq, const Int& euler);

enum class GenusClass { Elliptic, Rational };

// Curve on the blown-up surface. self_int is the proper-transform value;
// point_multiplicities records branch counts m >= 1 at marked points of the
// base (unrecorded points mean m = 0).
struct CurveRecord {
  std::string name;
  Int self_int{0};
  GenusClass normalization_genus = GenusClass::Elliptic;
  std::map<std::string, Int> point_multiplicities;
};

// Bookkeeping for a chain of blowups at distinct base points.
struct BlowupLedger {
  BaseSurface base;
  std::vector<std::string> blown_points;  // ordered, distinct
  std::vector<CurveRecord> curves;
  std::vector<std::string> boundary;      // compactification divisor members
  // Pairwise intersection numbers on the base (before any blowup); keys
  // sorted pairs. Empty when unknown (pair residual checks then impossible).
  std::map<std::pair<std::string, std::string>, Int> pair_int;

  const CurveRecord& curve(const std::string& name) const;
  bool is_blown(const std::string& point_id) const;
  bool is_boundary(const std::string& name) const;
};

struct LogChernReport {
  Int c1sq_log{0};
  Int c2_log{0};
  bool bmy_equal = false;
  Int cusp_count{0};
  std::vector<std::string> notes;
};

struct DisjointnessReport {
  bool ok = true;
  std::string kind;    // "pair" or "smoothness" when not ok
  std::string first;   // curve name
  std::string second;  // second curve (pair) or point id (smoothness)
  Int residual{0};     // leftover intersection for the pair kind
};

enum class Proportionality { Strict, EqualityTotallyGeodesic, Violated };

struct ProportionalityVerdict {
  Proportionality status = Proportionality::Strict;
  Rational lhs;  // 3 C^2
  Rational rhs;  // -K.C + sum(2 m_i - 3)
  std::string note;
};

// Curve data for the proportionality bound. m_list lists the multiplicities
// of the boundary intersections (empty = compact curve); rational declares
// the normalization rational, in which case K.C is forced by adjunction.
struct ProportionalityRecord {
  Int c_sq{0};
  Int k_c{0};
  std::vector<Int> m_list;
  bool rational = false;
};

ProportionalityRecord rational_record(const Int& c_sq, const std::vector<Int>& m_list);

struct CurveClass {
  Int k_c;  // K.C
  Int d_c;  // D.C
};

struct CharNumbers {
  Int k_sq{0};
  Int chi{0};
  Int p_g{0};
};

// (pi^* G)^2 / |group| for the etale quotient: the sum of all ordered
// pairwise upstairs intersection numbers of G's preimages (self terms are
// zero for torus lines), divided exactly by the group order.
// Err::NonIntegralSelfIntersection when the division fails.
Int selfint_via_pullback(const std::string& image_curve, const QuotientConfig& cfg);

// c_sq - sum m_i^2 for blowups at the referenced points, each of which must
// be blown in the ledger (Err::UnblownPoint otherwise).
Int proper_transform_selfint(const BlowupLedger& ledger, const Int& c_sq,
                             const std::vector<std::pair<std::string, Int>>& mults);

// Blow up every singular point of the configuration; image curves become the
// boundary with proper-transform self-intersections, marked points are the
// canonical fiber representatives.
BlowupLedger make_ledger(const QuotientConfig& cfg, BaseSurface base);

// First-failure scan: every boundary pair must have zero residual
// intersection after the blowups (requires pair_int), then every boundary
// curve must have all its multiple points blown.
DisjointnessReport disjointness_check(const BlowupLedger& ledger);

// Logarithmic Chern numbers of (X, D):
//   c1sq = K^2 + 2 K.D + D^2 with K^2 = base - #blown, K.D = total boundary
//   multiplicity over blown points, D^2 = sum of boundary self-intersections;
//   c2 = (base euler + #blown) since smooth elliptic components contribute 0.
// Err::RationalBoundary for rational boundary members, Err::NotDisjoint when
// disjointness_check fails.
LogChernReport log_chern(const BlowupLedger& ledger);

// The same arithmetic without the disjointness gate, for ledgers midway
// through a blowup chain; the report is meaningful only once the boundary is
// disjoint and smooth.
LogChernReport log_chern_numbers(const BlowupLedger& ledger);

// 3 C^2 versus -K.C + sum(2 m_i - 3): greater = strict, equal = totally
// geodesic equality, less = violated. Rational records additionally exclude
// punctured spheres with fewer than four punctures (not hyperbolic, or ruled
// out by the fiber argument), whatever the comparison says.
ProportionalityVerdict proportionality_check(const ProportionalityRecord& rec);

// Totally geodesic boundary-transversal curves have an even puncture count.
bool parity_check(const Int& k);

// Infimum alpha with (K + alpha D).C > 0 across the ledger's exceptional
// classes (K.E = -1, D.E = total boundary multiplicity at the blown point)
// plus the supplied classes; nullopt when every class pairs positively at
// alpha = 0. Err::DegenerateClass when some class has K.C <= 0 and D.C <= 0.
std::optional<Rational> ample_threshold(const BlowupLedger& ledger,
                                        const std::vector<CurveClass>& classes = {});

std::vector<CurveClass> exceptional_classes(const BlowupLedger& ledger);

// K^2 = 3e + sum d_i (log-BMY equality with D^2 = sum d_i), chi by Noether
// (Err::NonIntegralChi when not divisible), p_g = chi - 1 + q.
CharNumbers char_numbers(const Int& e, const std::vector<Int>& boundary_self_ints,
                         const Int& q);

}  // namespace ballq
