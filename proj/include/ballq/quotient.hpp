#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ballq/torus.hpp"

namespace ballq {

// Curve on the quotient surface: one orbit of upstairs lines.
struct ImageCurve {
  std::string name;
  std::vector<std::string> preimages;  // upstairs line names, arrangement order
};

// Downstairs point where at least two branches of the image divisor meet.
struct SingularPoint {
  TorusPoint rep;                       // least member of the fiber
  std::vector<TorusPoint> fiber;        // full upstairs orbit, ascending
  std::map<std::string, Int> branch_mult;  // image curve -> branches (>= 1)
  Int total{0};                         // sum of branch multiplicities
};

// Image of a stable line arrangement under a free finite group action.
struct QuotientConfig {
  Arrangement upstairs;
  std::vector<AffineAuto> group;        // whole group, identity first
  std::vector<ImageCurve> image_curves;
  std::vector<SingularPoint> singular_points;  // sorted by rep
  // Intersection numbers on the quotient via pullback; keys are name pairs
  // with first <= second, diagonal entries are self-intersections.
  std::map<std::pair<std::string, std::string>, Int> pair_int;

  const ImageCurve& image_curve(const std::string& name) const;
  // Singular point whose fiber contains the given upstairs point, if any.
  const SingularPoint* singular_at(const TorusPoint& upstairs_point) const;
  Int pairing(const std::string& c1, const std::string& c2) const;
};

// Quotient of the arrangement by the group (empty list = trivial group).
// Image curves are line orbits named after their least preimage; the branch
// count of curve G at a downstairs point q is
//   (sum over the fiber of q of the number of preimages of G through the
//    fiber point) / |group|,
// and singular_points records every downstairs point of total branch count
// >= 2 together with the full per-curve profile. Orbit sizes may be proper
// divisors of |group| (lines preserved by a subgroup); the pullback pairing
// stays exact in that case and is recorded in pair_int.
// Errors: NotFreeAction / NotAGroup (bad action), NotStable (a line's image
// leaves the arrangement), NonOrdinarySingularity (coincident branch
// tangents), NonIntegralSelfIntersection (pullback pairing not divisible).
QuotientConfig build_quotient_config(const Arrangement& arr,
                                     const std::vector<AffineAuto>& group);

// Rename image curves in construction order (sizes must match).
void rename_image_curves(QuotientConfig& cfg, const std::vector<std::string>& names);

// Full upstairs orbit of a point; exactly |group| points by freeness.
std::vector<TorusPoint> fiber(const TorusPoint& q, const QuotientConfig& cfg);

}  // namespace ballq
