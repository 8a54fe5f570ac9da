#include "ballq/quotient.hpp"

#include <algorithm>
#include <set>

#include "ballq/error.hpp"

namespace ballq {
namespace {

constexpr size_t kNone = static_cast<size_t>(-1);

size_t find_line_index(const Arrangement& arr, const TorusLine& l) {
  for (size_t i = 0; i < arr.lines.size(); ++i)
    if (arr.lines[i] == l) return i;
  return kNone;
}

// Directions (b, -a) are proportional iff a1*b2 == a2*b1; two distinct lines
// through a common point can never satisfy this, so a hit means bad input.
bool same_direction(const TorusLine& l1, const TorusLine& l2) {
  return l1.a * l2.b == l2.a * l1.b;
}

}  // namespace

const ImageCurve& QuotientConfig::image_curve(const std::string& name) const {
  for (const auto& c : image_curves)
    if (c.name == name) return c;
  fail(Err::BadFile, "unknown image curve '" + name + "'");
}

const SingularPoint* QuotientConfig::singular_at(const TorusPoint& p) const {
  for (const auto& sp : singular_points)
    if (std::find(sp.fiber.begin(), sp.fiber.end(), p) != sp.fiber.end()) return &sp;
  return nullptr;
}

Int QuotientConfig::pairing(const std::string& c1, const std::string& c2) const {
  auto key = std::minmax(c1, c2);
  auto it = pair_int.find({key.first, key.second});
  check(it != pair_int.end(), Err::BadFile,
        "no pairing recorded for '" + c1 + "', '" + c2 + "'");
  return it->second;
}

QuotientConfig build_quotient_config(const Arrangement& arr,
                                     const std::vector<AffineAuto>& group) {
  QuotientConfig cfg;
  cfg.upstairs = arr;
  if (group.empty()) {
    cfg.group = {AffineAuto(arr.surface, AffineMap{})};
  } else {
    cfg.group = group;
    for (const auto& g : cfg.group)
      require_same_surface(g.surface, arr.surface, "quotient group");
  }

  const size_t nlines = arr.lines.size();
  for (size_t i = 0; i < nlines; ++i)
    for (size_t j = i + 1; j < nlines; ++j)
      check(!(arr.lines[i] == arr.lines[j]), Err::BadFile,
            "duplicate line '" + arr.names[j] + "' in arrangement");

  FreeReport fr = is_free_action(cfg.group);
  check(fr.free_action, Err::NotFreeAction,
        "element " + to_string(cfg.group[fr.element_index].map) + " fixes " +
            to_string(fr.fixed_point));
  const Int order = static_cast<long>(cfg.group.size());

  // Line orbits: one pass per unassigned line reaches the whole orbit since
  // the element list is closed under composition.
  std::vector<size_t> orbit_of(nlines, kNone);
  for (size_t i = 0; i < nlines; ++i) {
    if (orbit_of[i] != kNone) continue;
    std::set<size_t> members;
    for (const auto& g : cfg.group) {
      TorusLine img = image_line(g, arr.lines[i]);
      size_t j = find_line_index(arr, img);
      check(j != kNone, Err::NotStable,
            "'" + arr.names[i] + "' maps outside the arrangement under " +
                to_string(g.map));
      members.insert(j);
    }
    check(cfg.group.size() % members.size() == 0, Err::Internal,
          "orbit size does not divide the group order");
    ImageCurve curve;
    curve.name = arr.names[i];
    for (size_t j : members) {
      check(orbit_of[j] == kNone, Err::Internal, "line orbits are not disjoint");
      orbit_of[j] = cfg.image_curves.size();
      curve.preimages.push_back(arr.names[j]);
    }
    cfg.image_curves.push_back(std::move(curve));
  }

  // Upstairs intersection points, then their orbits.
  std::set<TorusPoint> upstairs_points;
  for (size_t i = 0; i < nlines; ++i)
    for (size_t j = i + 1; j < nlines; ++j)
      for (const auto& p : intersect_lines(arr.lines[i], arr.lines[j]))
        upstairs_points.insert(p);

  std::vector<TorusPoint> point_list(upstairs_points.begin(), upstairs_points.end());
  for (const auto& orbit : orbit_partition(cfg.group, point_list)) {
    check(orbit.size() == cfg.group.size(), Err::Internal,
          "point orbit shorter than the group order under a free action");
    SingularPoint sp;
    sp.rep = orbit.front();
    sp.fiber = orbit;
    for (const auto& curve : cfg.image_curves) {
      Int incidences = 0;
      for (const auto& p : sp.fiber)
        for (const auto& pre : curve.preimages)
          if (point_on_line(arr.line(pre), p)) incidences += 1;
      check(incidences % order == 0, Err::Internal,
            "fiber incidence count not divisible by the group order");
      Int m = incidences / order;
      if (m > 0) {
        sp.branch_mult[curve.name] = m;
        sp.total += m;
      }
    }
    check(sp.total >= 2, Err::Internal, "singular point with fewer than two branches");
    std::vector<const TorusLine*> through;
    for (size_t i = 0; i < nlines; ++i)
      if (point_on_line(arr.lines[i], sp.rep)) through.push_back(&arr.lines[i]);
    for (size_t i = 0; i < through.size(); ++i)
      for (size_t j = i + 1; j < through.size(); ++j)
        check(!same_direction(*through[i], *through[j]), Err::NonOrdinarySingularity,
              "coincident branch tangents at " + to_string(sp.rep));
    cfg.singular_points.push_back(std::move(sp));
  }
  std::sort(cfg.singular_points.begin(), cfg.singular_points.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return a.rep < b.rep; });

  // Pullback pairings: (sum of pairwise upstairs intersections) / |group|;
  // self pairs contribute zero (torus lines have trivial self-intersection).
  for (size_t gi = 0; gi < cfg.image_curves.size(); ++gi) {
    for (size_t gj = gi; gj < cfg.image_curves.size(); ++gj) {
      Int total = 0;
      for (const auto& na : cfg.image_curves[gi].preimages)
        for (const auto& nb : cfg.image_curves[gj].preimages) {
          const TorusLine& la = arr.line(na);
          const TorusLine& lb = arr.line(nb);
          if (la == lb) continue;
          total += intersection_number(la, lb);
        }
      check(total % order == 0, Err::NonIntegralSelfIntersection,
            "pullback pairing of '" + cfg.image_curves[gi].name + "' and '" +
                cfg.image_curves[gj].name + "' is not divisible by the group order");
      auto key = std::minmax(cfg.image_curves[gi].name, cfg.image_curves[gj].name);
      cfg.pair_int[{key.first, key.second}] = total / order;
    }
  }
  return cfg;
}

void rename_image_curves(QuotientConfig& cfg, const std::vector<std::string>& names) {
  check(names.size() == cfg.image_curves.size(), Err::BadFile,
        "rename list does not match the number of image curves");
  std::map<std::string, std::string> translate;
  for (size_t i = 0; i < names.size(); ++i)
    translate[cfg.image_curves[i].name] = names[i];
  for (size_t i = 0; i < names.size(); ++i) cfg.image_curves[i].name = names[i];
  for (auto& sp : cfg.singular_points) {
    std::map<std::string, Int> renamed;
    for (const auto& [old_name, m] : sp.branch_mult) renamed[translate.at(old_name)] = m;
    sp.branch_mult = std::move(renamed);
  }
  std::map<std::pair<std::string, std::string>, Int> pairs;
  for (const auto& [key, v] : cfg.pair_int) {
    auto nk = std::minmax(translate.at(key.first), translate.at(key.second));
    pairs[{nk.first, nk.second}] = v;
  }
  cfg.pair_int = std::move(pairs);
}

std::vector<TorusPoint> fiber(const TorusPoint& q, const QuotientConfig& cfg) {
  require_same_surface(q.surface, cfg.upstairs.surface, "fiber");
  std::set<TorusPoint> orbit;
  for (const auto& g : cfg.group) orbit.insert(image_point(g, q));
  check(orbit.size() == cfg.group.size(), Err::Internal,
        "fiber shorter than the group order under a free action");
  return {orbit.begin(), orbit.end()};
}

}  // namespace ballq
