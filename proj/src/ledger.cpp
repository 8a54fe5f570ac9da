#include "ballq/ledger.hpp"

#include <algorithm>
#include <set>

#include "ballq/error.hpp"

namespace ballq {
namespace {

std::pair<std::string, std::string> sorted_key(const std::string& a, const std::string& b) {
  auto k = std::minmax(a, b);
  return {k.first, k.second};
}

Int mult_at(const CurveRecord& c, const std::string& point_id) {
  auto it = c.point_multiplicities.find(point_id);
  return it == c.point_multiplicities.end() ? Int(0) : it->second;
}

void validate(const BlowupLedger& ledger) {
  std::set<std::string> seen;
  for (const auto& p : ledger.blown_points)
    check(seen.insert(p).second, Err::BadFile, "point '" + p + "' blown twice");
  std::set<std::string> names;
  for (const auto& c : ledger.curves) {
    check(names.insert(c.name).second, Err::BadFile, "duplicate curve '" + c.name + "'");
    for (const auto& [pt, m] : c.point_multiplicities)
      check(m >= 1, Err::BadFile,
            "multiplicity of '" + c.name + "' at '" + pt + "' must be positive");
  }
  for (const auto& b : ledger.boundary)
    check(names.count(b) > 0, Err::BadFile, "boundary names unknown curve '" + b + "'");
}

}  // namespace

BaseSurface abelian_base() { return {BaseKind::Abelian, 0, 0, 0}; }

BaseSurface bielliptic_base(const Int& group_order) {
  return {BaseKind::Bielliptic, group_order, 0, 0};
}

BaseSurface explicit_base(const Int& k_sq, const Int& euler) {
  return {BaseKind::Explicit, 0, k_sq, euler};
}

const CurveRecord& BlowupLedger::curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.name == name) return c;
  fail(Err::BadFile, "unknown curve '" + name + "'");
}

bool BlowupLedger::is_blown(const std::string& point_id) const {
  return std::find(blown_points.begin(), blown_points.end(), point_id) !=
         blown_points.end();
}

bool BlowupLedger::is_boundary(const std::string& name) const {
  return std::find(boundary.begin(), boundary.end(), name) != boundary.end();
}

Int selfint_via_pullback(const std::string& image_curve, const QuotientConfig& cfg) {
  const ImageCurve& curve = cfg.image_curve(image_curve);
  Int total = 0;
  for (const auto& na : curve.preimages)
    for (const auto& nb : curve.preimages) {
      if (na == nb) continue;
      total += intersection_number(cfg.upstairs.line(na), cfg.upstairs.line(nb));
    }
  const Int order = static_cast<long>(cfg.group.size());
  check(total % order == 0, Err::NonIntegralSelfIntersection,
        "pullback self-intersection of '" + image_curve +
            "' is not divisible by the group order");
  return total / order;
}

Int proper_transform_selfint(const BlowupLedger& ledger, const Int& c_sq,
                             const std::vector<std::pair<std::string, Int>>& mults) {
  Int result = c_sq;
  for (const auto& [pt, m] : mults) {
    check(ledger.is_blown(pt), Err::UnblownPoint,
          "multiplicity references unblown point '" + pt + "'");
    result -= m * m;
  }
  return result;
}

BlowupLedger make_ledger(const QuotientConfig& cfg, BaseSurface base) {
  BlowupLedger ledger;
  ledger.base = base;
  for (const auto& sp : cfg.singular_points)
    ledger.blown_points.push_back(to_string(sp.rep));
  for (const auto& curve : cfg.image_curves) {
    CurveRecord rec;
    rec.name = curve.name;
    rec.normalization_genus = GenusClass::Elliptic;
    for (const auto& sp : cfg.singular_points) {
      auto it = sp.branch_mult.find(curve.name);
      if (it != sp.branch_mult.end())
        rec.point_multiplicities[to_string(sp.rep)] = it->second;
    }
    Int base_selfint = cfg.pairing(curve.name, curve.name);
    std::vector<std::pair<std::string, Int>> mults(rec.point_multiplicities.begin(),
                                                   rec.point_multiplicities.end());
    rec.self_int = proper_transform_selfint(ledger, base_selfint, mults);
    ledger.curves.push_back(std::move(rec));
    ledger.boundary.push_back(curve.name);
  }
  ledger.pair_int = cfg.pair_int;
  return ledger;
}

DisjointnessReport disjointness_check(const BlowupLedger& ledger) {
  validate(ledger);
  DisjointnessReport report;
  for (size_t i = 0; i < ledger.boundary.size(); ++i) {
    const CurveRecord& ci = ledger.curve(ledger.boundary[i]);
    for (size_t j = i + 1; j < ledger.boundary.size(); ++j) {
      const CurveRecord& cj = ledger.curve(ledger.boundary[j]);
      auto it = ledger.pair_int.find(sorted_key(ci.name, cj.name));
      check(it != ledger.pair_int.end(), Err::BadFile,
            "no base intersection number for '" + ci.name + "', '" + cj.name + "'");
      Int residual = it->second;
      for (const auto& pt : ledger.blown_points) residual -= mult_at(ci, pt) * mult_at(cj, pt);
      if (residual != 0) {
        report.ok = false;
        report.kind = "pair";
        report.first = ci.name;
        report.second = cj.name;
        report.residual = residual;
        return report;
      }
    }
  }
  for (const auto& name : ledger.boundary) {
    const CurveRecord& c = ledger.curve(name);
    for (const auto& [pt, m] : c.point_multiplicities) {
      if (m >= 2 && !ledger.is_blown(pt)) {
        report.ok = false;
        report.kind = "smoothness";
        report.first = name;
        report.second = pt;
        report.residual = m;
        return report;
      }
    }
  }
  return report;
}

LogChernReport log_chern(const BlowupLedger& ledger) {
  validate(ledger);
  LogChernReport report;

  if (ledger.pair_int.empty() && ledger.boundary.size() > 1) {
    // Without a pairing table only the smoothness half can run.
    for (const auto& name : ledger.boundary) {
      const CurveRecord& c = ledger.curve(name);
      for (const auto& [pt, m] : c.point_multiplicities)
        check(m < 2 || ledger.is_blown(pt), Err::NotDisjoint,
              "boundary component '" + name + "' keeps a multiple point at '" + pt + "'");
    }
    report.notes.push_back("pairwise disjointness not certified: no intersection table");
  } else {
    DisjointnessReport dis = disjointness_check(ledger);
    if (!dis.ok) {
      if (dis.kind == "pair")
        fail(Err::NotDisjoint, "boundary components '" + dis.first + "' and '" +
                                   dis.second + "' still meet (residual " +
                                   dis.residual.str() + ")");
      fail(Err::NotDisjoint, "boundary component '" + dis.first +
                                 "' keeps a multiple point at '" + dis.second + "'");
    }
  }

  LogChernReport numbers = log_chern_numbers(ledger);
  numbers.notes.insert(numbers.notes.begin(), report.notes.begin(), report.notes.end());
  return numbers;
}

LogChernReport log_chern_numbers(const BlowupLedger& ledger) {
  validate(ledger);
  LogChernReport report;
  for (const auto& name : ledger.boundary)
    check(ledger.curve(name).normalization_genus != GenusClass::Rational,
          Err::RationalBoundary, "boundary component '" + name + "' is rational");

  const Int blown = static_cast<long>(ledger.blown_points.size());
  Int k_sq = ledger.base.k_sq - blown;
  Int k_d = 0;
  for (const auto& pt : ledger.blown_points)
    for (const auto& name : ledger.boundary) k_d += mult_at(ledger.curve(name), pt);
  Int d_sq = 0;
  for (const auto& name : ledger.boundary) d_sq += ledger.curve(name).self_int;

  report.c1sq_log = k_sq + 2 * k_d + d_sq;
  report.c2_log = ledger.base.euler + blown;
  report.bmy_equal = report.c1sq_log == 3 * report.c2_log;
  report.cusp_count = static_cast<long>(ledger.boundary.size());
  report.notes.push_back("equality conclusion assumes K+D nef and big (not certified)");
  return report;
}

ProportionalityRecord rational_record(const Int& c_sq, const std::vector<Int>& m_list) {
  // Adjunction for a smooth rational curve: K.C = -C^2 - 2.
  return {c_sq, -c_sq - 2, m_list, true};
}

ProportionalityVerdict proportionality_check(const ProportionalityRecord& rec) {
  for (const auto& m : rec.m_list)
    check(m >= 1, Err::Degenerate, "intersection multiplicities must be positive");
  ProportionalityVerdict verdict;
  verdict.lhs = Rational(3 * rec.c_sq);
  Int rhs = -rec.k_c;
  for (const auto& m : rec.m_list) rhs += 2 * m - 3;
  verdict.rhs = Rational(rhs);
  if (verdict.lhs == verdict.rhs)
    verdict.status = Proportionality::EqualityTotallyGeodesic;
  else if (verdict.rhs < verdict.lhs)
    verdict.status = Proportionality::Strict;
  else
    verdict.status = Proportionality::Violated;

  if (rec.rational) {
    check(rec.k_c == -rec.c_sq - 2, Err::Degenerate,
          "rational record breaks adjunction: K.C must equal -C^2 - 2");
    if (rec.m_list.size() < 4 && verdict.status != Proportionality::Violated) {
      // Punctured spheres need at least three punctures to be hyperbolic and
      // three transversal punctures die against a fiber class, so only four
      // or more can occur.
      verdict.status = Proportionality::Violated;
      verdict.note = "rational curve with fewer than four punctures";
    }
  }
  return verdict;
}

bool parity_check(const Int& k) { return k % 2 == 0; }

std::vector<CurveClass> exceptional_classes(const BlowupLedger& ledger) {
  std::vector<CurveClass> classes;
  for (const auto& pt : ledger.blown_points) {
    Int d_e = 0;
    for (const auto& name : ledger.boundary) d_e += mult_at(ledger.curve(name), pt);
    classes.push_back({-1, d_e});
  }
  return classes;
}

std::optional<Rational> ample_threshold(const BlowupLedger& ledger,
                                        const std::vector<CurveClass>& classes) {
  validate(ledger);
  std::vector<CurveClass> all = exceptional_classes(ledger);
  all.insert(all.end(), classes.begin(), classes.end());
  std::optional<Rational> threshold;
  for (const auto& c : all) {
    if (c.d_c <= 0) {
      check(c.k_c > 0, Err::DegenerateClass,
            "class with K.C <= 0 and D.C <= 0 can never pair positively");
      continue;  // positive at alpha = 0, no lower constraint
    }
    if (c.k_c > 0) continue;
    Rational alpha(-c.k_c, c.d_c);
    if (!threshold || *threshold < alpha) threshold = alpha;
  }
  return threshold;
}

CharNumbers char_numbers(const Int& e, const std::vector<Int>& boundary_self_ints,
                         const Int& q) {
  check(e > 0, Err::Degenerate, "euler number must be positive");
  CharNumbers out;
  out.k_sq = 3 * e;
  for (const auto& d : boundary_self_ints) {
    check(d < 0, Err::Degenerate, "boundary self-intersections must be negative");
    out.k_sq += d;
  }
  Int noether = out.k_sq + e;
  check(noether % 12 == 0, Err::NonIntegralChi,
        "K^2 + e = " + noether.str() + " is not divisible by 12");
  out.chi = noether / 12;
  out.p_g = out.chi - 1 + q;
  return out;
}

}  // namespace ballq
