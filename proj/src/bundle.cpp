#include "poskit/bundle.hpp"

#include "poskit/errors.hpp"

#include <algorithm>
#include <set>

namespace poskit {

namespace {

// Both attachments reduce to the same bookkeeping once the curve list is
// presented as (name, expected c1 degree) pairs.
struct CurveDegree {
  std::string name;
  Int c1_degree;
};

ValidationReport validate_against(const std::vector<CurveDegree>& curves, const SplittingData& s) {
  ValidationReport report;
  if (s.rank < 1) {
    report.fail("coverage", "bundle rank must be a positive integer");
    report.mark("coverage", false);
    report.mark("c1_consistency", false);
    return report;
  }

  bool coverage = true;
  std::set<std::string> known;
  for (const CurveDegree& c : curves) {
    known.insert(c.name);
    auto it = s.per_curve.find(c.name);
    if (it == s.per_curve.end()) {
      report.fail("coverage", "no splitting degrees for curve '" + c.name + "'");
      coverage = false;
    } else if (static_cast<int>(it->second.size()) != s.rank) {
      report.fail("coverage", "curve '" + c.name + "' lists " + std::to_string(it->second.size()) +
                                  " degrees, expected rank " + std::to_string(s.rank));
      coverage = false;
    }
  }
  for (const auto& [name, degrees] : s.per_curve)
    if (!known.count(name)) {
      report.fail("coverage", "splitting data names unknown curve '" + name + "'");
      coverage = false;
    }
  report.mark("coverage", coverage);

  bool consistent = true;
  for (const CurveDegree& c : curves) {
    auto it = s.per_curve.find(c.name);
    if (it == s.per_curve.end() || static_cast<int>(it->second.size()) != s.rank) continue;
    Int sum = 0;
    for (const Int& a : it->second) sum += a;
    if (sum != c.c1_degree) {
      report.fail("c1_consistency", "curve '" + c.name + "': degrees sum to " + sum.str() +
                                        " but c1 . C = " + c.c1_degree.str());
      consistent = false;
    }
  }
  report.mark("c1_consistency", consistent);
  return report;
}

void require_valid(const ValidationReport& report) {
  if (report.pass) return;
  std::string msg = "splitting data validation failed:";
  for (const ValidationIssue& issue : report.issues)
    msg += "\n  [" + issue.check + "] " + issue.detail;
  throw InputError(msg);
}

Int min_degree(const SplittingData& s) {
  bool found = false;
  Int min = 0;
  for (const auto& [name, degrees] : s.per_curve)
    for (const Int& a : degrees) {
      if (!found || a < min) min = a;
      found = true;
    }
  if (!found) throw InternalError("splitting data has no degrees");
  return min;
}

std::vector<CurveDegree> model_curves(const VarietyModel& model, const SplittingData& s) {
  validate_model(model);
  DivisorClass c1{s.c1};
  check_divisor(model, c1);
  std::vector<CurveDegree> out;
  for (const CurveRecord& c : model.curves) out.push_back({c.name, intersect(model, c1, c)});
  return out;
}

std::vector<CurveDegree> fan_curves(const Fan& fan, const SplittingData& s) {
  ToricDivisor c1{s.c1};
  check_toric_divisor(fan, c1);
  std::vector<CurveDegree> out;
  for (const Wall& w : enumerate_walls(fan))
    out.push_back({wall_id(w), divisor_degree_on_wall(fan, c1, w)});
  return out;
}

bool all_degrees_at_least(const SplittingData& s, const Int& bound) {
  for (const auto& [name, degrees] : s.per_curve)
    for (const Int& a : degrees)
      if (a < bound) return false;
  return true;
}

} // namespace

SplittingData normalized(SplittingData s) {
  for (auto& [name, degrees] : s.per_curve) std::sort(degrees.begin(), degrees.end());
  return s;
}

ValidationReport validate_splitting(const VarietyModel& model, const SplittingData& s) {
  return validate_against(model_curves(model, s), s);
}

bool nef_check_bundle(const VarietyModel& model, const SplittingData& s) {
  require_valid(validate_splitting(model, s));
  return all_degrees_at_least(s, 0);
}

bool ample_check_bundle(const VarietyModel& model, const SplittingData& s) {
  require_valid(validate_splitting(model, s));
  return all_degrees_at_least(s, 1);
}

Rat seshadri_bundle(const VarietyModel& model, const SplittingData& s) {
  if (!nef_check_bundle(model, s))
    throw Refusal("Seshadri constants are defined for nef bundles; some splitting degree is "
                  "negative");
  return Rat(min_degree(s));
}

ValidationReport validate_splitting(const Fan& fan, const SplittingData& s) {
  return validate_against(fan_curves(fan, s), s);
}

bool nef_check_bundle(const Fan& fan, const SplittingData& s) {
  require_valid(validate_splitting(fan, s));
  return all_degrees_at_least(s, 0);
}

bool ample_check_bundle(const Fan&, const SplittingData&) {
  throw Refusal("the finite ample criterion applies to simple G-varieties; on a toric model "
                "only the nef test over wall curves is available");
}

Rat seshadri_bundle(const Fan& fan, const SplittingData& s, int sigma) {
  if (!nef_check_bundle(fan, s))
    throw Refusal("Seshadri constants are defined for nef bundles; some splitting degree is "
                  "negative");
  if (sigma < 0 || sigma >= static_cast<int>(fan.max_cones.size()))
    throw InputError("maximal cone index " + std::to_string(sigma) + " out of range [0, " +
                     std::to_string(fan.max_cones.size()) + ")");
  bool found = false;
  Int min = 0;
  for (const Wall& w : enumerate_walls(fan)) {
    if (w.cone_pair.first != sigma && w.cone_pair.second != sigma) continue;
    for (const Int& a : s.per_curve.at(wall_id(w))) {
      if (!found || a < min) min = a;
      found = true;
    }
  }
  if (!found) throw InternalError("maximal cone has no incident walls");
  return Rat(min);
}

} // namespace poskit
