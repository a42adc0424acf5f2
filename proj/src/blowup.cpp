#include "poskit/blowup.hpp"

#include "poskit/errors.hpp"
#include "poskit/linalg.hpp"

#include <string>

namespace poskit {

namespace {

int lattice_dim(const BlowupModel& bm) { return bm.base.rank + 1; }

void check_coords(const BlowupModel& bm, const QVec& v, const char* what) {
  if (static_cast<int>(v.size()) != lattice_dim(bm))
    throw InputError(std::string(what) + " has length " + std::to_string(v.size()) +
                     ", expected rank+1 = " + std::to_string(lattice_dim(bm)));
}

} // namespace

BlowupModel build_blowup(const VarietyModel& model) {
  validate_model(model);
  const int r = model.rank;
  BlowupModel bm;
  bm.base = model;
  bm.pairing.assign(r + 1, IVec(r + 1, Int(0)));
  for (int i = 0; i < r; ++i) bm.pairing[i][i] = 1; // Bl*D_i . Ct_j = delta_ij
  for (int j = 0; j < r; ++j) bm.pairing[r][j] = 1; // E . Ct_j = 1
  bm.pairing[r][r] = -1;                            // E . e = -1
  return bm;
}

RationalCone blowup_nef_generators(const BlowupModel& bm) {
  const int n = lattice_dim(bm);
  RationalCone cone;
  cone.ambient_dim = n;
  for (int i = 0; i < n - 1; ++i) {
    QVec g(n, Rat(0));
    g[i] = 1;
    cone.generators.push_back(std::move(g));
  }
  QVec last(n, Rat(1));
  last[n - 1] = -1;
  cone.generators.push_back(std::move(last));
  return cone;
}

RationalCone blowup_mori_generators(const BlowupModel& bm) {
  const int n = lattice_dim(bm);
  RationalCone cone;
  cone.ambient_dim = n;
  for (int i = 0; i < n; ++i) {
    QVec g(n, Rat(0));
    g[i] = 1;
    cone.generators.push_back(std::move(g));
  }
  return cone;
}

Rat pair_classes(const BlowupModel& bm, const QVec& divisor_coords, const QVec& curve_coords) {
  check_coords(bm, divisor_coords, "divisor class");
  check_coords(bm, curve_coords, "curve class");
  const int n = lattice_dim(bm);
  Rat sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sum += divisor_coords[i] * Rat(bm.pairing[i][j]) * curve_coords[j];
  return sum;
}

QVec curve_class_as_divisor_functional(const BlowupModel& bm, const QVec& curve_coords) {
  check_coords(bm, curve_coords, "curve class");
  const int n = lattice_dim(bm);
  QVec out(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rat(bm.pairing[i][j]) * curve_coords[j];
  return out;
}

QVec divisor_class_as_curve_functional(const BlowupModel& bm, const QVec& divisor_coords) {
  check_coords(bm, divisor_coords, "divisor class");
  const int n = lattice_dim(bm);
  QVec out(n, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j] += divisor_coords[i] * Rat(bm.pairing[i][j]);
  return out;
}

bool is_nef_on_blowup(const BlowupModel& bm, const QVec& b, const Rat& c) {
  if (static_cast<int>(b.size()) != bm.base.rank)
    throw InputError("coefficient vector b has length " + std::to_string(b.size()) +
                     ", expected rank " + std::to_string(bm.base.rank));
  if (c < 0) return false; // degree against a line in E is c
  for (const Rat& bj : b)
    if (bj < c) return false; // degree against Ct_j is b_j - c
  return true;
}

Rat seshadri_via_blowup(const BlowupModel& bm, const DivisorClass& l, int dim_bound) {
  if (!ample_check_linebundle(bm.base, l))
    throw Refusal("Seshadri constant at the sink is defined here for ample line bundles; "
                  "L is not ample (every coefficient must be >= 1)");
  // Bl*L - lambda E has divisor coordinates (a_1, ..., a_r, -lambda); it is
  // nef iff it pairs >= 0 with every dual generator of the nef cone. Each
  // dual generator y with y_E > 0 caps lambda at (a . y') / y_E, generators
  // with y_E < 0 bound it below, and the sup is the least cap.
  const QVec a = to_rational(l.coeffs);
  const RationalCone dual = dual_cone(blowup_nef_generators(bm), dim_bound);
  const int r = bm.base.rank;
  bool capped = false;
  Rat sup = 0;
  Rat lower = 0;
  for (const QVec& y : dual.generators) {
    Rat head = 0;
    for (int i = 0; i < r; ++i) head += a[i] * y[i];
    const Rat& tail = y[r];
    if (tail > 0) {
      const Rat cap = head / tail;
      if (!capped || cap < sup) sup = cap;
      capped = true;
    } else if (tail < 0) {
      const Rat bound = head / tail;
      if (bound > lower) lower = bound;
    } else if (head < 0) {
      throw InternalError("ample class pairs negatively with a lambda-free dual generator");
    }
  }
  if (!capped || sup < lower)
    throw InternalError("Seshadri supremum on the blow-up is unbounded or infeasible");
  return sup;
}

} // namespace poskit
