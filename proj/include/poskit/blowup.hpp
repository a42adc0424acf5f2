#pragma once

#include "poskit/cone.hpp"
#include "poskit/model.hpp"

namespace poskit {

/// Picard and curve-class lattices of the blow-up of a model at the sink.
///
/// Divisor basis: (Bl*D_1, ..., Bl*D_r, E) with E the exceptional divisor.
/// Curve basis:   (Ct_1, ..., Ct_r, e) with Ct_i = Bl*(C_i) - e the strict
/// transforms of the distinguished curves and e a line in E.
/// pairing[i][j] = (divisor basis i) . (curve basis j):
///   Bl*D_i . Ct_j = delta_ij,  Bl*D_i . e = 0,  E . Ct_j = 1,  E . e = -1.
struct BlowupModel {
  VarietyModel base;
  std::vector<IVec> pairing; // (r+1) x (r+1)
};

BlowupModel build_blowup(const VarietyModel& model);

/// Nef cone of the blow-up, in divisor coordinates: generated by
/// e_1, ..., e_r and (1, ..., 1, -1).
RationalCone blowup_nef_generators(const BlowupModel& bm);

/// Mori cone of the blow-up, in curve coordinates: generated by the
/// standard basis vectors (the classes Ct_1, ..., Ct_r, e).
RationalCone blowup_mori_generators(const BlowupModel& bm);

/// Intersection number of a divisor class (coordinates in the divisor
/// basis) with a curve class (coordinates in the curve basis).
Rat pair_classes(const BlowupModel& bm, const QVec& divisor_coords, const QVec& curve_coords);

/// Curve class -> the linear functional it induces on divisor coordinates
/// (its coordinates in the dual basis of the divisor basis). Cone duality
/// between the nef and Mori cones is duality under this pairing.
QVec curve_class_as_divisor_functional(const BlowupModel& bm, const QVec& curve_coords);

/// Divisor class -> the linear functional it induces on curve coordinates.
QVec divisor_class_as_curve_functional(const BlowupModel& bm, const QVec& divisor_coords);

/// Nefness of sum_i b_i Bl*D_i - c E: true iff c >= 0 and b_j >= c for all j.
bool is_nef_on_blowup(const BlowupModel& bm, const QVec& b, const Rat& c);

/// sup { lambda >= 0 : Bl*L - lambda E nef }, for ample L on the base.
/// Evaluated through the dual generators of the nef cone; the sup is
/// attained and equals min_i coeffs[i]. Refuses non-ample input.
Rat seshadri_via_blowup(const BlowupModel& bm, const DivisorClass& l,
                        int dim_bound = kDefaultConeDimBound);

} // namespace poskit
