#pragma once

#include "poskit/rational.hpp"

#include <string>
#include <vector>

namespace poskit {

/// A complete invariant curve, recorded by its class in the basis dual to
/// the boundary divisors. The distinguished curves are the r curves with
/// D_i . C_j = delta_ij; their classes generate the cone of effective
/// 1-cycles, so class vectors of all curves are componentwise non-negative.
struct CurveRecord {
  std::string name;
  IVec class_vector;
  bool distinguished = false;
  bool through_sink = true;
  Int mult_at_sink = 1;
};

/// A line bundle class L = sum_i coeffs[i] * D_i.
struct DivisorClass {
  IVec coeffs;
};

/// Combinatorial model of a nonsingular simple G-projective variety:
/// Picard rank r, boundary divisors D_1..D_r, and the finite list of
/// B-stable curves. Immutable after validation.
struct VarietyModel {
  std::string name;
  int rank = 0;
  std::vector<std::string> divisor_labels;
  std::vector<CurveRecord> curves;
};

/// Enforces the model axioms: exactly r distinguished curves whose classes
/// are the standard basis in order, all class vectors non-negative of
/// length r, every curve through the sink with multiplicity 1, unique
/// curve names. Throws InputError on the first violation.
void validate_model(const VarietyModel& model);

const CurveRecord& find_curve(const VarietyModel& model, const std::string& name);

/// Intersection number L . C = sum_i coeffs[i] * class_vector[i].
Int intersect(const VarietyModel& model, const DivisorClass& l, const CurveRecord& c);

/// Nef test: L . C >= 0 for every curve of the model. On a valid model this
/// is equivalent to all coefficients being >= 0.
bool nef_check_linebundle(const VarietyModel& model, const DivisorClass& l);

/// Ample test: every coefficient >= 1.
bool ample_check_linebundle(const VarietyModel& model, const DivisorClass& l);

/// Seshadri constant of an ample L at the sink: min_i coeffs[i].
/// Refuses non-ample input.
Rat seshadri_line(const VarietyModel& model, const DivisorClass& l);

void check_divisor(const VarietyModel& model, const DivisorClass& l);

} // namespace poskit
