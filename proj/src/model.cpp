#include "poskit/model.hpp"

#include "poskit/errors.hpp"

#include <algorithm>
#include <set>

namespace poskit {

void validate_model(const VarietyModel& model) {
  if (model.rank < 1) throw InputError("model rank must be a positive integer");
  const std::size_t r = static_cast<std::size_t>(model.rank);
  if (model.divisor_labels.size() != r)
    throw InputError("model '" + model.name + "' has " + std::to_string(model.divisor_labels.size()) +
                     " divisor labels but rank " + std::to_string(model.rank));

  std::set<std::string> names;
  int distinguished_seen = 0;
  for (const CurveRecord& c : model.curves) {
    if (c.name.empty()) throw InputError("curve with empty name");
    if (!names.insert(c.name).second)
      throw InputError("duplicate curve name '" + c.name + "'");
    if (c.class_vector.size() != r)
      throw InputError("curve '" + c.name + "' has class vector of length " +
                       std::to_string(c.class_vector.size()) + ", expected rank " +
                       std::to_string(model.rank));
    for (const Int& entry : c.class_vector)
      if (entry < 0)
        throw InputError("curve '" + c.name +
                         "' has a negative class entry; effective curve classes are "
                         "non-negative combinations of the distinguished curves");
    if (!c.through_sink)
      throw InputError("curve '" + c.name +
                       "' marked through_sink=false; every complete B-stable curve in a "
                       "simple G-variety passes through the sink");
    if (c.mult_at_sink != 1)
      throw InputError("curve '" + c.name + "' has mult_at_sink " + c.mult_at_sink.str() +
                       "; B-stable curves on a nonsingular model are smooth at the sink");
    if (c.distinguished) {
      // The i-th distinguished curve, in listed order, must be the i-th
      // standard basis vector (D_i . C_j = delta_ij).
      for (std::size_t j = 0; j < r; ++j) {
        const Int expected = (j == static_cast<std::size_t>(distinguished_seen)) ? 1 : 0;
        if (c.class_vector[j] != expected)
          throw InputError("distinguished curve '" + c.name + "' (position " +
                           std::to_string(distinguished_seen + 1) +
                           ") must have the standard basis class vector");
      }
      ++distinguished_seen;
    }
  }
  if (distinguished_seen != model.rank)
    throw InputError("model '" + model.name + "' has " + std::to_string(distinguished_seen) +
                     " distinguished curves, expected rank " + std::to_string(model.rank));
}

const CurveRecord& find_curve(const VarietyModel& model, const std::string& name) {
  for (const CurveRecord& c : model.curves)
    if (c.name == name) return c;
  throw InputError("model '" + model.name + "' has no curve named '" + name + "'");
}

void check_divisor(const VarietyModel& model, const DivisorClass& l) {
  if (l.coeffs.size() != static_cast<std::size_t>(model.rank))
    throw InputError("divisor class has " + std::to_string(l.coeffs.size()) +
                     " coefficients, expected rank " + std::to_string(model.rank));
}

Int intersect(const VarietyModel& model, const DivisorClass& l, const CurveRecord& c) {
  validate_model(model);
  check_divisor(model, l);
  if (c.class_vector.size() != l.coeffs.size())
    throw InputError("curve '" + c.name + "' has class vector of length " +
                     std::to_string(c.class_vector.size()) + ", expected " +
                     std::to_string(l.coeffs.size()));
  Int sum = 0;
  for (std::size_t i = 0; i < l.coeffs.size(); ++i) sum += l.coeffs[i] * c.class_vector[i];
  return sum;
}

bool nef_check_linebundle(const VarietyModel& model, const DivisorClass& l) {
  validate_model(model);
  check_divisor(model, l);
  for (const CurveRecord& c : model.curves) {
    Int sum = 0;
    for (std::size_t i = 0; i < l.coeffs.size(); ++i) sum += l.coeffs[i] * c.class_vector[i];
    if (sum < 0) return false;
  }
  return true;
}

bool ample_check_linebundle(const VarietyModel& model, const DivisorClass& l) {
  validate_model(model);
  check_divisor(model, l);
  return std::all_of(l.coeffs.begin(), l.coeffs.end(), [](const Int& a) { return a >= 1; });
}

Rat seshadri_line(const VarietyModel& model, const DivisorClass& l) {
  if (!ample_check_linebundle(model, l))
    throw Refusal("Seshadri constant at the sink is defined here for ample line bundles; "
                  "L is not ample (every coefficient must be >= 1)");
  Int min = l.coeffs[0];
  for (const Int& a : l.coeffs) min = std::min(min, a);
  return Rat(min);
}

} // namespace poskit
