#pragma once

#include "poskit/model.hpp"
#include "poskit/toric.hpp"
#include "poskit/validation.hpp"

#include <map>
#include <string>

namespace poskit {

/// An equivariant vector bundle presented by its splitting type on each
/// invariant curve: E|_C = O(a_1(C)) + ... + O(a_n(C)). Degree lists are
/// multisets, stored sorted ascending. `c1` is a divisor class on the
/// attached model (coefficients per boundary divisor, or per ray when the
/// bundle lives on a fan).
struct SplittingData {
  int rank = 0;
  IVec c1;
  std::map<std::string, IVec> per_curve;
};

/// Sorts each degree list ascending (the canonical form).
SplittingData normalized(SplittingData s);

// --- bundles on a simple-G model (curves = the model's curve records) ---

/// Coverage (every curve listed, n degrees each, no stray names) and first
/// Chern class consistency (sum of degrees = c1 . C on every curve).
ValidationReport validate_splitting(const VarietyModel& model, const SplittingData& s);

/// Nef test: every splitting degree on every curve >= 0.
bool nef_check_bundle(const VarietyModel& model, const SplittingData& s);

/// Ample test: every splitting degree >= 1.
bool ample_check_bundle(const VarietyModel& model, const SplittingData& s);

/// Seshadri constant of a nef bundle at the sink: the minimum splitting
/// degree over all curves (every B-stable curve passes through the sink).
/// Refuses non-nef input.
Rat seshadri_bundle(const VarietyModel& model, const SplittingData& s);

// --- bundles on a fan (curves = wall curves, keyed by wall_id) ---

ValidationReport validate_splitting(const Fan& fan, const SplittingData& s);

bool nef_check_bundle(const Fan& fan, const SplittingData& s);

/// Refused: the finite ample criterion is proved for simple G-varieties;
/// on toric models only the nef test is available.
bool ample_check_bundle(const Fan& fan, const SplittingData& s);

/// Seshadri constant of a nef bundle at the fixed point of maximal cone
/// `sigma`: minimum splitting degree over the walls incident to sigma.
Rat seshadri_bundle(const Fan& fan, const SplittingData& s, int sigma);

} // namespace poskit
