#pragma once

#include "poskit/rational.hpp"
#include "poskit/validation.hpp"

#include <string>
#include <vector>

namespace poskit {

/// A complete smooth fan: primitive ray generators and maximal cones given
/// as ray index sets of size dim.
struct Fan {
  int dim = 0;
  std::vector<IVec> rays;
  std::vector<std::vector<int>> max_cones;
};

/// A codimension-one face shared by two maximal cones; it carries the
/// torus-invariant curve C_w (a P^1). `relation_coeffs` solve the wall
/// relation u + u' = sum_i b_i u_i over the shared rays, where u, u' are
/// the two non-shared ray generators.
struct Wall {
  std::vector<int> ray_indices;      // the dim-1 shared rays, ascending
  std::pair<int, int> cone_pair;     // adjacent maximal cones, ascending
  std::pair<int, int> opposite_rays; // u in cone_pair.first, u' in cone_pair.second
  IVec relation_coeffs;              // aligned with ray_indices
};

/// D = sum_rho coeffs[rho] * D_rho, indexed like Fan::rays.
struct ToricDivisor {
  IVec coeffs;
};

/// Checks, in order: structure (index ranges, cone sizes, duplicates, ray
/// coverage), primitivity of rays, smoothness (each maximal cone a Z-basis),
/// the facet-pairing completeness proxy (every facet shared by exactly two
/// maximal cones), and connectivity of the cone adjacency graph. The
/// completeness check is a proxy: sufficient at this scale for pure
/// full-dimensional fans, not a support-covering test.
ValidationReport validate_fan(const Fan& fan);

/// Throws InputError (with the report's issues) unless validate_fan passes.
void require_valid_fan(const Fan& fan);

/// All walls of a validated fan, sorted by ray index set. The wall relation
/// is solved exactly over Z; failure to solve raises InternalError.
std::vector<Wall> enumerate_walls(const Fan& fan);

/// Stable identifier used to key per-curve data: "w" + shared ray indices
/// joined by "_" (e.g. "w2", "w0_3").
std::string wall_id(const Wall& w);

/// deg(D | C_w) = a_u + a_u' - sum_i b_i a_{u_i}.
Int divisor_degree_on_wall(const Fan& fan, const ToricDivisor& d, const Wall& w);

/// Nef test: degree >= 0 on every wall curve.
bool nef_check_toric(const Fan& fan, const ToricDivisor& d);

/// Seshadri constant of a nef D at the torus-fixed point of maximal cone
/// `sigma`: the minimum wall degree over the facets of sigma. Refuses
/// non-nef input.
Rat seshadri_toric_fixed_point(const Fan& fan, const ToricDivisor& d, int sigma);

void check_toric_divisor(const Fan& fan, const ToricDivisor& d);

} // namespace poskit
