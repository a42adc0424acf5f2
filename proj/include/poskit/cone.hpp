#pragma once

#include "poskit/linalg.hpp"
#include "poskit/rational.hpp"

namespace poskit {

/// Finitely generated cone over Q: all non-negative rational combinations of
/// `generators`. The generator list need not be minimal or irredundant.
struct RationalCone {
  int ambient_dim = 0;
  std::vector<QVec> generators;
};

/// Duality in dimensions above this bound is refused unless the caller
/// raises the bound explicitly (the CLI honours POSKIT_MAX_CONE_DIM).
inline constexpr int kDefaultConeDimBound = 12;

/// The dual cone { y : y.x >= 0 for all x in C }, computed exactly by the
/// double description method. Output generators are primitive integer
/// vectors in lexicographic order; lineality is returned as +/- basis pairs.
RationalCone dual_cone(const RationalCone& c, int dim_bound = kDefaultConeDimBound);

/// Membership test: v against the generators of the dual cone.
bool contains(const RationalCone& c, const QVec& v, int dim_bound = kDefaultConeDimBound);

/// Semantic equality: mutual containment of generators.
bool cones_equal(const RationalCone& a, const RationalCone& b,
                 int dim_bound = kDefaultConeDimBound);

/// Throws InputError unless dimensions are positive and every generator is a
/// nonzero vector of the right length.
void validate_cone(const RationalCone& c);

} // namespace poskit
