#include "poskit/cone.hpp"

#include "poskit/errors.hpp"

#include <algorithm>
#include <string>

namespace poskit {

namespace {

// Extreme rays of the pointed cone { z in Q^k : m z >= 0 }, rank(m) = k,
// by the double description method. Constraints are inserted in
// lexicographic order after seeding with a lexicographically-least
// independent subset, so the result is deterministic. Each intermediate
// ray set is kept as primitive integer vectors.
//
// Adjacency of rays p, n is decided algebraically: the constraints already
// processed that are tight at both must have rank k - 2. This test is valid
// because every intermediate cone here is pointed.
std::vector<QVec> extreme_rays_pointed(QMat m, int k) {
  // Drop zero rows (vacuous constraints) and duplicates, then sort.
  m.erase(std::remove_if(m.begin(), m.end(), is_zero_vector), m.end());
  std::sort(m.begin(), m.end(), lex_less);
  m.erase(std::unique(m.begin(), m.end()), m.end());

  // Seed: first k rows (in lex order) that are linearly independent.
  std::vector<int> seed;
  QMat seed_rows;
  for (int i = 0; i < static_cast<int>(m.size()) && static_cast<int>(seed.size()) < k; ++i) {
    seed_rows.push_back(m[i]);
    if (rank_of(seed_rows) == static_cast<int>(seed.size()) + 1) {
      seed.push_back(i);
    } else {
      seed_rows.pop_back();
    }
  }
  if (static_cast<int>(seed.size()) != k)
    throw InternalError("double description: constraint matrix lost full rank");

  // The simplicial cone { z : m_seed z >= 0 } has the columns of the
  // inverse of m_seed as its extreme rays.
  const QMat inv = invert(seed_rows);
  std::vector<QVec> rays;
  for (int j = 0; j < k; ++j) {
    QVec col(k);
    for (int i = 0; i < k; ++i) col[i] = inv[i][j];
    rays.push_back(primitive_direction(col));
  }

  QMat processed = seed_rows;
  std::vector<bool> in_seed(m.size(), false);
  for (int i : seed) in_seed[i] = true;

  for (int ci = 0; ci < static_cast<int>(m.size()); ++ci) {
    if (in_seed[ci]) continue;
    const QVec& a = m[ci];

    std::vector<Rat> side(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) side[r] = dot(a, rays[r]);

    bool any_negative = false;
    for (const Rat& s : side) any_negative |= (s < 0);
    if (any_negative) {
      // Tight sets against the constraints processed so far, used by the
      // adjacency rank test.
      auto tight_rows = [&](std::size_t r1, std::size_t r2) {
        QMat rows;
        for (const QVec& row : processed)
          if (dot(row, rays[r1]) == 0 && dot(row, rays[r2]) == 0) rows.push_back(row);
        return rows;
      };

      std::vector<QVec> next;
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (side[r] >= 0) next.push_back(rays[r]);
      if (k >= 2) {
        for (std::size_t p = 0; p < rays.size(); ++p) {
          if (side[p] <= 0) continue;
          for (std::size_t n = 0; n < rays.size(); ++n) {
            if (side[n] >= 0) continue;
            if (rank_of(tight_rows(p, n)) != k - 2) continue;
            QVec w(k);
            for (int i = 0; i < k; ++i) w[i] = side[p] * rays[n][i] - side[n] * rays[p][i];
            next.push_back(primitive_direction(w));
          }
        }
      }
      std::sort(next.begin(), next.end(), lex_less);
      next.erase(std::unique(next.begin(), next.end()), next.end());
      rays = std::move(next);
    }
    processed.push_back(a);
  }

  std::sort(rays.begin(), rays.end(), lex_less);
  return rays;
}

} // namespace

void validate_cone(const RationalCone& c) {
  if (c.ambient_dim < 1) throw InputError("cone ambient dimension must be positive");
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    if (static_cast<int>(c.generators[i].size()) != c.ambient_dim)
      throw InputError("cone generator " + std::to_string(i) + " has length " +
                       std::to_string(c.generators[i].size()) + ", expected " +
                       std::to_string(c.ambient_dim));
    if (is_zero_vector(c.generators[i]))
      throw InputError("cone generator " + std::to_string(i) + " is the zero vector");
  }
}

RationalCone dual_cone(const RationalCone& c, int dim_bound) {
  validate_cone(c);
  const int m = c.ambient_dim;
  if (m > dim_bound)
    throw Refusal("cone duality refused in dimension " + std::to_string(m) +
                  " (bound " + std::to_string(dim_bound) +
                  "; raise POSKIT_MAX_CONE_DIM to override)");

  RationalCone dual;
  dual.ambient_dim = m;

  // The dual of the zero cone is the whole space.
  if (c.generators.empty()) {
    for (int i = 0; i < m; ++i) {
      QVec plus(m, Rat(0)), minus(m, Rat(0));
      plus[i] = 1;
      minus[i] = -1;
      dual.generators.push_back(plus);
      dual.generators.push_back(minus);
    }
    std::sort(dual.generators.begin(), dual.generators.end(), lex_less);
    return dual;
  }

  // Dual = { y : a y >= 0 } with the generators of c as constraint rows.
  // Split off the lineality space ker(a), then enumerate extreme rays of
  // the pointed remainder on the pivot-coordinate complement.
  const QMat a(c.generators.begin(), c.generators.end());
  const std::vector<QVec> lineality = nullspace_basis(a, m);

  QMat rr = a;
  const std::vector<int> pivots = rref_inplace(rr);
  const int k = static_cast<int>(pivots.size());

  std::vector<QVec> rays_embedded;
  if (k > 0) {
    QMat restricted;
    restricted.reserve(a.size());
    for (const QVec& row : a) {
      QVec r(k);
      for (int j = 0; j < k; ++j) r[j] = row[pivots[j]];
      restricted.push_back(std::move(r));
    }
    for (const QVec& z : extreme_rays_pointed(std::move(restricted), k)) {
      QVec y(m, Rat(0));
      for (int j = 0; j < k; ++j) y[pivots[j]] = z[j];
      rays_embedded.push_back(std::move(y));
    }
  }

  for (const QVec& l : lineality) {
    const QVec p = primitive_direction(l);
    QVec n(m);
    for (int i = 0; i < m; ++i) n[i] = -p[i];
    dual.generators.push_back(p);
    dual.generators.push_back(std::move(n));
  }
  for (QVec& r : rays_embedded) dual.generators.push_back(std::move(r));

  std::sort(dual.generators.begin(), dual.generators.end(), lex_less);
  dual.generators.erase(std::unique(dual.generators.begin(), dual.generators.end()),
                        dual.generators.end());
  return dual;
}

bool contains(const RationalCone& c, const QVec& v, int dim_bound) {
  validate_cone(c);
  if (static_cast<int>(v.size()) != c.ambient_dim)
    throw InputError("vector length " + std::to_string(v.size()) +
                     " does not match cone dimension " + std::to_string(c.ambient_dim));
  const RationalCone dual = dual_cone(c, dim_bound);
  for (const QVec& y : dual.generators)
    if (dot(y, v) < 0) return false;
  return true;
}

bool cones_equal(const RationalCone& a, const RationalCone& b, int dim_bound) {
  validate_cone(a);
  validate_cone(b);
  if (a.ambient_dim != b.ambient_dim)
    throw InputError("cones_equal: ambient dimensions differ (" +
                     std::to_string(a.ambient_dim) + " vs " + std::to_string(b.ambient_dim) + ")");
  const RationalCone dual_a = dual_cone(a, dim_bound);
  const RationalCone dual_b = dual_cone(b, dim_bound);
  for (const QVec& g : a.generators)
    for (const QVec& y : dual_b.generators)
      if (dot(y, g) < 0) return false;
  for (const QVec& g : b.generators)
    for (const QVec& y : dual_a.generators)
      if (dot(y, g) < 0) return false;
  return true;
}

} // namespace poskit
