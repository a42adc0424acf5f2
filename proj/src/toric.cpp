#include "poskit/toric.hpp"

#include "poskit/errors.hpp"
#include "poskit/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace poskit {

namespace {

std::string join_indices(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

// Determinant by fraction-free expansion is overkill here; cones are small,
// so rational elimination does fine.
Rat det(QMat a) {
  const int n = static_cast<int>(a.size());
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rat f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

bool fan_structure_ok(const Fan& fan, ValidationReport& report) {
  bool ok = true;
  if (fan.dim < 1) {
    report.fail("structure", "fan dimension must be positive");
    ok = false;
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (static_cast<int>(fan.rays[i].size()) != fan.dim) {
      report.fail("structure", "ray " + std::to_string(i) + " has length " +
                                   std::to_string(fan.rays[i].size()) + ", expected " +
                                   std::to_string(fan.dim));
      ok = false;
    }
  std::set<std::vector<int>> seen_cones;
  std::vector<bool> used(fan.rays.size(), false);
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    const auto& cone = fan.max_cones[k];
    if (static_cast<int>(cone.size()) != fan.dim) {
      report.fail("structure", "max_cone " + std::to_string(k) + " has " +
                                   std::to_string(cone.size()) + " rays, expected " +
                                   std::to_string(fan.dim));
      ok = false;
      continue;
    }
    std::set<int> distinct;
    bool in_range = true;
    for (int idx : cone) {
      if (idx < 0 || idx >= static_cast<int>(fan.rays.size())) {
        report.fail("structure",
                    "max_cone " + std::to_string(k) + " references ray " + std::to_string(idx));
        in_range = false;
        ok = false;
      } else {
        used[idx] = true;
      }
      distinct.insert(idx);
    }
    if (in_range && distinct.size() != cone.size()) {
      report.fail("structure", "max_cone " + std::to_string(k) + " repeats a ray index");
      ok = false;
    }
    std::vector<int> sorted(cone.begin(), cone.end());
    std::sort(sorted.begin(), sorted.end());
    if (!seen_cones.insert(sorted).second) {
      report.fail("structure", "max_cone " + std::to_string(k) + " duplicates another cone");
      ok = false;
    }
  }
  if (fan.max_cones.empty()) {
    report.fail("structure", "fan has no maximal cones");
    ok = false;
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (!used[i]) {
      report.fail("structure", "ray " + std::to_string(i) + " is not used by any maximal cone");
      ok = false;
    }
  return ok;
}

// Facet map: sorted (dim-1)-subsets of a maximal cone's rays -> cones.
// For smooth (hence simplicial) cones every such subset spans a facet.
std::map<std::vector<int>, std::vector<int>> facet_incidence(const Fan& fan) {
  std::map<std::vector<int>, std::vector<int>> facets;
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    std::vector<int> cone(fan.max_cones[k].begin(), fan.max_cones[k].end());
    std::sort(cone.begin(), cone.end());
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != drop) facet.push_back(cone[i]);
      facets[facet].push_back(static_cast<int>(k));
    }
  }
  return facets;
}

} // namespace

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport report;
  const bool structure = fan_structure_ok(fan, report);
  report.mark("structure", structure);
  if (!structure) {
    report.pass = false;
    return report;
  }

  bool primitive = true;
  std::set<IVec> distinct_rays;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    Int g = 0;
    for (const Int& x : fan.rays[i]) g = boost::multiprecision::gcd(g, x);
    if (g == 0) {
      report.fail("primitivity", "ray " + std::to_string(i) + " is the zero vector");
      primitive = false;
    } else if (g != 1) {
      report.fail("primitivity",
                  "ray " + std::to_string(i) + " is not primitive (gcd " + g.str() + ")");
      primitive = false;
    }
    if (!distinct_rays.insert(fan.rays[i]).second) {
      report.fail("primitivity", "ray " + std::to_string(i) + " duplicates another ray");
      primitive = false;
    }
  }
  report.mark("primitivity", primitive);

  bool smooth = true;
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    QMat rows;
    for (int idx : fan.max_cones[k]) rows.push_back(to_rational(fan.rays[idx]));
    const Rat d = det(rows);
    if (d != 1 && d != -1) {
      report.fail("smoothness", "max_cone " + std::to_string(k) + " {" +
                                    join_indices(fan.max_cones[k]) + "} has determinant " +
                                    rat_to_string(d) + ", expected +/-1");
      smooth = false;
    }
  }
  report.mark("smoothness", smooth);

  const auto facets = facet_incidence(fan);
  bool complete = true;
  for (const auto& [facet, cones] : facets) {
    if (cones.size() != 2) {
      report.fail("completeness", "facet {" + join_indices(facet) + "} belongs to " +
                                      std::to_string(cones.size()) +
                                      " maximal cones, expected exactly 2");
      complete = false;
    }
  }
  report.mark("completeness", complete);

  bool connected = true;
  if (complete && !fan.max_cones.empty()) {
    std::vector<std::set<int>> adj(fan.max_cones.size());
    for (const auto& [facet, cones] : facets) {
      adj[cones[0]].insert(cones[1]);
      adj[cones[1]].insert(cones[0]);
    }
    std::vector<bool> visited(fan.max_cones.size(), false);
    std::vector<int> stack = {0};
    visited[0] = true;
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      for (int next : adj[k])
        if (!visited[next]) {
          visited[next] = true;
          stack.push_back(next);
        }
    }
    for (std::size_t k = 0; k < visited.size(); ++k)
      if (!visited[k]) {
        report.fail("connectivity", "max_cone " + std::to_string(k) +
                                        " is not reachable in the adjacency graph");
        connected = false;
      }
  }
  report.mark("connectivity", connected);
  return report;
}

void require_valid_fan(const Fan& fan) {
  const ValidationReport report = validate_fan(fan);
  if (report.pass) return;
  std::string msg = "fan validation failed:";
  for (const ValidationIssue& issue : report.issues)
    msg += "\n  [" + issue.check + "] " + issue.detail;
  throw InputError(msg);
}

std::vector<Wall> enumerate_walls(const Fan& fan) {
  require_valid_fan(fan);
  std::vector<Wall> walls;
  for (const auto& [facet, cones] : facet_incidence(fan)) {
    Wall w;
    w.ray_indices = facet;
    w.cone_pair = {std::min(cones[0], cones[1]), std::max(cones[0], cones[1])};

    auto opposite_in = [&](int cone_index) {
      for (int idx : fan.max_cones[cone_index])
        if (std::find(facet.begin(), facet.end(), idx) == facet.end()) return idx;
      throw InternalError("maximal cone equals one of its facets");
    };
    w.opposite_rays = {opposite_in(w.cone_pair.first), opposite_in(w.cone_pair.second)};

    // Solve u + u' = sum_i b_i u_i over the shared rays. The shared rays
    // are part of a Z-basis, so the rational solution is unique; on a
    // smooth fan it is integral.
    const int d = fan.dim;
    QMat system(d, QVec(facet.size()));
    QVec rhs(d);
    for (int row = 0; row < d; ++row) {
      for (std::size_t col = 0; col < facet.size(); ++col)
        system[row][col] = Rat(fan.rays[facet[col]][row]);
      rhs[row] = Rat(fan.rays[w.opposite_rays.first][row] + fan.rays[w.opposite_rays.second][row]);
    }
    const auto solution = solve_unique(system, rhs, static_cast<int>(facet.size()));
    if (!solution)
      throw InternalError("wall relation unsolvable at facet {" + join_indices(facet) + "}");
    for (const Rat& b : *solution) {
      if (boost::multiprecision::denominator(b) != 1)
        throw InternalError("wall relation at facet {" + join_indices(facet) +
                            "} is not integral");
      w.relation_coeffs.push_back(boost::multiprecision::numerator(b));
    }
    walls.push_back(std::move(w));
  }
  // facet_incidence iterates a sorted map, so walls arrive ordered by ray
  // index set already; keep the sort explicit anyway.
  std::sort(walls.begin(), walls.end(),
            [](const Wall& a, const Wall& b) { return a.ray_indices < b.ray_indices; });
  return walls;
}

std::string wall_id(const Wall& w) {
  std::string id = "w";
  for (std::size_t i = 0; i < w.ray_indices.size(); ++i) {
    if (i) id += "_";
    id += std::to_string(w.ray_indices[i]);
  }
  return id;
}

void check_toric_divisor(const Fan& fan, const ToricDivisor& d) {
  if (d.coeffs.size() != fan.rays.size())
    throw InputError("toric divisor has " + std::to_string(d.coeffs.size()) +
                     " coefficients, expected one per ray (" + std::to_string(fan.rays.size()) +
                     ")");
}

Int divisor_degree_on_wall(const Fan& fan, const ToricDivisor& d, const Wall& w) {
  check_toric_divisor(fan, d);
  Int deg = d.coeffs[w.opposite_rays.first] + d.coeffs[w.opposite_rays.second];
  for (std::size_t i = 0; i < w.ray_indices.size(); ++i)
    deg -= w.relation_coeffs[i] * d.coeffs[w.ray_indices[i]];
  return deg;
}

bool nef_check_toric(const Fan& fan, const ToricDivisor& d) {
  check_toric_divisor(fan, d);
  for (const Wall& w : enumerate_walls(fan))
    if (divisor_degree_on_wall(fan, d, w) < 0) return false;
  return true;
}

Rat seshadri_toric_fixed_point(const Fan& fan, const ToricDivisor& d, int sigma) {
  require_valid_fan(fan);
  check_toric_divisor(fan, d);
  if (sigma < 0 || sigma >= static_cast<int>(fan.max_cones.size()))
    throw InputError("maximal cone index " + std::to_string(sigma) + " out of range [0, " +
                     std::to_string(fan.max_cones.size()) + ")");
  const std::vector<Wall> walls = enumerate_walls(fan);
  for (const Wall& w : walls) {
    const Int deg = divisor_degree_on_wall(fan, d, w);
    if (deg < 0)
      throw Refusal("Seshadri constants are defined for nef divisors; D has degree " + deg.str() +
                    " on wall " + wall_id(w));
  }

  bool found = false;
  Int min = 0;
  for (const Wall& w : walls) {
    if (w.cone_pair.first != sigma && w.cone_pair.second != sigma) continue;
    const Int deg = divisor_degree_on_wall(fan, d, w);
    if (!found || deg < min) min = deg;
    found = true;
  }
  if (!found) throw InternalError("maximal cone has no incident walls");
  return Rat(min);
}

} // namespace poskit
