#include "poskit/cone.hpp"
#include "poskit/errors.hpp"

#include <doctest.h>

#include <random>

using namespace poskit;

namespace {

RationalCone make_cone(int dim, std::vector<std::vector<int>> gens) {
  RationalCone c;
  c.ambient_dim = dim;
  for (const auto& g : gens) {
    QVec v;
    for (int x : g) v.emplace_back(x);
    c.generators.push_back(std::move(v));
  }
  return c;
}

RationalCone orthant(int dim) {
  RationalCone c;
  c.ambient_dim = dim;
  for (int i = 0; i < dim; ++i) {
    QVec v(dim, Rat(0));
    v[i] = 1;
    c.generators.push_back(std::move(v));
  }
  return c;
}

RationalCone random_cone(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim_dist(1, 5);
  std::uniform_int_distribution<int> entry_dist(-9, 9);
  const int dim = dim_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, 2 * dim);
  RationalCone c;
  c.ambient_dim = dim;
  const int count = count_dist(rng);
  while (static_cast<int>(c.generators.size()) < count) {
    QVec v(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      v[i] = entry_dist(rng);
      zero = zero && v[i] == 0;
    }
    if (!zero) c.generators.push_back(std::move(v));
  }
  return c;
}

} // namespace

TEST_CASE("first orthant is self-dual") {
  const RationalCone c = orthant(3);
  CHECK(cones_equal(dual_cone(c), c));
}

TEST_CASE("dual of a half-plane cone is a single ray") {
  const RationalCone c = make_cone(2, {{1, 0}, {-1, 0}, {0, 1}});
  const RationalCone expected = make_cone(2, {{0, 1}});
  CHECK(cones_equal(dual_cone(c), expected));
}

TEST_CASE("dual of the zero cone is the whole space, and back") {
  RationalCone zero;
  zero.ambient_dim = 2;
  const RationalCone space = dual_cone(zero);
  CHECK(space.generators.size() == 4);
  CHECK(contains(space, {Rat(-7), Rat(3)}));
  CHECK(cones_equal(dual_cone(space), zero));
}

TEST_CASE("contains: apex, outside point, generators, scaling") {
  const RationalCone c = orthant(3);
  CHECK(contains(c, {Rat(0), Rat(0), Rat(0)}));
  CHECK_FALSE(contains(c, {Rat(1), Rat(-1), Rat(0)}));
  for (const QVec& g : c.generators) CHECK(contains(c, g));

  const QVec v = {Rat(2), Rat(3), Rat(0)};
  CHECK(contains(c, v));
  QVec scaled;
  for (const Rat& x : v) scaled.push_back(x * Rat(7, 3));
  CHECK(contains(c, scaled));
}

TEST_CASE("cones_equal: permutation, redundancy, strict inclusion") {
  const RationalCone a = make_cone(2, {{1, 0}, {0, 1}});
  const RationalCone permuted = make_cone(2, {{0, 1}, {1, 0}});
  const RationalCone redundant = make_cone(2, {{1, 0}, {1, 1}, {0, 1}});
  const RationalCone halfplane = make_cone(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK(cones_equal(a, permuted));
  CHECK(cones_equal(a, redundant));
  CHECK_FALSE(cones_equal(a, halfplane));
}

TEST_CASE("dimension mismatches and bad generators are input errors") {
  const RationalCone c = orthant(2);
  CHECK_THROWS_AS(contains(c, {Rat(1)}), InputError);
  CHECK_THROWS_AS(cones_equal(c, orthant(3)), InputError);
  RationalCone bad = c;
  bad.generators.push_back(QVec(2, Rat(0)));
  CHECK_THROWS_AS(dual_cone(bad), InputError);
}

TEST_CASE("duality above the dimension bound is refused") {
  RationalCone big = orthant(13);
  CHECK_THROWS_AS(dual_cone(big), Refusal);
  CHECK_NOTHROW(dual_cone(big, 13));
}

TEST_CASE("double duality is the identity on random cones") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalCone c = random_cone(rng);
    CAPTURE(trial);
    CHECK(cones_equal(dual_cone(dual_cone(c)), c));
  }
}

TEST_CASE("every generator lies in its own cone (random)") {
  std::mt19937_64 rng(0xFACADE);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalCone c = random_cone(rng);
    for (const QVec& g : c.generators) CHECK(contains(c, g));
  }
}

TEST_CASE("dual generators pair non-negatively with the cone (random)") {
  std::mt19937_64 rng(0xBEEF);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalCone c = random_cone(rng);
    const RationalCone d = dual_cone(c);
    for (const QVec& y : d.generators)
      for (const QVec& g : c.generators) CHECK(dot(y, g) >= 0);
  }
}
