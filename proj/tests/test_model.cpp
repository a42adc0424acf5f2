#include "poskit/errors.hpp"
#include "poskit/flag.hpp"
#include "poskit/model.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace poskit;

namespace {

VarietyModel rank2_model() { return build_flag_model(parse_cartan_type("A2")); }

VarietyModel rank3_model_with_extra_curve() {
  VarietyModel m = build_flag_model(parse_cartan_type("A3"));
  CurveRecord extra;
  extra.name = "C_extra";
  extra.class_vector = {Int(1), Int(1), Int(2)};
  m.curves.push_back(std::move(extra));
  return m;
}

DivisorClass divisor(std::vector<int> coeffs) {
  DivisorClass l;
  for (int a : coeffs) l.coeffs.emplace_back(a);
  return l;
}

// Permute divisor indices together with the matching curve indices.
VarietyModel permuted_model(const VarietyModel& m, const std::vector<int>& perm) {
  VarietyModel out = m;
  for (int i = 0; i < m.rank; ++i) out.divisor_labels[i] = m.divisor_labels[perm[i]];
  for (std::size_t c = 0; c < m.curves.size(); ++c)
    for (int i = 0; i < m.rank; ++i)
      out.curves[c].class_vector[i] = m.curves[c].class_vector[perm[i]];
  // Restore the distinguished basis order: curve with class e_i moves to slot i.
  std::sort(out.curves.begin(), out.curves.end(), [&](const CurveRecord& a, const CurveRecord& b) {
    auto key = [&](const CurveRecord& c) {
      if (!c.distinguished) return m.rank + 1;
      for (int i = 0; i < m.rank; ++i)
        if (c.class_vector[i] == 1) return i;
      return m.rank;
    };
    return key(a) < key(b);
  });
  return out;
}

} // namespace

TEST_CASE("intersect is the pairing in the distinguished basis") {
  const VarietyModel m = rank2_model();
  CHECK(intersect(m, divisor({3, 1}), find_curve(m, "C2")) == 1);

  VarietyModel with_null = rank2_model();
  CurveRecord null_curve;
  null_curve.name = "C_null";
  null_curve.class_vector = {Int(0), Int(0)};
  with_null.curves.push_back(null_curve);
  CHECK(intersect(with_null, divisor({5, -7}), find_curve(with_null, "C_null")) == 0);

  const VarietyModel m3 = rank3_model_with_extra_curve();
  CHECK(intersect(m3, divisor({2, 5, 1}), find_curve(m3, "C_extra")) == 9);
}

TEST_CASE("intersect rejects dimension mismatches") {
  const VarietyModel m = rank2_model();
  CHECK_THROWS_AS(intersect(m, divisor({1, 2, 3}), find_curve(m, "C1")), InputError);
  CHECK_THROWS_AS(find_curve(m, "no_such_curve"), InputError);
}

TEST_CASE("nef test on line bundles") {
  const VarietyModel m = rank2_model();
  CHECK(nef_check_linebundle(m, divisor({0, 3})));
  CHECK(nef_check_linebundle(m, divisor({0, 0})));
  CHECK_FALSE(nef_check_linebundle(m, divisor({-1, 5})));
}

TEST_CASE("ample test on line bundles") {
  const VarietyModel m = rank2_model();
  CHECK(ample_check_linebundle(m, divisor({1, 1})));
  CHECK_FALSE(ample_check_linebundle(m, divisor({0, 1})));
  const VarietyModel m3 = build_flag_model(parse_cartan_type("A3"));
  CHECK(ample_check_linebundle(m3, divisor({2, 3, 1})));
}

TEST_CASE("seshadri_line is the minimal coefficient") {
  CHECK(seshadri_line(build_projective_space_model(1), divisor({7})) == 7);
  CHECK(seshadri_line(build_flag_model(parse_cartan_type("A3")), divisor({3, 1, 2})) == 1);
  CHECK(seshadri_line(rank2_model(), divisor({1, 1})) == 1);
}

TEST_CASE("seshadri_line refuses non-ample input") {
  CHECK_THROWS_AS(seshadri_line(rank2_model(), divisor({0, 2})), Refusal);
  CHECK_THROWS_AS(seshadri_line(rank2_model(), divisor({-1, 2})), Refusal);
}

TEST_CASE("validator enforces the model axioms") {
  VarietyModel m = rank2_model();
  SUBCASE("negative class entry") {
    m.curves.push_back({"bad", {Int(1), Int(-1)}, false, true, Int(1)});
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("wrong distinguished class") {
    m.curves[0].class_vector = {Int(0), Int(1)};
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("missing distinguished curve") {
    m.curves[1].distinguished = false;
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("curve avoiding the sink") {
    m.curves.push_back({"far", {Int(1), Int(0)}, false, false, Int(1)});
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("singular multiplicity") {
    m.curves.push_back({"thick", {Int(1), Int(0)}, false, true, Int(2)});
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("duplicate names") {
    m.curves.push_back({"C1", {Int(1), Int(0)}, false, true, Int(1)});
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("label count must match rank") {
    m.divisor_labels.pop_back();
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
  SUBCASE("class vector length must match rank") {
    m.curves.push_back({"short", {Int(1)}, false, true, Int(1)});
    CHECK_THROWS_AS(validate_model(m), InputError);
  }
}

TEST_CASE("nef iff all coefficients non-negative iff non-negative on distinguished curves") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coeff(-4, 6);
  const VarietyModel m = rank3_model_with_extra_curve();
  for (int trial = 0; trial < 200; ++trial) {
    DivisorClass l;
    for (int i = 0; i < m.rank; ++i) l.coeffs.emplace_back(coeff(rng));
    const bool nef = nef_check_linebundle(m, l);
    const bool all_nonneg =
        std::all_of(l.coeffs.begin(), l.coeffs.end(), [](const Int& a) { return a >= 0; });
    bool distinguished_nonneg = true;
    for (const CurveRecord& c : m.curves)
      if (c.distinguished) distinguished_nonneg &= (intersect(m, l, c) >= 0);
    CHECK(nef == all_nonneg);
    CHECK(nef == distinguished_nonneg);
    if (ample_check_linebundle(m, l)) CHECK(nef); // ample implies nef
  }
}

TEST_CASE("seshadri_line is invariant under compatible index permutations") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(1, 9);
  const VarietyModel m = build_flag_model(parse_cartan_type("A3"));
  std::vector<int> perm = {0, 1, 2};
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    DivisorClass l;
    for (int i = 0; i < 3; ++i) l.coeffs.emplace_back(coeff(rng));
    DivisorClass lp;
    for (int i = 0; i < 3; ++i) lp.coeffs.push_back(l.coeffs[perm[i]]);
    const VarietyModel mp = permuted_model(m, perm);
    CHECK(seshadri_line(m, l) == seshadri_line(mp, lp));
    CHECK(nef_check_linebundle(m, l) == nef_check_linebundle(mp, lp));
    CHECK(ample_check_linebundle(m, l) == ample_check_linebundle(mp, lp));
  }
}
