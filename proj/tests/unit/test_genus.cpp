#include <doctest.h>

#include <algorithm>
#include <random>

#include "cobord/error.hpp"
#include "cobord/genus.hpp"
#include "cobord/symmchern.hpp"
#include "helpers.hpp"
#include "reference_values.hpp"

using namespace cobord;

namespace {

SpaceSpec as_explicit(const SpaceSpec& spec, std::vector<FixedPointDatum> table) {
  return {spec.name + "/explicit", ExplicitFixedPoints{spec.rank(), std::move(table)}};
}

void check_example(const reference::Example& ex) {
  const auto report = cobordism_class(builtin_space(ex.space));
  CHECK(report.cobordism_class.terms() == ex.cobordism_class);
  CHECK(report.s_numbers == ex.cobordism_class);
  CHECK(s_to_chern(report.s_numbers, ex.n) == ex.chern);
  CHECK(report.lower_coefficients_vanished);
  CHECK(report.integrality_passed);
}

}  // namespace

TEST_SUITE("genus") {

TEST_CASE("generic point") {
  const auto table = orbit_fixed_points(flag_space(3));
  const auto p = choose_generic_point(table, 3);
  CHECK(p.base == 2);
  CHECK(p.coordinates == std::vector<BigRat>{1, 2, 4});
  CHECK_NOTHROW(check_nonsingular(table, p));
  try {
    check_nonsingular(table, GenericPoint{{1, 1, 2}, 0});
    FAIL("expected SingularPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularPoint);
  }
  const auto m10 = orbit_fixed_points(m10_space(M10Structure::J3));
  CHECK_NOTHROW(check_nonsingular(m10, choose_generic_point(m10, 4)));
}

TEST_CASE("worked examples") {
  check_example(reference::flag3());
  check_example(reference::grassmann42());
  check_example(reference::m10_j1());
  check_example(reference::m10_j2());
  check_example(reference::m10_j3());
}

TEST_CASE("class rendering") {
  CHECK(cobordism_class(flag_space(3)).cobordism_class.to_string() == "6*a1^3 + 6*a1*a2 - 6*a3");
}

TEST_CASE("projective spaces") {
  for (int n = 1; n <= 8; ++n) {
    const auto report = cobordism_class(projective_space(n));
    std::vector<std::uint32_t> top(static_cast<std::size_t>(n), 0);
    top.back() = 1;
    CHECK(report.s_numbers.at(OmegaIndex(top)) == n + 1);
    CHECK(report.s_numbers.at(OmegaIndex{static_cast<std::uint32_t>(n)}) == n + 1);
    CHECK(euler_characteristic(projective_space(n)) == static_cast<std::uint64_t>(n + 1));
  }
}

TEST_CASE("single s-numbers") {
  CHECK(s_number(flag_space(2), OmegaIndex{1}) == 2);
  CHECK(s_number(flag_space(3), OmegaIndex{0, 0, 1}) == -6);
  CHECK(s_number(flag_space(4), OmegaIndex{1, 0, 0, 0, 1}) == 80);
  CHECK(s_number(flag_space(4), OmegaIndex{0, 0, 0, 0, 0, 1}) == 0);
  const GenericPoint user{{1, 2, 3, 4}, 0};
  CHECK(s_number(grassmann_space(4, 2), OmegaIndex{0, 0, 0, 1}, user) == -20);
  CHECK(s_number_at(orbit_fixed_points(grassmann_space(4, 2)), OmegaIndex{0, 0, 0, 1}, user) == -20);
  try {
    s_number(flag_space(3), OmegaIndex{0, 1});
    FAIL("expected BadOmega");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadOmega);
  }
}

TEST_CASE("constraint residuals") {
  const auto cp1 = orbit_fixed_points(projective_space(1));
  auto res = verify_constraints(cp1);
  REQUIRE(res.size() == 1);
  CHECK(res[0].residual.is_zero());

  const auto flag3 = verify_constraints(orbit_fixed_points(flag_space(3)));
  REQUIRE(flag3.size() == 3);
  for (const auto& r : flag3) CHECK(r.residual.is_zero());

  auto corrupted = cp1;
  corrupted[1].sign = -1;
  res = verify_constraints(corrupted);
  CHECK(res[0].degree == 0);
  CHECK(res[0].residual == MultiPoly(BigRat(-2)));

  const SpaceSpec bad{"bad", ExplicitFixedPoints{2, corrupted}};
  try {
    cobordism_class(bad);
    FAIL("expected VanishingViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VanishingViolation);
    CHECK(is_constraint_violation(e.code()));
  }
}

TEST_CASE("second point agrees on every builtin") {
  for (const auto& name : {"flag:2", "flag:3", "flag:4", "grassmann:4:2", "grassmann:5:2", "cp:3", "m10:J1", "m10:J2",
                           "m10:J3"}) {
    const auto report = cobordism_class(builtin_space(name), true);
    REQUIRE(report.second_point_agreed.has_value());
    CHECK(*report.second_point_agreed);
  }
}

TEST_CASE("user point and default point agree") {
  GenusOptions options;
  options.point = GenericPoint{{3, -7, 11, 2}, 0};
  const auto spec = m10_space(M10Structure::J2);
  CHECK(cobordism_class(spec, options).cobordism_class == cobordism_class(spec).cobordism_class);
  options.point = GenericPoint{{1, 1, 2, 3}, 0};
  CHECK_THROWS_AS(cobordism_class(spec, options), Error);
}

TEST_CASE("invariance under reordering fixed points and weights") {
  std::mt19937 rng(3);
  for (const auto& name : {"flag:3", "grassmann:4:2", "m10:J3"}) {
    const auto spec = builtin_space(name);
    const auto expected = cobordism_class(spec).cobordism_class;
    for (int trial = 0; trial < 5; ++trial) {
      auto table = orbit_fixed_points(spec);
      std::shuffle(table.begin(), table.end(), rng);
      for (auto& fp : table) std::shuffle(fp.weights.begin(), fp.weights.end(), rng);
      CHECK(cobordism_class(as_explicit(spec, table)).cobordism_class == expected);
    }
  }
}

TEST_CASE("invariance under relabelling, conjugation and scaling of weights") {
  for (const auto& name : {"flag:3", "m10:J1", "grassmann:5:2"}) {
    const auto spec = builtin_space(name);
    const auto expected = cobordism_class(spec).cobordism_class;
    const auto table = orbit_fixed_points(spec);

    std::vector<int> perm(static_cast<std::size_t>(spec.rank()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(perm.size() - 1 - i);
    auto relabelled = table;
    auto negated = table;
    auto scaled = table;
    for (std::size_t p = 0; p < table.size(); ++p) {
      for (std::size_t j = 0; j < table[p].weights.size(); ++j) {
        relabelled[p].weights[j] = table[p].weights[j].permuted(perm);
        negated[p].weights[j] = table[p].weights[j].negated();
        for (auto& v : scaled[p].weights[j].components) v *= 3;
      }
    }
    CHECK(cobordism_class(as_explicit(spec, relabelled)).cobordism_class == expected);
    CHECK(cobordism_class(as_explicit(spec, negated)).cobordism_class == expected);
    CHECK(cobordism_class(as_explicit(spec, scaled)).cobordism_class == expected);
  }
}

TEST_CASE("localized series matches direct per-point sums") {
  const auto table = orbit_fixed_points(grassmann_space(4, 2));
  const auto point = choose_generic_point(table, 4);
  const auto series = localized_series(table, point, 4);
  for (const auto& omega : omegas_of_degree(4)) {
    CHECK(series[4].coefficient(omega.a_monomial()) == s_number_at(table, omega, point));
  }
}

}  // TEST_SUITE
