#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cobord/error.hpp"
#include "cobord/rootdata.hpp"

using namespace cobord;

namespace {

BlockPartition blocks(std::vector<std::vector<int>> one_based) {
  BlockPartition bp;
  for (auto& b : one_based) {
    for (auto& i : b) --i;
    bp.blocks.push_back(b);
  }
  return bp;
}

std::vector<Weight> identity_weights(const SpaceSpec& s) { return std::get<NamedUnitaryQuotient>(s.data).identity_weights; }

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("coset representative counts") {
  CHECK(coset_representatives(blocks({{1}, {2}, {3}})).size() == 6);
  CHECK(coset_representatives(blocks({{1, 2}, {3, 4}})).size() == 6);
  CHECK(coset_representatives(blocks({{1, 2}, {3}, {4}})).size() == 12);
  CHECK(coset_representatives(blocks({{1, 2, 3}, {4, 5}})).size() == 10);
}

TEST_CASE("coset representatives are minimal, sorted, distinct and contain the identity") {
  for (const auto& bp : {blocks({{1, 2}, {3}, {4}}), blocks({{1, 3}, {2, 4}}), blocks({{1}, {2, 3, 4}, {5}})}) {
    const auto reps = coset_representatives(bp);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    CHECK(std::adjacent_find(reps.begin(), reps.end()) == reps.end());
    std::vector<int> id(bp.rank());
    std::iota(id.begin(), id.end(), 0);
    CHECK(std::find(reps.begin(), reps.end(), id) != reps.end());
    std::set<std::vector<std::set<int>>> images;
    for (const auto& sigma : reps) {
      std::vector<std::set<int>> img;
      for (const auto& b : bp.blocks) {
        std::set<int> s;
        for (int i : b) s.insert(sigma[i]);
        img.push_back(s);
        auto sorted = b;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j + 1 < sorted.size(); ++j) CHECK(sigma[sorted[j]] < sigma[sorted[j + 1]]);
      }
      images.insert(img);
    }
    // One representative per left coset: block images are pairwise different.
    CHECK(images.size() == reps.size());
  }
}

TEST_CASE("CP1 orbit") {
  SpaceSpec s{"cp1", NamedUnitaryQuotient{2, blocks({{1}, {2}}), {root_difference(2, 1, 2)}}};
  const auto table = orbit_fixed_points(s);
  REQUIRE(table.size() == 2);
  CHECK(table[0].weights[0].components == std::vector<std::int64_t>{1, -1});
  CHECK(table[1].weights[0].components == std::vector<std::int64_t>{-1, 1});
  CHECK(table[0].sign == 1);
  CHECK(table[1].sign == 1);
}

TEST_CASE("orbit sizes equal the Euler characteristic") {
  for (const auto& name : {"flag:2", "flag:3", "flag:4", "flag:5", "grassmann:4:2", "grassmann:5:2", "cp:1", "cp:6",
                           "m10:J1", "m10:J2", "m10:J3"}) {
    const auto spec = builtin_space(name);
    CHECK(orbit_fixed_points(spec).size() == euler_characteristic(spec));
  }
  CHECK(euler_characteristic(flag_space(3)) == 6);
  CHECK(euler_characteristic(grassmann_space(4, 2)) == 6);
  CHECK(euler_characteristic(m10_space(M10Structure::J2)) == 12);
  CHECK(euler_characteristic(flag_space(6)) == 720);
}

TEST_CASE("permuted weights keep their components") {
  for (const auto& name : {"flag:4", "m10:J1", "m10:J3", "grassmann:5:2"}) {
    const auto spec = builtin_space(name);
    const auto ids = identity_weights(spec);
    for (const auto& fp : orbit_fixed_points(spec)) {
      REQUIRE(fp.weights.size() == ids.size());
      for (std::size_t j = 0; j < ids.size(); ++j) {
        CHECK_FALSE(fp.weights[j].is_zero());
        auto a = fp.weights[j].components;
        auto b = ids[j].components;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("builtin weights") {
  const auto flag3 = identity_weights(flag_space(3));
  REQUIRE(flag3.size() == 3);
  CHECK(flag3[0].to_string() == "x1 - x2");
  CHECK(flag3[1].to_string() == "x1 - x3");
  CHECK(flag3[2].to_string() == "x2 - x3");

  const auto cp3 = identity_weights(projective_space(3));
  REQUIRE(cp3.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(cp3[j] == root_difference(4, j + 1, 4));

  const auto j3 = identity_weights(m10_space(M10Structure::J3));
  std::vector<std::string> names;
  for (const auto& w : j3) names.push_back(w.to_string());
  CHECK(names == std::vector<std::string>{"x1 - x3", "x2 - x3", "-x1 + x4", "-x2 + x4", "x3 - x4"});

  const auto g42 = identity_weights(grassmann_space(4, 2));
  CHECK(g42 == std::vector<Weight>{root_difference(4, 1, 3), root_difference(4, 1, 4), root_difference(4, 2, 3),
                                   root_difference(4, 2, 4)});
  const auto j2 = identity_weights(m10_space(M10Structure::J2));
  CHECK(j2.front() == root_difference(4, 4, 1));
}

TEST_CASE("builtin parameter errors") {
  CHECK_THROWS_AS(flag_space(1), Error);
  CHECK_THROWS_AS(grassmann_space(4, 4), Error);
  CHECK_THROWS_AS(grassmann_space(4, 0), Error);
  CHECK_THROWS_AS(projective_space(0), Error);
  for (const auto& bad : {"flag", "flag:x", "grassmann:4", "m10:J4", "sphere:2", "flag:-3", ""}) {
    try {
      builtin_space(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadParameters);
    }
  }
}

TEST_CASE("validation") {
  SpaceSpec unstable{"bad", NamedUnitaryQuotient{3, blocks({{1, 2}, {3}}), {root_difference(3, 1, 3)}}};
  CHECK_THROWS_AS(validate(unstable), Error);

  // Swapping x1, x2 maps x1 - x2 to its negative: legal on lines, not in strict mode.
  SpaceSpec flipped{"flip", NamedUnitaryQuotient{3, blocks({{1, 2}, {3}}),
                                                 {root_difference(3, 1, 2), root_difference(3, 1, 3),
                                                  root_difference(3, 2, 3)}}};
  CHECK_NOTHROW(validate(flipped));
  CHECK_THROWS_AS(validate(flipped, true), Error);

  SpaceSpec zero{"zero", NamedUnitaryQuotient{2, blocks({{1}, {2}}), {Weight{{0, 0}}}}};
  try {
    validate(zero);
    FAIL("zero weight accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroWeight);
  }

  SpaceSpec overlapping{"overlap", NamedUnitaryQuotient{2, blocks({{1, 2}, {2}}), {root_difference(2, 1, 2)}}};
  CHECK_THROWS_AS(validate(overlapping), Error);

  SpaceSpec bad_sign{"sign", ExplicitFixedPoints{1, {FixedPointDatum{2, {Weight{{1}}}}}}};
  CHECK_THROWS_AS(validate(bad_sign), Error);

  SpaceSpec ragged{"ragged", ExplicitFixedPoints{1, {FixedPointDatum{1, {Weight{{1}}}}, FixedPointDatum{1, {}}}}};
  CHECK_THROWS_AS(validate(ragged), Error);

  for (const auto& name : {"flag:4", "grassmann:5:3", "m10:J1", "m10:J2", "m10:J3"}) {
    CHECK_NOTHROW(validate(builtin_space(name), true));
  }
}

TEST_CASE("explicit tables pass through") {
  ExplicitFixedPoints e{2, {FixedPointDatum{1, {Weight{{1, -1}}}}, FixedPointDatum{-1, {Weight{{1, -1}}}}}};
  SpaceSpec s{"e", e};
  const auto table = orbit_fixed_points(s);
  REQUIRE(table.size() == 2);
  CHECK(table[1].sign == -1);
  CHECK(euler_characteristic(s) == 2);
  CHECK(s.half_dimension() == 1);
}

}  // TEST_SUITE
