#include <doctest.h>

#include <random>

#include "cobord/divdiff.hpp"
#include "cobord/error.hpp"
#include "cobord/genus.hpp"
#include "oracles.hpp"

using namespace cobord;
using namespace cobord::testing;

TEST_SUITE("divdiff") {

TEST_CASE("divided difference examples") {
  CHECK(divided_difference(1, x(1)) == c(1));
  CHECK(divided_difference(1, x(1).pow(2)) == x(1) + x(2));
  CHECK(divided_difference(2, x(1) * x(2)) == x(1));
  CHECK(divided_difference(1, x(1) * x(2) + x(3)).is_zero());
  CHECK(divided_difference(1, a(1) * x(1).pow(3)) == a(1) * (x(1).pow(2) + x(1) * x(2) + x(2).pow(2)));
}

TEST_CASE("divided differences satisfy the twisted Leibniz rule") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(rng, 3, 4, 5);
    const auto q = random_poly(rng, 3, 4, 5);
    for (int i = 1; i <= 2; ++i) {
      const auto lhs = divided_difference(i, p * q);
      const auto rhs = divided_difference(i, p) * q + p.permuted_x(transposition(3, i)) * divided_difference(i, q);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("vandermonde") {
  CHECK(vandermonde(1, 3) == (x(1) - x(2)) * (x(1) - x(3)) * (x(2) - x(3)));
  CHECK(vandermonde(3, 4) == x(3) - x(4));
  CHECK(vandermonde(2, 2) == c(1));
}

TEST_CASE("L on the staircase is one") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(L_operator(staircase_monomial(Partition{}, n), n, LMethod::ComposedDivDiff) == c(1));
    CHECK(L_operator(staircase_monomial(Partition{}, n), n, LMethod::Antisymmetrize) == c(1));
  }
}

TEST_CASE("L of shifted monomials gives the tableau Schur polynomials") {
  for (const auto& lambda : partitions_up_to(4)) {
    for (int n = std::max<int>(1, static_cast<int>(lambda.parts.size())); n <= 4; ++n) {
      const auto oracle = tableau_schur(lambda, n);
      const auto shifted = staircase_monomial(lambda, n);
      CHECK(L_operator(shifted, n, LMethod::ComposedDivDiff) == oracle);
      CHECK(L_operator(shifted, n, LMethod::Antisymmetrize) == oracle);
      CHECK(schur(lambda, n) == oracle);
    }
  }
  try {
    schur(Partition{{2, 1, 1}}, 2);
    FAIL("expected TooManyParts");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyParts);
  }
}

TEST_CASE("L kills polynomials symmetric in a neighbouring pair") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_poly(rng, n, 5, 6);
      for (int i = 1; i < n; ++i) {
        const auto sym = p + p.permuted_x(transposition(n, i));
        CHECK(L_operator(sym, n, LMethod::ComposedDivDiff).is_zero());
        CHECK(L_operator(sym, n, LMethod::Antisymmetrize).is_zero());
      }
    }
  }
}

TEST_CASE("L is linear over symmetric polynomials and the two methods agree") {
  std::mt19937 rng(23);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_poly(rng, n, 6, 6);
      const auto lambda = partitions(2)[trial % 2];
      const auto s = schur(lambda, n);
      const auto lp = L_operator(p, n, LMethod::ComposedDivDiff);
      CHECK(lp == L_operator(p, n, LMethod::Antisymmetrize));
      CHECK(L_operator(s * p, n) == s * lp);
    }
  }
}

TEST_CASE("exact flag classes match localization") {
  for (int n = 2; n <= 4; ++n) {
    const auto genus = cobordism_class(flag_space(n)).cobordism_class;
    CHECK(flag_class_exact(n) == genus);
    CHECK(flag_class_exact(n, LMethod::Antisymmetrize) == genus);
  }
  CHECK(flag_class_exact(4, LMethod::ComposedDivDiff, true) == flag_class_exact(4, LMethod::ComposedDivDiff, false));
  CHECK_THROWS_AS(flag_class_exact(1), Error);
  CHECK_THROWS_AS(flag_class_exact(6), Error);
}

TEST_CASE("exact Grassmann classes match localization") {
  CHECK(grassmann_class_exact(2, 2) == cobordism_class(grassmann_space(4, 2)).cobordism_class);
  CHECK(grassmann_class_exact(2, 2, LMethod::Antisymmetrize) == cobordism_class(grassmann_space(4, 2)).cobordism_class);
  CHECK(grassmann_class_exact(3, 1) == cobordism_class(projective_space(3)).cobordism_class);
  CHECK(grassmann_class_exact(3, 2) == cobordism_class(grassmann_space(5, 2)).cobordism_class);
  CHECK_THROWS_AS(grassmann_class_exact(3, 3), Error);
  CHECK_THROWS_AS(grassmann_class_exact(0, 2), Error);
}

TEST_CASE("flag vanishing suite") {
  const auto four = flag_vanishing_suite(4);
  CHECK_FALSE(four.empty());
  bool saw_top = false;
  for (const auto& check : four) {
    CHECK(check.value == 0);
    CHECK_FALSE(check.rules.empty());
    for (auto r : check.rules) saw_top = saw_top || r == VanishingRule::TopPowerSum;
  }
  CHECK(saw_top);
  for (const auto& check : flag_vanishing_suite(5)) CHECK(check.value == 0);
  CHECK_THROWS_AS(flag_vanishing_suite(3), Error);
}

}  // TEST_SUITE
