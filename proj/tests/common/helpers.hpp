#pragma once

#include <random>
#include <string>

#include "cobord/multipoly.hpp"

namespace cobord::testing {

inline MultiPoly x(int i) { return MultiPoly::variable(Var::x(i)); }
inline MultiPoly a(int i) { return MultiPoly::variable(Var::a(i)); }
inline MultiPoly c(long v) { return MultiPoly(BigRat(v)); }

/// Random polynomial in x_1..x_vars with total degree <= max_degree and small
/// rational coefficients.
inline MultiPoly random_poly(std::mt19937& rng, int vars, int max_degree, int max_terms, bool rational = true) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, rational ? 4 : 1);
  std::uniform_int_distribution<int> var(1, vars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  MultiPoly p;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m;
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) m = m * Monomial::of(Var::x(var(rng)));
    p.add_term(m, make_rational(coeff(rng), den(rng)));
  }
  return p;
}

}  // namespace cobord::testing
