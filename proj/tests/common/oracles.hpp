#pragma once

// Independent brute-force constructions the library results are checked against.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "cobord/multipoly.hpp"
#include "cobord/symmchern.hpp"
#include "helpers.hpp"

namespace cobord::testing {

inline std::vector<int> transposition(int n, int i) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[i]);
  return perm;
}

/// e_k(x_1..x_n) summed over k-subsets.
inline MultiPoly elementary(unsigned k, unsigned n) {
  MultiPoly sum;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    MultiPoly term(BigRat(1));
    for (unsigned i = 0; i < n; ++i)
      if (pick[i]) term = term * x(static_cast<int>(i) + 1);
    sum = sum + term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sum;
}

/// prod_i (1 + sum_k a_k t_i^k) fully expanded as a polynomial in the a's.
inline MultiPoly expanded_product(const std::vector<BigRat>& t, unsigned n) {
  MultiPoly prod(BigRat(1));
  for (const auto& ti : t) {
    MultiPoly f(BigRat(1));
    BigRat power = 1;
    for (unsigned k = 1; k <= n; ++k) {
      power *= ti;
      f = f + poly_scale(a(static_cast<int>(k)), power);
    }
    prod = prod * f;
  }
  return prod;
}

/// Sum of x^content over semistandard tableaux of shape lambda with entries in 1..n.
inline MultiPoly tableau_schur(const Partition& lambda, int n) {
  std::vector<std::vector<int>> rows;
  for (auto len : lambda.parts) rows.emplace_back(len, 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) cells.emplace_back(r, c);
  MultiPoly sum;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      MultiPoly term(BigRat(1));
      for (const auto& row : rows)
        for (int v : row) term = term * x(v);
      sum = sum + term;
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[r][c] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return sum;
}

/// x^{lambda + delta} with delta = (n-1, ..., 1, 0).
inline MultiPoly staircase_monomial(const Partition& lambda, int n) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const auto part = static_cast<std::size_t>(i) < lambda.parts.size() ? lambda.parts[i] : 0;
    exps[i] = part + static_cast<std::uint32_t>(n - 1 - i);
  }
  return MultiPoly::term(Monomial::from_x_exponents(exps), BigRat(1));
}

/// Partitions of 0..max_weight, the empty one first.
inline std::vector<Partition> partitions_up_to(unsigned max_weight) {
  std::vector<Partition> out{Partition{}};
  for (unsigned w = 1; w <= max_weight; ++w) {
    const auto ps = partitions(w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace cobord::testing
