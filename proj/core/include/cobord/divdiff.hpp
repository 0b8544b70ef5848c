#pragma once

#include <utility>
#include <vector>

#include "cobord/multipoly.hpp"
#include "cobord/omega.hpp"
#include "cobord/symmchern.hpp"

namespace cobord {

/// d_i p = (p - s_i p) / (x_i - x_{i+1}), 1 <= i < n. Coefficients may carry a-variables.
MultiPoly divided_difference(int i, const MultiPoly& p);

enum class LMethod {
  /// (1 / Delta_n) sum_{s in S_n} sign(s) s(p), with an exact polynomial division.
  Antisymmetrize,
  /// (d_1 d_2 ... d_{n-1})(d_1 ... d_{n-2}) ... (d_1 d_2) d_1.
  ComposedDivDiff,
};

/// The operator L: Z[x_1..x_n] -> Sym_n. Sends x^{lambda+delta} to the Schur
/// polynomial s_lambda and x^delta to 1.
MultiPoly L_operator(const MultiPoly& p, int n, LMethod method = LMethod::ComposedDivDiff);

/// Vandermonde prod_{p <= i < j <= q} (x_i - x_j), 1-based and inclusive.
MultiPoly vandermonde(int p, int q);

/// s_lambda(x_1..x_n) = L(x^{lambda+delta}). Throws TooManyParts if lambda has more than n parts.
MultiPoly schur(const Partition& lambda, int n, LMethod method = LMethod::ComposedDivDiff);

/// Cobordism class of U(n)/T^n by applying L to prod_{i<j} f(t(x_i - x_j)) and
/// reading off t^{n(n-1)/2}. For n >= 4 the (1,2) and (n-1,n) factors use the
/// odd part of f. Throws OutOfRange outside 2 <= n <= 5.
CobordismClass flag_class_exact(int n, LMethod method = LMethod::ComposedDivDiff, bool odd_part_reduction = true);

/// Cobordism class of the Grassmannian G_{q+l,l} with the weights x_i - x_j,
/// i <= q < j: the t^{ql} coefficient of
/// (1 / q! l!) L(Delta_q Delta_{q+1,q+l} prod_{i<=q<j} f(t(x_i - x_j))).
/// Throws OutOfRange unless q, l >= 1 and q * l <= 8.
CobordismClass grassmann_class_exact(int q, int l, LMethod method = LMethod::ComposedDivDiff);

enum class VanishingRule {
  /// s_m(U(n)/T^n) = 0 for n > 3.
  TopPowerSum,
  /// i_k != 0 for some k > 2n - 3.
  LargePart,
  /// n = 4q or 4q + 1 and every odd-indexed i_{2l-1} vanishes.
  EvenPartsOnly,
};

struct VanishingCheck {
  OmegaIndex omega;
  BigInt value;
  std::vector<VanishingRule> rules;
};

/// Every omega of degree n(n-1)/2 predicted to vanish on U(n)/T^n, with its
/// value from the exact class. Throws VanishingViolation if one is nonzero and
/// OutOfRange outside 4 <= n <= 5.
std::vector<VanishingCheck> flag_vanishing_suite(int n);

}  // namespace cobord
