#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "cobord/multipoly.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Exponent vector omega = (i_1, ..., i_n) of a^omega = a_1^{i_1} ... a_n^{i_n}.
/// Trailing zeros are dropped, so (1,0,0) and (1) compare equal; callers that
/// print keep the logical length n themselves.
///
/// The same object keys Chern monomials c_1^{l_1} ... c_n^{l_n}.
class OmegaIndex {
 public:
  OmegaIndex() = default;
  OmegaIndex(std::initializer_list<std::uint32_t> exps);
  explicit OmegaIndex(std::vector<std::uint32_t> exps);

  /// i_l, with l 1-based; zero beyond the stored length.
  std::uint32_t operator[](std::size_t l) const;
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  /// Graded degree sum_l l * i_l.
  std::uint64_t weighted_degree() const;
  /// Number of factors sum_l i_l.
  std::uint64_t length() const;

  /// The a-monomial a^omega.
  Monomial a_monomial() const;
  /// Inverse of a_monomial; throws BadOmega if m involves x-variables.
  static OmegaIndex from_a_monomial(const Monomial& m);

  /// Dense vector padded (or checked) to exactly n entries.
  std::vector<std::uint32_t> padded(std::size_t n) const;
  /// "(i_1,...,i_n)" padded to n entries.
  std::string to_string(std::size_t n) const;

  friend auto operator<=>(const OmegaIndex&, const OmegaIndex&) = default;
  friend bool operator==(const OmegaIndex&, const OmegaIndex&) = default;

 private:
  void normalize();
  std::vector<std::uint32_t> exps_;
};

/// Print order for classes and tables: more factors first, then
/// lexicographically larger first. a_1^n always leads and a_n always trails.
struct GradedLexDescending {
  bool operator()(const OmegaIndex& lhs, const OmegaIndex& rhs) const;
};

/// All omega with weighted degree n, in GradedLexDescending order.
std::vector<OmegaIndex> omegas_of_degree(unsigned n);

/// Render a Chern monomial key xi as "c1^3*c2"; the empty key renders as "1".
std::string chern_monomial_string(const OmegaIndex& xi);

/// [M^2n] = sum_{||omega|| = n} s_omega a^omega with integer coefficients.
class CobordismClass {
 public:
  explicit CobordismClass(unsigned n) : n_(n) {}
  /// Throws BadOmega if some key has weighted degree != n.
  CobordismClass(unsigned n, std::map<OmegaIndex, BigInt> terms);

  /// Reads the class off a polynomial in a_1..a_n. Throws IntegralityViolation
  /// on a non-integer coefficient and BadOmega on x-variables or wrong degree.
  static CobordismClass from_poly(const MultiPoly& p, unsigned n);

  unsigned dimension() const { return n_; }
  const std::map<OmegaIndex, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const OmegaIndex& omega) const;
  std::vector<std::pair<OmegaIndex, BigInt>> sorted_terms() const;

  MultiPoly to_poly() const;
  /// "6*a1^3 + 6*a1*a2 - 6*a3".
  std::string to_string() const;

  friend bool operator==(const CobordismClass&, const CobordismClass&) = default;

 private:
  unsigned n_;
  std::map<OmegaIndex, BigInt> terms_;
};

}  // namespace cobord
