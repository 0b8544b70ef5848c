#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cobord/multipoly.hpp"
#include "cobord/omega.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<std::uint32_t> parts;

  std::uint64_t weight() const;
  /// i_l = multiplicity of the part l.
  OmegaIndex to_omega() const;
  static Partition from_omega(const OmegaIndex& omega);
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(unsigned n);

/// Monomial symmetric polynomial in x_1..x_vars: the S_vars-orbit sum of
/// x_1 ... x_{i_1} x_{i_1+1}^2 ... with each distinct monomial counted once.
/// Throws TooFewVariables if omega has more factors than vars.
MultiPoly orbit_monomial(const OmegaIndex& omega, unsigned vars);

/// f_omega(t_1..t_n): the coefficient of a^omega in prod_i f(t_i), i.e. the
/// orbit monomial evaluated at the given values.
BigRat f_omega(const OmegaIndex& omega, std::span<const BigRat> t_values);

/// Transition matrix from orbit monomials to products of elementary symmetric
/// polynomials in degree n:
///   O_omega = sum_xi beta(omega, xi) sigma_1^{l_1} ... sigma_n^{l_n},
/// rows keyed by omega, columns by xi = (l_1, ..., l_n). Both are laid out in
/// reverse lexicographic order of the corresponding partitions.
class BetaMatrix {
 public:
  BetaMatrix(unsigned n, std::vector<OmegaIndex> labels, std::vector<std::vector<BigInt>> entries);

  unsigned degree() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<OmegaIndex>& labels() const { return labels_; }
  /// Position of an omega (or xi) label; throws BadOmega if absent.
  std::size_t index_of(const OmegaIndex& label) const;

  const BigInt& entry(const OmegaIndex& omega, const OmegaIndex& xi) const;
  const BigInt& at(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  /// Nonzero entries of one row.
  std::map<OmegaIndex, BigInt> row(const OmegaIndex& omega) const;

 private:
  unsigned n_;
  std::vector<OmegaIndex> labels_;
  std::map<OmegaIndex, std::size_t> index_;
  std::vector<std::vector<BigInt>> entries_;
};

/// Builds B(n) by leading-term elimination: the lex-largest remaining
/// monomial x^nu is cancelled by the elementary product e_{nu'}, whose own
/// monomial expansion comes from counting 0-1 matrices.
BetaMatrix beta_matrix(unsigned n);

using NumberTable = std::map<OmegaIndex, BigInt>;

/// Solves B c = s exactly. Throws BadOmega if s is incomplete and
/// NonIntegralSolution if some Chern number comes out fractional.
NumberTable s_to_chern(const NumberTable& s, unsigned n);
NumberTable chern_to_s(const NumberTable& c, unsigned n);

/// Exact rational Gaussian elimination for a square system; throws SingularMatrix.
std::vector<BigRat> solve_exact(std::vector<std::vector<BigRat>> a, std::vector<BigRat> b);

}  // namespace cobord
