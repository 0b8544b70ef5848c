#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// The two variable alphabets share one monomial type: cobordism generators
/// a_1, a_2, ... and torus coordinates x_1, ..., x_k. Indices are 1-based.
enum class VarKind : std::uint8_t { A = 0, X = 1 };

struct Var {
  VarKind kind;
  std::uint16_t index;

  static Var a(int i) { return {VarKind::A, static_cast<std::uint16_t>(i)}; }
  static Var x(int i) { return {VarKind::X, static_cast<std::uint16_t>(i)}; }

  std::uint32_t key() const { return (static_cast<std::uint32_t>(kind) << 16) | index; }
  static Var from_key(std::uint32_t key) {
    return {static_cast<VarKind>(key >> 16), static_cast<std::uint16_t>(key & 0xffffu)};
  }
  friend bool operator==(const Var&, const Var&) = default;
};

/// Sparse power product; factors sorted by variable key, exponents positive.
class Monomial {
 public:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);
  /// Builds x_1^e_1 ... x_k^e_k from a dense exponent vector.
  static Monomial from_x_exponents(std::span<const std::uint32_t> exps);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t exponent(Var v) const;
  std::uint32_t degree() const;
  std::uint32_t degree(VarKind kind) const;
  bool has_kind(VarKind kind) const;

  /// Drops every factor of the given kind.
  Monomial without(VarKind kind) const;
  /// Keeps only factors of the given kind.
  Monomial only(VarKind kind) const;
  Monomial with_exponent(Var v, std::uint32_t exp) const;

  /// Image under x_i -> x_{perm[i-1]+1}; perm is a 0-based one-line permutation.
  Monomial permuted_x(std::span<const int> perm) const;

  std::optional<Monomial> divide(const Monomial& d) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  explicit Monomial(std::vector<Factor> f) : factors_(std::move(f)) {}
  std::vector<Factor> factors_;
};

/// Graded lexicographic order with a_1 > a_2 > ... > x_1 > x_2 > ...
struct GrlexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Exact sparse polynomial with rational coefficients. Zero terms are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, BigRat, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(const BigRat& c);
  explicit MultiPoly(long c) : MultiPoly(BigRat(c)) {}
  static MultiPoly variable(Var v);
  static MultiPoly term(const Monomial& m, const BigRat& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRat coefficient(const Monomial& m) const;
  std::uint32_t degree(VarKind kind) const;
  bool has_kind(VarKind kind) const;
  /// Largest term in graded lex order; nullopt for the zero polynomial.
  std::optional<std::pair<Monomial, BigRat>> leading_term() const;

  void add_term(const Monomial& m, const BigRat& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const BigRat& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const BigRat& c) { return lhs *= c; }
  friend MultiPoly operator*(const BigRat& c, MultiPoly rhs) { return rhs *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly permuted_x(std::span<const int> perm) const;
  MultiPoly pow(unsigned e) const;

  /// Terms printed from the largest monomial down, e.g. "x1^2 - x2^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const BigRat& c);

/// Quotient q with q * d == p. Throws NotDivisible when the division leaves a
/// remainder.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d);

/// Every stored coefficient is a normalized rational.
bool all_normalized(const MultiPoly& p);

}  // namespace cobord
