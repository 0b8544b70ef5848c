#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cobord {

/// Integer vector in Z^k: one weight of the torus representation at a fixed point.
struct Weight {
  std::vector<std::int64_t> components;

  bool is_zero() const;
  std::size_t rank() const { return components.size(); }
  Weight negated() const;
  /// x_i -> x_{perm[i]+1}: component l moves to slot perm[l].
  Weight permuted(const std::vector<int>& perm) const;
  /// "x1 - x2"-style rendering.
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// x_i - x_j on rank k (1-based i, j).
Weight root_difference(int rank, int i, int j);

/// Ordered, disjoint, covering blocks of {0, ..., k-1}; 0-based internally.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;

  std::size_t rank() const;
  /// Throws BadSpace unless blocks are disjoint and cover 0..k-1.
  void validate() const;
};

struct FixedPointDatum {
  int sign = 1;
  std::vector<Weight> weights;
};

/// A unitary quotient U(k)/(U(b_1) x ... x U(b_s)) with the weights of the
/// chosen invariant almost complex structure at the identity coset. Signs of
/// the complementary roots are already applied to the stored weights.
struct NamedUnitaryQuotient {
  int rank = 0;
  BlockPartition blocks;
  std::vector<Weight> identity_weights;
};

/// A torus manifold given directly by its full fixed-point table.
struct ExplicitFixedPoints {
  int rank = 0;
  std::vector<FixedPointDatum> fixed_points;
};

struct SpaceSpec {
  std::string name;
  std::variant<NamedUnitaryQuotient, ExplicitFixedPoints> data;

  int rank() const;
  /// Complex dimension n (number of weights per fixed point).
  std::size_t half_dimension() const;
  bool is_unitary_quotient() const { return std::holds_alternative<NamedUnitaryQuotient>(data); }
};

/// Checks shape invariants: equal ranks and weight counts, nonzero weights,
/// signs in {+1,-1}, a valid block partition, and W_H-stability of the identity
/// weights. Stability is tested on weight lines {+-L} unless strict is set.
void validate(const SpaceSpec& spec, bool strict_stability = false);

/// Minimal-length representatives of the left cosets of S_{b_1} x ... x S_{b_s}
/// in S_k, as 0-based one-line permutations sorted lexicographically.
std::vector<std::vector<int>> coset_representatives(const BlockPartition& bp);

/// The fixed-point table. Unitary quotients yield one +1 datum per coset
/// representative; explicit tables pass through.
std::vector<FixedPointDatum> orbit_fixed_points(const SpaceSpec& spec);

std::uint64_t euler_characteristic(const SpaceSpec& spec);

enum class M10Structure { J1, J2, J3 };

SpaceSpec flag_space(int n);
SpaceSpec grassmann_space(int n, int k);
/// CP^n with weights x_j - x_{n+1}, j = 1..n.
SpaceSpec projective_space(int n);
/// U(4)/(U(1) x U(1) x U(2)) with one of its three invariant almost complex structures.
SpaceSpec m10_space(M10Structure j);

/// Parses "flag:N", "grassmann:N:K", "cp:N" and "m10:J1|J2|J3".
/// Throws BadParameters for unknown names or out-of-range parameters.
SpaceSpec builtin_space(const std::string& name);

}  // namespace cobord
