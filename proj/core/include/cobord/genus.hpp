#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cobord/multipoly.hpp"
#include "cobord/omega.hpp"
#include "cobord/rootdata.hpp"
#include "cobord/series.hpp"

namespace cobord {

/// Rational evaluation point x with <L, x> != 0 for every weight of the table.
struct GenericPoint {
  std::vector<BigRat> coordinates;
  /// M for the base-M point (1, M, ..., M^{k-1}); 0 when supplied by the caller.
  std::int64_t base = 0;
};

/// x = (1, M, ..., M^{k-1}) with M = 1 + max |weight component|. Every nonzero
/// weight with components below M in absolute value pairs nonzero with it.
GenericPoint choose_generic_point(const std::vector<FixedPointDatum>& table, int rank);
GenericPoint base_point(int rank, std::int64_t base);

/// Throws SingularPoint if some weight pairs to zero with the point.
void check_nonsingular(const std::vector<FixedPointDatum>& table, const GenericPoint& point);

/// sum_p sign(p) prod_j f(t <L_j(p), x>) / <L_j(p), x>, truncated after t^n,
/// with coefficients in Q[a_1..a_n].
TruncSeries localized_series(const std::vector<FixedPointDatum>& table, const GenericPoint& point, unsigned n);

struct GenusOptions {
  bool check_independence = false;
  std::optional<GenericPoint> point;
};

struct GenusReport {
  CobordismClass cobordism_class{0};
  std::map<OmegaIndex, BigInt> s_numbers;
  bool lower_coefficients_vanished = false;
  bool integrality_passed = false;
  GenericPoint point_used;
  std::optional<bool> second_point_agreed;
};

/// Full localization run. Throws VanishingViolation if a coefficient below t^n
/// survives and IntegralityViolation if the t^n coefficient is fractional; a
/// disagreement at the second point is reported, not thrown.
GenusReport cobordism_class(const SpaceSpec& spec, const GenusOptions& options = {});
GenusReport cobordism_class(const SpaceSpec& spec, bool check_independence);

/// s_omega as a rational number at the given point, summing f_omega(t(p)) / prod t(p).
BigRat s_number_at(const std::vector<FixedPointDatum>& table, const OmegaIndex& omega, const GenericPoint& point);

/// One s-number without building the whole class. Throws BadOmega if
/// ||omega|| != n and IntegralityViolation on a fractional result.
BigInt s_number(const SpaceSpec& spec, const OmegaIndex& omega, const std::optional<GenericPoint>& point = {});

struct ConstraintResidual {
  unsigned degree;
  MultiPoly residual;
};

/// Coefficients of t^0..t^{n-1} of the localized series; all zero iff the
/// table passes the vanishing constraints.
std::vector<ConstraintResidual> verify_constraints(const std::vector<FixedPointDatum>& table,
                                                   const std::optional<GenericPoint>& point = {});

}  // namespace cobord
