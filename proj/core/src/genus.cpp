#include "cobord/genus.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

#include "cobord/error.hpp"
#include "cobord/symmchern.hpp"

namespace cobord {

namespace {

int table_rank(const std::vector<FixedPointDatum>& table) {
  for (const auto& fp : table) {
    if (!fp.weights.empty()) return static_cast<int>(fp.weights.front().rank());
  }
  return 0;
}

unsigned table_half_dimension(const std::vector<FixedPointDatum>& table) {
  return table.empty() ? 0 : static_cast<unsigned>(table.front().weights.size());
}

std::vector<BigRat> evaluate_weights(const FixedPointDatum& fp, const GenericPoint& point) {
  std::vector<BigRat> t;
  t.reserve(fp.weights.size());
  for (const auto& w : fp.weights) t.push_back(eval_linear_form(w.components, point.coordinates));
  return t;
}

TruncSeries fixed_point_term(const FixedPointDatum& fp, const GenericPoint& point, unsigned n) {
  TruncSeries term(n, MultiPoly(BigRat(fp.sign)));
  BigRat denominator = 1;
  for (const auto& t : evaluate_weights(fp, point)) {
    term *= universal_f(n, t);
    denominator *= t;
  }
  term *= BigRat(1 / denominator);
  return term;
}

}  // namespace

GenericPoint base_point(int rank, std::int64_t base) {
  GenericPoint p;
  p.base = base;
  BigRat power = 1;
  for (int l = 0; l < rank; ++l) {
    p.coordinates.push_back(power);
    power *= BigRat(static_cast<long>(base));
  }
  return p;
}

GenericPoint choose_generic_point(const std::vector<FixedPointDatum>& table, int rank) {
  std::int64_t max_abs = 0;
  for (const auto& fp : table) {
    for (const auto& w : fp.weights) {
      for (auto c : w.components) max_abs = std::max<std::int64_t>(max_abs, c < 0 ? -c : c);
    }
  }
  return base_point(rank, max_abs + 1);
}

void check_nonsingular(const std::vector<FixedPointDatum>& table, const GenericPoint& point) {
  for (std::size_t p = 0; p < table.size(); ++p) {
    for (const auto& w : table[p].weights) {
      if (w.rank() != point.coordinates.size()) {
        throw Error(ErrorCode::SingularPoint, "point has " + std::to_string(point.coordinates.size()) +
                                                  " coordinates, weights have rank " + std::to_string(w.rank()));
      }
      if (eval_linear_form(w.components, point.coordinates) == 0) {
        throw Error(ErrorCode::SingularPoint,
                    "weight " + w.to_string() + " at fixed point " + std::to_string(p + 1) + " vanishes at the point");
      }
    }
  }
}

TruncSeries localized_series(const std::vector<FixedPointDatum>& table, const GenericPoint& point, unsigned n) {
  check_nonsingular(table, point);
  for (const auto& fp : table) {
    if (fp.weights.size() != n) throw Error(ErrorCode::BadParameters, "fixed point weight count differs from n");
  }

  // Independent per-point terms, reduced in chunks across hardware threads.
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, table.size() / 8));
  auto reduce_range = [&](std::size_t begin, std::size_t end) {
    TruncSeries acc(n);
    for (std::size_t p = begin; p < end; ++p) acc += fixed_point_term(table[p], point, n);
    return acc;
  };
  if (workers <= 1) return reduce_range(0, table.size());

  std::vector<std::future<TruncSeries>> parts;
  const std::size_t chunk = (table.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < table.size(); begin += chunk) {
    parts.push_back(std::async(std::launch::async, reduce_range, begin, std::min(table.size(), begin + chunk)));
  }
  TruncSeries total(n);
  for (auto& f : parts) total += f.get();
  return total;
}

namespace {

CobordismClass top_class(const TruncSeries& series, unsigned n) {
  for (unsigned l = 0; l < n; ++l) {
    if (!series[l].is_zero()) {
      throw Error(ErrorCode::VanishingViolation,
                  "coefficient of t^" + std::to_string(l) + " is " + series[l].to_string() + ", expected 0");
    }
  }
  return CobordismClass::from_poly(series[n], n);
}

}  // namespace

GenusReport cobordism_class(const SpaceSpec& spec, const GenusOptions& options) {
  validate(spec);
  const auto table = orbit_fixed_points(spec);
  const auto n = static_cast<unsigned>(spec.half_dimension());
  const int rank = spec.rank();

  GenusReport report;
  report.point_used = options.point ? *options.point : choose_generic_point(table, rank);
  const auto series = localized_series(table, report.point_used, n);
  report.cobordism_class = top_class(series, n);
  report.lower_coefficients_vanished = true;
  report.integrality_passed = true;
  report.s_numbers = report.cobordism_class.terms();

  if (options.check_independence) {
    const auto first_base = choose_generic_point(table, rank).base;
    auto second = base_point(rank, std::max(first_base, report.point_used.base) + 1);
    const auto other = localized_series(table, second, n);
    bool agreed = true;
    for (unsigned l = 0; l < n && agreed; ++l) agreed = other[l].is_zero();
    agreed = agreed && other[n] == series[n];
    report.second_point_agreed = agreed;
  }
  return report;
}

GenusReport cobordism_class(const SpaceSpec& spec, bool check_independence) {
  GenusOptions options;
  options.check_independence = check_independence;
  return cobordism_class(spec, options);
}

BigRat s_number_at(const std::vector<FixedPointDatum>& table, const OmegaIndex& omega, const GenericPoint& point) {
  check_nonsingular(table, point);
  BigRat total = 0;
  for (const auto& fp : table) {
    const auto t = evaluate_weights(fp, point);
    BigRat denominator = 1;
    for (const auto& v : t) denominator *= v;
    total += BigRat(fp.sign) * f_omega(omega, t) / denominator;
  }
  return total;
}

BigInt s_number(const SpaceSpec& spec, const OmegaIndex& omega, const std::optional<GenericPoint>& point) {
  validate(spec);
  const auto n = spec.half_dimension();
  if (omega.weighted_degree() != n) {
    throw Error(ErrorCode::BadOmega, "||omega|| = " + std::to_string(omega.weighted_degree()) + " but n = " +
                                         std::to_string(n));
  }
  const auto table = orbit_fixed_points(spec);
  const auto x = point ? *point : choose_generic_point(table, spec.rank());
  const auto value = s_number_at(table, omega, x);
  if (!is_integer(value)) {
    throw Error(ErrorCode::IntegralityViolation, "s" + omega.to_string(n) + " = " + value.get_str());
  }
  return value.get_num();
}

std::vector<ConstraintResidual> verify_constraints(const std::vector<FixedPointDatum>& table,
                                                   const std::optional<GenericPoint>& point) {
  const auto n = table_half_dimension(table);
  const auto x = point ? *point : choose_generic_point(table, table_rank(table));
  const auto series = localized_series(table, x, n);
  std::vector<ConstraintResidual> out;
  for (unsigned l = 0; l < n; ++l) out.push_back({l, series[l]});
  return out;
}

}  // namespace cobord
