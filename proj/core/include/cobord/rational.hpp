#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>

namespace cobord {

using BigInt = mpz_class;
/// gmpxx keeps arithmetic results canonical; values built from a raw
/// numerator/denominator pair must go through make_rational.
using BigRat = mpq_class;

BigRat make_rational(const BigInt& num, const BigInt& den);

/// gcd(num, den) == 1 and den > 0.
bool is_normalized(const BigRat& q);

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& z);
std::string to_string(const BigRat& q);

/// Exact dot product sum_l weight[l] * point[l]. Sizes must agree.
BigRat eval_linear_form(std::span<const std::int64_t> weight, std::span<const BigRat> point);

}  // namespace cobord
