#include "cobord/rational.hpp"

#include "cobord/error.hpp"

namespace cobord {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::BadParameters, "zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

bool is_normalized(const BigRat& q) {
  if (q.get_den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRat& q) { return q.get_str(); }

BigRat eval_linear_form(std::span<const std::int64_t> weight, std::span<const BigRat> point) {
  if (weight.size() != point.size()) {
    throw Error(ErrorCode::BadParameters, "weight and point have different lengths");
  }
  BigRat acc = 0;
  for (std::size_t l = 0; l < weight.size(); ++l) {
    if (weight[l] != 0) acc += BigRat(BigInt(static_cast<long>(weight[l]))) * point[l];
  }
  return acc;
}

}  // namespace cobord
