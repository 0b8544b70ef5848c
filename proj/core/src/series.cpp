#include "cobord/series.hpp"

#include "cobord/error.hpp"

namespace cobord {

TruncSeries::TruncSeries(std::size_t order, const MultiPoly& constant) : coeffs_(order + 1) {
  coeffs_[0] = constant;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  if (rhs.order() != order()) throw Error(ErrorCode::BadParameters, "series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
  if (rhs.order() != lhs.order()) throw Error(ErrorCode::BadParameters, "series orders differ");
  const std::size_t n = lhs.order();
  TruncSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const BigRat& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncSeries universal_f(std::size_t order, const BigRat& scale) {
  TruncSeries f(order, MultiPoly(BigRat(1)));
  BigRat power = 1;
  for (std::size_t i = 1; i <= order; ++i) {
    power *= scale;
    f[i] = MultiPoly::term(Monomial::of(Var::a(static_cast<int>(i))), power);
  }
  return f;
}

}  // namespace cobord
