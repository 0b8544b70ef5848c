#pragma once

#include <cstddef>
#include <vector>

#include "cobord/multipoly.hpp"

namespace cobord {

/// Power series in a formal variable t with MultiPoly coefficients, truncated
/// after t^order. Holds exactly order + 1 coefficients.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncSeries(std::size_t order, const MultiPoly& constant);

  std::size_t order() const { return coeffs_.size() - 1; }
  const MultiPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
  MultiPoly& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const BigRat& c);

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<MultiPoly> coeffs_;
};

/// f(scale * t) = 1 + sum_{i=1..order} a_i scale^i t^i with symbolic a_i.
TruncSeries universal_f(std::size_t order, const BigRat& scale);

}  // namespace cobord
