#include "cobord/divdiff.hpp"

#include <algorithm>
#include <numeric>

#include "cobord/error.hpp"
#include "cobord/series.hpp"

namespace cobord {

MultiPoly divided_difference(int i, const MultiPoly& p) {
  if (i < 1) throw Error(ErrorCode::BadParameters, "divided difference index must be >= 1");
  const Var xi = Var::x(i);
  const Var xj = Var::x(i + 1);
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    const auto a = m.exponent(xi);
    const auto b = m.exponent(xj);
    if (a == b) continue;
    const auto low = std::min(a, b);
    const auto d = (a > b ? a - b : b - a);
    const BigRat coeff = a > b ? c : BigRat(-c);
    const Monomial rest = m.with_exponent(xi, low).with_exponent(xj, low);
    // (x_i^d - x_j^d) / (x_i - x_j) = sum_k x_i^k x_j^{d-1-k}
    for (std::uint32_t k = 0; k < d; ++k) {
      out.add_term(rest * Monomial::of(xi, k) * Monomial::of(xj, d - 1 - k), coeff);
    }
  }
  return out;
}

MultiPoly vandermonde(int p, int q) {
  MultiPoly v(BigRat(1));
  for (int i = p; i <= q; ++i) {
    for (int j = i + 1; j <= q; ++j) v *= MultiPoly::variable(Var::x(i)) - MultiPoly::variable(Var::x(j));
  }
  return v;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

void check_x_range(const MultiPoly& p, int n) {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) {
      const Var v = Var::from_key(f.var);
      if (v.kind == VarKind::X && (v.index < 1 || v.index > n)) {
        throw Error(ErrorCode::BadParameters, "x" + std::to_string(v.index) + " outside x1..x" + std::to_string(n));
      }
    }
  }
}

}  // namespace

MultiPoly L_operator(const MultiPoly& p, int n, LMethod method) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "L needs n >= 1");
  check_x_range(p, n);
  if (method == LMethod::ComposedDivDiff) {
    MultiPoly r = p;
    for (int block = 1; block < n; ++block) {
      for (int i = block; i >= 1; --i) r = divided_difference(i, r);
    }
    return r;
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly alternant;
  do {
    const auto image = p.permuted_x(perm);
    if (permutation_sign(perm) > 0) {
      alternant += image;
    } else {
      alternant -= image;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return exact_divide(alternant, vandermonde(1, n));
}

MultiPoly schur(const Partition& lambda, int n, LMethod method) {
  if (static_cast<int>(lambda.parts.size()) > n) {
    throw Error(ErrorCode::TooManyParts,
                "partition has " + std::to_string(lambda.parts.size()) + " parts, only " + std::to_string(n) + " variables");
  }
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const std::uint32_t part = static_cast<std::size_t>(i) < lambda.parts.size() ? lambda.parts[i] : 0;
    exps[i] = part + static_cast<std::uint32_t>(n - 1 - i);
  }
  return L_operator(MultiPoly::term(Monomial::from_x_exponents(exps), BigRat(1)), n, method);
}

namespace {

/// f(t(x_i - x_j)) truncated after t^order; with odd_only, the odd part of f - 1.
TruncSeries root_factor(int i, int j, std::size_t order, bool odd_only) {
  TruncSeries s(order, odd_only ? MultiPoly() : MultiPoly(BigRat(1)));
  const MultiPoly diff = MultiPoly::variable(Var::x(i)) - MultiPoly::variable(Var::x(j));
  MultiPoly power(BigRat(1));
  for (std::size_t d = 1; d <= order; ++d) {
    power *= diff;
    if (odd_only && d % 2 == 0) continue;
    s[d] = MultiPoly::variable(Var::a(static_cast<int>(d))) * power;
  }
  return s;
}

CobordismClass read_class(const MultiPoly& symmetric_part, unsigned degree) {
  if (symmetric_part.has_kind(VarKind::X)) {
    throw Error(ErrorCode::NotDivisible, "L left x-dependence in the top coefficient");
  }
  return CobordismClass::from_poly(symmetric_part, degree);
}

}  // namespace

CobordismClass flag_class_exact(int n, LMethod method, bool odd_part_reduction) {
  if (n < 2 || n > 5) throw Error(ErrorCode::OutOfRange, "exact flag route supports 2 <= n <= 5, got " + std::to_string(n));
  const auto m = static_cast<std::size_t>(n * (n - 1) / 2);
  const bool reduce = odd_part_reduction && n >= 4;
  TruncSeries product(m, MultiPoly(BigRat(1)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool odd = reduce && ((i == 1 && j == 2) || (i == n - 1 && j == n));
      product *= root_factor(i, j, m, odd);
    }
  }
  return read_class(L_operator(product[m], n, method), static_cast<unsigned>(m));
}

CobordismClass grassmann_class_exact(int q, int l, LMethod method) {
  if (q < 1 || l < 1 || q * l > 8) {
    throw Error(ErrorCode::OutOfRange, "exact Grassmann route needs q, l >= 1 and q*l <= 8");
  }
  const int n = q + l;
  const auto m = static_cast<std::size_t>(q * l);
  TruncSeries product(m, MultiPoly(BigRat(1)));
  for (int i = 1; i <= q; ++i) {
    for (int j = q + 1; j <= n; ++j) product *= root_factor(i, j, m, false);
  }
  const MultiPoly lifted = vandermonde(1, q) * vandermonde(q + 1, n) * product[m];
  BigInt factorials = 1;
  for (int i = 2; i <= q; ++i) factorials *= i;
  for (int i = 2; i <= l; ++i) factorials *= i;
  return read_class(L_operator(lifted, n, method) * make_rational(1, factorials), static_cast<unsigned>(m));
}

std::vector<VanishingCheck> flag_vanishing_suite(int n) {
  if (n < 4 || n > 5) throw Error(ErrorCode::OutOfRange, "vanishing suite covers 4 <= n <= 5");
  const auto m = static_cast<unsigned>(n * (n - 1) / 2);
  const auto cls = flag_class_exact(n);
  const bool even_rule = n % 4 == 0 || n % 4 == 1;

  std::vector<VanishingCheck> out;
  for (const auto& omega : omegas_of_degree(m)) {
    VanishingCheck check{omega, cls.coefficient(omega), {}};
    if (omega.length() == 1 && omega[m] == 1) check.rules.push_back(VanishingRule::TopPowerSum);
    const auto& e = omega.exponents();
    for (std::size_t k = static_cast<std::size_t>(2 * n - 3) + 1; k <= e.size(); ++k) {
      if (e[k - 1] != 0) {
        check.rules.push_back(VanishingRule::LargePart);
        break;
      }
    }
    if (even_rule) {
      bool odd_free = true;
      for (std::size_t k = 1; k <= e.size(); k += 2) odd_free = odd_free && e[k - 1] == 0;
      if (odd_free) check.rules.push_back(VanishingRule::EvenPartsOnly);
    }
    if (check.rules.empty()) continue;
    if (check.value != 0) {
      throw Error(ErrorCode::VanishingViolation, "s" + omega.to_string(m) + "(U(" + std::to_string(n) +
                                                     ")/T) = " + check.value.get_str() + ", expected 0");
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace cobord
