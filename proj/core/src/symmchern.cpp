#include "cobord/symmchern.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

std::uint64_t Partition::weight() const {
  std::uint64_t w = 0;
  for (auto p : parts) w += p;
  return w;
}

OmegaIndex Partition::to_omega() const {
  std::vector<std::uint32_t> exps(parts.empty() ? 0 : parts.front(), 0);
  for (auto p : parts) ++exps[p - 1];
  return OmegaIndex(std::move(exps));
}

Partition Partition::from_omega(const OmegaIndex& omega) {
  Partition p;
  const auto& e = omega.exponents();
  for (std::size_t l = e.size(); l-- > 0;) {
    for (std::uint32_t m = 0; m < e[l]; ++m) p.parts.push_back(static_cast<std::uint32_t>(l + 1));
  }
  return p;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (std::uint32_t j = 1; j <= parts.front(); ++j) {
    std::uint32_t count = 0;
    for (auto p : parts) count += (p >= j) ? 1 : 0;
    c.parts.push_back(count);
  }
  return c;
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<std::uint32_t>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

MultiPoly orbit_monomial(const OmegaIndex& omega, unsigned vars) {
  const auto lambda = Partition::from_omega(omega);
  if (lambda.parts.size() > vars) {
    throw Error(ErrorCode::TooFewVariables, "orbit of " + omega.to_string(0) + " needs at least " +
                                                std::to_string(lambda.parts.size()) + " variables");
  }
  std::vector<std::uint32_t> exps(vars, 0);
  std::copy(lambda.parts.begin(), lambda.parts.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  MultiPoly out;
  do {
    out.add_term(Monomial::from_x_exponents(exps), BigRat(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

BigRat f_omega(const OmegaIndex& omega, std::span<const BigRat> t_values) {
  // Each variable takes at most one factor a_l; track the unused multiplicities.
  const auto& want = omega.exponents();
  std::map<std::vector<std::uint32_t>, BigRat> states{{want, BigRat(1)}};
  for (const auto& t : t_values) {
    std::vector<BigRat> powers{BigRat(1)};
    for (std::size_t l = 1; l <= want.size(); ++l) powers.push_back(powers.back() * t);
    auto next = states;
    for (const auto& [rem, c] : states) {
      for (std::size_t l = 0; l < rem.size(); ++l) {
        if (rem[l] == 0) continue;
        auto r = rem;
        --r[l];
        next[r] += c * powers[l + 1];
      }
    }
    states = std::move(next);
  }
  auto it = states.find(std::vector<std::uint32_t>(want.size(), 0));
  return it == states.end() ? BigRat(0) : it->second;
}

// ---- BetaMatrix -------------------------------------------------------------

BetaMatrix::BetaMatrix(unsigned n, std::vector<OmegaIndex> labels, std::vector<std::vector<BigInt>> entries)
    : n_(n), labels_(std::move(labels)), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::size_t BetaMatrix::index_of(const OmegaIndex& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(ErrorCode::BadOmega, label.to_string(n_) + " has graded degree " +
                                         std::to_string(label.weighted_degree()) + ", not " + std::to_string(n_));
  }
  return it->second;
}

const BigInt& BetaMatrix::entry(const OmegaIndex& omega, const OmegaIndex& xi) const {
  return entries_[index_of(omega)][index_of(xi)];
}

std::map<OmegaIndex, BigInt> BetaMatrix::row(const OmegaIndex& omega) const {
  std::map<OmegaIndex, BigInt> out;
  const auto r = index_of(omega);
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (entries_[r][c] != 0) out.emplace(labels_[c], entries_[r][c]);
  }
  return out;
}

namespace {

// Number of 0-1 matrices with the given row sums and column sums.
class ZeroOneCounter {
 public:
  BigInt count(const std::vector<std::uint32_t>& rows, std::vector<std::uint32_t> cols) {
    rows_ = rows;
    memo_.clear();
    std::sort(cols.begin(), cols.end());
    return go(0, cols);
  }

 private:
  BigInt go(std::size_t row, const std::vector<std::uint32_t>& cols) {
    if (row == rows_.size()) {
      return std::all_of(cols.begin(), cols.end(), [](auto c) { return c == 0; }) ? BigInt(1) : BigInt(0);
    }
    auto key = std::make_pair(row, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    std::vector<std::uint32_t> next = cols;
    choose(row, cols, next, 0, rows_[row], total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void choose(std::size_t row, const std::vector<std::uint32_t>& cols, std::vector<std::uint32_t>& next,
              std::size_t from, std::uint32_t left, BigInt& total) {
    if (left == 0) {
      auto sorted = next;
      std::sort(sorted.begin(), sorted.end());
      total += go(row + 1, sorted);
      return;
    }
    for (std::size_t j = from; j < cols.size(); ++j) {
      if (next[j] == 0) continue;
      --next[j];
      choose(row, cols, next, j + 1, left - 1, total);
      ++next[j];
    }
  }

  std::vector<std::uint32_t> rows_;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, BigInt> memo_;
};

}  // namespace

BetaMatrix beta_matrix(unsigned n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "beta matrix needs n >= 1");
  const auto parts = partitions(n);
  const std::size_t size = parts.size();
  std::vector<OmegaIndex> labels;
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back(parts[i].to_omega());
    pos.emplace(parts[i], i);
  }

  // elementary[i][j]: coefficient of m_{parts[j]} in e_{parts[i]'}, where the
  // elementary product is the one whose leading monomial is x^{parts[i]}.
  ZeroOneCounter counter;
  std::vector<std::vector<BigInt>> elementary(size, std::vector<BigInt>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const auto rows = parts[i].conjugate().parts;
    for (std::size_t j = 0; j < size; ++j) {
      auto cols = parts[j].parts;
      cols.resize(n, 0);
      elementary[i][j] = counter.count(rows, cols);
    }
  }

  std::vector<std::vector<BigInt>> entries(size, std::vector<BigInt>(size));
  for (std::size_t r = 0; r < size; ++r) {
    std::vector<BigInt> v(size);
    v[r] = 1;
    // parts[] is in decreasing lex order, so the first nonzero slot leads.
    for (std::size_t lead = 0; lead < size; ++lead) {
      if (v[lead] == 0) continue;
      const BigInt c = v[lead];
      // x^{nu} leads e_{nu'}; its Chern key l_j = nu_j - nu_{j+1} is nu' read as omega.
      entries[r][pos.at(parts[lead].conjugate())] += c;
      for (std::size_t j = lead; j < size; ++j) v[j] -= c * elementary[lead][j];
    }
  }
  return BetaMatrix(n, std::move(labels), std::move(entries));
}

std::vector<BigRat> solve_exact(std::vector<std::vector<BigRat>> a, std::vector<BigRat> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRat factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      b[r] -= factor * b[col];
    }
  }
  std::vector<BigRat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

std::vector<BigRat> complete_vector(const BetaMatrix& beta, const NumberTable& values, const char* what) {
  std::vector<BigRat> v(beta.size());
  std::vector<bool> seen(beta.size(), false);
  for (const auto& [key, value] : values) {
    const auto i = beta.index_of(key);
    v[i] = BigRat(value);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::BadOmega,
                  std::string("missing ") + what + " for " + beta.labels()[i].to_string(beta.degree()));
    }
  }
  return v;
}

}  // namespace

NumberTable s_to_chern(const NumberTable& s, unsigned n) {
  const auto beta = beta_matrix(n);
  const auto rhs = complete_vector(beta, s, "s-number");
  std::vector<std::vector<BigRat>> a(beta.size(), std::vector<BigRat>(beta.size()));
  for (std::size_t r = 0; r < beta.size(); ++r) {
    for (std::size_t c = 0; c < beta.size(); ++c) a[r][c] = BigRat(beta.at(r, c));
  }
  const auto x = solve_exact(std::move(a), rhs);
  NumberTable c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integer(x[i])) {
      throw Error(ErrorCode::NonIntegralSolution, chern_monomial_string(beta.labels()[i]) + " = " + x[i].get_str());
    }
    c.emplace(beta.labels()[i], x[i].get_num());
  }
  return c;
}

NumberTable chern_to_s(const NumberTable& c, unsigned n) {
  const auto beta = beta_matrix(n);
  const auto cv = complete_vector(beta, c, "Chern number");
  NumberTable s;
  for (std::size_t r = 0; r < beta.size(); ++r) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) acc += beta.at(r, k) * cv[k].get_num();
    s.emplace(beta.labels()[r], acc);
  }
  return s;
}

}  // namespace cobord
