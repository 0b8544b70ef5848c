#include "cobord/omega.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

OmegaIndex::OmegaIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) { normalize(); }

OmegaIndex::OmegaIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { normalize(); }

void OmegaIndex::normalize() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::uint32_t OmegaIndex::operator[](std::size_t l) const {
  return (l >= 1 && l <= exps_.size()) ? exps_[l - 1] : 0;
}

std::uint64_t OmegaIndex::weighted_degree() const {
  std::uint64_t d = 0;
  for (std::size_t l = 0; l < exps_.size(); ++l) d += (l + 1) * exps_[l];
  return d;
}

std::uint64_t OmegaIndex::length() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial OmegaIndex::a_monomial() const {
  Monomial m;
  for (std::size_t l = 0; l < exps_.size(); ++l) {
    if (exps_[l] != 0) m = m * Monomial::of(Var::a(static_cast<int>(l + 1)), exps_[l]);
  }
  return m;
}

OmegaIndex OmegaIndex::from_a_monomial(const Monomial& m) {
  std::vector<std::uint32_t> exps;
  for (const auto& f : m.factors()) {
    const Var v = Var::from_key(f.var);
    if (v.kind != VarKind::A || v.index == 0) {
      throw Error(ErrorCode::BadOmega, "monomial " + m.to_string() + " is not a pure a-monomial");
    }
    if (exps.size() < v.index) exps.resize(v.index, 0);
    exps[v.index - 1] = f.exp;
  }
  return OmegaIndex(std::move(exps));
}

std::vector<std::uint32_t> OmegaIndex::padded(std::size_t n) const {
  if (exps_.size() > n) {
    throw Error(ErrorCode::BadOmega, "index has more than " + std::to_string(n) + " entries");
  }
  auto v = exps_;
  v.resize(n, 0);
  return v;
}

std::string OmegaIndex::to_string(std::size_t n) const {
  const auto v = padded(std::max(n, exps_.size()));
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

bool GradedLexDescending::operator()(const OmegaIndex& lhs, const OmegaIndex& rhs) const {
  const auto ll = lhs.length();
  const auto lr = rhs.length();
  if (ll != lr) return ll > lr;
  return lhs > rhs;
}

namespace {

void omegas_rec(unsigned remaining, unsigned part, std::vector<std::uint32_t>& cur,
                std::vector<OmegaIndex>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (part == 0) return;
  for (unsigned mult = remaining / part + 1; mult-- > 0;) {
    cur[part - 1] = mult;
    omegas_rec(remaining - mult * part, part - 1, cur, out);
  }
  cur[part - 1] = 0;
}

}  // namespace

std::vector<OmegaIndex> omegas_of_degree(unsigned n) {
  std::vector<OmegaIndex> out;
  std::vector<std::uint32_t> cur(n, 0);
  omegas_rec(n, n, cur, out);
  std::sort(out.begin(), out.end(), GradedLexDescending{});
  return out;
}

std::string chern_monomial_string(const OmegaIndex& xi) {
  std::string s;
  const auto& e = xi.exponents();
  for (std::size_t l = 0; l < e.size(); ++l) {
    if (e[l] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'c' + std::to_string(l + 1);
    if (e[l] != 1) s += '^' + std::to_string(e[l]);
  }
  return s.empty() ? "1" : s;
}

// ---- CobordismClass ---------------------------------------------------------

CobordismClass::CobordismClass(unsigned n, std::map<OmegaIndex, BigInt> terms) : n_(n) {
  for (auto& [omega, c] : terms) {
    if (omega.weighted_degree() != n) {
      throw Error(ErrorCode::BadOmega, "term " + omega.to_string(n) + " has graded degree " +
                                           std::to_string(omega.weighted_degree()) + ", expected " +
                                           std::to_string(n));
    }
    if (c != 0) terms_.emplace(omega, c);
  }
}

CobordismClass CobordismClass::from_poly(const MultiPoly& p, unsigned n) {
  std::map<OmegaIndex, BigInt> terms;
  for (const auto& [m, c] : p.terms()) {
    if (!is_integer(c)) {
      throw Error(ErrorCode::IntegralityViolation,
                  "coefficient " + c.get_str() + " of " + m.to_string() + " is not an integer");
    }
    terms.emplace(OmegaIndex::from_a_monomial(m), c.get_num());
  }
  return CobordismClass(n, std::move(terms));
}

BigInt CobordismClass::coefficient(const OmegaIndex& omega) const {
  auto it = terms_.find(omega);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<OmegaIndex, BigInt>> CobordismClass::sorted_terms() const {
  std::vector<std::pair<OmegaIndex, BigInt>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return GradedLexDescending{}(l.first, r.first); });
  return v;
}

MultiPoly CobordismClass::to_poly() const {
  MultiPoly p;
  for (const auto& [omega, c] : terms_) p.add_term(omega.a_monomial(), BigRat(c));
  return p;
}

std::string CobordismClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [omega, c] : sorted_terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    const auto mono = omega.a_monomial();
    if (mono.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += mono.to_string();
    }
  }
  return s;
}

}  // namespace cobord
