#include "cobord/multipoly.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(Var v, std::uint32_t exp) {
  if (exp == 0) return {};
  return Monomial({Factor{v.key(), exp}});
}

Monomial Monomial::from_x_exponents(std::span<const std::uint32_t> exps) {
  std::vector<Factor> f;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) f.push_back({Var::x(static_cast<int>(i + 1)).key(), exps[i]});
  }
  return Monomial(std::move(f));
}

std::uint32_t Monomial::exponent(Var v) const {
  const auto key = v.key();
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                             [](const Factor& f, std::uint32_t k) { return f.var < k; });
  return (it != factors_.end() && it->var == key) ? it->exp : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::uint32_t Monomial::degree(VarKind kind) const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) {
    if (Var::from_key(f.var).kind == kind) d += f.exp;
  }
  return d;
}

bool Monomial::has_kind(VarKind kind) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [kind](const Factor& f) { return Var::from_key(f.var).kind == kind; });
}

Monomial Monomial::without(VarKind kind) const {
  std::vector<Factor> f;
  for (const auto& x : factors_) {
    if (Var::from_key(x.var).kind != kind) f.push_back(x);
  }
  return Monomial(std::move(f));
}

Monomial Monomial::only(VarKind kind) const {
  std::vector<Factor> f;
  for (const auto& x : factors_) {
    if (Var::from_key(x.var).kind == kind) f.push_back(x);
  }
  return Monomial(std::move(f));
}

Monomial Monomial::with_exponent(Var v, std::uint32_t exp) const {
  std::vector<Factor> f;
  f.reserve(factors_.size() + 1);
  const auto key = v.key();
  bool placed = false;
  for (const auto& x : factors_) {
    if (!placed && x.var >= key) {
      if (exp != 0) f.push_back({key, exp});
      placed = true;
      if (x.var == key) continue;
    }
    f.push_back(x);
  }
  if (!placed && exp != 0) f.push_back({key, exp});
  return Monomial(std::move(f));
}

Monomial Monomial::permuted_x(std::span<const int> perm) const {
  std::vector<Factor> f;
  f.reserve(factors_.size());
  for (const auto& x : factors_) {
    Var v = Var::from_key(x.var);
    if (v.kind == VarKind::X) {
      if (v.index == 0 || v.index > perm.size()) {
        throw Error(ErrorCode::BadParameters, "permutation does not cover x" + std::to_string(v.index));
      }
      v.index = static_cast<std::uint16_t>(perm[v.index - 1] + 1);
    }
    f.push_back({v.key(), x.exp});
  }
  std::sort(f.begin(), f.end(), [](const Factor& l, const Factor& r) { return l.var < r.var; });
  return Monomial(std::move(f));
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
  std::vector<Factor> out;
  std::size_t i = 0;
  for (const auto& df : d.factors_) {
    while (i < factors_.size() && factors_[i].var < df.var) out.push_back(factors_[i++]);
    if (i == factors_.size() || factors_[i].var != df.var || factors_[i].exp < df.exp) return std::nullopt;
    if (factors_[i].exp > df.exp) out.push_back({df.var, factors_[i].exp - df.exp});
    ++i;
  }
  while (i < factors_.size()) out.push_back(factors_[i++]);
  return Monomial(std::move(out));
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  std::vector<Monomial::Factor> out;
  out.reserve(lhs.factors_.size() + rhs.factors_.size());
  auto i = lhs.factors_.begin();
  auto j = rhs.factors_.begin();
  while (i != lhs.factors_.end() && j != rhs.factors_.end()) {
    if (i->var < j->var) {
      out.push_back(*i++);
    } else if (j->var < i->var) {
      out.push_back(*j++);
    } else {
      out.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, lhs.factors_.end());
  out.insert(out.end(), j, rhs.factors_.end());
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += '*';
    const Var v = Var::from_key(f.var);
    s += (v.kind == VarKind::A ? 'a' : 'x');
    s += std::to_string(v.index);
    if (f.exp != 1) s += '^' + std::to_string(f.exp);
  }
  return s;
}

bool GrlexLess::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const auto dl = lhs.degree();
  const auto dr = rhs.degree();
  if (dl != dr) return dl < dr;
  const auto& a = lhs.factors();
  const auto& b = rhs.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var == b[j].var) {
      if (a[i].exp != b[j].exp) return a[i].exp < b[j].exp;
      ++i;
      ++j;
    } else {
      // The side holding the earlier variable is lexicographically larger.
      return b[j].var < a[i].var;
    }
  }
  return i == a.size() && j < b.size();
}

// ---- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(const BigRat& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v) { return term(Monomial::of(v), BigRat(1)); }

MultiPoly MultiPoly::term(const Monomial& m, const BigRat& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

std::uint32_t MultiPoly::degree(VarKind kind) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(kind));
  return d;
}

bool MultiPoly::has_kind(VarKind kind) const {
  return std::any_of(terms_.begin(), terms_.end(), [kind](const auto& t) { return t.first.has_kind(kind); });
}

std::optional<std::pair<Monomial, BigRat>> MultiPoly::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Monomial& m, const BigRat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::permuted_x(std::span<const int> perm) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.permuted_x(perm), c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(BigRat(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const BigRat mag = negative ? BigRat(-c) : c;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += m.to_string();
    }
  }
  return s;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly poly_scale(const MultiPoly& p, const BigRat& c) { return p * c; }

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d) {
  const auto lead_d = d.leading_term();
  if (!lead_d) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  if (d.size() == 1 && lead_d->first.is_one()) return p * BigRat(1 / lead_d->second);

  MultiPoly quotient;
  MultiPoly rest = p;
  while (auto lead = rest.leading_term()) {
    auto m = lead->first.divide(lead_d->first);
    if (!m) {
      throw Error(ErrorCode::NotDivisible,
                  "leading term " + lead->first.to_string() + " not divisible by " + lead_d->first.to_string());
    }
    const BigRat c = lead->second / lead_d->second;
    quotient.add_term(*m, c);
    for (const auto& [dm, dc] : d.terms()) rest.add_term(*m * dm, -c * dc);
  }
  return quotient;
}

bool all_normalized(const MultiPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return t.second != 0 && is_normalized(t.second); });
}

}  // namespace cobord
