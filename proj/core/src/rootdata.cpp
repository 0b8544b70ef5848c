#include "cobord/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cobord/error.hpp"

namespace cobord {

bool Weight::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](auto c) { return c == 0; });
}

Weight Weight::negated() const {
  Weight w = *this;
  for (auto& c : w.components) c = -c;
  return w;
}

Weight Weight::permuted(const std::vector<int>& perm) const {
  if (perm.size() != components.size()) {
    throw Error(ErrorCode::BadParameters, "permutation size differs from weight rank");
  }
  Weight w{std::vector<std::int64_t>(components.size(), 0)};
  for (std::size_t l = 0; l < components.size(); ++l) w.components[perm[l]] = components[l];
  return w;
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t l = 0; l < components.size(); ++l) {
    const auto c = components[l];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += std::to_string(mag);
    s += 'x' + std::to_string(l + 1);
  }
  return s.empty() ? "0" : s;
}

Weight root_difference(int rank, int i, int j) {
  Weight w{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)};
  w.components.at(i - 1) += 1;
  w.components.at(j - 1) -= 1;
  return w;
}

std::size_t BlockPartition::rank() const {
  std::size_t k = 0;
  for (const auto& b : blocks) k += b.size();
  return k;
}

void BlockPartition::validate() const {
  const std::size_t k = rank();
  std::vector<bool> seen(k, false);
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::BadSpace, "empty block");
    for (int i : b) {
      if (i < 0 || static_cast<std::size_t>(i) >= k) {
        throw Error(ErrorCode::BadSpace, "block index " + std::to_string(i + 1) + " out of range");
      }
      if (seen[i]) throw Error(ErrorCode::BadSpace, "index " + std::to_string(i + 1) + " in two blocks");
      seen[i] = true;
    }
  }
}

int SpaceSpec::rank() const {
  return std::visit([](const auto& d) { return d.rank; }, data);
}

std::size_t SpaceSpec::half_dimension() const {
  if (const auto* q = std::get_if<NamedUnitaryQuotient>(&data)) return q->identity_weights.size();
  const auto& e = std::get<ExplicitFixedPoints>(data);
  return e.fixed_points.empty() ? 0 : e.fixed_points.front().weights.size();
}

namespace {

void check_weight(const Weight& w, int rank, const std::string& where) {
  if (static_cast<int>(w.rank()) != rank) {
    throw Error(ErrorCode::BadSpace, where + ": weight has " + std::to_string(w.rank()) +
                                         " components, expected rank " + std::to_string(rank));
  }
  if (w.is_zero()) throw Error(ErrorCode::ZeroWeight, where + ": zero weight");
}

// Representative of the line {w, -w}: first nonzero component positive.
Weight line_of(const Weight& w) {
  for (auto c : w.components) {
    if (c != 0) return c > 0 ? w : w.negated();
  }
  return w;
}

std::vector<Weight> sorted_multiset(const std::vector<Weight>& ws, bool as_lines) {
  std::vector<Weight> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(as_lines ? line_of(w) : w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void validate(const SpaceSpec& spec, bool strict_stability) {
  if (const auto* q = std::get_if<NamedUnitaryQuotient>(&spec.data)) {
    if (q->rank <= 0) throw Error(ErrorCode::BadSpace, "rank must be positive");
    q->blocks.validate();
    if (static_cast<int>(q->blocks.rank()) != q->rank) {
      throw Error(ErrorCode::BadSpace, "blocks cover " + std::to_string(q->blocks.rank()) +
                                           " indices, rank is " + std::to_string(q->rank));
    }
    for (const auto& w : q->identity_weights) check_weight(w, q->rank, "identity weight");

    const auto reference = sorted_multiset(q->identity_weights, !strict_stability);
    std::vector<int> perm(static_cast<std::size_t>(q->rank));
    for (const auto& block : q->blocks.blocks) {
      for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[block[i]], perm[block[i + 1]]);
        std::vector<Weight> image;
        for (const auto& w : q->identity_weights) image.push_back(w.permuted(perm));
        if (sorted_multiset(image, !strict_stability) != reference) {
          throw Error(ErrorCode::BadSpace, "identity weights are not stable under swapping x" +
                                               std::to_string(block[i] + 1) + " and x" +
                                               std::to_string(block[i + 1] + 1));
        }
      }
    }
    return;
  }

  const auto& e = std::get<ExplicitFixedPoints>(spec.data);
  if (e.rank <= 0) throw Error(ErrorCode::BadSpace, "rank must be positive");
  if (e.fixed_points.empty()) throw Error(ErrorCode::BadSpace, "no fixed points");
  const auto n = e.fixed_points.front().weights.size();
  for (std::size_t p = 0; p < e.fixed_points.size(); ++p) {
    const auto& fp = e.fixed_points[p];
    const std::string where = "fixed point " + std::to_string(p + 1);
    if (fp.sign != 1 && fp.sign != -1) throw Error(ErrorCode::BadSpace, where + ": sign must be +1 or -1");
    if (fp.weights.size() != n) throw Error(ErrorCode::BadSpace, where + ": weight count differs");
    for (const auto& w : fp.weights) check_weight(w, e.rank, where);
  }
}

namespace {

void cosets_rec(const BlockPartition& bp, std::size_t block, std::vector<bool>& used, std::vector<int>& perm,
                std::vector<std::vector<int>>& out) {
  if (block == bp.blocks.size()) {
    out.push_back(perm);
    return;
  }
  const auto& positions = bp.blocks[block];
  const int k = static_cast<int>(perm.size());
  // Choose an increasing sequence of unused values for this block.
  std::vector<int> chosen;
  auto pick = [&](auto&& self, int start) -> void {
    if (chosen.size() == positions.size()) {
      auto sorted_positions = positions;
      std::sort(sorted_positions.begin(), sorted_positions.end());
      for (std::size_t i = 0; i < chosen.size(); ++i) perm[sorted_positions[i]] = chosen[i];
      cosets_rec(bp, block + 1, used, perm, out);
      return;
    }
    for (int v = start; v < k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
      used[v] = false;
    }
  };
  pick(pick, 0);
}

}  // namespace

std::vector<std::vector<int>> coset_representatives(const BlockPartition& bp) {
  bp.validate();
  const auto k = bp.rank();
  std::vector<std::vector<int>> out;
  std::vector<bool> used(k, false);
  std::vector<int> perm(k, -1);
  cosets_rec(bp, 0, used, perm, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FixedPointDatum> orbit_fixed_points(const SpaceSpec& spec) {
  if (const auto* e = std::get_if<ExplicitFixedPoints>(&spec.data)) return e->fixed_points;

  const auto& q = std::get<NamedUnitaryQuotient>(spec.data);
  std::vector<FixedPointDatum> table;
  for (const auto& sigma : coset_representatives(q.blocks)) {
    FixedPointDatum fp;
    fp.sign = 1;
    fp.weights.reserve(q.identity_weights.size());
    for (const auto& w : q.identity_weights) {
      auto image = w.permuted(sigma);
      if (image.is_zero()) throw Error(ErrorCode::ZeroWeight, "permuted identity weight is zero");
      fp.weights.push_back(std::move(image));
    }
    table.push_back(std::move(fp));
  }
  return table;
}

std::uint64_t euler_characteristic(const SpaceSpec& spec) {
  if (const auto* e = std::get_if<ExplicitFixedPoints>(&spec.data)) return e->fixed_points.size();
  const auto& q = std::get<NamedUnitaryQuotient>(spec.data);
  // k! / prod b_i! as a running product of binomials.
  std::uint64_t chi = 1;
  std::uint64_t placed = 0;
  for (const auto& b : q.blocks.blocks) {
    for (std::uint64_t i = 1; i <= b.size(); ++i) {
      ++placed;
      chi = chi * placed / i;
    }
  }
  return chi;
}

namespace {

BlockPartition consecutive_blocks(const std::vector<int>& sizes) {
  BlockPartition bp;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> b(static_cast<std::size_t>(s));
    std::iota(b.begin(), b.end(), next);
    next += s;
    bp.blocks.push_back(std::move(b));
  }
  return bp;
}

}  // namespace

SpaceSpec flag_space(int n) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "flag manifold needs n >= 2");
  NamedUnitaryQuotient q;
  q.rank = n;
  q.blocks = consecutive_blocks(std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) q.identity_weights.push_back(root_difference(n, i, j));
  }
  return {"flag:" + std::to_string(n), std::move(q)};
}

SpaceSpec grassmann_space(int n, int k) {
  if (k < 1 || k >= n) throw Error(ErrorCode::BadParameters, "Grassmannian needs 1 <= k < n");
  NamedUnitaryQuotient q;
  q.rank = n;
  q.blocks = consecutive_blocks({k, n - k});
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= n; ++j) q.identity_weights.push_back(root_difference(n, i, j));
  }
  return {"grassmann:" + std::to_string(n) + ":" + std::to_string(k), std::move(q)};
}

SpaceSpec projective_space(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "CP^n needs n >= 1");
  auto spec = grassmann_space(n + 1, n);
  spec.name = "cp:" + std::to_string(n);
  return spec;
}

SpaceSpec m10_space(M10Structure j) {
  NamedUnitaryQuotient q;
  q.rank = 4;
  q.blocks = BlockPartition{{{0, 1}, {2}, {3}}};
  std::vector<std::pair<int, int>> roots;
  std::string tag;
  switch (j) {
    case M10Structure::J1:
      roots = {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
      tag = "J1";
      break;
    case M10Structure::J2:
      roots = {{4, 1}, {4, 2}, {4, 3}, {1, 3}, {2, 3}};
      tag = "J2";
      break;
    case M10Structure::J3:
      roots = {{1, 3}, {2, 3}, {4, 1}, {4, 2}, {3, 4}};
      tag = "J3";
      break;
  }
  for (auto [i, k] : roots) q.identity_weights.push_back(root_difference(4, i, k));
  return {"m10:" + tag, std::move(q)};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

int parse_param(const std::string& s, const std::string& name) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::BadParameters, "bad parameter '" + s + "' in builtin name '" + name + "'");
  }
  return std::stoi(s);
}

}  // namespace

SpaceSpec builtin_space(const std::string& name) {
  const auto parts = split(name, ':');
  if (parts.size() == 2 && parts[0] == "flag") return flag_space(parse_param(parts[1], name));
  if (parts.size() == 3 && parts[0] == "grassmann") {
    return grassmann_space(parse_param(parts[1], name), parse_param(parts[2], name));
  }
  if (parts.size() == 2 && parts[0] == "cp") return projective_space(parse_param(parts[1], name));
  if (parts.size() == 2 && parts[0] == "m10") {
    if (parts[1] == "J1") return m10_space(M10Structure::J1);
    if (parts[1] == "J2") return m10_space(M10Structure::J2);
    if (parts[1] == "J3") return m10_space(M10Structure::J3);
  }
  throw Error(ErrorCode::BadParameters, "unknown builtin space '" + name + "'");
}

}  // namespace cobord
