#include "cobord_cli/documents.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "cobord/error.hpp"
#include "cobord/symmchern.hpp"

namespace cobord::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where + ": expected an integer");
  return j.get<std::int64_t>();
}

Weight as_weight(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an integer vector");
  Weight w;
  for (const auto& c : j) w.components.push_back(as_int(c, where));
  return w;
}

std::vector<Weight> as_weights(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected a list of integer vectors");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_weight(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json weight_list(const std::vector<Weight>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(w.components);
  return arr;
}

}  // namespace

SpaceSpec parse_space(const Json& doc) {
  if (!doc.is_object()) parse_fail("space document must be a JSON object");
  SpaceSpec spec;
  spec.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "unnamed";
  const auto rank = as_int(require(doc, "rank"), "rank");
  if (rank <= 0 || rank > 64) parse_fail("rank must be in 1..64");
  const auto& mode = require(doc, "mode");
  if (!mode.is_string()) parse_fail("mode must be a string");

  if (mode == "unitary_quotient") {
    NamedUnitaryQuotient q;
    q.rank = static_cast<int>(rank);
    const auto& blocks = require(doc, "blocks");
    if (!blocks.is_array()) parse_fail("blocks must be a list of lists");
    for (const auto& b : blocks) {
      if (!b.is_array()) parse_fail("each block must be a list of 1-based indices");
      std::vector<int> block;
      for (const auto& idx : b) {
        const auto i = as_int(idx, "blocks");
        if (i < 1 || i > rank) parse_fail("block index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
        block.push_back(static_cast<int>(i - 1));
      }
      q.blocks.blocks.push_back(std::move(block));
    }
    q.identity_weights = as_weights(require(doc, "identity_weights"), "identity_weights");
    spec.data = std::move(q);
  } else if (mode == "explicit") {
    ExplicitFixedPoints e;
    e.rank = static_cast<int>(rank);
    const auto& points = require(doc, "fixed_points");
    if (!points.is_array()) parse_fail("fixed_points must be a list");
    for (std::size_t p = 0; p < points.size(); ++p) {
      const std::string where = "fixed_points[" + std::to_string(p) + "]";
      FixedPointDatum fp;
      fp.sign = static_cast<int>(as_int(require(points[p], "sign"), where + ".sign"));
      fp.weights = as_weights(require(points[p], "weights"), where + ".weights");
      e.fixed_points.push_back(std::move(fp));
    }
    spec.data = std::move(e);
  } else {
    parse_fail("unknown mode '" + mode.get<std::string>() + "'");
  }
  validate(spec);
  return spec;
}

SpaceSpec load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
  return parse_space(doc);
}

Json space_to_json(const SpaceSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["rank"] = spec.rank();
  if (const auto* q = std::get_if<NamedUnitaryQuotient>(&spec.data)) {
    j["mode"] = "unitary_quotient";
    Json blocks = Json::array();
    for (const auto& b : q->blocks.blocks) {
      Json block = Json::array();
      for (int i : b) block.push_back(i + 1);
      blocks.push_back(block);
    }
    j["blocks"] = blocks;
    j["identity_weights"] = weight_list(q->identity_weights);
  } else {
    const auto& e = std::get<ExplicitFixedPoints>(spec.data);
    j["mode"] = "explicit";
    Json points = Json::array();
    for (const auto& fp : e.fixed_points) {
      Json p;
      p["sign"] = fp.sign;
      p["weights"] = weight_list(fp.weights);
      points.push_back(p);
    }
    j["fixed_points"] = points;
  }
  return j;
}

Json integer_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0) parse_fail("bad integer string '" + j.get<std::string>() + "'");
    return z;
  }
  parse_fail("expected an integer");
}

namespace {

NumberList sorted_list(const std::map<OmegaIndex, BigInt>& table) {
  NumberList v(table.begin(), table.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return GradedLexDescending{}(l.first, r.first); });
  return v;
}

Json number_list_to_json(const NumberList& list, unsigned n, const char* key, const char* value_key,
                         bool chern) {
  Json arr = Json::array();
  for (const auto& [omega, value] : list) {
    Json entry;
    entry[key] = omega.padded(n);
    if (chern) entry["monomial"] = chern_monomial_string(omega);
    entry[value_key] = integer_to_json(value);
    arr.push_back(entry);
  }
  return arr;
}

NumberList number_list_from_json(const Json& arr, const char* key, const char* value_key) {
  if (!arr.is_array()) parse_fail(std::string("expected a list for ") + key);
  NumberList out;
  for (const auto& entry : arr) {
    const auto& exps = require(entry, key);
    if (!exps.is_array()) parse_fail(std::string(key) + " must be an integer list");
    std::vector<std::uint32_t> v;
    for (const auto& e : exps) {
      const auto x = as_int(e, key);
      if (x < 0) parse_fail("negative exponent");
      v.push_back(static_cast<std::uint32_t>(x));
    }
    out.emplace_back(OmegaIndex(std::move(v)), integer_from_json(require(entry, value_key)));
  }
  return out;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> optional_bool_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_boolean()) parse_fail("expected true, false or null");
  return j.get<bool>();
}

}  // namespace

ResultDocument make_result(const std::string& name, const std::string& route, std::uint64_t euler,
                           const CobordismClass& cls, const ResultChecks& checks) {
  ResultDocument doc;
  doc.name = name;
  doc.route = route;
  doc.dimension = 2 * cls.dimension();
  doc.euler_characteristic = euler;
  doc.cobordism_class = sorted_list(cls.terms());
  // Every omega of degree n gets an s-number, including the zero ones.
  std::map<OmegaIndex, BigInt> s;
  for (const auto& omega : omegas_of_degree(cls.dimension())) s.emplace(omega, cls.coefficient(omega));
  doc.s_numbers = sorted_list(s);
  if (cls.dimension() > 0) doc.chern_numbers = sorted_list(s_to_chern(s, cls.dimension()));
  doc.checks = checks;
  return doc;
}

Json result_to_json(const ResultDocument& doc) {
  const unsigned n = doc.half_dimension();
  Json j;
  j["name"] = doc.name;
  j["route"] = doc.route;
  j["dimension"] = doc.dimension;
  j["euler_characteristic"] = doc.euler_characteristic;
  j["cobordism_class"] = number_list_to_json(doc.cobordism_class, n, "omega", "coefficient", false);
  j["s_numbers"] = number_list_to_json(doc.s_numbers, n, "omega", "value", false);
  j["chern_numbers"] = number_list_to_json(doc.chern_numbers, n, "xi", "value", true);
  Json checks;
  checks["lower_vanishing"] = doc.checks.lower_vanishing;
  checks["integrality"] = doc.checks.integrality;
  checks["point_independence"] = optional_bool(doc.checks.point_independence);
  j["checks"] = checks;
  if (doc.cross_check) j["cross_check"] = *doc.cross_check;
  return j;
}

ResultDocument result_from_json(const Json& j) {
  ResultDocument doc;
  try {
    doc.name = require(j, "name").get<std::string>();
    doc.route = require(j, "route").get<std::string>();
    doc.dimension = require(j, "dimension").get<unsigned>();
    doc.euler_characteristic = require(j, "euler_characteristic").get<std::uint64_t>();
    doc.cobordism_class = number_list_from_json(require(j, "cobordism_class"), "omega", "coefficient");
    doc.s_numbers = number_list_from_json(require(j, "s_numbers"), "omega", "value");
    doc.chern_numbers = number_list_from_json(require(j, "chern_numbers"), "xi", "value");
    const auto& checks = require(j, "checks");
    doc.checks.lower_vanishing = require(checks, "lower_vanishing").get<bool>();
    doc.checks.integrality = require(checks, "integrality").get<bool>();
    doc.checks.point_independence = optional_bool_from(require(checks, "point_independence"));
    if (j.contains("cross_check")) doc.cross_check = optional_bool_from(j["cross_check"]);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("result document: ") + e.what());
  }
  return doc;
}

namespace {

std::string verdict(bool ok) { return ok ? "ok" : "FAILED"; }

void append_table(std::ostringstream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) os << "  " << k << std::string(width - k.size(), ' ') << " = " << v << '\n';
}

}  // namespace

std::string result_to_text(const ResultDocument& doc) {
  const unsigned n = doc.half_dimension();
  std::ostringstream os;
  os << "space:                " << doc.name << '\n';
  os << "route:                " << doc.route << '\n';
  os << "dimension:            " << doc.dimension << " (n = " << n << ")\n";
  os << "euler characteristic: " << doc.euler_characteristic << '\n';

  std::map<OmegaIndex, BigInt> cls(doc.cobordism_class.begin(), doc.cobordism_class.end());
  os << "cobordism class:      " << CobordismClass(n, cls).to_string() << '\n';

  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [omega, v] : doc.s_numbers) rows.emplace_back("s" + omega.to_string(n), v.get_str());
  os << "s-numbers:\n";
  append_table(os, rows);

  rows.clear();
  for (const auto& [xi, v] : doc.chern_numbers) rows.emplace_back(chern_monomial_string(xi), v.get_str());
  os << "Chern numbers:\n";
  append_table(os, rows);

  os << "checks:\n";
  os << "  lower coefficients vanish: " << verdict(doc.checks.lower_vanishing) << '\n';
  os << "  integrality:               " << verdict(doc.checks.integrality) << '\n';
  os << "  point independence:        "
     << (doc.checks.point_independence ? verdict(*doc.checks.point_independence) : std::string("not checked")) << '\n';
  if (doc.cross_check) os << "  cross-check with genus:    " << verdict(*doc.cross_check) << '\n';
  return os.str();
}

}  // namespace cobord::cli
