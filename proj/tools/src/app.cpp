#include "cobord_cli/app.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "cobord/divdiff.hpp"
#include "cobord/error.hpp"
#include "cobord/genus.hpp"
#include "cobord/rootdata.hpp"
#include "cobord/symmchern.hpp"
#include "cobord_cli/documents.hpp"

namespace cobord::cli {

namespace {

struct Flags {
  std::string input;
  bool json = false;
  std::string point;
  bool check_independence = false;
  std::string omega;
  bool exact = false;
  bool cross_check = false;
  std::string method = "divdiff";
};

SpaceSpec load_input(const std::string& input) {
  if (std::filesystem::exists(input)) return load_space_file(input);
  if (input.find(':') != std::string::npos) return builtin_space(input);
  throw Error(ErrorCode::ParseError, "'" + input + "' is neither a file nor a builtin name");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

GenericPoint parse_point(const std::string& text, int rank) {
  GenericPoint p;
  for (const auto& item : split_commas(text)) {
    BigRat q;
    if (item.empty() || q.set_str(item, 10) != 0 || q.get_den() == 0) {
      throw Error(ErrorCode::ParseError, "bad point coordinate '" + item + "'");
    }
    q.canonicalize();
    p.coordinates.push_back(q);
  }
  if (static_cast<int>(p.coordinates.size()) != rank) {
    throw Error(ErrorCode::ParseError, "point has " + std::to_string(p.coordinates.size()) +
                                           " coordinates, space has rank " + std::to_string(rank));
  }
  return p;
}

OmegaIndex parse_omega(const std::string& text) {
  std::vector<std::uint32_t> exps;
  for (const auto& item : split_commas(text)) {
    if (item.empty() || item.size() > 6 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "bad omega entry '" + item + "'");
    }
    exps.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return OmegaIndex(std::move(exps));
}

LMethod parse_method(const std::string& m) {
  if (m == "divdiff") return LMethod::ComposedDivDiff;
  if (m == "antisym") return LMethod::Antisymmetrize;
  throw Error(ErrorCode::ParseError, "unknown method '" + m + "' (use divdiff or antisym)");
}

std::optional<GenericPoint> point_option(const Flags& f, const SpaceSpec& spec) {
  if (f.point.empty()) return std::nullopt;
  auto p = parse_point(f.point, spec.rank());
  check_nonsingular(orbit_fixed_points(spec), p);
  return p;
}

std::string point_string(const GenericPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coordinates.size(); ++i) {
    if (i) s += ',';
    s += p.coordinates[i].get_str();
  }
  return s + ")";
}

int emit(const ResultDocument& doc, const Flags& f, std::ostream& out) {
  if (f.json) {
    out << result_to_json(doc).dump(2) << '\n';
  } else {
    out << result_to_text(doc);
  }
  const bool ok = doc.checks.lower_vanishing && doc.checks.integrality &&
                  doc.checks.point_independence.value_or(true) && doc.cross_check.value_or(true);
  return ok ? kSuccess : kConstraintViolation;
}

int single_s_number(const SpaceSpec& spec, const Flags& f, std::ostream& out) {
  const auto omega = parse_omega(f.omega);
  const auto n = static_cast<unsigned>(spec.half_dimension());
  const auto value = s_number(spec, omega, point_option(f, spec));
  if (f.json) {
    Json j;
    j["name"] = spec.name;
    j["omega"] = omega.padded(n);
    j["value"] = integer_to_json(value);
    out << j.dump(2) << '\n';
  } else {
    out << "s" << omega.to_string(n) << " = " << value.get_str() << '\n';
  }
  return kSuccess;
}

CobordismClass exact_class(const std::string& name, LMethod method) {
  const auto spec = builtin_space(name);
  if (name.rfind("flag:", 0) == 0) return flag_class_exact(spec.rank(), method);
  if (name.rfind("grassmann:", 0) == 0) {
    const auto& q = std::get<NamedUnitaryQuotient>(spec.data);
    const int k = static_cast<int>(q.blocks.blocks.front().size());
    return grassmann_class_exact(k, q.rank - k, method);
  }
  if (name.rfind("cp:", 0) == 0) return grassmann_class_exact(spec.rank() - 1, 1, method);
  throw Error(ErrorCode::OutOfRange, "no exact route for '" + name + "'");
}

int cmd_exact(const Flags& f, std::ostream& out) {
  const auto spec = builtin_space(f.input);
  const auto cls = exact_class(f.input, parse_method(f.method));
  auto doc = make_result(spec.name, "divided_difference", euler_characteristic(spec), cls,
                         ResultChecks{true, true, std::nullopt});
  if (f.cross_check) doc.cross_check = cobordism_class(spec).cobordism_class == cls;
  return emit(doc, f, out);
}

int cmd_genus(const Flags& f, std::ostream& out) {
  if (f.exact) return cmd_exact(f, out);
  const auto spec = load_input(f.input);
  if (!f.omega.empty()) return single_s_number(spec, f, out);

  GenusOptions options;
  options.check_independence = f.check_independence;
  options.point = point_option(f, spec);
  const auto report = cobordism_class(spec, options);
  auto doc = make_result(spec.name, "localization", euler_characteristic(spec), report.cobordism_class,
                         ResultChecks{report.lower_coefficients_vanished, report.integrality_passed,
                                      report.second_point_agreed});
  if (f.cross_check) doc.cross_check = exact_class(spec.name, parse_method(f.method)) == report.cobordism_class;
  return emit(doc, f, out);
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto spec = load_input(f.input);
  const auto table = orbit_fixed_points(spec);
  const auto n = static_cast<unsigned>(spec.half_dimension());
  const auto point = point_option(f, spec).value_or(choose_generic_point(table, spec.rank()));
  const auto series = localized_series(table, point, n);

  bool lower_ok = true;
  for (unsigned l = 0; l < n; ++l) lower_ok = lower_ok && series[l].is_zero();
  bool integral = !series[n].has_kind(VarKind::X);
  for (const auto& [m, c] : series[n].terms()) integral = integral && is_integer(c);

  std::optional<BigRat> s_value;
  OmegaIndex omega;
  if (!f.omega.empty()) {
    omega = parse_omega(f.omega);
    if (omega.weighted_degree() != n) {
      throw Error(ErrorCode::BadOmega, "||omega|| = " + std::to_string(omega.weighted_degree()) +
                                           " but n = " + std::to_string(n));
    }
    s_value = s_number_at(table, omega, point);
    integral = integral && is_integer(*s_value);
  }
  const bool passed = lower_ok && integral;

  if (f.json) {
    Json j;
    j["name"] = spec.name;
    Json coords = Json::array();
    for (const auto& c : point.coordinates) coords.push_back(c.get_str());
    j["point"] = coords;
    Json residuals = Json::array();
    for (unsigned l = 0; l < n; ++l) {
      Json r;
      r["degree"] = l;
      r["residual"] = series[l].to_string();
      r["zero"] = series[l].is_zero();
      residuals.push_back(r);
    }
    j["residuals"] = residuals;
    j["integrality"] = integral;
    if (s_value) {
      j["omega"] = omega.padded(n);
      j["s_value"] = s_value->get_str();
    }
    j["passed"] = passed;
    out << j.dump(2) << '\n';
  } else {
    out << "space: " << spec.name << '\n';
    out << "point: " << point_string(point) << '\n';
    for (unsigned l = 0; l < n; ++l) out << "  t^" << l << " residual: " << series[l].to_string() << '\n';
    if (s_value) out << "  s" << omega.to_string(n) << " at point: " << s_value->get_str() << '\n';
    out << "integrality: " << (integral ? "ok" : "FAILED") << '\n';
    out << "result: " << (passed ? "pass" : "FAIL") << '\n';
  }
  return passed ? kSuccess : kConstraintViolation;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("input", f.input, "space file or builtin name (flag:N, grassmann:N:K, cp:N, m10:J1|J2|J3)")
      ->required();
  cmd->add_flag("--json", f.json, "machine-readable output");
  cmd->add_option("--point", f.point, "evaluation point v1,v2,... (rationals allowed)");
  cmd->add_option("--omega", f.omega, "single s-number query i1,i2,...");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cobordism classes and Chern numbers from torus fixed-point data", "cobord"};
  app.require_subcommand(1);
  Flags f;

  auto* genus = app.add_subcommand("genus", "cobordism class, s-numbers and Chern numbers by localization");
  add_common(genus, f);
  genus->add_flag("--check-independence", f.check_independence, "recompute at a second generic point");
  genus->add_flag("--exact", f.exact, "use the divided-difference route (builtins only)");
  genus->add_flag("--cross-check", f.cross_check, "compare the localization and divided-difference routes");
  genus->add_option("--method", f.method, "L operator method for the exact route: divdiff or antisym");

  auto* verify = app.add_subcommand("verify", "vanishing and integrality constraints of a fixed-point table");
  add_common(verify, f);

  auto* exact = app.add_subcommand("exact", "divided-difference route for flag:N, grassmann:N:K, cp:N");
  exact->add_option("input", f.input, "builtin name")->required();
  exact->add_flag("--json", f.json, "machine-readable output");
  exact->add_flag("--cross-check", f.cross_check, "compare against the localization route");
  exact->add_option("--method", f.method, "L operator method: divdiff or antisym");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*genus) return cmd_genus(f, out);
    if (*verify) return cmd_verify(f, out);
    return cmd_exact(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_constraint_violation(e.code()) ? kConstraintViolation : kUsageError;
  }
}

}  // namespace cobord::cli
