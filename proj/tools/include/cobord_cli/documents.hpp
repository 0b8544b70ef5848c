#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cobord/genus.hpp"
#include "cobord/omega.hpp"
#include "cobord/rootdata.hpp"

namespace cobord::cli {

using Json = nlohmann::ordered_json;

/// Reads a space description. 1-based indices in the file become 0-based.
/// Throws Error(ParseError) on malformed documents and BadSpace/ZeroWeight
/// when the parsed space fails validation.
SpaceSpec parse_space(const Json& doc);
SpaceSpec load_space_file(const std::string& path);
Json space_to_json(const SpaceSpec& spec);

using NumberList = std::vector<std::pair<OmegaIndex, BigInt>>;

struct ResultChecks {
  bool lower_vanishing = false;
  bool integrality = false;
  std::optional<bool> point_independence;

  friend bool operator==(const ResultChecks&, const ResultChecks&) = default;
};

struct ResultDocument {
  std::string name;
  std::string route;
  /// Real dimension 2n.
  unsigned dimension = 0;
  std::uint64_t euler_characteristic = 0;
  NumberList cobordism_class;
  NumberList s_numbers;
  NumberList chern_numbers;
  ResultChecks checks;
  std::optional<bool> cross_check;

  unsigned half_dimension() const { return dimension / 2; }
  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// Assembles the document: terms sorted most-factors-first, Chern numbers from the s-numbers.
ResultDocument make_result(const std::string& name, const std::string& route, std::uint64_t euler,
                           const CobordismClass& cls, const ResultChecks& checks);

Json result_to_json(const ResultDocument& doc);
ResultDocument result_from_json(const Json& j);

/// Aligned plain-text rendering for terminals.
std::string result_to_text(const ResultDocument& doc);

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json integer_to_json(const BigInt& z);
BigInt integer_from_json(const Json& j);

}  // namespace cobord::cli
