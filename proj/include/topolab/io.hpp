#pragma once

// JSON formats.
//
//   space:      {"points": ["a","b"], "opens": [[], ["a"], ["a","b"]]}
//   operation:  {"name": "f", "table": {"[]": [], "[\"a\"]": ["a","b"], ...}}
//
// Table keys are compact JSON arrays of point labels; every subset must be
// present. Emitters write opens / table entries in ascending bitmask order
// with points in ground order, so emit(parse(x)) is stable.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "topolab/phi12.hpp"

namespace topolab {

using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Throws SchemaError with the offending field (or line/column for syntax
/// errors) and, for non-topologies, the violating pair of sets.
Topology parse_space(std::string_view json_text);
Topology load_space(const std::filesystem::path& path);
/// One line of compact JSON, no trailing newline.
std::string emit_space(const Topology& t);

ordered_json subset_json(const GroundSet& ground, Subset s);
ordered_json family_json(const GroundSet& ground, const Family& f);
/// Parses a list of labels ("a,b"); empty text is the empty set.
Subset parse_point_list(const GroundSet& ground, std::string_view text);

Operation parse_operation(const Topology& t, std::string_view json_text);
Operation load_operation(const Topology& t, const std::filesystem::path& path);
std::string emit_operation(const Operation& op);

/// A builtin name or "custom:<file>".
Operation resolve_operation(const Topology& t, std::string_view spec);
/// "<op>,<op>"
OpPair resolve_pair(const Topology& t, std::string_view spec);

}  // namespace topolab
