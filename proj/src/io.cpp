#include "topolab/io.hpp"

#include <fstream>
#include <sstream>

namespace topolab {

namespace {

using json = nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON at " + line_column(text, e.byte) + ": " + e.what());
  }
}

Subset subset_from_labels(const GroundSet& ground, const json& arr, const std::string& field) {
  if (!arr.is_array()) throw SchemaError(field + ": expected an array of point labels");
  Subset s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) throw SchemaError(where + ": expected a point label string");
    const auto idx = ground.index_of(arr[i].get<std::string>());
    if (!idx) throw SchemaError(where + ": unknown point '" + arr[i].get<std::string>() + "'");
    s |= Subset::singleton(*idx);
  }
  return s;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

Topology parse_space(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw SchemaError("space: expected a JSON object");
  if (!doc.contains("points")) throw SchemaError("points: missing field");
  if (!doc.contains("opens")) throw SchemaError("opens: missing field");
  const json& points = doc["points"];
  if (!points.is_array()) throw SchemaError("points: expected an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_string()) throw SchemaError("points[" + std::to_string(i) + "]: expected a string");
    labels.push_back(points[i].get<std::string>());
  }
  GroundSet ground(std::move(labels));

  const json& opens = doc["opens"];
  if (!opens.is_array()) throw SchemaError("opens: expected an array of point-label arrays");
  std::vector<Subset> members;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    members.push_back(subset_from_labels(ground, opens[i], "opens[" + std::to_string(i) + "]"));
  }
  Family family(std::move(members));
  if (auto v = find_topology_violation(ground, family)) {
    throw SchemaError("opens: not a topology: " + describe(*v, ground));
  }
  return Topology(std::move(ground), std::move(family));
}

Topology load_space(const std::filesystem::path& path) { return parse_space(read_text_file(path)); }

ordered_json subset_json(const GroundSet& ground, Subset s) {
  ordered_json arr = ordered_json::array();
  for_each_point(s, [&](int p) { arr.push_back(ground.label(p)); });
  return arr;
}

ordered_json family_json(const GroundSet& ground, const Family& f) {
  ordered_json arr = ordered_json::array();
  for (Subset s : f) arr.push_back(subset_json(ground, s));
  return arr;
}

std::string emit_space(const Topology& t) {
  ordered_json doc;
  doc["points"] = t.ground().labels();
  doc["opens"] = family_json(t.ground(), t.opens());
  return doc.dump();
}

Subset parse_point_list(const GroundSet& ground, std::string_view text) {
  Subset s;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!token.empty()) {
      const auto idx = ground.index_of(token);
      if (!idx) throw SchemaError("unknown point '" + std::string(token) + "'");
      s |= Subset::singleton(*idx);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

Operation parse_operation(const Topology& t, std::string_view json_text) {
  const GroundSet& ground = t.ground();
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw SchemaError("operation: expected a JSON object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw SchemaError("name: missing or not a string");
  if (!doc.contains("table") || !doc["table"].is_object()) throw SchemaError("table: missing or not an object");

  const std::size_t count = ground.subset_count();
  std::vector<Subset> table(count);
  std::vector<bool> seen(count, false);
  for (const auto& [key, value] : doc["table"].items()) {
    const std::string field = "table[" + key + "]";
    json key_doc;
    try {
      key_doc = json::parse(key);
    } catch (const json::parse_error&) {
      throw SchemaError(field + ": key is not a JSON array of point labels");
    }
    const Subset arg = subset_from_labels(ground, key_doc, field + " key");
    if (seen[arg.bits()]) throw SchemaError(field + ": duplicate entry for " + ground.format(arg));
    seen[arg.bits()] = true;
    table[arg.bits()] = subset_from_labels(ground, value, field);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) throw SchemaError("table: missing entry for " + ground.format(Subset(static_cast<Mask>(i))));
  }
  return Operation(t, std::move(table), doc["name"].get<std::string>());
}

Operation load_operation(const Topology& t, const std::filesystem::path& path) {
  return parse_operation(t, read_text_file(path));
}

std::string emit_operation(const Operation& op) {
  const GroundSet& ground = op.topology().ground();
  ordered_json table = ordered_json::object();
  for (std::size_t i = 0; i < op.table().size(); ++i) {
    const Subset a(static_cast<Mask>(i));
    table[subset_json(ground, a).dump()] = subset_json(ground, op(a));
  }
  ordered_json doc;
  doc["name"] = op.name();
  doc["table"] = std::move(table);
  return doc.dump();
}

Operation resolve_operation(const Topology& t, std::string_view spec) {
  constexpr std::string_view prefix = "custom:";
  if (spec.substr(0, prefix.size()) == prefix) {
    return load_operation(t, std::filesystem::path(std::string(spec.substr(prefix.size()))));
  }
  const auto name = parse_operation_name(spec);
  if (!name) throw UsageError("unknown operation '" + std::string(spec) + "'");
  return builtin(t, *name);
}

OpPair resolve_pair(const Topology& t, std::string_view spec) {
  // custom:<file> may itself contain a comma only in the second slot.
  const std::size_t comma = spec.find(',');
  if (comma == std::string_view::npos) throw UsageError("pair must look like <op>,<op>: '" + std::string(spec) + "'");
  return OpPair(resolve_operation(t, spec.substr(0, comma)), resolve_operation(t, spec.substr(comma + 1)));
}

}  // namespace topolab
