#pragma once

/**
 * @file group_io.hpp
 * @brief Group file format (JSON).
 *
 * One group per document:
 *
 *     {
 *       "schema": 1,                       // optional, must be 1
 *       "name": "D8",                      // optional
 *       "labels": ["1", "r", ...],         // optional, one per element
 *       "table": [[0, 1, ...], ...]        // row-major Cayley table, or
 *       "perms": {"degree": 4, "generators": [[1, 2, 3, 0], [2, 1, 0, 3]]}
 *     }
 *
 * Exactly one of "table" and "perms" must be present. Unknown keys are
 * rejected. Permutation generators list images: p[i] is where i goes.
 */

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lmsym/error.hpp"
#include "lmsym/group.hpp"

namespace lmsym {

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] inline void parse_fail(std::string_view source, const std::string& what) {
  throw Error(ErrorKind::kParseError, std::string(source) + ": " + what);
}

template <typename T>
T field_as(const nlohmann::json& j, std::string_view source, std::string_view field, std::string_view expected) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    parse_fail(source, "field '" + std::string(field) + "': expected " + std::string(expected));
  }
}

inline void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<std::string_view> allowed,
                                std::string_view source, std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) parse_fail(source, "unknown field '" + key + "' in " + std::string(where));
  }
}

}  // namespace detail

inline Group parse_group(std::string_view text, std::string_view source = "<input>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::parse_fail(source, "line " + std::to_string(detail::line_of(text, e.byte)) + ": malformed document");
  }
  if (!doc.is_object()) detail::parse_fail(source, "top level must be an object");
  detail::reject_unknown_keys(doc, {"schema", "name", "labels", "table", "perms"}, source, "group document");

  if (doc.contains("schema") && doc["schema"] != 1)
    detail::parse_fail(source, "field 'schema': unsupported version");
  std::string name;
  if (doc.contains("name")) name = detail::field_as<std::string>(doc["name"], source, "name", "string");
  std::vector<std::string> labels;
  if (doc.contains("labels"))
    labels = detail::field_as<std::vector<std::string>>(doc["labels"], source, "labels", "array of strings");

  const bool has_table = doc.contains("table");
  const bool has_perms = doc.contains("perms");
  if (has_table == has_perms) detail::parse_fail(source, "exactly one of 'table' and 'perms' is required");

  if (has_table) {
    const auto table = detail::field_as<Table>(doc["table"], source, "table", "array of arrays of non-negative integers");
    return group_from_table(table, std::move(labels), std::move(name));
  }

  const auto& perms = doc["perms"];
  if (!perms.is_object()) detail::parse_fail(source, "field 'perms': expected object");
  detail::reject_unknown_keys(perms, {"degree", "generators"}, source, "'perms'");
  if (!perms.contains("degree") || !perms.contains("generators"))
    detail::parse_fail(source, "field 'perms': needs 'degree' and 'generators'");
  const auto degree = detail::field_as<std::size_t>(perms["degree"], source, "perms.degree", "non-negative integer");
  const auto gens = detail::field_as<std::vector<Permutation>>(perms["generators"], source, "perms.generators",
                                                               "array of integer arrays");
  Group g = group_from_permutations(degree, gens, kDefaultOrderLimit, std::move(name));
  if (labels.empty()) return g;
  return group_from_table(g.table(), std::move(labels), g.name());
}

inline Group load_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  Group g = parse_group(buf.str(), path.string());
  if (g.name().empty()) return g.renamed(path.stem().string());
  return g;
}

inline nlohmann::json group_to_json(const Group& G) {
  nlohmann::json j;
  j["schema"] = 1;
  j["name"] = G.name();
  j["labels"] = G.labels();
  j["table"] = G.table();
  return j;
}

inline std::string serialize_group(const Group& G) { return group_to_json(G).dump() + "\n"; }

inline void save_group(const Group& G, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_group(G);
}

}  // namespace lmsym
