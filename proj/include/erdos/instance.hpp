#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "erdos/core.hpp"

namespace erdos {

/// Any object that can live in an instance or certificate file.
///
/// File layout (JSON, 1-based indices and colors):
///   {"format": "erdos-instance", "version": 1, "kind": <kind>, ...}
///   set-system:      "n", "sets": [[i, ...], ...]
///   graph:           "r", "edges": [[i, j], ...]            (i < j, lexicographic order)
///   edge-coloring:   "r", "k", "colors": [...]              (lexicographic pair order)
///   subset-coloring: "m", "l", "k", "colors": [...]         (lexicographic l-subset order)
///   sign-coloring:   "n", "x": [+1 | -1, ...]
using Instance = std::variant<SetSystem, Graph, EdgeColoring, SubsetColoring, SignColoring>;

inline constexpr const char* kInstanceFormat = "erdos-instance";
inline constexpr int kInstanceVersion = 1;

nlohmann::json to_json(const Instance& instance);
/// Throws invalid-input on any schema violation.
Instance instance_from_json(const nlohmann::json& doc);

std::string kind_name(const Instance& instance);

void write_instance_file(const std::filesystem::path& path, const Instance& instance);
/// Throws invalid-input when the file is missing, unparseable, or violates the schema.
Instance read_instance_file(const std::filesystem::path& path);

}  // namespace erdos
