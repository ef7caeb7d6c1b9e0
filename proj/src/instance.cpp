#include "erdos/instance.hpp"

#include <fstream>
#include <sstream>

#include "erdos/error.hpp"

namespace erdos {

using nlohmann::json;

namespace {

json header(const char* kind) {
  return json{{"format", kInstanceFormat}, {"version", kInstanceVersion}, {"kind", kind}};
}

json encode(const SetSystem& sys) {
  json doc = header("set-system");
  doc["n"] = sys.n;
  json sets = json::array();
  for (const auto& m : sys.sets) {
    json members = json::array();
    for (auto e : m.members()) members.push_back(e + 1);
    sets.push_back(std::move(members));
  }
  doc["sets"] = std::move(sets);
  return doc;
}

json encode(const Graph& g) {
  json doc = header("graph");
  doc["r"] = g.order();
  json edges = json::array();
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) edges.push_back({i + 1, j + 1});
  doc["edges"] = std::move(edges);
  return doc;
}

json one_based(const std::vector<std::uint32_t>& colors) {
  json out = json::array();
  for (auto q : colors) out.push_back(q + 1);
  return out;
}

json encode(const EdgeColoring& c) {
  json doc = header("edge-coloring");
  doc["r"] = c.order();
  doc["k"] = c.color_count();
  doc["colors"] = one_based(c.colors());
  return doc;
}

json encode(const SubsetColoring& c) {
  json doc = header("subset-coloring");
  doc["m"] = c.ground_size();
  doc["l"] = c.subset_size();
  doc["k"] = c.color_count();
  doc["colors"] = one_based(c.colors());
  return doc;
}

json encode(const SignColoring& x) {
  json doc = header("sign-coloring");
  doc["n"] = x.size();
  json values = json::array();
  for (auto v : x.values()) values.push_back(static_cast<int>(v));
  doc["x"] = std::move(values);
  return doc;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw_invalid(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t count_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw_invalid(std::string("field '") + name + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

const json& array_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw_invalid(std::string("field '") + name + "' must be an array");
  return v;
}

// 1-based index in [1, bound], returned 0-based.
std::size_t index_value(const json& v, std::uint64_t bound, const char* what) {
  if (!v.is_number_integer()) throw_invalid(std::string(what) + " must be an integer");
  const auto i = v.get<std::int64_t>();
  if (i < 1 || static_cast<std::uint64_t>(i) > bound)
    throw_invalid(std::string(what) + " " + std::to_string(i) + " outside [1, " + std::to_string(bound) + "]");
  return static_cast<std::size_t>(i - 1);
}

std::vector<std::uint32_t> decode_colors(const json& doc, std::uint64_t k, std::uint64_t expected) {
  const json& colors = array_field(doc, "colors");
  if (colors.size() != expected)
    throw_invalid("expected " + std::to_string(expected) + " colors, found " + std::to_string(colors.size()));
  std::vector<std::uint32_t> out;
  out.reserve(colors.size());
  for (const auto& q : colors) out.push_back(static_cast<std::uint32_t>(index_value(q, k, "color")));
  return out;
}

Instance decode(const json& doc) {
  if (!doc.is_object()) throw_invalid("instance document must be a JSON object");
  const json& format = field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kInstanceFormat)
    throw_invalid(std::string("unsupported format tag; expected '") + kInstanceFormat + "'");
  const json& version = field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != kInstanceVersion)
    throw_invalid("unsupported instance version");
  const json& kind_value = field(doc, "kind");
  if (!kind_value.is_string()) throw_invalid("field 'kind' must be a string");
  const std::string kind = kind_value.get<std::string>();

  if (kind == "set-system") {
    const auto n = count_field(doc, "n");
    std::vector<Bitset> sets;
    for (const auto& members : array_field(doc, "sets")) {
      if (!members.is_array()) throw_invalid("each set must be an array of indices");
      Bitset b(n);
      for (const auto& e : members) b.set(index_value(e, n, "set element"));
      sets.push_back(std::move(b));
    }
    return SetSystem(n, std::move(sets));
  }
  if (kind == "graph") {
    const auto r = count_field(doc, "r");
    Graph g(r);
    for (const auto& e : array_field(doc, "edges")) {
      if (!e.is_array() || e.size() != 2) throw_invalid("each edge must be a pair of vertices");
      const auto i = index_value(e[0], r, "vertex");
      const auto j = index_value(e[1], r, "vertex");
      if (i == j) throw_invalid("loop on vertex " + std::to_string(i + 1));
      g.add_edge(i, j);
    }
    return g;
  }
  if (kind == "edge-coloring") {
    const auto r = count_field(doc, "r");
    const auto k = count_field(doc, "k");
    if (k < 1) throw_invalid("k must be positive");
    return EdgeColoring(r, static_cast<std::uint32_t>(k), decode_colors(doc, k, pair_count(r)));
  }
  if (kind == "subset-coloring") {
    const auto m = count_field(doc, "m");
    const auto l = count_field(doc, "l");
    const auto k = count_field(doc, "k");
    if (k < 1 || l < 1) throw_invalid("k and l must be positive");
    SubsetRanker ranker(m, l);
    return SubsetColoring(m, l, static_cast<std::uint32_t>(k), decode_colors(doc, k, ranker.subset_count()));
  }
  if (kind == "sign-coloring") {
    const auto n = count_field(doc, "n");
    const json& x = array_field(doc, "x");
    if (x.size() != n) throw_invalid("sign coloring length differs from n");
    std::vector<std::int8_t> values;
    for (const auto& v : x) {
      if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
        throw_invalid("sign coloring entries must be +1 or -1");
      values.push_back(static_cast<std::int8_t>(v.get<int>()));
    }
    return SignColoring(std::move(values));
  }
  throw_invalid("unknown instance kind '" + kind + "'");
}

}  // namespace

json to_json(const Instance& instance) {
  return std::visit([](const auto& obj) { return encode(obj); }, instance);
}

Instance instance_from_json(const json& doc) {
  try {
    return decode(doc);
  } catch (const json::exception& e) {
    throw_invalid(std::string("malformed instance: ") + e.what());
  }
}

std::string kind_name(const Instance& instance) {
  static constexpr const char* kNames[] = {"set-system", "graph", "edge-coloring", "subset-coloring", "sign-coloring"};
  return kNames[instance.index()];
}

void write_instance_file(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw_invalid("cannot open " + path.string() + " for writing");
  out << to_json(instance).dump(1) << '\n';
  if (!out) throw_invalid("failed writing " + path.string());
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_invalid("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw_invalid(path.string() + ": " + e.what());
  }
  return instance_from_json(doc);
}

}  // namespace erdos
