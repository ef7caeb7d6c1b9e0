#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "erdos/bitset.hpp"

// Vertices, ground-set elements and colors are 0-based throughout the library.
// The 1-based convention of the external formats is handled in the CLI layer.

namespace erdos {

/// Simple undirected graph on r labeled vertices, stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t r);

  static Graph complete(std::size_t r);
  static Graph cycle(std::size_t r);

  std::size_t order() const noexcept { return rows_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const Bitset& neighbors(std::size_t i) const { return rows_[i]; }

  void set_edge(std::size_t i, std::size_t j, bool present);
  void add_edge(std::size_t i, std::size_t j) { set_edge(i, j, true); }

  Graph complement() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> rows_;
};

/// Number of unordered pairs of r elements.
constexpr std::uint64_t pair_count(std::uint64_t r) { return r < 2 ? 0 : r * (r - 1) / 2; }

/// Position of the pair {i, j} (i != j) in lexicographic pair order
/// {0,1}, {0,2}, ..., {0,r-1}, {1,2}, ...
std::uint64_t pair_index(std::size_t r, std::size_t i, std::size_t j);

/// k-coloring of the edges of the complete graph K_r; colors are 0..k-1.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// All edges get color 0.
  EdgeColoring(std::size_t r, std::uint32_t k);
  /// colors given in lexicographic pair order.
  EdgeColoring(std::size_t r, std::uint32_t k, std::vector<std::uint32_t> colors);

  /// Edge present -> color 0, absent -> color 1.
  static EdgeColoring from_graph(const Graph& g);

  std::size_t order() const noexcept { return r_; }
  std::uint32_t color_count() const noexcept { return k_; }
  std::uint32_t color(std::size_t i, std::size_t j) const { return colors_[pair_index(r_, i, j)]; }
  void set_color(std::size_t i, std::size_t j, std::uint32_t q);
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

  /// Graph whose edges are exactly the pairs of color q.
  Graph color_class(std::uint32_t q) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t r_ = 0;
  std::uint32_t k_ = 2;
  std::vector<std::uint32_t> colors_;
};

/// Lexicographic ranking of the l-subsets of {0..m-1}.
class SubsetRanker {
 public:
  SubsetRanker() = default;
  /// Throws resource-limit when C(m, l) does not fit in 64 bits.
  SubsetRanker(std::size_t m, std::size_t l);

  std::size_t ground_size() const noexcept { return m_; }
  std::size_t subset_size() const noexcept { return l_; }
  std::uint64_t subset_count() const noexcept { return total_; }

  /// Rank of a strictly increasing subset of size l.
  std::uint64_t rank(std::span<const std::size_t> subset) const;

  /// Advances a strictly increasing l-subset to its lexicographic successor.
  /// Returns false after the last subset.
  bool next(std::vector<std::size_t>& subset) const;

 private:
  std::uint64_t binom(std::size_t t, std::size_t j) const { return table_[t * (l_ + 1) + j]; }

  std::size_t m_ = 0;
  std::size_t l_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> table_;
};

/// k-coloring of all l-subsets of {0..m-1}; colors stored in lexicographic subset order.
class SubsetColoring {
 public:
  SubsetColoring() = default;
  SubsetColoring(std::size_t m, std::size_t l, std::uint32_t k);
  SubsetColoring(std::size_t m, std::size_t l, std::uint32_t k, std::vector<std::uint32_t> colors);

  std::size_t ground_size() const noexcept { return ranker_.ground_size(); }
  std::size_t subset_size() const noexcept { return ranker_.subset_size(); }
  std::uint32_t color_count() const noexcept { return k_; }
  const SubsetRanker& ranker() const noexcept { return ranker_; }
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

  std::uint32_t color(std::span<const std::size_t> subset) const { return colors_[ranker_.rank(subset)]; }
  void set_color(std::span<const std::size_t> subset, std::uint32_t q);

  friend bool operator==(const SubsetColoring& a, const SubsetColoring& b) {
    return a.ground_size() == b.ground_size() && a.subset_size() == b.subset_size() && a.k_ == b.k_ &&
           a.colors_ == b.colors_;
  }

 private:
  SubsetRanker ranker_;
  std::uint32_t k_ = 2;
  std::vector<std::uint32_t> colors_;
};

/// Family M_1..M_s of subsets of a ground set of size n.
struct SetSystem {
  std::size_t n = 0;
  std::vector<Bitset> sets;

  SetSystem() = default;
  SetSystem(std::size_t n, std::vector<Bitset> sets);
  SetSystem(std::size_t n, const std::vector<std::vector<std::size_t>>& members);

  std::size_t size() const noexcept { return sets.size(); }
  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Red/blue coloring of the ground set; red is +1, blue is -1.
class SignColoring {
 public:
  SignColoring() = default;
  /// All red.
  explicit SignColoring(std::size_t n) : x_(n, 1) {}
  explicit SignColoring(std::vector<std::int8_t> x);

  std::size_t size() const noexcept { return x_.size(); }
  std::int8_t operator[](std::size_t i) const { return x_[i]; }
  void set(std::size_t i, std::int8_t v);
  const std::vector<std::int8_t>& values() const noexcept { return x_; }
  SignColoring negated() const;

  friend bool operator==(const SignColoring&, const SignColoring&) = default;

 private:
  std::vector<std::int8_t> x_;
};

// ---- discrepancy ----

/// Sum of x over M, i.e. #red(M) - #blue(M).
std::int64_t delta(const Bitset& set, const SignColoring& x);

/// max_k |delta(M_k, x)|, 0 for an empty family.
std::uint64_t max_abs_discrepancy(const SetSystem& system, const SignColoring& x);

// ---- clique detection ----

/// Lexicographically first n-clique, if any.
std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t n);
std::optional<std::vector<std::size_t>> find_anticlique(const Graph& g, std::size_t n);
inline bool has_clique(const Graph& g, std::size_t n) { return find_clique(g, n).has_value(); }
inline bool has_anticlique(const Graph& g, std::size_t n) { return find_anticlique(g, n).has_value(); }

/// Clique/anticlique test on a graph of at most 64 vertices given as one adjacency word per row.
/// Hot path for exhaustive enumeration.
bool has_clique_small(std::span<const std::uint64_t> rows, std::size_t n);

struct MonochromaticSet {
  std::uint32_t color = 0;
  std::vector<std::size_t> vertices;
  friend bool operator==(const MonochromaticSet&, const MonochromaticSet&) = default;
};

/// Lexicographically first (color, vertex set) spanning a monochromatic n-clique.
std::optional<MonochromaticSet> find_monochromatic_clique(const EdgeColoring& c, std::size_t n);

/// Lexicographically first (color, n-set S) with every l-subset of S of that color.
/// Throws invalid-input when n < l.
std::optional<MonochromaticSet> find_monochromatic_hyperclique(const SubsetColoring& c, std::size_t n);

// ---- certificates ----

enum class CertificateKind { RamseyGraph, Multicolor, Hyper, Discrepancy };

struct Verification {
  bool ok = false;
  std::string reason;  // empty when ok
};

Verification verify_ramsey_graph(const Graph& g, std::size_t n);
Verification verify_multicolor(const EdgeColoring& c, std::size_t n);
Verification verify_hyper(const SubsetColoring& c, std::size_t n);
/// Holds when every set has |delta| < a.
Verification verify_discrepancy(const SetSystem& system, const SignColoring& x, std::int64_t a);

using CertificateRef = std::variant<std::reference_wrapper<const Graph>, std::reference_wrapper<const EdgeColoring>,
                                    std::reference_wrapper<const SubsetColoring>,
                                    std::reference_wrapper<const SignColoring>>;

struct CertificateParams {
  std::size_t n = 0;
  std::int64_t a = 0;
  const SetSystem* system = nullptr;  // required for Discrepancy
};

/// Dispatches on kind; throws invalid-input if the object type or parameters do not match it.
Verification verify_certificate(CertificateKind kind, CertificateRef object, const CertificateParams& params);

std::string to_string(CertificateKind kind);
/// Formats a 0-based vertex list as a 1-based set, e.g. "{1,2,3}".
std::string format_vertex_set(std::span<const std::size_t> vertices);

}  // namespace erdos
