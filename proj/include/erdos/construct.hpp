#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "erdos/core.hpp"
#include "erdos/rng.hpp"

namespace erdos {

struct TrialOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 1000;
  unsigned threads = 0;  // 0: default_parallelism()
};

struct TrialFailure {
  std::uint64_t trial = 0;
  std::string reason;
  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

/// Outcome of a seeded Las Vegas run. A witness, when present, has passed certificate
/// verification; it comes from the smallest successful trial index regardless of threads.
template <class Witness>
struct TrialReport {
  std::uint64_t seed = 0;
  std::uint64_t trials_run = 0;
  std::optional<Witness> witness;
  std::vector<TrialFailure> failures;  // one per failed trial, in trial order

  bool success() const noexcept { return witness.has_value(); }
  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

struct LowDiscrepancyReport : TrialReport<SignColoring> {
  std::int64_t a = 0;
  /// Successes over trials run.
  double success_rate = 0;
  friend bool operator==(const LowDiscrepancyReport&, const LowDiscrepancyReport&) = default;
};

inline constexpr std::size_t kDefaultVertexCap = 64;
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 20;

// ---- samplers; these fix the stream-consumption order ----

/// Colors the pairs in lexicographic order with stream.below(k).
EdgeColoring sample_edge_coloring(std::size_t r, std::uint32_t k, TrialStream& stream);
/// Colors the l-subsets in lexicographic order with stream.below(k).
SubsetColoring sample_subset_coloring(std::size_t m, std::size_t l, std::uint32_t k, TrialStream& stream);
/// Element i is red (+1) iff its bit is 1, elements in index order.
SignColoring sample_sign_coloring(std::size_t n, TrialStream& stream);
/// Two-color edge sample; an edge is present where the pair drew color 0.
Graph sample_graph(std::size_t r, TrialStream& stream);

// ---- constructors ----

/// Graph on r vertices (default 2^floor((n-2)/2)) with neither an n-clique nor an n-anticlique.
TrialReport<Graph> find_ramsey_graph(std::size_t n, std::optional<std::size_t> r, const TrialOptions& options = {},
                                     std::size_t vertex_cap = kDefaultVertexCap);

/// k-coloring of K_r (default r = k^floor((n-2)/2)) without a monochromatic n-clique.
/// k = 1 is rejected unless allow_single_color is set.
TrialReport<EdgeColoring> find_multicolor_coloring(std::size_t n, std::uint32_t k, std::optional<std::size_t> r,
                                                   const TrialOptions& options = {},
                                                   std::size_t vertex_cap = kDefaultVertexCap,
                                                   bool allow_single_color = false);

/// k-coloring of the l-subsets of [m] (default m = k^floor((n-l+1)^(l-1)/l!)) without a
/// monochromatic n-hyperclique. C(m, l) is capped by subset_cap.
TrialReport<SubsetColoring> find_hypergraph_coloring(std::size_t n, std::uint32_t k, std::size_t l,
                                                     std::optional<std::size_t> m, const TrialOptions& options = {},
                                                     std::uint64_t subset_cap = kDefaultSubsetCap);

/// Coloring with |delta_{M_k}(x)| < a for every set. a defaults to discrepancy_guarantee(n, s)
/// (1 for an empty family).
LowDiscrepancyReport find_low_discrepancy_coloring(const SetSystem& system, std::optional<std::int64_t> a,
                                                   const TrialOptions& options = {});

/// s subsets of [n]: uniform subsets of the given size, or each element included with
/// probability 1/2 when set_size is absent. Set k is drawn from TrialStream(seed, k).
SetSystem random_set_system(std::size_t n, std::size_t s, std::optional<std::size_t> set_size, std::uint64_t seed);

}  // namespace erdos
