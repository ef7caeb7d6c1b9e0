#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "erdos/core.hpp"

namespace erdos {

/// Caps on exhaustive enumeration. Enumeration is split into chunks by fixing the top
/// prefix bits of the search word; chunk results are reduced in chunk order, so results
/// do not depend on `threads`.
struct EnumerationLimits {
  std::size_t max_ground_size = 28;  // 2^n sign vectors
  std::size_t max_graph_bits = 30;   // 2^C(r,2) graphs
  unsigned threads = 0;              // 0: default_parallelism()
};

enum class CountMode { Enumerate, ClosedForm };

/// #{x in {-1,1}^n : delta_M(x) >= a}, where n = set.size().
/// ClosedForm is 2^(n-|M|) * sum_{j : 2j-|M| >= a} C(|M|, j) and has no size cap.
mpz_class count_bad_colorings(const Bitset& set, std::int64_t a, CountMode mode, const EnumerationLimits& limits = {});

struct ExceedingCount {
  std::uint64_t count = 0;             // #{x : some |delta_{M_k}(x)| >= a}
  std::vector<std::uint64_t> per_set;  // #{x : |delta_{M_k}(x)| >= a} for each k
};

ExceedingCount count_exceeding_colorings(const SetSystem& system, std::int64_t a, const EnumerationLimits& limits = {});

struct DiscrepancyOptimum {
  std::uint64_t value = 0;
  /// Lexicographically first optimal coloring, ordering +1 before -1 with x_1 most significant.
  SignColoring witness;
};

DiscrepancyOptimum min_max_discrepancy(const SetSystem& system, const EnumerationLimits& limits = {});

struct RamseyCount {
  std::uint64_t ramsey = 0;  // graphs with an n-clique or an n-anticlique
  std::uint64_t total = 0;   // 2^C(r,2)
};

RamseyCount count_ramsey_graphs(std::size_t r, std::size_t n, const EnumerationLimits& limits = {});

}  // namespace erdos
