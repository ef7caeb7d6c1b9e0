#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "erdos/magnitude.hpp"

namespace erdos {

/// Above this many bits, big-integer evaluation gives way to directed-rounding log2 arithmetic.
inline constexpr std::uint64_t kDefaultExactBitCap = 10'000'000;

// ---- Ramsey-type sizes guaranteed by the counting argument ----

/// 2^floor((n-2)/2): vertex count of a graph with neither an n-clique nor an n-anticlique.
Magnitude erdos_graph_bound(std::uint64_t n, std::uint64_t exact_bit_cap = kDefaultExactBitCap);

/// k^floor((n-2)/2): vertex count of a k-edge-colored complete graph without a monochromatic n-clique.
Magnitude erdos_multicolor_bound(std::uint64_t n, std::uint64_t k, std::uint64_t exact_bit_cap = kDefaultExactBitCap);

/// floor((n-l+1)^(l-1) / l!), in exact integer arithmetic.
mpz_class hypergraph_exponent(std::uint64_t n, std::uint64_t l);

/// k^floor((n-l+1)^(l-1)/l!): ground-set size admitting an l-subset coloring without a
/// monochromatic n-hyperclique.
///
/// The result is exact unless it would exceed exact_bit_cap bits and k is not a power of two;
/// in that case a lower-rounded log2 is returned.
Magnitude erdos_hypergraph_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l,
                                 std::uint64_t exact_bit_cap = kDefaultExactBitCap);

// ---- discrepancy ----

/// Decides 2^(a^2) >= (2s)^(2n). Exact when the operands fit under exact_bit_cap bits; otherwise
/// directed-rounding log2 bounds, falling back to exact arithmetic when they do not separate.
bool discrepancy_condition(std::uint64_t n, std::uint64_t s, std::uint64_t a,
                           std::uint64_t exact_bit_cap = kDefaultExactBitCap);

/// Smallest positive a with 2^(a^2) >= (2s)^(2n).
std::uint64_t discrepancy_guarantee(std::uint64_t n, std::uint64_t s,
                                    std::uint64_t exact_bit_cap = kDefaultExactBitCap);

// ---- Markov / Chernoff ----

struct MarkovBound {
  double bound = 0;        // (w_1 + ... + w_s) / a
  std::size_t count = 0;   // #{i : w_i >= a}
};

MarkovBound markov_count_bound(std::span<const double> weights, double a);

struct ChernoffBound {
  double lambda = 0;
  /// e^(-lambda a) 2^n ((e^lambda + e^-lambda)/2)^m, rounded upward.
  double value = 0;
  double value_log2 = 0;
  /// 2^n e^(m lambda^2/2 - lambda a) and the same with m relaxed to n.
  double gaussian_m = 0;
  double gaussian_n = 0;
  /// 2^(n - a^2/(2n)).
  double closed_form = 0;
  double closed_form_log2 = 0;
};

/// Bound on #{x in {-1,1}^n : delta_M(x) >= a} for |M| = m. lambda defaults to a/n.
ChernoffBound chernoff_count_bound(std::uint64_t n, std::uint64_t m, double a,
                                   std::optional<double> lambda = std::nullopt);

struct CoshMargin {
  bool holds = false;        // cosh(lambda) < e^(lambda^2/2), certified
  double relative_margin = 0;  // (e^(lambda^2/2) - cosh(lambda)) / cosh(lambda), rounded down
};

/// Certifies cosh(lambda) < e^(lambda^2/2) with 256-bit directed rounding.
CoshMargin cosh_gaussian_margin(double lambda);

/// Exact test of count < multiplier * 2^(n - a^2/(2n)), done as
/// count^(2n) < multiplier^(2n) * 2^(2n^2 - a^2).
bool below_tail_bound(const mpz_class& count, std::uint64_t n, std::uint64_t a, std::uint64_t multiplier = 1);

// ---- union bounds for the Ramsey counting arguments ----

enum class ArithmeticMode { Auto, Exact, Log2 };

struct BadCountBound {
  Magnitude bad_bound;  // union bound on the number of bad objects
  Magnitude total;      // number of all objects
  Verdict verdict = Verdict::Indeterminate;  // bad_bound < total
};

/// bad_bound = 2 C(r,n) 2^(C(r,2) - C(n,2)), total = 2^C(r,2). Requires 2 <= n <= r.
/// Log2 mode rounds bad_bound up through C(r,n) < r^n and total down.
BadCountBound ramsey_bad_count_bound(std::uint64_t r, std::uint64_t n, ArithmeticMode mode = ArithmeticMode::Auto,
                                     std::uint64_t exact_bit_cap = kDefaultExactBitCap);

/// bad_bound = 2 C(m,n) 2^(C(m,l) - C(n,l)), total = 2^C(m,l). Requires 1 <= l <= n <= m.
BadCountBound hypergraph_bad_count_bound(std::uint64_t m, std::uint64_t n, std::uint64_t l,
                                         ArithmeticMode mode = ArithmeticMode::Auto,
                                         std::uint64_t exact_bit_cap = kDefaultExactBitCap);

}  // namespace erdos
