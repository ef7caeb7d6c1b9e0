#include "erdos/construct.hpp"

#include <gmpxx.h>

#include <limits>
#include <numeric>
#include <stdexcept>

#include "erdos/bounds.hpp"
#include "erdos/error.hpp"
#include "erdos/parallel.hpp"

namespace erdos {

EdgeColoring sample_edge_coloring(std::size_t r, std::uint32_t k, TrialStream& stream) {
  std::vector<std::uint32_t> colors(pair_count(r));
  for (auto& q : colors) q = stream.below(k);
  return EdgeColoring(r, k, std::move(colors));
}

SubsetColoring sample_subset_coloring(std::size_t m, std::size_t l, std::uint32_t k, TrialStream& stream) {
  std::vector<std::uint32_t> colors(SubsetRanker(m, l).subset_count());
  for (auto& q : colors) q = stream.below(k);
  return SubsetColoring(m, l, k, std::move(colors));
}

SignColoring sample_sign_coloring(std::size_t n, TrialStream& stream) {
  std::vector<std::int8_t> x(n);
  for (auto& v : x) v = stream.bit() ? 1 : -1;
  return SignColoring(std::move(x));
}

Graph sample_graph(std::size_t r, TrialStream& stream) { return sample_edge_coloring(r, 2, stream).color_class(0); }

namespace {

template <class W>
struct Attempt {
  std::optional<W> witness;
  std::string reason;
};

// Runs trials in batches of `threads`; the smallest successful index wins, so the report
// does not depend on the degree of parallelism.
template <class W, class Try>
TrialReport<W> run_trials(const TrialOptions& options, Try&& attempt) {
  TrialReport<W> report;
  report.seed = options.seed;
  const unsigned threads = options.threads == 0 ? default_parallelism() : options.threads;
  std::uint64_t next = 0;
  while (next < options.max_trials) {
    const std::uint64_t batch = std::min<std::uint64_t>(threads, options.max_trials - next);
    std::vector<Attempt<W>> results(batch);
    parallel_for(batch, threads, [&](std::size_t i) {
      TrialStream stream(options.seed, next + i);
      results[i] = attempt(stream);
    });
    for (std::uint64_t i = 0; i < batch; ++i) {
      report.trials_run = next + i + 1;
      if (results[i].witness) {
        report.witness = std::move(results[i].witness);
        return report;
      }
      report.failures.push_back({next + i, std::move(results[i].reason)});
    }
    next += batch;
  }
  return report;
}

void assert_certified(const Verification& v) {
  if (!v.ok) throw std::logic_error("constructor produced an invalid certificate: " + v.reason);
}

std::size_t default_size(const Magnitude& bound, std::uint64_t cap, const char* what) {
  auto value = bound.to_integer(64);
  if (!value || *value > cap)
    throw_resource(std::string(what) + " " + bound.describe(40) + " exceeds the practicality cap of " +
                   std::to_string(cap));
  return static_cast<std::size_t>(value->get_ui());
}

void check_vertex_cap(std::size_t r, std::size_t cap) {
  if (r > cap) throw_resource("vertex count " + std::to_string(r) + " exceeds the practicality cap of " + std::to_string(cap));
}

}  // namespace

TrialReport<Graph> find_ramsey_graph(std::size_t n, std::optional<std::size_t> r, const TrialOptions& options,
                                     std::size_t vertex_cap) {
  if (n < 2) throw_invalid("Ramsey graph construction needs n >= 2");
  const std::size_t order = r ? *r : default_size(erdos_graph_bound(n), vertex_cap, "vertex count");
  check_vertex_cap(order, vertex_cap);
  auto report = run_trials<Graph>(options, [&](TrialStream& stream) {
    Graph g = sample_graph(order, stream);
    auto v = verify_ramsey_graph(g, n);
    if (!v.ok) return Attempt<Graph>{std::nullopt, v.reason};
    return Attempt<Graph>{std::move(g), {}};
  });
  if (report.witness) assert_certified(verify_certificate(CertificateKind::RamseyGraph, std::cref(*report.witness), {n}));
  return report;
}

TrialReport<EdgeColoring> find_multicolor_coloring(std::size_t n, std::uint32_t k, std::optional<std::size_t> r,
                                                   const TrialOptions& options, std::size_t vertex_cap,
                                                   bool allow_single_color) {
  if (n < 2) throw_invalid("multicolor construction needs n >= 2");
  if (k == 0 || (k == 1 && !allow_single_color)) throw_invalid("multicolor construction needs k >= 2");
  std::size_t order = 0;
  if (r) {
    order = *r;
  } else {
    if (k < 2) throw_invalid("a default vertex count needs k >= 2");
    order = default_size(erdos_multicolor_bound(n, k), vertex_cap, "vertex count");
  }
  check_vertex_cap(order, vertex_cap);
  auto report = run_trials<EdgeColoring>(options, [&](TrialStream& stream) {
    EdgeColoring c = sample_edge_coloring(order, k, stream);
    auto v = verify_multicolor(c, n);
    if (!v.ok) return Attempt<EdgeColoring>{std::nullopt, v.reason};
    return Attempt<EdgeColoring>{std::move(c), {}};
  });
  if (report.witness) assert_certified(verify_certificate(CertificateKind::Multicolor, std::cref(*report.witness), {n}));
  return report;
}

TrialReport<SubsetColoring> find_hypergraph_coloring(std::size_t n, std::uint32_t k, std::size_t l,
                                                     std::optional<std::size_t> m, const TrialOptions& options,
                                                     std::uint64_t subset_cap) {
  if (l < 1 || n < l) throw_invalid("hypergraph construction needs n >= l >= 1");
  if (k < 2) throw_invalid("hypergraph construction needs k >= 2");
  const std::size_t ground =
      m ? *m : default_size(erdos_hypergraph_bound(n, k, l), std::numeric_limits<std::uint32_t>::max(), "ground-set size");
  mpz_class subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), ground, l);
  if (subsets > mpz_class(static_cast<unsigned long>(subset_cap)))
    throw_resource("C(" + std::to_string(ground) + "," + std::to_string(l) + ") = " + subsets.get_str() +
                   " subsets exceeds the practicality cap of " + std::to_string(subset_cap));
  auto report = run_trials<SubsetColoring>(options, [&](TrialStream& stream) {
    SubsetColoring c = sample_subset_coloring(ground, l, k, stream);
    auto v = verify_hyper(c, n);
    if (!v.ok) return Attempt<SubsetColoring>{std::nullopt, v.reason};
    return Attempt<SubsetColoring>{std::move(c), {}};
  });
  if (report.witness) assert_certified(verify_certificate(CertificateKind::Hyper, std::cref(*report.witness), {n}));
  return report;
}

LowDiscrepancyReport find_low_discrepancy_coloring(const SetSystem& system, std::optional<std::int64_t> a,
                                                   const TrialOptions& options) {
  const std::int64_t threshold =
      a ? *a : (system.size() == 0 ? 1 : static_cast<std::int64_t>(discrepancy_guarantee(system.n, system.size())));
  if (threshold < 1) throw_invalid("deviation a must be positive");

  auto base = run_trials<SignColoring>(options, [&](TrialStream& stream) {
    SignColoring x = sample_sign_coloring(system.n, stream);
    // Report the worst set (first on ties).
    std::int64_t worst = -1;
    std::size_t worst_k = 0;
    for (std::size_t k = 0; k < system.size(); ++k) {
      auto d = delta(system.sets[k], x);
      if (d < 0) d = -d;
      if (d > worst) worst = d, worst_k = k;
    }
    if (worst >= threshold)
      return Attempt<SignColoring>{std::nullopt, "set M_" + std::to_string(worst_k + 1) + " has |delta| = " +
                                                     std::to_string(worst) + " >= a = " + std::to_string(threshold)};
    return Attempt<SignColoring>{std::move(x), {}};
  });

  LowDiscrepancyReport report;
  static_cast<TrialReport<SignColoring>&>(report) = std::move(base);
  report.a = threshold;
  report.success_rate =
      report.trials_run == 0 ? 0.0 : (report.success() ? 1.0 : 0.0) / static_cast<double>(report.trials_run);
  if (report.witness) {
    CertificateParams params;
    params.a = threshold;
    params.system = &system;
    assert_certified(verify_certificate(CertificateKind::Discrepancy, std::cref(*report.witness), params));
  }
  return report;
}

SetSystem random_set_system(std::size_t n, std::size_t s, std::optional<std::size_t> set_size, std::uint64_t seed) {
  if (set_size && *set_size > n) throw_invalid("set size exceeds the ground set");
  std::vector<Bitset> sets;
  sets.reserve(s);
  std::vector<std::size_t> pool(n);
  for (std::size_t k = 0; k < s; ++k) {
    TrialStream stream(seed, k);
    Bitset b(n);
    if (set_size) {
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      for (std::size_t i = 0; i < *set_size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(stream.below64(n - i));
        std::swap(pool[i], pool[j]);
        b.set(pool[i]);
      }
    } else {
      for (std::size_t e = 0; e < n; ++e)
        if (stream.bit()) b.set(e);
    }
    sets.push_back(std::move(b));
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace erdos
