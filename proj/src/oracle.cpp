#include "erdos/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "erdos/error.hpp"
#include "erdos/parallel.hpp"

namespace erdos {

namespace {

constexpr unsigned kMaxPrefixBits = 10;

void check_ground_size(std::size_t n, const EnumerationLimits& limits) {
  if (n > limits.max_ground_size || n > 62)
    throw_resource("enumeration of 2^" + std::to_string(n) + " colorings exceeds the cap of 2^" +
                   std::to_string(std::min<std::size_t>(limits.max_ground_size, 62)));
}

struct Split {
  unsigned prefix_bits;
  unsigned low_bits;
  std::uint64_t chunks() const { return std::uint64_t{1} << prefix_bits; }
};

Split split_word(std::size_t bits) {
  const unsigned p = static_cast<unsigned>(std::min<std::size_t>(bits, kMaxPrefixBits));
  return {p, static_cast<unsigned>(bits) - p};
}

// Walks the colorings of one chunk in Gray-code order, keeping every delta_{M_k} current.
// Search-word bit b is element n-1-b and a set bit means blue (-1), so word order is the
// lexicographic order on colorings with +1 before -1.
class DeltaWalker {
 public:
  DeltaWalker(const SetSystem& system, std::int64_t a)
      : n_(system.n), a_(a), sets_at_bit_(system.n), delta_(system.size(), 0), hist_(system.n + 1, 0) {
    for (std::size_t k = 0; k < system.size(); ++k)
      for (std::size_t e : system.sets[k].members()) sets_at_bit_[n_ - 1 - e].push_back(static_cast<std::uint32_t>(k));
  }

  void reset(std::uint64_t word) {
    std::fill(delta_.begin(), delta_.end(), 0);
    std::fill(hist_.begin(), hist_.end(), 0);
    for (std::size_t b = 0; b < n_; ++b) {
      const int sign = (word >> b) & 1 ? -1 : 1;
      for (auto k : sets_at_bit_[b]) delta_[k] += sign;
    }
    violating_ = 0;
    max_ = 0;
    for (auto d : delta_) add(magnitude(d));
  }

  // Toggles bit b; `now_blue` is its new value.
  void flip(unsigned b, bool now_blue) {
    const int step = now_blue ? -2 : 2;
    for (auto k : sets_at_bit_[b]) {
      remove(magnitude(delta_[k]));
      delta_[k] += step;
      add(magnitude(delta_[k]));
    }
    while (max_ > 0 && hist_[max_] == 0) --max_;
  }

  std::uint64_t violating() const { return violating_; }
  std::uint64_t max_abs() const { return max_; }

 private:
  static std::size_t magnitude(std::int64_t d) { return static_cast<std::size_t>(d < 0 ? -d : d); }

  void add(std::size_t m) {
    ++hist_[m];
    if (static_cast<std::int64_t>(m) >= a_) ++violating_;
    max_ = std::max<std::uint64_t>(max_, m);
  }

  void remove(std::size_t m) {
    --hist_[m];
    if (static_cast<std::int64_t>(m) >= a_) --violating_;
  }

  std::size_t n_;
  std::int64_t a_;
  std::vector<std::vector<std::uint32_t>> sets_at_bit_;
  std::vector<std::int64_t> delta_;
  std::vector<std::uint64_t> hist_;
  std::uint64_t violating_ = 0;
  std::uint64_t max_ = 0;
};

// Visits every word of chunk c in Gray order; visit(walker, word) after each state change.
template <class Visit>
void walk_chunk(DeltaWalker& walker, const Split& split, std::uint64_t c, Visit&& visit) {
  std::uint64_t word = c << split.low_bits;
  walker.reset(word);
  visit(walker, word);
  const std::uint64_t steps = std::uint64_t{1} << split.low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const unsigned b = static_cast<unsigned>(std::countr_zero(i));
    word ^= std::uint64_t{1} << b;
    walker.flip(b, (word >> b) & 1);
    visit(walker, word);
  }
}

}  // namespace

mpz_class count_bad_colorings(const Bitset& set, std::int64_t a, CountMode mode, const EnumerationLimits& limits) {
  if (a < 1) throw_invalid("deviation a must be a positive integer");
  const std::size_t n = set.size();
  const std::size_t size = set.count();

  if (mode == CountMode::ClosedForm) {
    mpz_class sum = 0;
    for (std::size_t j = 0; j <= size; ++j) {
      if (2 * static_cast<std::int64_t>(j) - static_cast<std::int64_t>(size) < a) continue;
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), size, j);
      sum += c;
    }
    sum <<= static_cast<mp_bitcnt_t>(n - size);
    return sum;
  }

  check_ground_size(n, limits);
  const std::uint64_t mask = n == 0 ? 0 : set.word(0);
  const auto msize = static_cast<std::int64_t>(size);
  const Split split = split_word(n);
  std::vector<std::uint64_t> partial(split.chunks(), 0);
  parallel_for(split.chunks(), limits.threads, [&](std::size_t c) {
    // Here a set bit means red.
    const std::uint64_t base = static_cast<std::uint64_t>(c) << split.low_bits;
    const std::uint64_t steps = std::uint64_t{1} << split.low_bits;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < steps; ++i) {
      const auto red = static_cast<std::int64_t>(std::popcount((base | i) & mask));
      if (2 * red - msize >= a) ++hits;
    }
    partial[c] = hits;
  });
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return mpz_class(static_cast<unsigned long>(total));
}

ExceedingCount count_exceeding_colorings(const SetSystem& system, std::int64_t a, const EnumerationLimits& limits) {
  if (a < 1) throw_invalid("deviation a must be a positive integer");
  check_ground_size(system.n, limits);
  const Split split = split_word(system.n);
  std::vector<std::uint64_t> partial(split.chunks(), 0);
  parallel_for(split.chunks(), limits.threads, [&](std::size_t c) {
    DeltaWalker walker(system, a);
    std::uint64_t bad = 0;
    walk_chunk(walker, split, c, [&](const DeltaWalker& w, std::uint64_t) { bad += w.violating() > 0; });
    partial[c] = bad;
  });

  ExceedingCount out;
  for (auto p : partial) out.count += p;
  out.per_set.reserve(system.size());
  for (const auto& m : system.sets) {
    // |delta| >= a splits into two disjoint tails of equal size.
    mpz_class one_sided = count_bad_colorings(m, a, CountMode::ClosedForm);
    out.per_set.push_back(2 * one_sided.get_ui());
  }
  return out;
}

DiscrepancyOptimum min_max_discrepancy(const SetSystem& system, const EnumerationLimits& limits) {
  check_ground_size(system.n, limits);
  const Split split = split_word(system.n);
  struct Best {
    std::uint64_t value = ~std::uint64_t{0};
    std::uint64_t word = 0;
  };
  std::vector<Best> partial(split.chunks());
  parallel_for(split.chunks(), limits.threads, [&](std::size_t c) {
    DeltaWalker walker(system, 1);
    Best best;
    walk_chunk(walker, split, c, [&](const DeltaWalker& w, std::uint64_t word) {
      const auto v = w.max_abs();
      if (v < best.value || (v == best.value && word < best.word)) best = {v, word};
    });
    partial[c] = best;
  });

  Best best;
  for (const auto& p : partial)
    if (p.value < best.value || (p.value == best.value && p.word < best.word)) best = p;

  std::vector<std::int8_t> x(system.n);
  for (std::size_t e = 0; e < system.n; ++e) x[e] = (best.word >> (system.n - 1 - e)) & 1 ? -1 : 1;
  return {best.value, SignColoring(std::move(x))};
}

RamseyCount count_ramsey_graphs(std::size_t r, std::size_t n, const EnumerationLimits& limits) {
  if (n == 0) throw_invalid("clique size must be positive");
  const std::uint64_t edges = pair_count(r);
  if (edges > limits.max_graph_bits || edges > 62 || r > 64)
    throw_resource("enumeration of 2^" + std::to_string(edges) + " graphs on " + std::to_string(r) +
                   " vertices exceeds the cap of 2^" + std::to_string(limits.max_graph_bits));

  RamseyCount out;
  out.total = std::uint64_t{1} << edges;
  if (n > r) return out;

  // Edge bit e is the e-th pair in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) ends.emplace_back(i, j);
  const std::uint64_t all = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;

  const Split split = split_word(edges);
  std::vector<std::uint64_t> partial(split.chunks(), 0);
  parallel_for(split.chunks(), limits.threads, [&](std::size_t c) {
    std::vector<std::uint64_t> rows(r, 0);
    std::vector<std::uint64_t> co_rows(r, 0);
    const std::uint64_t start = static_cast<std::uint64_t>(c) << split.low_bits;
    for (std::size_t e = 0; e < edges; ++e) {
      if ((start >> e) & 1) {
        rows[ends[e].first] |= std::uint64_t{1} << ends[e].second;
        rows[ends[e].second] |= std::uint64_t{1} << ends[e].first;
      }
    }
    auto ramsey = [&] {
      for (std::size_t i = 0; i < r; ++i) co_rows[i] = ~rows[i] & all & ~(std::uint64_t{1} << i);
      return has_clique_small(rows, n) || has_clique_small(co_rows, n);
    };
    std::uint64_t hits = ramsey();
    const std::uint64_t steps = std::uint64_t{1} << split.low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const auto e = static_cast<std::size_t>(std::countr_zero(i));
      rows[ends[e].first] ^= std::uint64_t{1} << ends[e].second;
      rows[ends[e].second] ^= std::uint64_t{1} << ends[e].first;
      hits += ramsey();
    }
    partial[c] = hits;
  });
  for (auto p : partial) out.ramsey += p;
  return out;
}

}  // namespace erdos
