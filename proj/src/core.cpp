#include "erdos/core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "erdos/error.hpp"

namespace erdos {

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t r) : rows_(r, Bitset(r)) {}

Graph Graph::complete(std::size_t r) {
  Graph g(r);
  for (std::size_t i = 0; i < r; ++i) {
    g.rows_[i] = Bitset::full(r);
    g.rows_[i].reset(i);
  }
  return g;
}

Graph Graph::cycle(std::size_t r) {
  Graph g(r);
  if (r >= 3)
    for (std::size_t i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
  return g;
}

void Graph::set_edge(std::size_t i, std::size_t j, bool present) {
  if (i >= order() || j >= order()) throw_invalid("vertex out of range");
  if (i == j) throw_invalid("loops are not allowed");
  rows_[i].assign(j, present);
  rows_[j].assign(i, present);
}

Graph Graph::complement() const {
  Graph out(order());
  for (std::size_t i = 0; i < order(); ++i) {
    out.rows_[i] = ~rows_[i];
    out.rows_[i].reset(i);
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::uint64_t pair_index(std::size_t r, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::uint64_t>(i) * (2 * r - i - 1) / 2 + (j - i - 1);
}

// ---------------------------------------------------------------- EdgeColoring

EdgeColoring::EdgeColoring(std::size_t r, std::uint32_t k) : r_(r), k_(k), colors_(pair_count(r), 0) {
  if (k == 0) throw_invalid("color count must be positive");
}

EdgeColoring::EdgeColoring(std::size_t r, std::uint32_t k, std::vector<std::uint32_t> colors)
    : r_(r), k_(k), colors_(std::move(colors)) {
  if (k == 0) throw_invalid("color count must be positive");
  if (colors_.size() != pair_count(r)) throw_invalid("edge coloring must list exactly C(r,2) colors");
  for (auto q : colors_)
    if (q >= k) throw_invalid("edge color out of range");
}

EdgeColoring EdgeColoring::from_graph(const Graph& g) {
  EdgeColoring c(g.order(), 2);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j) c.colors_[pair_index(c.r_, i, j)] = g.adjacent(i, j) ? 0 : 1;
  return c;
}

void EdgeColoring::set_color(std::size_t i, std::size_t j, std::uint32_t q) {
  if (i >= r_ || j >= r_ || i == j) throw_invalid("invalid edge");
  if (q >= k_) throw_invalid("edge color out of range");
  colors_[pair_index(r_, i, j)] = q;
}

Graph EdgeColoring::color_class(std::uint32_t q) const {
  Graph g(r_);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < r_; ++j, ++idx)
      if (colors_[idx] == q) g.add_edge(i, j);
  return g;
}

// ---------------------------------------------------------------- SubsetRanker

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

SubsetRanker::SubsetRanker(std::size_t m, std::size_t l) : m_(m), l_(l), table_((m + 1) * (l + 1), 0) {
  if (l == 0) throw_invalid("subset size must be at least 1");
  for (std::size_t t = 0; t <= m; ++t) {
    table_[t * (l + 1)] = 1;
    for (std::size_t j = 1; j <= l && j <= t; ++j)
      table_[t * (l + 1) + j] = saturating_add(table_[(t - 1) * (l + 1) + j - 1], table_[(t - 1) * (l + 1) + j]);
  }
  total_ = binom(m, l);
  if (total_ == std::numeric_limits<std::uint64_t>::max()) throw_resource("C(m,l) does not fit in 64 bits");
}

std::uint64_t SubsetRanker::rank(std::span<const std::size_t> subset) const {
  // Lexicographic order on subsets is the reverse of colex order on the mirrored set {m-1-c}.
  std::uint64_t colex = 0;
  for (std::size_t j = 1; j <= l_; ++j) colex += binom(m_ - 1 - subset[l_ - j], j);
  return total_ - 1 - colex;
}

bool SubsetRanker::next(std::vector<std::size_t>& subset) const {
  std::size_t i = l_;
  while (i > 0 && subset[i - 1] == m_ - l_ + i - 1) --i;
  if (i == 0) return false;
  ++subset[i - 1];
  for (std::size_t j = i; j < l_; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

// ---------------------------------------------------------------- SubsetColoring

SubsetColoring::SubsetColoring(std::size_t m, std::size_t l, std::uint32_t k)
    : ranker_(m, l), k_(k), colors_(ranker_.subset_count(), 0) {
  if (k == 0) throw_invalid("color count must be positive");
}

SubsetColoring::SubsetColoring(std::size_t m, std::size_t l, std::uint32_t k, std::vector<std::uint32_t> colors)
    : ranker_(m, l), k_(k), colors_(std::move(colors)) {
  if (k == 0) throw_invalid("color count must be positive");
  if (colors_.size() != ranker_.subset_count()) throw_invalid("subset coloring must list exactly C(m,l) colors");
  for (auto q : colors_)
    if (q >= k) throw_invalid("subset color out of range");
}

void SubsetColoring::set_color(std::span<const std::size_t> subset, std::uint32_t q) {
  if (q >= k_) throw_invalid("subset color out of range");
  colors_[ranker_.rank(subset)] = q;
}

// ---------------------------------------------------------------- SetSystem / SignColoring

SetSystem::SetSystem(std::size_t n_, std::vector<Bitset> sets_) : n(n_), sets(std::move(sets_)) {
  for (const auto& s : sets)
    if (s.size() != n) throw_invalid("set universe does not match ground-set size");
}

SetSystem::SetSystem(std::size_t n_, const std::vector<std::vector<std::size_t>>& members) : n(n_) {
  sets.reserve(members.size());
  for (const auto& m : members) {
    Bitset b(n);
    for (std::size_t e : m) {
      if (e >= n) throw_invalid("set element out of range");
      b.set(e);
    }
    sets.push_back(std::move(b));
  }
}

SignColoring::SignColoring(std::vector<std::int8_t> x) : x_(std::move(x)) {
  for (auto v : x_)
    if (v != 1 && v != -1) throw_invalid("sign coloring entries must be +1 or -1");
}

void SignColoring::set(std::size_t i, std::int8_t v) {
  if (v != 1 && v != -1) throw_invalid("sign coloring entries must be +1 or -1");
  x_[i] = v;
}

SignColoring SignColoring::negated() const {
  SignColoring out = *this;
  for (auto& v : out.x_) v = static_cast<std::int8_t>(-v);
  return out;
}

// ---------------------------------------------------------------- discrepancy

std::int64_t delta(const Bitset& set, const SignColoring& x) {
  if (set.size() != x.size()) throw_invalid("set universe and coloring length differ");
  std::int64_t sum = 0;
  for (std::size_t i = set.find_first(); i != Bitset::npos; i = set.find_next(i + 1)) sum += x[i];
  return sum;
}

std::uint64_t max_abs_discrepancy(const SetSystem& system, const SignColoring& x) {
  if (system.n != x.size()) throw_invalid("coloring length differs from ground-set size");
  std::uint64_t best = 0;
  for (const auto& m : system.sets) {
    auto d = delta(m, x);
    best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(d < 0 ? -d : d));
  }
  return best;
}

// ---------------------------------------------------------------- clique search

namespace {

// Vertex-set operations for the two candidate-set representations.
inline std::size_t set_count(std::uint64_t s) { return static_cast<std::size_t>(std::popcount(s)); }
inline std::size_t set_first(std::uint64_t s) { return static_cast<std::size_t>(std::countr_zero(s)); }
inline void set_remove(std::uint64_t& s, std::size_t v) { s &= ~(std::uint64_t{1} << v); }
inline bool set_empty(std::uint64_t s) { return s == 0; }
inline std::uint64_t set_minus_neighbors(std::uint64_t s, std::uint64_t nbr) { return s & ~nbr; }

inline std::size_t set_count(const Bitset& s) { return s.count(); }
inline std::size_t set_first(const Bitset& s) { return s.find_first(); }
inline void set_remove(Bitset& s, std::size_t v) { s.reset(v); }
inline bool set_empty(const Bitset& s) { return s.none(); }
inline Bitset set_minus_neighbors(Bitset s, const Bitset& nbr) { return s &= ~nbr; }

// Greedy coloring of the candidate set; the number of color classes bounds any clique inside it.
template <class Set, class Rows>
std::size_t greedy_color_bound(Set cand, const Rows& rows, std::size_t stop_at) {
  std::size_t classes = 0;
  while (!set_empty(cand)) {
    if (++classes >= stop_at) return classes;
    Set open = cand;
    while (!set_empty(open)) {
      std::size_t v = set_first(open);
      set_remove(open, v);
      set_remove(cand, v);
      open = set_minus_neighbors(open, rows[v]);
    }
  }
  return classes;
}

// Ascending-order backtracking: the first clique found is the lexicographically smallest.
template <class Set, class Rows>
bool extend_clique(const Rows& rows, Set cand, std::size_t need, std::vector<std::size_t>* chosen) {
  if (need == 0) return true;
  while (set_count(cand) >= need) {
    if (need >= 3 && greedy_color_bound(cand, rows, need) < need) return false;
    std::size_t v = set_first(cand);
    set_remove(cand, v);
    if (chosen) chosen->push_back(v);
    if (extend_clique(rows, cand & rows[v], need - 1, chosen)) return true;
    if (chosen) chosen->pop_back();
  }
  return false;
}

std::optional<std::vector<std::size_t>> clique_search(const Graph& g, std::size_t n) {
  const std::size_t r = g.order();
  if (n > r) return std::nullopt;
  std::vector<std::size_t> chosen;
  if (r <= 64) {
    std::vector<std::uint64_t> rows(r);
    for (std::size_t i = 0; i < r; ++i) rows[i] = g.neighbors(i).word(0);
    std::uint64_t all = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    if (extend_clique(rows, all, n, &chosen)) return chosen;
    return std::nullopt;
  }
  std::vector<Bitset> rows(r);
  for (std::size_t i = 0; i < r; ++i) rows[i] = g.neighbors(i);
  if (extend_clique(rows, Bitset::full(r), n, &chosen)) return chosen;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t n) {
  if (n == 0) throw_invalid("clique size must be positive");
  return clique_search(g, n);
}

std::optional<std::vector<std::size_t>> find_anticlique(const Graph& g, std::size_t n) {
  if (n == 0) throw_invalid("anticlique size must be positive");
  return clique_search(g.complement(), n);
}

bool has_clique_small(std::span<const std::uint64_t> rows, std::size_t n) {
  const std::size_t r = rows.size();
  if (n > r) return false;
  std::uint64_t all = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  return extend_clique<std::uint64_t>(rows, all, n, nullptr);
}

std::optional<MonochromaticSet> find_monochromatic_clique(const EdgeColoring& c, std::size_t n) {
  if (n == 0) throw_invalid("clique size must be positive");
  if (n > c.order()) return std::nullopt;
  for (std::uint32_t q = 0; q < c.color_count(); ++q)
    if (auto found = clique_search(c.color_class(q), n)) return MonochromaticSet{q, std::move(*found)};
  return std::nullopt;
}

namespace {

class HypercliqueSearch {
 public:
  HypercliqueSearch(const SubsetColoring& c, std::size_t n, std::uint32_t q) : c_(c), n_(n), q_(q) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t m = c_.ground_size();
    const std::size_t l = c_.subset_size();
    std::vector<std::size_t> cand;
    for (std::size_t w = 0; w < m; ++w) {
      std::size_t single[1] = {w};
      if (l > 1 || c_.color(single) == q_) cand.push_back(w);
    }
    if (extend(cand)) return chosen_;
    return std::nullopt;
  }

 private:
  // Every l-subset of chosen_ + {w} has color q_ for each w in cand.
  bool extend(const std::vector<std::size_t>& cand) {
    if (chosen_.size() == n_) return true;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      if (chosen_.size() + (cand.size() - idx) < n_) return false;
      const std::size_t v = cand[idx];
      chosen_.push_back(v);
      std::vector<std::size_t> next;
      if (chosen_.size() < n_) {
        for (std::size_t j = idx + 1; j < cand.size(); ++j)
          if (compatible(cand[j])) next.push_back(cand[j]);
      }
      if (extend(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // Checks the l-subsets containing both the newest chosen vertex and w.
  bool compatible(std::size_t w) {
    const std::size_t l = c_.subset_size();
    if (l == 1) return true;
    const std::size_t v = chosen_.back();
    const std::size_t pool = chosen_.size() - 1;
    const std::size_t pick = l - 2;
    if (pool < pick) return true;
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    std::vector<std::size_t> subset(l);
    while (true) {
      for (std::size_t i = 0; i < pick; ++i) subset[i] = chosen_[idx[i]];
      subset[pick] = v;
      subset[pick + 1] = w;
      if (c_.color(subset) != q_) return false;
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == pool - pick + i - 1) --i;
      if (i == 0) return true;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  const SubsetColoring& c_;
  std::size_t n_;
  std::uint32_t q_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<MonochromaticSet> find_monochromatic_hyperclique(const SubsetColoring& c, std::size_t n) {
  if (n < c.subset_size()) throw_invalid("hyperclique size n must be at least the subset size l");
  if (n > c.ground_size()) return std::nullopt;
  for (std::uint32_t q = 0; q < c.color_count(); ++q)
    if (auto found = HypercliqueSearch(c, n, q).run()) return MonochromaticSet{q, std::move(*found)};
  return std::nullopt;
}

// ---------------------------------------------------------------- certificates

std::string format_vertex_set(std::span<const std::size_t> vertices) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i] + 1;
  os << '}';
  return os.str();
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::RamseyGraph: return "ramsey-graph";
    case CertificateKind::Multicolor: return "multicolor";
    case CertificateKind::Hyper: return "hyper";
    case CertificateKind::Discrepancy: return "discrepancy";
  }
  return "unknown";
}

Verification verify_ramsey_graph(const Graph& g, std::size_t n) {
  if (auto c = find_clique(g, n)) return {false, std::to_string(n) + "-clique on " + format_vertex_set(*c)};
  if (auto a = find_anticlique(g, n)) return {false, std::to_string(n) + "-anticlique on " + format_vertex_set(*a)};
  return {true, {}};
}

Verification verify_multicolor(const EdgeColoring& c, std::size_t n) {
  if (auto mono = find_monochromatic_clique(c, n))
    return {false, "monochromatic " + std::to_string(n) + "-clique of color " + std::to_string(mono->color + 1) +
                       " on " + format_vertex_set(mono->vertices)};
  return {true, {}};
}

Verification verify_hyper(const SubsetColoring& c, std::size_t n) {
  if (auto mono = find_monochromatic_hyperclique(c, n))
    return {false, "monochromatic " + std::to_string(n) + "-hyperclique of color " + std::to_string(mono->color + 1) +
                       " on " + format_vertex_set(mono->vertices)};
  return {true, {}};
}

Verification verify_discrepancy(const SetSystem& system, const SignColoring& x, std::int64_t a) {
  if (system.n != x.size()) throw_invalid("coloring length differs from ground-set size");
  for (std::size_t k = 0; k < system.size(); ++k) {
    auto d = delta(system.sets[k], x);
    if ((d < 0 ? -d : d) >= a)
      return {false, "set M_" + std::to_string(k + 1) + " has |delta| = " + std::to_string(d < 0 ? -d : d) +
                         " >= a = " + std::to_string(a)};
  }
  return {true, {}};
}

Verification verify_certificate(CertificateKind kind, CertificateRef object, const CertificateParams& params) {
  auto mismatch = [&]() -> Verification {
    throw_invalid("certificate object does not match kind " + to_string(kind));
  };
  switch (kind) {
    case CertificateKind::RamseyGraph:
      if (auto* g = std::get_if<std::reference_wrapper<const Graph>>(&object)) return verify_ramsey_graph(*g, params.n);
      return mismatch();
    case CertificateKind::Multicolor:
      if (auto* c = std::get_if<std::reference_wrapper<const EdgeColoring>>(&object))
        return verify_multicolor(*c, params.n);
      return mismatch();
    case CertificateKind::Hyper:
      if (auto* c = std::get_if<std::reference_wrapper<const SubsetColoring>>(&object))
        return verify_hyper(*c, params.n);
      return mismatch();
    case CertificateKind::Discrepancy:
      if (params.system == nullptr) throw_invalid("discrepancy certificate needs a set system");
      if (auto* x = std::get_if<std::reference_wrapper<const SignColoring>>(&object))
        return verify_discrepancy(*params.system, *x, params.a);
      return mismatch();
  }
  return mismatch();
}

}  // namespace erdos
