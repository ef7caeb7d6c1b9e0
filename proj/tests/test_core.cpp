#include <doctest.h>

#include <algorithm>
#include <random>

#include "erdos/core.hpp"
#include "erdos/error.hpp"

using namespace erdos;

namespace {

SignColoring from_word(std::size_t n, std::uint64_t word) {
  std::vector<std::int8_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (word >> i) & 1 ? 1 : -1;
  return SignColoring(std::move(x));
}

Bitset from_mask(std::size_t n, std::uint64_t mask) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) b.set(i);
  return b;
}

Graph random_graph(std::size_t r, std::mt19937_64& rng) {
  Graph g(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

// Every n-subset of [r] in lexicographic order.
std::vector<std::vector<std::size_t>> all_subsets(std::size_t r, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = from; v < r; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<std::vector<std::size_t>> brute_clique(const Graph& g, std::size_t n, bool want_edge) {
  for (auto& s : all_subsets(g.order(), n)) {
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a)
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = g.adjacent(s[a], s[b]) == want_edge;
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("delta and max discrepancy examples") {
  SignColoring all_red(4);
  CHECK(delta(Bitset(4, {0, 1, 2, 3}), all_red) == 4);
  CHECK(delta(Bitset(4), all_red) == 0);

  SetSystem sys(4, std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2, 3}});
  SignColoring x({1, -1, 1, -1});
  CHECK(delta(sys.sets[0], x) == 0);
  CHECK(delta(sys.sets[1], x) == -1);
  CHECK(max_abs_discrepancy(sys, x) == 1);
  CHECK(max_abs_discrepancy(SetSystem(3, std::vector<Bitset>{}), SignColoring(3)) == 0);
}

TEST_CASE("delta parity and negation, exhaustive for small n") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Bitset m = from_mask(n, mask);
      for (std::uint64_t w = 0; w < (1ull << n); w += 3) {
        auto x = from_word(n, w);
        auto d = delta(m, x);
        CHECK(((d - static_cast<std::int64_t>(m.count())) % 2 + 2) % 2 == 0);
        CHECK(delta(m, x.negated()) == -d);
        CHECK(std::llabs(d) <= static_cast<long long>(m.count()));
      }
    }
}

TEST_CASE("sign coloring rejects values other than +-1") {
  CHECK_THROWS_AS(SignColoring({1, 0, -1}), Error);
}

TEST_CASE("clique examples") {
  auto k4 = Graph::complete(4);
  CHECK(has_clique(k4, 4));
  CHECK_FALSE(has_anticlique(k4, 2));
  CHECK(*find_clique(k4, 3) == std::vector<std::size_t>{0, 1, 2});

  Graph empty(5);
  CHECK(has_anticlique(empty, 5));
  CHECK_FALSE(has_clique(empty, 2));

  auto c5 = Graph::cycle(5);
  CHECK_FALSE(has_clique(c5, 3));
  CHECK_FALSE(has_anticlique(c5, 3));
  CHECK(has_clique(c5, 2));

  CHECK_FALSE(has_clique(k4, 5));
  CHECK_THROWS_AS(find_clique(k4, 0), Error);
  CHECK(has_clique(k4, 1));
}

TEST_CASE("graph edits reject loops and bad vertices") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 3), Error);
}

TEST_CASE("clique detection matches brute force") {
  std::mt19937_64 rng(7);
  for (std::size_t r = 1; r <= 7; ++r)
    for (int rep = 0; rep < 60; ++rep) {
      Graph g = random_graph(r, rng);
      for (std::size_t n = 1; n <= r + 1; ++n) {
        CHECK(find_clique(g, n) == brute_clique(g, n, true));
        CHECK(find_anticlique(g, n) == brute_clique(g, n, false));
        // complement duality
        CHECK(has_clique(g, n) == has_anticlique(g.complement(), n));
      }
    }
}

TEST_CASE("complement duality, all graphs on 5 vertices") {
  const std::size_t r = 5;
  for (std::uint64_t bits = 0; bits < (1u << pair_count(r)); ++bits) {
    Graph g(r);
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j, ++b)
        if ((bits >> b) & 1) g.add_edge(i, j);
    for (std::size_t n = 2; n <= 4; ++n) {
      CHECK(has_anticlique(g, n) == has_clique(g.complement(), n));
      std::vector<std::uint64_t> rows(r);
      for (std::size_t i = 0; i < r; ++i) rows[i] = g.neighbors(i).word(0);
      CHECK(has_clique_small(rows, n) == has_clique(g, n));
    }
  }
}

TEST_CASE("clique witnesses on larger random graphs are sound") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = random_graph(90, rng);
    for (std::size_t n : {4u, 6u, 8u}) {
      auto w = find_clique(g, n);
      if (!w) continue;
      REQUIRE(w->size() == n);
      CHECK(std::is_sorted(w->begin(), w->end()));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) CHECK(g.adjacent((*w)[a], (*w)[b]));
    }
  }
}

TEST_CASE("pair index is lexicographic") {
  const std::size_t r = 6;
  std::uint64_t expected = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      CHECK(pair_index(r, i, j) == expected);
      CHECK(pair_index(r, j, i) == expected);
      ++expected;
    }
  CHECK(expected == pair_count(r));
}

TEST_CASE("edge coloring and graph conversion") {
  auto c5 = Graph::cycle(5);
  auto c = EdgeColoring::from_graph(c5);
  CHECK(c.color(0, 1) == 0);
  CHECK(c.color(0, 2) == 1);
  CHECK(c.color_class(0) == c5);
  CHECK(c.color_class(1) == c5.complement());
}

TEST_CASE("monochromatic clique examples") {
  EdgeColoring mono(4, 3);
  auto w = find_monochromatic_clique(mono, 4);
  REQUIRE(w);
  CHECK(w->color == 0);
  CHECK(w->vertices == std::vector<std::size_t>{0, 1, 2, 3});

  auto c5 = EdgeColoring::from_graph(Graph::cycle(5));
  CHECK_FALSE(find_monochromatic_clique(c5, 3));
  CHECK(verify_multicolor(c5, 3).ok);
  CHECK_FALSE(verify_multicolor(mono, 3).ok);
}

TEST_CASE("subset ranker matches iteration order") {
  for (std::size_t m = 1; m <= 9; ++m)
    for (std::size_t l = 1; l <= m; ++l) {
      SubsetRanker ranker(m, l);
      auto subsets = all_subsets(m, l);
      REQUIRE(subsets.size() == ranker.subset_count());
      std::vector<std::size_t> cur = subsets.front();
      for (std::uint64_t i = 0; i < subsets.size(); ++i) {
        CHECK(ranker.rank(subsets[i]) == i);
        CHECK(cur == subsets[i]);
        CHECK(ranker.next(cur) == (i + 1 < subsets.size()));
      }
    }
  CHECK_THROWS_AS(SubsetRanker(200, 100), Error);
}

TEST_CASE("monochromatic hyperclique matches brute force") {
  // Color of an l-subset: parity of its element sum (plus a twist), checked against all n-sets.
  for (std::size_t m = 3; m <= 8; ++m)
    for (std::size_t l = 1; l <= 3 && l <= m; ++l) {
      SubsetRanker ranker(m, l);
      std::vector<std::uint32_t> colors;
      for (auto& s : all_subsets(m, l)) {
        std::size_t sum = 0;
        for (auto v : s) sum += v;
        colors.push_back(static_cast<std::uint32_t>((sum + (s[0] == 0)) % 2));
      }
      SubsetColoring c(m, l, 2, colors);
      for (std::size_t n = l; n <= m; ++n) {
        std::optional<MonochromaticSet> expected;
        for (std::uint32_t q = 0; q < 2 && !expected; ++q)
          for (auto& s : all_subsets(m, n)) {
            bool ok = true;
            for (auto& sub : all_subsets(n, l)) {
              std::vector<std::size_t> mapped;
              for (auto i : sub) mapped.push_back(s[i]);
              if (c.color(mapped) != q) {
                ok = false;
                break;
              }
            }
            if (ok) {
              expected = MonochromaticSet{q, s};
              break;
            }
          }
        CHECK(find_monochromatic_hyperclique(c, n) == expected);
      }
      CHECK_THROWS_AS(find_monochromatic_hyperclique(c, l - 1), Error);
    }
}

TEST_CASE("certificate verification") {
  auto c5 = Graph::cycle(5);
  CHECK(verify_certificate(CertificateKind::RamseyGraph, std::cref(c5), {3}).ok);
  auto k4 = Graph::complete(4);
  auto v = verify_certificate(CertificateKind::RamseyGraph, std::cref(k4), {3});
  CHECK_FALSE(v.ok);
  CHECK(v.reason == "3-clique on {1,2,3}");

  SetSystem sys(2, std::vector<std::vector<std::size_t>>{{0, 1}});
  SignColoring red(2);
  CertificateParams p{0, 1, &sys};
  auto d = verify_certificate(CertificateKind::Discrepancy, std::cref(red), p);
  CHECK_FALSE(d.ok);
  CHECK(d.reason.find("M_1") != std::string::npos);
  CHECK(verify_certificate(CertificateKind::Discrepancy, std::cref(red), {0, 3, &sys}).ok);

  CHECK_THROWS_AS(verify_certificate(CertificateKind::Hyper, std::cref(c5), {3}), Error);
  CHECK_THROWS_AS(verify_certificate(CertificateKind::Discrepancy, std::cref(red), {0, 1, nullptr}), Error);
  CHECK(to_string(CertificateKind::Multicolor) == "multicolor");
  std::vector<std::size_t> vs{0, 4};
  CHECK(format_vertex_set(vs) == "{1,5}");
}
