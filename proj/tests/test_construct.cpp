#include <doctest.h>

#include <cmath>

#include "erdos/bounds.hpp"
#include "erdos/construct.hpp"
#include "erdos/error.hpp"
#include "erdos/oracle.hpp"

using namespace erdos;

namespace {

TrialOptions opts(std::uint64_t seed, std::uint64_t max_trials, unsigned threads = 1) {
  TrialOptions o;
  o.seed = seed;
  o.max_trials = max_trials;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_CASE("trial streams are reproducible and distinct") {
  TrialStream a(5, 0), b(5, 0), c(5, 1), d(6, 0);
  std::vector<std::uint32_t> va, vb, vc, vd;
  for (int i = 0; i < 64; ++i) {
    va.push_back(a.below(1000));
    vb.push_back(b.below(1000));
    vc.push_back(c.below(1000));
    vd.push_back(d.below(1000));
  }
  CHECK(va == vb);
  CHECK(va != vc);
  CHECK(va != vd);
  TrialStream one(1, 1);
  for (int i = 0; i < 100; ++i) CHECK(one.below(1) == 0);
}

TEST_CASE("sign samples are close to uniform") {
  const std::size_t n = 10;
  const int samples = 100'000;
  std::vector<int> red(n, 0);
  for (int t = 0; t < samples; ++t) {
    TrialStream s(0, t);
    auto x = sample_sign_coloring(n, s);
    for (std::size_t i = 0; i < n; ++i) red[i] += x[i] == 1;
  }
  for (auto r : red) CHECK(std::abs(r / double(samples) - 0.5) < 0.02);

  std::vector<int> hist(3, 0);
  TrialStream s(9, 0);
  for (int i = 0; i < 30'000; ++i) ++hist[s.below(3)];
  for (auto h : hist) CHECK(std::abs(h / 30'000.0 - 1.0 / 3) < 0.02);
}

TEST_CASE("ramsey graph constructor") {
  auto r = find_ramsey_graph(8, std::nullopt, opts(42, 10));
  REQUIRE(r.success());
  CHECK(r.witness->order() == 8);
  CHECK(r.trials_run <= 10);
  CHECK(verify_ramsey_graph(*r.witness, 8).ok);

  auto tiny = find_ramsey_graph(2, 1, opts(0, 5));
  REQUIRE(tiny.success());
  CHECK(tiny.trials_run == 1);

  // the only graphs on 5 vertices free of triangles and independent triples are 5-cycles
  auto c5 = find_ramsey_graph(3, 5, opts(0, 1000));
  REQUIRE(c5.success());
  CHECK(c5.witness->edge_count() == 5);
  for (std::size_t v = 0; v < 5; ++v) CHECK(c5.witness->neighbors(v).count() == 2);
  CHECK(c5.failures.size() == c5.trials_run - 1);
  for (auto& f : c5.failures) {
    const bool named = f.reason.find("-clique on {") != std::string::npos ||
                       f.reason.find("-anticlique on {") != std::string::npos;
    CHECK(named);
  }
}

TEST_CASE("ramsey constructor exhausts trials when impossible") {
  auto r = find_ramsey_graph(3, 6, opts(0, 20, 4));
  CHECK_FALSE(r.success());
  CHECK(r.trials_run == 20);
  CHECK(r.failures.size() == 20);
}

TEST_CASE("multicolor constructor") {
  auto a = find_multicolor_coloring(6, 2, std::nullopt, opts(0, 10));
  REQUIRE(a.success());
  CHECK(a.trials_run == 1);
  CHECK(a.witness->order() == 4);

  auto b = find_multicolor_coloring(4, 3, 8, opts(3, 1000));
  REQUIRE(b.success());
  CHECK_FALSE(find_monochromatic_clique(*b.witness, 4));

  auto single = find_multicolor_coloring(2, 1, 3, opts(0, 5), kDefaultVertexCap, true);
  CHECK_FALSE(single.success());
  CHECK(single.trials_run == 5);
  CHECK_THROWS_AS(find_multicolor_coloring(2, 1, 3, opts(0, 5)), Error);
}

TEST_CASE("hypergraph constructor") {
  auto h = find_hypergraph_coloring(10, 2, 3, 20, opts(0, 50));
  REQUIRE(h.success());
  CHECK(h.witness->ground_size() == 20);
  CHECK_FALSE(find_monochromatic_hyperclique(*h.witness, 10));

  auto small = find_hypergraph_coloring(5, 2, 2, 4, opts(0, 5));
  REQUIRE(small.success());
  CHECK(small.trials_run == 1);

  // with l = 2 the subset sampler draws exactly what the edge sampler draws
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    TrialStream s1(seed, 0), s2(seed, 0);
    CHECK(sample_subset_coloring(9, 2, 3, s1).colors() == sample_edge_coloring(9, 3, s2).colors());
  }
  CHECK_THROWS_AS(find_hypergraph_coloring(2, 2, 3, 5, opts(0, 1)), Error);
}

TEST_CASE("low discrepancy constructor") {
  SetSystem empty(6, std::vector<std::vector<std::size_t>>{{}, {}});
  auto e = find_low_discrepancy_coloring(empty, 1, opts(0, 3));
  REQUIRE(e.success());
  CHECK(e.trials_run == 1);
  CHECK(e.success_rate == 1.0);

  auto sys = random_set_system(12, 8, std::nullopt, 4);
  auto opt = min_max_discrepancy(sys);
  auto r = find_low_discrepancy_coloring(sys, static_cast<std::int64_t>(opt.value) + 1, opts(0, 5000));
  REQUIRE(r.success());
  CHECK(max_abs_discrepancy(sys, *r.witness) <= opt.value);

  // below the optimum nothing can succeed
  if (opt.value > 0) {
    auto none = find_low_discrepancy_coloring(sys, static_cast<std::int64_t>(opt.value), opts(0, 50));
    CHECK_FALSE(none.success());
    CHECK(none.success_rate == 0.0);
    CHECK(none.failures.front().reason.find(">= a = ") != std::string::npos);
  }
}

TEST_CASE("low discrepancy in the guaranteed regime") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 10 + seed % 5, s = 1 + seed % 4;
    auto sys = random_set_system(n, s, std::nullopt, seed);
    auto a = discrepancy_guarantee(n, s);
    if (a > n) continue;
    auto r = find_low_discrepancy_coloring(sys, std::nullopt, opts(0, 1000));
    CHECK(r.a == static_cast<std::int64_t>(a));
    CHECK(r.success());
    CHECK(count_exceeding_colorings(sys, static_cast<std::int64_t>(a)).count < (1ull << n));
  }
}

TEST_CASE("reports do not depend on the thread count") {
  CHECK(find_ramsey_graph(3, 5, opts(7, 1000, 1)) == find_ramsey_graph(3, 5, opts(7, 1000, 8)));
  CHECK(find_multicolor_coloring(4, 3, 8, opts(1, 100, 1)) == find_multicolor_coloring(4, 3, 8, opts(1, 100, 3)));
  auto sys = random_set_system(14, 5, 6, 2);
  CHECK(find_low_discrepancy_coloring(sys, 3, opts(0, 200, 1)) == find_low_discrepancy_coloring(sys, 3, opts(0, 200, 8)));
}

TEST_CASE("random set systems") {
  auto a = random_set_system(50, 7, 10, 3);
  CHECK(a.size() == 7);
  for (auto& m : a.sets) CHECK(m.count() == 10);
  CHECK(a == random_set_system(50, 7, 10, 3));
  CHECK_FALSE(a == random_set_system(50, 7, 10, 4));
  CHECK_THROWS_AS(random_set_system(5, 1, 6, 0), Error);
}

TEST_CASE("practicality caps") {
  try {
    find_ramsey_graph(20, std::nullopt, opts(0, 1));
    FAIL("expected a resource-limit error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
  CHECK_THROWS_AS(find_ramsey_graph(4, 65, opts(0, 1)), Error);
  CHECK(find_ramsey_graph(4, 65, opts(0, 1), 100).trials_run == 1);
  CHECK_THROWS_AS(find_hypergraph_coloring(10, 2, 3, 200, opts(0, 1)), Error);
}
