#include <doctest.h>

#include <random>

#include "erdos/bounds.hpp"
#include "erdos/error.hpp"
#include "erdos/oracle.hpp"

using namespace erdos;

namespace {

Bitset from_mask(std::size_t n, std::uint64_t mask) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1) b.set(i);
  return b;
}

// Signed sum over mask when bit i of `red` marks element i red.
int signed_sum(std::uint64_t mask, std::uint64_t red) {
  return 2 * std::popcount(mask & red) - std::popcount(mask);
}

std::uint64_t brute_bad(std::size_t n, std::uint64_t mask, int a) {
  std::uint64_t c = 0;
  for (std::uint64_t red = 0; red < (1ull << n); ++red) c += signed_sum(mask, red) >= a;
  return c;
}

SetSystem random_system(std::size_t n, std::size_t s, std::mt19937_64& rng) {
  std::vector<Bitset> sets;
  for (std::size_t k = 0; k < s; ++k) sets.push_back(from_mask(n, rng() & ((1ull << n) - 1)));
  return SetSystem(n, std::move(sets));
}

std::uint64_t mask_of(const Bitset& b) { return b.size() == 0 ? 0 : b.word(0); }

bool expect_resource_error(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::ResourceLimit;
  }
  return false;
}

}  // namespace

TEST_CASE("count_bad examples") {
  CHECK(count_bad_colorings(Bitset(4, {0, 1, 2, 3}), 2, CountMode::Enumerate) == 5);
  CHECK(count_bad_colorings(Bitset(4, {0, 1, 2, 3}), 2, CountMode::ClosedForm) == 5);
  CHECK(count_bad_colorings(Bitset(6), 1, CountMode::Enumerate) == 0);
  CHECK(count_bad_colorings(Bitset(6), 1, CountMode::ClosedForm) == 0);
  // only the all-red coloring of M reaches a = |M|
  CHECK(count_bad_colorings(Bitset(7, {1, 3, 4}), 3, CountMode::Enumerate) == 16);
  CHECK(count_bad_colorings(Bitset(7, {1, 3, 4}), 3, CountMode::ClosedForm) == 16);
  CHECK_THROWS_AS(count_bad_colorings(Bitset(4), 0, CountMode::ClosedForm), Error);
}

TEST_CASE("count_bad modes agree with brute force and the tail bound") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Bitset m = from_mask(n, mask);
      for (int a = 1; a <= static_cast<int>(n); ++a) {
        auto e = count_bad_colorings(m, a, CountMode::Enumerate);
        CHECK(e == brute_bad(n, mask, a));
        CHECK(e == count_bad_colorings(m, a, CountMode::ClosedForm));
        CHECK(below_tail_bound(e, n, a));
      }
    }
}

TEST_CASE("count_bad modes agree on random larger instances") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 12 + rng() % 11;
    Bitset m = from_mask(n, rng() & ((1ull << n) - 1));
    int a = 1 + static_cast<int>(rng() % n);
    auto e = count_bad_colorings(m, a, CountMode::Enumerate);
    CHECK(e == count_bad_colorings(m, a, CountMode::ClosedForm));
    // monotone in a
    if (a > 1) CHECK(count_bad_colorings(m, a - 1, CountMode::ClosedForm) >= e);
  }
}

TEST_CASE("count_bad negation symmetry") {
  // #{delta >= a} = #{delta <= -a}, checked by brute force on the lower tail
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << n); mask += 5)
      for (int a = 1; a <= static_cast<int>(n); ++a) {
        std::uint64_t lower = 0;
        for (std::uint64_t red = 0; red < (1ull << n); ++red) lower += signed_sum(mask, red) <= -a;
        CHECK(count_bad_colorings(from_mask(n, mask), a, CountMode::ClosedForm) == lower);
      }
}

TEST_CASE("closed form handles ground sets past the enumeration cap") {
  Bitset m(1000);
  for (std::size_t i = 0; i < 50; ++i) m.set(i * 7);
  auto c = count_bad_colorings(m, 20, CountMode::ClosedForm);
  CHECK(c > 0);
  CHECK(below_tail_bound(c, 1000, 20));
  CHECK(expect_resource_error([&] { count_bad_colorings(m, 20, CountMode::Enumerate); }));
}

TEST_CASE("count_exceeding examples") {
  auto one = count_exceeding_colorings(SetSystem(2, std::vector<std::vector<std::size_t>>{{0, 1}}), 1);
  CHECK(one.count == 2);
  CHECK(one.per_set == std::vector<std::uint64_t>{2});
  CHECK(count_exceeding_colorings(SetSystem(5, std::vector<Bitset>{}), 1).count == 0);
  auto four = count_exceeding_colorings(SetSystem(4, std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}}), 2);
  CHECK(four.count == 10);
}

TEST_CASE("count_exceeding matches brute force and the union sandwich") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 12, s = rng() % 6;
    auto sys = random_system(n, s, rng);
    int a = 1 + static_cast<int>(rng() % n);
    std::uint64_t expected = 0;
    std::vector<std::uint64_t> per(s, 0);
    for (std::uint64_t red = 0; red < (1ull << n); ++red) {
      bool any = false;
      for (std::size_t k = 0; k < s; ++k)
        if (std::abs(signed_sum(mask_of(sys.sets[k]), red)) >= a) ++per[k], any = true;
      expected += any;
    }
    auto got = count_exceeding_colorings(sys, a);
    CHECK(got.count == expected);
    CHECK(got.per_set == per);
    std::uint64_t sum = 0, mx = 0;
    for (auto p : per) sum += p, mx = std::max(mx, p);
    CHECK(mx <= got.count);
    CHECK(got.count <= sum);
  }
}

TEST_CASE("min_max discrepancy examples") {
  // all pairs of [4]
  std::vector<std::vector<std::size_t>> pairs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) pairs.push_back({i, j});
  auto opt = min_max_discrepancy(SetSystem(4, pairs));
  CHECK(opt.value == 2);
  CHECK(opt.witness == SignColoring(4));

  SetSystem halves(4, std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  auto h = min_max_discrepancy(halves);
  CHECK(h.value == 0);
  CHECK(h.witness == SignColoring({1, -1, 1, -1}));

  auto e = min_max_discrepancy(SetSystem(3, std::vector<Bitset>{}));
  CHECK(e.value == 0);
  CHECK(e.witness == SignColoring(3));
}

TEST_CASE("min_max discrepancy matches brute force") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + rng() % 11, s = 1 + rng() % 5;
    auto sys = random_system(n, s, rng);
    // words in lexicographic order, +1 before -1, x_1 most significant
    std::uint64_t best = ~0ull, best_word = 0;
    for (std::uint64_t w = 0; w < (1ull << n); ++w) {
      std::uint64_t red = 0;
      for (std::size_t e = 0; e < n; ++e)
        if (!((w >> (n - 1 - e)) & 1)) red |= 1ull << e;
      std::uint64_t worst = 0;
      for (auto& m : sys.sets) worst = std::max<std::uint64_t>(worst, std::abs(signed_sum(mask_of(m), red)));
      if (worst < best) best = worst, best_word = w;
    }
    auto opt = min_max_discrepancy(sys);
    CHECK(opt.value == best);
    std::vector<std::int8_t> x(n);
    for (std::size_t e = 0; e < n; ++e) x[e] = (best_word >> (n - 1 - e)) & 1 ? -1 : 1;
    CHECK(opt.witness == SignColoring(x));
    CHECK(max_abs_discrepancy(sys, opt.witness) == opt.value);
  }
}

TEST_CASE("ramsey graph counts") {
  auto five = count_ramsey_graphs(5, 3);
  CHECK(five.ramsey == 1012);
  CHECK(five.total == 1024);
  auto six = count_ramsey_graphs(6, 3);
  CHECK(six.ramsey == 32768);
  CHECK(six.total == 32768);
  CHECK(count_ramsey_graphs(2, 2).ramsey == 2);
  CHECK(count_ramsey_graphs(4, 4).ramsey == 2);
  CHECK(count_ramsey_graphs(3, 4).ramsey == 0);
  CHECK(expect_resource_error([] { count_ramsey_graphs(9, 3); }));
  EnumerationLimits tight;
  tight.max_ground_size = 4;
  CHECK(expect_resource_error([&] { count_exceeding_colorings(SetSystem(5, std::vector<Bitset>{}), 1, tight); }));
}

TEST_CASE("ramsey counts match direct clique checks") {
  for (std::size_t r = 2; r <= 6; ++r)
    for (std::size_t n = 2; n <= r; ++n) {
      std::uint64_t expected = 0;
      const std::uint64_t bits = pair_count(r);
      for (std::uint64_t w = 0; w < (1ull << bits); ++w) {
        Graph g(r);
        std::uint64_t b = 0;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = i + 1; j < r; ++j, ++b)
            if ((w >> b) & 1) g.add_edge(i, j);
        expected += has_clique(g, n) || has_anticlique(g, n);
      }
      CHECK(count_ramsey_graphs(r, n).ramsey == expected);
    }
}

TEST_CASE("results do not depend on the thread count") {
  std::mt19937_64 rng(31);
  auto sys = random_system(18, 6, rng);
  EnumerationLimits one, many;
  one.threads = 1;
  many.threads = 8;
  CHECK(count_exceeding_colorings(sys, 4, one).count == count_exceeding_colorings(sys, 4, many).count);
  auto a = min_max_discrepancy(sys, one), b = min_max_discrepancy(sys, many);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(count_ramsey_graphs(7, 4, one).ramsey == count_ramsey_graphs(7, 4, many).ramsey);
  Bitset m = from_mask(20, 0xABCDE);
  CHECK(count_bad_colorings(m, 3, CountMode::Enumerate, one) == count_bad_colorings(m, 3, CountMode::Enumerate, many));
}
