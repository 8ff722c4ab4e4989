#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icover/families.hpp"
#include "icover/modular.hpp"
#include "test_util.hpp"

using namespace icover;
using namespace icover::testutil;

TEST_CASE("interval test straight from the definition") {
  Graph p4 = make_path(4);
  CHECK(!is_interval(p4, paper_set({2, 3}, 4)));
  CHECK(is_interval(p4, paper_set({1}, 4)));
  CHECK(is_interval(p4, paper_set({}, 4)));
  CHECK(is_interval(p4, VertexSet::full_set(4)));

  Graph k5 = complement(Graph(5));
  for (Row s = 0; s <= k5.vertex_mask(); ++s)
    CHECK(is_interval(k5, VertexSet(s, 5)));
}

TEST_CASE("interval closure reaches the smallest enclosing interval") {
  Graph p4 = make_path(4);
  CHECK(interval_closure(p4, paper_set({1, 3}, 4)) == VertexSet::full_set(4));
  Graph g = paper_graph(5, {{1, 2}, {3, 4}});
  CHECK(interval_closure(g, paper_set({2}, 5)) == paper_set({2}, 5));
  Graph k3 = complement(Graph(3));
  CHECK(interval_closure(k3, paper_set({1, 2}, 3)) == paper_set({1, 2}, 3));
  CHECK_THROWS_AS(interval_closure(p4, VertexSet::empty_set(4)), Error);

  // closure is an interval containing the seed, and no interval between
  // the seed and the closure is smaller (brute subset check)
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    Graph h = random_graph(n, rng);
    Row seed = 0;
    while (std::popcount(seed) < 2) seed = static_cast<Row>(rng()) & h.vertex_mask();
    VertexSet c = interval_closure(h, VertexSet(seed, n));
    CHECK((seed & ~c.bits()) == 0);
    CHECK(is_interval(h, c));
    for (Row s = 0; s <= h.vertex_mask(); ++s) {
      if ((seed & ~s) != 0 || s == c.bits()) continue;
      if ((s & ~c.bits()) != 0) continue;  // only subsets of the closure
      CHECK(!is_interval(h, VertexSet(s, n)));
    }
  }
}

TEST_CASE("indecomposability basics and conventions") {
  CHECK(is_indecomposable(make_path(4)));
  for (Row code = 0; code < 8; ++code)
    CHECK(!is_indecomposable(graph_of_code(3, code)));
  CHECK(!is_indecomposable(complement(Graph(6))));  // complete graph
  CHECK(is_indecomposable(Graph(0)));
  CHECK(is_indecomposable(Graph(1)));
  CHECK(is_indecomposable(Graph(2)));
  CHECK(is_indecomposable(make_path(6)));
  CHECK(is_indecomposable(make_q(6)));
}

TEST_CASE("indecomposability is complement-invariant") {
  for (int n : {4, 5, 6}) {
    long total = 1L << (n * (n - 1) / 2);
    for (long code = 0; code < total; ++code) {
      Graph g = graph_of_code(n, static_cast<std::uint32_t>(code));
      CHECK(is_indecomposable(g) == is_indecomposable(complement(g)));
    }
  }
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    int n = 7 + static_cast<int>(rng() % 8);  // 7..14
    Graph g = random_graph(n, rng);
    CHECK(is_indecomposable(g) == is_indecomposable(complement(g)));
  }
}

TEST_CASE("nontrivial interval enumeration matches the brute subset sweep") {
  CHECK(nontrivial_intervals(make_path(4)).empty());

  // dropping label 2 / label 3 from the 7-vertex quasi-path
  Graph q7 = make_q(7);
  {
    Graph h = remove_vertex(q7, 1);  // drop label 2
    auto ivs = nontrivial_intervals(h);
    REQUIRE(ivs.size() == 1);
    // labels {1,7} survive the deletion as ids {1,6} -> internal {0,5}
    CHECK(ivs[0] == VertexSet::of({0, 5}, 6));
  }
  {
    Graph h = remove_vertex(q7, 2);  // drop label 3
    auto ivs = nontrivial_intervals(h);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0] == VertexSet::of({0, 1}, 6));
    CHECK(ivs[1] == VertexSet::of({0, 1, 5}, 6));
  }

  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    Graph g = random_graph(n, rng);
    auto ivs = nontrivial_intervals(g);
    auto brute = brute_nontrivial_intervals(g);
    REQUIRE(ivs.size() == brute.size());
    CHECK(is_indecomposable(g) == ivs.empty());
    std::vector<Row> got;
    for (const auto& s : ivs) got.push_back(s.bits());
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    CHECK(got == brute);
    // listing order: size, then member-sequence
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      bool ordered = ivs[i - 1].size() < ivs[i].size() ||
                     (ivs[i - 1].size() == ivs[i].size() &&
                      lex_less(ivs[i - 1], ivs[i]));
      CHECK(ordered);
    }
  }

  CHECK_THROWS_AS(nontrivial_intervals(Graph(17)), Error);
}

TEST_CASE("witness interval is the smallest, lexicographically first") {
  CHECK(!witness_interval(make_path(5)).has_value());
  Graph g = paper_graph(5, {{1, 2}, {2, 3}, {4, 5}});
  auto w = witness_interval(g);
  REQUIRE(w.has_value());
  auto all = nontrivial_intervals(g);
  REQUIRE(!all.empty());
  CHECK(*w == all.front());
}

TEST_CASE("critical vertices") {
  Graph g6 = make_halfgraph(6);
  CHECK(critical_vertices(g6) == VertexSet::full_set(6));
  CHECK(critical_vertices(make_path(6)) == paper_set({2, 3, 4, 5}, 6));
  CHECK_THROWS_AS(critical_vertices(complement(Graph(5))), Error);

  CHECK(is_critical_graph(make_halfgraph(8)));
  CHECK(!is_critical_graph(make_path(7)));
  CHECK(is_critical_graph(complement(make_halfgraph(6))));
}

TEST_CASE("pair-minimality: fast walk vs the definition") {
  CHECK(is_pair_minimal(make_q(6), 0, 5));
  CHECK(!is_pair_minimal(make_path(7), 1, 5));
  CHECK(is_pair_minimal(make_path(5), 0, 4));
  CHECK_THROWS_AS(is_pair_minimal(complement(Graph(5)), 0, 1), Error);

  CHECK(is_pair_minimal(make_q(6), 0, 5, MinimalityMode::BruteForce));
  CHECK(!is_pair_minimal(make_path(7), 1, 5, MinimalityMode::BruteForce));

  // every indecomposable 4-vertex graph is minimal for every pair
  for (Row code = 0; code < 64; ++code) {
    Graph g = graph_of_code(4, code);
    if (!is_indecomposable(g)) continue;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        CHECK(is_pair_minimal(g, a, b, MinimalityMode::BruteForce));
        CHECK(is_pair_minimal(g, a, b, MinimalityMode::FastPinned));
      }
  }

  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 150) {
    int n = 5 + static_cast<int>(rng() % 3);  // 5..7
    Graph g = random_graph(n, rng);
    if (!is_indecomposable(g)) continue;
    int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % n);
    if (a == b) continue;
    CHECK(is_pair_minimal(g, a, b, MinimalityMode::FastPinned) ==
          is_pair_minimal(g, a, b, MinimalityMode::BruteForce));
    ++tested;
  }
}
