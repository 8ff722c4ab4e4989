#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icover/families.hpp"
#include "icover/indec.hpp"
#include "icover/modular.hpp"
#include "test_util.hpp"

using namespace icover;
using namespace icover::testutil;

TEST_CASE("indecomposability graphs of paths and quasi-paths") {
  CHECK(indecomposability_graph(make_path(6)) ==
        paper_graph(6, {{1, 2}, {1, 6}, {5, 6}}));
  CHECK(indecomposability_graph(make_q(6)) ==
        paper_graph(6, {{1, 2}, {2, 6}, {5, 6}}));
  CHECK(indecomposability_graph(make_q(9)) ==
        paper_graph(9, {{1, 2}, {2, 9}, {8, 9}, {1, 9}}));

  CHECK_THROWS_AS(indecomposability_graph(complement(Graph(5))), Error);
}

TEST_CASE("indecomposability graph is complement-invariant") {
  for (long code = 0; code < (1L << 15); code += 3) {
    Graph g = graph_of_code(6, static_cast<std::uint32_t>(code));
    if (!is_indecomposable(g)) continue;
    CHECK(indecomposability_graph(g) ==
          indecomposability_graph(complement(g)));
  }
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 25) {
    int n = 8 + static_cast<int>(rng() % 4);
    Graph g = random_graph(n, rng);
    if (!is_indecomposable(g)) continue;
    CHECK(indecomposability_graph(g) ==
          indecomposability_graph(complement(g)));
    ++done;
  }
}

TEST_CASE("cover tests") {
  Graph ip9 = indecomposability_graph(make_path(9));
  CHECK(is_set_covered(ip9, paper_set({1, 8}, 9)));
  CHECK(!is_set_covered(ip9, paper_set({4, 5}, 9)));
  CHECK(is_set_covered(Graph(4), VertexSet::empty_set(4)));

  auto fc = first_cover_pair(ip9);
  REQUIRE(fc.has_value());
  // lexicographically least covering pair of {1,2},{1,9},{8,9} is {1,8}
  CHECK(*fc == std::make_pair(0, 7));
}

TEST_CASE("covers of an exact size, padding included") {
  Graph ip14 = indecomposability_graph(make_path(14));
  auto covers = covers_of_size(ip14, 2);
  Row want1 = vbit(0) | vbit(12);   // {1,13}
  Row want2 = vbit(1) | vbit(13);   // {2,14}
  bool has1 = false, has2 = false;
  for (const auto& s : covers) {
    if (s.bits() == want1) has1 = true;
    if (s.bits() == want2) has2 = true;
  }
  CHECK(has1);
  CHECK(has2);
  // lexicographic listing
  for (std::size_t i = 1; i < covers.size(); ++i)
    CHECK(lex_less(covers[i - 1], covers[i]));

  Graph triangle = complement(Graph(3));
  CHECK(covers_of_size(triangle, 1).empty());
  CHECK(!covers_of_size(indecomposability_graph(make_q(14)), 2).empty());
  CHECK_THROWS_AS(covers_of_size(triangle, 4), Error);

  // padded supersets: a graph with one edge has every pair containing an
  // endpoint as a 2-cover
  Graph one_edge(4);
  one_edge.add_edge(0, 1);
  auto cs = covers_of_size(one_edge, 2);
  CHECK(cs.size() == 5);  // C(4,2)=6 pairs, only {2,3} misses the edge
}
