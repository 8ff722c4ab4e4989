#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icover/extension.hpp"
#include "icover/families.hpp"
#include "icover/modular.hpp"
#include "test_util.hpp"

using namespace icover;
using namespace icover::testutil;

TEST_CASE("outside vertices classify into the three block kinds") {
  // whole path: the last vertex extends the base path
  {
    Graph p6 = make_path(6);
    XPartition p = compute_partition(p6, paper_set({1, 2, 3, 4, 5}, 6));
    CHECK(p.ext == paper_set({6}, 6));
    CHECK(p.hull().empty());
  }
  // isolated outside vertex: bare uniform block
  {
    Graph g(6);
    for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
    XPartition p = compute_partition(g, paper_set({1, 2, 3, 4, 5}, 6));
    CHECK(p.hull_minus == paper_set({6}, 6));
    CHECK(p.ext.empty());
  }
  // neighborhood {2}: mimics label 1 without touching it
  {
    Graph g(6);
    for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
    g.add_edge(5, 1);
    XPartition p = compute_partition(g, paper_set({1, 2, 3, 4, 5}, 6));
    CHECK(p.attached_minus[0] == vbit(5));
    CHECK(p.attached(0) == vbit(5));
    CHECK(p.hull().empty());
    CHECK(p.ext.empty());
  }
}

TEST_CASE("partition preconditions") {
  Graph p6 = make_path(6);
  CHECK_THROWS_AS(compute_partition(p6, paper_set({1, 2, 3}, 6)), Error);
  try {
    compute_partition(p6, paper_set({1, 2, 3}, 6));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseTooSmall);
  }
  try {
    compute_partition(complement(Graph(6)), paper_set({1, 2, 3, 4}, 6));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseNotIndecomposable);
  }
}

TEST_CASE("partition blocks are disjoint and cover the outside") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 300) {
    int n = 6 + static_cast<int>(rng() % 6);  // 6..11
    Graph g = random_graph(n, rng);
    int bs = 4 + static_cast<int>(rng() % 2);
    Row sel = 0;
    while (std::popcount(sel) < bs) sel |= vbit(static_cast<int>(rng() % n));
    if (!is_indecomposable(remove_vertices(g, g.vertex_mask() & ~sel))) continue;
    VertexSet x(sel, n);
    XPartition p = compute_partition(g, x);  // asserts exactly-one internally
    Row seen = p.ext.bits() | p.hull_minus.bits() | p.hull_plus.bits();
    for (Row t = sel; t; t &= t - 1) {
      int u = std::countr_zero(t);
      CHECK((seen & p.attached(u)) == 0);
      seen |= p.attached(u);
    }
    CHECK(seen == (g.vertex_mask() & ~sel));
    ++done;
  }
}

TEST_CASE("outside graph edges mark indecomposable two-vertex extensions") {
  // the 7-path over its 5-prefix: the two leftovers extend it jointly
  {
    Graph p7 = make_path(7);
    OutsideGraph og = outside_graph(p7, paper_set({1, 2, 3, 4, 5}, 7));
    CHECK(og.graph.vertex_count() == 2);
    CHECK(og.graph.adjacent(0, 1));
  }
  // two bare outside vertices never join
  {
    Graph g(7);
    for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
    g.add_edge(5, 6);
    OutsideGraph og = outside_graph(g, paper_set({1, 2, 3, 4, 5}, 7));
    CHECK(!og.graph.adjacent(0, 1));
  }
  // deficit-5 members: outside graph is the 5-path
  for (ClassId c : {ClassId::Pm5, ClassId::Qm5}) {
    int n = class_min_size(c);
    std::vector<Graph> members = enumerate_class(c, n);
    REQUIRE(!members.empty());
    for (int idx : {0, static_cast<int>(members.size()) - 1}) {
      OutsideGraph og =
          outside_graph(members[idx], VertexSet(mask_below(n - 5), n));
      CHECK(are_isomorphic(og.graph, make_path(5)).has_value());
    }
  }
  try {
    outside_graph(make_path(6), paper_set({1, 2, 3, 4, 5, 6}, 6));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutsideTooSmall);
  }
}

TEST_CASE("criticality according to a base") {
  // deficit-5 member with its top vertex removed is critical according to
  // the base prefix
  {
    int n = 14;
    Graph g = enumerate_class(ClassId::Pm5, n)[0];
    Graph h = remove_vertex(g, n - 1);
    CHECK(is_critical_according_to(h, VertexSet(mask_below(9), 13)));
  }
  {
    Graph p7 = make_path(7);
    CHECK(!is_critical_according_to(p7, paper_set({1, 2, 3, 4, 5}, 7)));
  }
  try {
    is_critical_according_to(make_path(6), VertexSet::full_set(6));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutsideTooSmall);
  }
}

TEST_CASE("condition report localizes failures") {
  // deficit-5 member minus its top vertex: the connected form holds in full
  {
    int n = 14;
    Graph g = enumerate_class(ClassId::Pm5, n)[0];
    Graph h = remove_vertex(g, n - 1);
    CriticalityReport rep =
        check_partial_criticality_conditions(h, VertexSet(mask_below(9), 13));
    CHECK(rep.h1);
    CHECK(rep.h2);
    CHECK(rep.h3);
    CHECK(rep.k_status == KFormStatus::Evaluated);
    CHECK(rep.k1);
    CHECK(rep.k2);
    CHECK(rep.k3);
    CHECK(rep.k4);
  }
  // 7-path over its 5-prefix: the recursive component condition fails
  // because the far endpoint is not critical
  {
    CriticalityReport rep = check_partial_criticality_conditions(
        make_path(7), paper_set({1, 2, 3, 4, 5}, 7));
    CHECK(!rep.h3);
  }
  // two mutually adjacent bare-attached vertices break the emptiness rule
  {
    Graph g(7);
    for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
    g.add_edge(5, 1);  // mimics label 1
    g.add_edge(6, 1);  // mimics label 1
    g.add_edge(5, 6);
    CriticalityReport rep =
        check_partial_criticality_conditions(g, paper_set({1, 2, 3, 4, 5}, 7));
    CHECK(!rep.h2);
  }
}

TEST_CASE("condition conjunctions match the definitional evaluation") {
  std::mt19937_64 rng(29);
  Graph base = make_path(5);
  for (int t = 0; t < 3000; ++t) {
    int o = 1 + static_cast<int>(rng() % 3);
    int n = 5 + o;
    Graph g(n);
    for (auto [a, b] : base.edges()) g.add_edge(a, b);
    for (int v = 5; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() & 1) g.add_edge(u, v);
    VertexSet x(mask_below(5), n);
    CriticalityReport rep = check_partial_criticality_conditions(g, x);
    bool rhs = is_indecomposable(g);
    if (rhs)
      for (Row m = g.vertex_mask() & ~x.bits(); m && rhs; m &= m - 1)
        if (is_indecomposable(remove_vertex(g, std::countr_zero(m)))) rhs = false;
    CHECK(rep.h_all() == rhs);
    if (rep.k_status == KFormStatus::Evaluated) CHECK(rep.k_all() == rhs);
    if (rhs && n - 5 >= 2) {
      OutsideGraph og = outside_graph(g, x);
      for (int v = 0; v < og.graph.vertex_count(); ++v)
        CHECK(og.graph.degree(v) > 0);
    }
  }
}
