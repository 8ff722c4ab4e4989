#include "icover/indec.hpp"

#include <bit>

#include "icover/modular.hpp"

namespace icover {

Graph indecomposability_graph(const Graph& g) {
  if (!is_indecomposable(g))
    fail(ErrorKind::NotIndecomposable, "graph is not indecomposable");
  int n = g.vertex_count();
  Graph ig(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (is_indecomposable(remove_vertices(g, vbit(a) | vbit(b))))
        ig.add_edge(a, b);
  return ig;
}

bool is_set_covered(const Graph& ig, const VertexSet& s) {
  if (s.universe() != ig.vertex_count())
    fail(ErrorKind::VertexOutOfRange, "set universe does not match graph");
  int n = ig.vertex_count();
  Row sb = s.bits();
  for (int a = 0; a < n; ++a) {
    if (sb & vbit(a)) continue;
    if (ig.neighbors(a) & ~sb & ~mask_below(a + 1)) return false;
  }
  return true;
}

namespace {

void enumerate_k_subsets(int n, int k, int start, Row acc,
                         std::vector<Row>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int v = start; v <= n - k; ++v)
    enumerate_k_subsets(n, k - 1, v + 1, acc | vbit(v), out);
}

}  // namespace

std::vector<VertexSet> covers_of_size(const Graph& ig, int k) {
  if (k > 3) fail(ErrorKind::KTooLarge, "cover search capped at k = 3");
  if (k < 0) fail(ErrorKind::UsageError, "negative cover size");
  int n = ig.vertex_count();
  std::vector<Row> subsets;
  if (k <= n) enumerate_k_subsets(n, k, 0, 0, subsets);
  std::vector<VertexSet> out;
  for (Row s : subsets) {
    VertexSet cand(s, n);
    if (is_set_covered(ig, cand)) out.push_back(cand);
  }
  return out;  // generation order is already lexicographic
}

std::optional<std::pair<int, int>> first_cover_pair(const Graph& ig) {
  int n = ig.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (is_set_covered(ig, VertexSet(vbit(a) | vbit(b), n)))
        return std::make_pair(a, b);
  return std::nullopt;
}

}  // namespace icover
