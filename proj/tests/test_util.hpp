#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "icover/families.hpp"
#include "icover/graph.hpp"
#include "icover/iso.hpp"

namespace icover::testutil {

// Sets and edges written with the 1-based labels used throughout the
// write-ups; converted to the library's 0-based ids here.
inline VertexSet paper_set(std::initializer_list<int> labels, int n) {
  Row bits = 0;
  for (int l : labels) bits |= vbit(l - 1);
  return VertexSet(bits, n);
}

inline Graph paper_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
  return g;
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() & 1) g.add_edge(a, b);
  return g;
}

inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline Graph graph_of_code(int n, std::uint32_t code) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code & (std::uint32_t{1} << pair_bit(i, j))) g.add_edge(i, j);
  return g;
}

// Brute-force pinned-structure oracle: tries every bijection of g or its
// complement onto the path / quasi-path that maps {a, b} onto the two end
// labels. Exponential; for n <= 7 only.
inline bool pinned_oracle(const Graph& g, int a, int b) {
  int n = g.vertex_count();
  if (n < 4 || a == b) return false;
  for (bool quasi : {false, true}) {
    Graph target = quasi ? make_q(n) : make_path(n);
    for (bool comp : {false, true}) {
      Graph h = comp ? complement(g) : g;
      for (auto [fa, fb] : {std::pair<int, int>{0, n - 1},
                            std::pair<int, int>{n - 1, 0}}) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
          if (v != a && v != b) rest.push_back(v);
        std::vector<int> slots;
        for (int p = 1; p + 1 < n; ++p) slots.push_back(p);
        std::sort(rest.begin(), rest.end());
        do {
          std::vector<int> pos(n, -1);
          pos[a] = fa;
          pos[b] = fb;
          for (std::size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = slots[i];
          bool ok = true;
          for (int x = 0; x < n && ok; ++x)
            for (int y = x + 1; y < n && ok; ++y)
              if (h.adjacent(x, y) != target.adjacent(pos[x], pos[y])) ok = false;
          if (ok) return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
    }
  }
  return false;
}

// Ground-truth nontrivial intervals by raw subset enumeration, independent
// of the library's interval test.
inline std::vector<Row> brute_nontrivial_intervals(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Row> out;
  Row full = g.vertex_mask();
  for (Row s = 0; s < full; ++s) {
    int sz = std::popcount(s);
    if (sz < 2 || sz >= n) continue;
    bool interval = true;
    for (Row m = full & ~s; m && interval; m &= m - 1) {
      Row t = g.neighbors(std::countr_zero(m)) & s;
      if (t != 0 && t != s) interval = false;
    }
    if (interval) out.push_back(s);
  }
  return out;
}

}  // namespace icover::testutil
