#include "icover/iso.hpp"

#include <algorithm>
#include <bit>

#include "icover/families.hpp"

namespace icover {

namespace {

bool extend(const Graph& g, const Graph& h, std::vector<int>& map,
            Row used, int next) {
  int n = g.vertex_count();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used & vbit(cand)) continue;
    if (h.degree(cand) != g.degree(next)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (g.adjacent(next, prev) != h.adjacent(cand, map[prev])) ok = false;
    if (!ok) continue;
    map[next] = cand;
    if (extend(g, h, map, used | vbit(cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  int n = g.vertex_count();
  if (n != h.vertex_count()) return std::nullopt;
  if (g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  std::vector<int> map(n, -1);
  if (extend(g, h, map, 0, 0)) return map;
  return std::nullopt;
}

namespace {

// Builds the candidate position sequence for a path walk: start at `start`,
// repeatedly take the unique unvisited neighbor outside `excluded`. Returns
// the visit order or empty on any fork/dead end before `want` vertices.
std::vector<int> forced_walk(const Graph& g, int start, Row excluded, int want) {
  std::vector<int> order;
  Row visited = excluded | vbit(start);
  int cur = start;
  order.push_back(cur);
  while (static_cast<int>(order.size()) < want) {
    Row next = g.neighbors(cur) & ~visited;
    if (std::popcount(next) != 1) return {};
    cur = std::countr_zero(next);
    visited |= vbit(cur);
    order.push_back(cur);
  }
  return order;
}

bool matches_under(const Graph& g, const Graph& target,
                   const std::vector<int>& position_of) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    Row mapped = 0;
    for (Row m = g.neighbors(v); m; m &= m - 1)
      mapped |= vbit(position_of[std::countr_zero(m)]);
    if (mapped != target.neighbors(position_of[v])) return false;
  }
  return true;
}

std::optional<std::vector<int>> pinned_path_map(const Graph& g, int a, int b) {
  int n = g.vertex_count();
  if (g.degree(a) != 1) return std::nullopt;
  std::vector<int> order = forced_walk(g, a, 0, n);
  if (order.empty() || order.back() != b) return std::nullopt;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  if (!matches_under(g, make_path(n), pos)) return std::nullopt;
  return pos;
}

// Quasi-path with a -> position 0 and b -> position n-1: b must be the
// pendant vertex, its neighbor plays position n-2, and the remaining
// vertices must walk as a path from a.
std::optional<std::vector<int>> pinned_quasi_map(const Graph& g, int a, int b) {
  int n = g.vertex_count();
  if (g.degree(b) != 1) return std::nullopt;
  int c = std::countr_zero(g.neighbors(b));
  if (c == a || !g.adjacent(c, a)) return std::nullopt;
  std::vector<int> order = forced_walk(g, a, vbit(c) | vbit(b), n - 2);
  if (order.empty()) return std::nullopt;
  std::vector<int> pos(n);
  for (int i = 0; i < n - 2; ++i) pos[order[i]] = i;
  pos[c] = n - 2;
  pos[b] = n - 1;
  if (!matches_under(g, make_q(n), pos)) return std::nullopt;
  return pos;
}

}  // namespace

std::optional<PinnedPQ> pinned_pq_isomorphism(const Graph& g, int a, int b) {
  int n = g.vertex_count();
  if (n < 4 || a == b || a < 0 || b < 0 || a >= n || b >= n)
    return std::nullopt;

  for (bool complemented : {false, true}) {
    const Graph h = complemented ? complement(g) : g;
    // Path: the end-reversal symmetry makes one orientation enough.
    if (auto pos = pinned_path_map(h, a, b))
      return PinnedPQ{PQFamily::Path, complemented, std::move(*pos)};
    // Quasi-path: no symmetry swaps the two pinned ends, so try both.
    if (auto pos = pinned_quasi_map(h, a, b))
      return PinnedPQ{PQFamily::QuasiPath, complemented, std::move(*pos)};
    if (auto pos = pinned_quasi_map(h, b, a))
      return PinnedPQ{PQFamily::QuasiPath, complemented, std::move(*pos)};
  }
  return std::nullopt;
}

}  // namespace icover
