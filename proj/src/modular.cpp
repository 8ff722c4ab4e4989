#include "icover/modular.hpp"

#include <algorithm>
#include <bit>

#include "icover/iso.hpp"

namespace icover {

bool is_interval(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count())
    fail(ErrorKind::VertexOutOfRange, "set universe does not match graph");
  Row xb = x.bits();
  for (Row m = g.vertex_mask() & ~xb; m; m &= m - 1) {
    Row t = g.neighbors(std::countr_zero(m)) & xb;
    if (t != 0 && t != xb) return false;
  }
  return true;
}

namespace {

// Mask-level closure; the public wrapper validates.
Row closure_bits(const Graph& g, Row seed) {
  Row full = g.vertex_mask();
  Row s = seed;
  for (;;) {
    Row add = 0;
    for (Row m = full & ~s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      Row t = g.neighbors(v) & s;
      if (t != 0 && t != s) add |= vbit(v);
    }
    if (add == 0) return s;
    s |= add;
    if (s == full) return s;
  }
}

}  // namespace

VertexSet interval_closure(const Graph& g, const VertexSet& seed) {
  if (seed.universe() != g.vertex_count())
    fail(ErrorKind::VertexOutOfRange, "seed universe does not match graph");
  if (seed.empty())
    fail(ErrorKind::UsageError, "interval closure needs a nonempty seed");
  return VertexSet(closure_bits(g, seed.bits()), g.vertex_count());
}

bool is_indecomposable(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 2) return true;
  Row full = g.vertex_mask();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (closure_bits(g, vbit(a) | vbit(b)) != full) return false;
  return true;
}

std::vector<VertexSet> nontrivial_intervals(const Graph& g) {
  int n = g.vertex_count();
  if (n > 16)
    fail(ErrorKind::SizeCapExceeded,
         "interval enumeration capped at 16 vertices");
  std::vector<VertexSet> out;
  Row full = g.vertex_mask();
  for (Row s = 3; s < full; ++s) {
    if (std::popcount(s) < 2) continue;
    VertexSet cand(s, n);
    if (is_interval(g, cand)) out.push_back(cand);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

std::optional<VertexSet> witness_interval(const Graph& g) {
  int n = g.vertex_count();
  Row full = g.vertex_mask();
  if (n <= 2) return std::nullopt;
  std::optional<Row> best;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Row c = closure_bits(g, vbit(a) | vbit(b));
      if (c == full) continue;
      if (!best || std::popcount(c) < std::popcount(*best) ||
          (std::popcount(c) == std::popcount(*best) && lex_less_bits(c, *best)))
        best = c;
    }
  if (!best) return std::nullopt;
  return VertexSet(*best, n);
}

VertexSet critical_vertices(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) fail(ErrorKind::SizeTooSmall, "need at least 2 vertices");
  if (!is_indecomposable(g))
    fail(ErrorKind::NotIndecomposable, "graph is not indecomposable");
  Row crit = 0;
  for (int v = 0; v < n; ++v)
    if (!is_indecomposable(remove_vertex(g, v))) crit |= vbit(v);
  return VertexSet(crit, n);
}

bool is_critical_graph(const Graph& g) {
  return critical_vertices(g).bits() == g.vertex_mask();
}

bool is_pair_minimal(const Graph& g, int a, int b, MinimalityMode mode) {
  int n = g.vertex_count();
  if (n < 4) fail(ErrorKind::SizeTooSmall, "pair-minimality needs >= 4 vertices");
  if (a == b || a < 0 || b < 0 || a >= n || b >= n)
    fail(ErrorKind::VertexOutOfRange, "need two distinct vertices of g");
  if (!is_indecomposable(g))
    fail(ErrorKind::NotIndecomposable, "graph is not indecomposable");

  if (mode == MinimalityMode::FastPinned)
    return pinned_pq_isomorphism(g, a, b).has_value();

  // Definition, scanned by descending subset size so the common non-minimal
  // case exits after a few induced tests.
  Row pair_bits = vbit(a) | vbit(b);
  Row free_bits = g.vertex_mask() & ~pair_bits;
  std::vector<Row> free_subsets;
  int f = std::popcount(free_bits);
  free_subsets.reserve(std::size_t{1} << f);
  for (Row s = free_bits;; s = (s - 1) & free_bits) {
    free_subsets.push_back(s);
    if (s == 0) break;
  }
  std::sort(free_subsets.begin(), free_subsets.end(),
            [](Row x, Row y) { return std::popcount(x) > std::popcount(y); });
  for (Row s : free_subsets) {
    Row x = s | pair_bits;
    int size = std::popcount(x);
    if (size >= n || size < 3) continue;
    if (is_indecomposable(remove_vertices(g, g.vertex_mask() & ~x)))
      return false;
  }
  return true;
}

}  // namespace icover
