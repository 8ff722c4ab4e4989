#include "icover/extension.hpp"

#include <bit>

#include "icover/modular.hpp"

namespace icover {

namespace {

void check_base(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count() || (x.bits() & ~g.vertex_mask()) != 0)
    fail(ErrorKind::VertexOutOfRange, "base not within the graph's vertices");
  if (x.size() < 4) fail(ErrorKind::BaseTooSmall, "base needs >= 4 vertices");
  if (!is_indecomposable(remove_vertices(g, g.vertex_mask() & ~x.bits())))
    fail(ErrorKind::BaseNotIndecomposable, "induced base is decomposable");
}

}  // namespace

int OutsideMembership::category_count() const {
  int c = 0;
  if (extends) ++c;
  if (uniform_nonadjacent) ++c;
  if (uniform_adjacent) ++c;
  c += std::popcount(attach_nonadjacent | attach_adjacent);
  return c;
}

OutsideMembership outside_membership(const Graph& g, const VertexSet& x, int v) {
  OutsideMembership m;
  Row xb = x.bits();
  Row vrow = g.neighbors(v) & xb;
  m.extends = is_indecomposable(
      remove_vertices(g, g.vertex_mask() & ~(xb | vbit(v))));
  m.uniform_nonadjacent = vrow == 0;
  m.uniform_adjacent = vrow == xb;
  for (Row t = xb; t; t &= t - 1) {
    int u = std::countr_zero(t);
    // {u, v} is an interval of G[X + v] iff v mirrors u on X - u.
    if (((g.neighbors(u) ^ g.neighbors(v)) & (xb & ~vbit(u))) != 0) continue;
    if (g.adjacent(u, v))
      m.attach_adjacent |= vbit(u);
    else
      m.attach_nonadjacent |= vbit(u);
  }
  return m;
}

VertexSet XPartition::hull() const {
  return VertexSet(hull_minus.bits() | hull_plus.bits(), base.universe());
}

Row XPartition::attached(int u) const {
  return attached_minus[u] | attached_plus[u];
}

Row XPartition::outside_bits() const {
  Row all = base.universe() == 0 ? 0 : mask_below(base.universe());
  return all & ~base.bits();
}

XPartition compute_partition(const Graph& g, const VertexSet& x) {
  check_base(g, x);
  int n = g.vertex_count();
  XPartition p;
  p.base = x;
  Row ext = 0, hm = 0, hp = 0;
  for (Row m = g.vertex_mask() & ~x.bits(); m; m &= m - 1) {
    int v = std::countr_zero(m);
    OutsideMembership mem = outside_membership(g, x, v);
    if (mem.category_count() != 1)
      fail(ErrorKind::InternalAnomaly,
           "outside vertex does not land in exactly one partition block");
    if (mem.extends) ext |= vbit(v);
    else if (mem.uniform_nonadjacent) hm |= vbit(v);
    else if (mem.uniform_adjacent) hp |= vbit(v);
    else {
      Row both = mem.attach_nonadjacent | mem.attach_adjacent;
      int u = std::countr_zero(both);
      if (mem.attach_adjacent) p.attached_plus[u] |= vbit(v);
      else p.attached_minus[u] |= vbit(v);
    }
  }
  p.ext = VertexSet(ext, n);
  p.hull_minus = VertexSet(hm, n);
  p.hull_plus = VertexSet(hp, n);
  return p;
}

OutsideGraph outside_graph(const Graph& g, const VertexSet& x) {
  check_base(g, x);
  Row outside = g.vertex_mask() & ~x.bits();
  if (std::popcount(outside) < 2)
    fail(ErrorKind::OutsideTooSmall, "need at least 2 outside vertices");
  OutsideGraph out;
  out.new_of_old.fill(-1);
  out.old_of_new = VertexSet(outside, g.vertex_count()).members();
  int m = static_cast<int>(out.old_of_new.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i) out.new_of_old[out.old_of_new[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Row keep = x.bits() | vbit(out.old_of_new[i]) | vbit(out.old_of_new[j]);
      if (is_indecomposable(remove_vertices(g, g.vertex_mask() & ~keep)))
        out.graph.add_edge(i, j);
    }
  return out;
}

bool is_critical_according_to(const Graph& g, const VertexSet& x) {
  check_base(g, x);
  Row outside = g.vertex_mask() & ~x.bits();
  if (outside == 0)
    fail(ErrorKind::OutsideTooSmall, "base must be a proper subset");
  if (!is_indecomposable(g))
    fail(ErrorKind::NotIndecomposable, "graph is not indecomposable");
  for (Row m = outside; m; m &= m - 1)
    if (is_indecomposable(remove_vertex(g, std::countr_zero(m)))) return false;
  return true;
}

namespace {

// Connected components of a bit-row graph, as vertex masks.
std::vector<Row> components(const Graph& g) {
  std::vector<Row> comps;
  Row seen = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen & vbit(v)) continue;
    Row comp = vbit(v);
    for (;;) {
      Row grow = comp;
      for (Row t = comp; t; t &= t - 1) grow |= g.neighbors(std::countr_zero(t));
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool block_empty(const Graph& g, Row block) {
  for (Row t = block; t; t &= t - 1)
    if (g.neighbors(std::countr_zero(t)) & block) return false;
  return true;
}

bool block_complete(const Graph& g, Row block) {
  for (Row t = block; t; t &= t - 1) {
    int v = std::countr_zero(t);
    if ((g.neighbors(v) & block) != (block & ~vbit(v))) return false;
  }
  return true;
}

}  // namespace

CriticalityReport check_partial_criticality_conditions(const Graph& g,
                                                       const VertexSet& x) {
  check_base(g, x);
  Row outside = g.vertex_mask() & ~x.bits();
  if (outside == 0)
    fail(ErrorKind::OutsideTooSmall, "base must be a proper subset");

  XPartition p = compute_partition(g, x);
  CriticalityReport rep;

  rep.h1 = !(p.hull_minus.bits() != 0 && p.hull_plus.bits() != 0);
  for (Row t = x.bits(); rep.h1 && t; t &= t - 1) {
    int u = std::countr_zero(t);
    if (p.attached_minus[u] != 0 && p.attached_plus[u] != 0) rep.h1 = false;
  }

  rep.h2 = block_empty(g, p.hull_minus.bits()) &&
           block_complete(g, p.hull_plus.bits());
  for (Row t = x.bits(); rep.h2 && t; t &= t - 1) {
    int u = std::countr_zero(t);
    if (!block_empty(g, p.attached_minus[u]) ||
        !block_complete(g, p.attached_plus[u]))
      rep.h2 = false;
  }

  // Outside graph; a single outside vertex yields the edgeless 1-vertex case.
  Graph gx;
  std::vector<int> gx_old_of_new;
  if (std::popcount(outside) >= 2) {
    OutsideGraph og = outside_graph(g, x);
    gx = og.graph;
    gx_old_of_new = og.old_of_new;
  } else {
    gx = Graph(1);
    gx_old_of_new = {std::countr_zero(outside)};
  }
  std::vector<Row> comps = components(gx);
  rep.gx_connected = comps.size() == 1;

  rep.h3 = true;
  for (Row comp : comps) {
    Row comp_old = 0;
    for (Row t = comp; t; t &= t - 1)
      comp_old |= vbit(gx_old_of_new[std::countr_zero(t)]);
    Induced sub = induced_subgraph(g, VertexSet(x.bits() | comp_old,
                                                g.vertex_count()));
    if (!is_indecomposable(sub.graph)) {
      rep.h3 = false;
      break;
    }
    for (Row t = comp_old; t; t &= t - 1) {
      int v_new = sub.new_of_old[std::countr_zero(t)];
      if (is_indecomposable(remove_vertex(sub.graph, v_new))) {
        rep.h3 = false;
        break;
      }
    }
    if (!rep.h3) break;
  }

  if (std::popcount(outside) < 3) {
    rep.k_status = KFormStatus::OutsideTooSmall;
  } else if (!rep.gx_connected) {
    rep.k_status = KFormStatus::OutsideGraphNotConnected;
  } else {
    rep.k_status = KFormStatus::Evaluated;
    rep.k1 = p.ext.empty();
    rep.k2 = rep.h1;
    rep.k3 = rep.h2;
    // Critical outside graph, bipartite across the coarse blocks
    // (uniform block unsplit, one block per attachment vertex).
    bool crit = is_indecomposable(gx);
    if (crit)
      for (int v = 0; v < gx.vertex_count() && crit; ++v)
        if (is_indecomposable(remove_vertex(gx, v))) crit = false;
    std::vector<Row> blocks_old;
    if (p.ext.bits()) blocks_old.push_back(p.ext.bits());
    if (p.hull().bits()) blocks_old.push_back(p.hull().bits());
    for (Row t = x.bits(); t; t &= t - 1) {
      Row a = p.attached(std::countr_zero(t));
      if (a) blocks_old.push_back(a);
    }
    bool bipartite = blocks_old.size() == 2;
    if (bipartite) {
      for (Row block_old : blocks_old) {
        Row block_new = 0;
        for (Row t = block_old; t; t &= t - 1) {
          int idx = 0;
          while (gx_old_of_new[idx] != std::countr_zero(t)) ++idx;
          block_new |= vbit(idx);
        }
        if (!block_empty(gx, block_new)) bipartite = false;
      }
    }
    rep.k4 = crit && bipartite;
  }
  return rep;
}

}  // namespace icover
