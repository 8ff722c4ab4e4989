#pragma once

#include <array>
#include <optional>
#include <vector>

#include "icover/graph.hpp"

namespace icover {

/// Where a single outside vertex lands relative to an indecomposable induced
/// base G[X]: extending (keeps the extension indecomposable), uniform toward
/// X, or attached to a unique base vertex it mimics. Computed independently
/// per category so the partition property can be checked, not assumed.
struct OutsideMembership {
  bool extends = false;
  bool uniform_nonadjacent = false;
  bool uniform_adjacent = false;
  Row attach_nonadjacent = 0;  // base vertices u with {u,v} an interval, u-v nonedge
  Row attach_adjacent = 0;     // same with u-v edge
  int category_count() const;
};

OutsideMembership outside_membership(const Graph& g, const VertexSet& x, int v);

/// The partition of V \ X induced by an indecomposable base G[X] (|X| >= 4):
/// block "ext" plus the uniform and attached blocks, refined by adjacency
/// sign. Construction asserts the partition property.
struct XPartition {
  VertexSet base;
  VertexSet ext;
  VertexSet hull_minus;  // nonadjacent to all of X
  VertexSet hull_plus;   // adjacent to all of X
  std::array<Row, kMaxVertices> attached_minus{};  // per base vertex u
  std::array<Row, kMaxVertices> attached_plus{};

  VertexSet hull() const;             // hull_minus | hull_plus
  Row attached(int u) const;          // attached_minus[u] | attached_plus[u]
  Row outside_bits() const;
};

XPartition compute_partition(const Graph& g, const VertexSet& x);

/// Graph on V \ X (ascending relabel) whose edges are the outside pairs that
/// keep the base extension indecomposable.
struct OutsideGraph {
  Graph graph;
  std::vector<int> old_of_new;
  std::array<int, kMaxVertices> new_of_old;
};

OutsideGraph outside_graph(const Graph& g, const VertexSet& x);

/// True iff every vertex outside x is critical in g (g indecomposable, x a
/// proper subset with indecomposable base of size >= 4).
bool is_critical_according_to(const Graph& g, const VertexSet& x);

enum class KFormStatus { Evaluated, OutsideGraphNotConnected, OutsideTooSmall };

/// Per-condition evaluation of the two partial-criticality criteria. The
/// H block is always evaluated; the K block only under its own hypotheses
/// (at least 3 outside vertices, connected outside graph). The conjunction
/// of either block is expected to match (indecomposable && critical
/// according to the base) -- checked by the verification suite, never
/// assumed here.
struct CriticalityReport {
  bool h1 = false;  // uniform and attached blocks carry a single adjacency sign
  bool h2 = false;  // nonadjacent-sign blocks induce empty graphs, adjacent-sign complete
  bool h3 = false;  // every outside-graph component extends the base to an
                    // indecomposable graph that is critical according to it
  bool gx_connected = false;
  KFormStatus k_status = KFormStatus::OutsideTooSmall;
  bool k1 = false;  // no extending outside vertex
  bool k2 = false;  // same as h1
  bool k3 = false;  // same as h2
  bool k4 = false;  // outside graph critical and bipartite across the blocks
  bool h_all() const { return h1 && h2 && h3; }
  bool k_all() const { return k1 && k2 && k3 && k4; }
};

CriticalityReport check_partial_criticality_conditions(const Graph& g,
                                                       const VertexSet& x);

}  // namespace icover
