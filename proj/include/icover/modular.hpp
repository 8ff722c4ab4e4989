#pragma once

#include <optional>
#include <vector>

#include "icover/graph.hpp"

namespace icover {

/// True iff every vertex outside x is adjacent to all of x or to none of it.
/// The empty set, singletons and the whole vertex set are always intervals.
bool is_interval(const Graph& g, const VertexSet& x);

/// Inclusion-smallest interval of g containing seed (seed nonempty), computed
/// by adding outside vertices that distinguish two current members until the
/// set stops growing.
VertexSet interval_closure(const Graph& g, const VertexSet& seed);

/// A graph is indecomposable when its only intervals are trivial. Decided by
/// pair closures: g is decomposable iff some pair's closure is a proper
/// nontrivial interval. Graphs on <= 2 vertices count as indecomposable by
/// convention; 3-vertex graphs never are.
bool is_indecomposable(const Graph& g);

/// All intervals I with 1 < |I| < n, ordered by (size, lexicographic
/// members). Exponential subset sweep, capped at 16 vertices.
std::vector<VertexSet> nontrivial_intervals(const Graph& g);

/// Smallest (size, then lex) nontrivial interval, or absent when g is
/// indecomposable. Unlike nontrivial_intervals this has no size cap: the
/// candidates are the pair closures.
std::optional<VertexSet> witness_interval(const Graph& g);

/// Vertices whose deletion leaves a decomposable graph. Requires g
/// indecomposable with at least 2 vertices.
VertexSet critical_vertices(const Graph& g);

/// True iff every vertex of the (indecomposable) graph is critical.
bool is_critical_graph(const Graph& g);

enum class MinimalityMode {
  FastPinned,  // structural walk onto a pinned path / quasi-path
  BruteForce,  // the definition: every proper superset-of-{a,b} subgraph of
               // size >= 3 is decomposable
};

/// Pair-minimality of an indecomposable graph on >= 4 vertices: every proper
/// induced subgraph of size >= 3 containing {a,b} is decomposable. Both modes
/// must agree; the brute mode exists so the equivalence can be checked.
bool is_pair_minimal(const Graph& g, int a, int b,
                     MinimalityMode mode = MinimalityMode::FastPinned);

}  // namespace icover
