#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icover/graph.hpp"

namespace icover {

/// The indecomposability graph: same vertices, an edge {x, y} exactly when
/// deleting both leaves an indecomposable graph. Defined (and enforced) only
/// for indecomposable input. Pairs are evaluated in ascending lexicographic
/// order; each deletion test is independent.
Graph indecomposability_graph(const Graph& g);

/// Vertex-cover test: every edge of ig meets s.
bool is_set_covered(const Graph& ig, const VertexSet& s);

/// All covering subsets of size exactly k (k <= 3), lexicographic. Supersets
/// of smaller covers padded up to size k appear too.
std::vector<VertexSet> covers_of_size(const Graph& ig, int k);

/// Lexicographically least covering pair, or absent. Vacuous (0,1) only when
/// the graph is edgeless with >= 2 vertices.
std::optional<std::pair<int, int>> first_cover_pair(const Graph& ig);

}  // namespace icover
