#pragma once

#include <optional>
#include <vector>

#include "icover/graph.hpp"

namespace icover {

/// Adjacency-preserving bijection g -> h, or absent. Deterministic: the
/// lexicographically least bijection found by degree-pruned backtracking
/// (so (g, g) always yields the identity). Sized for n <= 20.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

enum class PQFamily { Path, QuasiPath };

/// Witness that g (or its complement) is a path or quasi-path with {a, b}
/// pinned onto the two distinguished end labels {1, n} (0-based {0, n-1}).
struct PinnedPQ {
  PQFamily family;
  bool complemented;
  std::vector<int> position_of;  // vertex of g -> 0-based canonical position
};

/// Finds an isomorphism of g or complement(g) onto the path P_n or the
/// quasi-path Q_n (n = v(g)) mapping {a, b} onto the ends {1, n}. Walks the
/// forced structure from the candidate endpoints instead of searching; tries
/// the path first, then the quasi-path, then the same two on the complement.
/// Absent on failure (also for n < 4 or a == b).
std::optional<PinnedPQ> pinned_pq_isomorphism(const Graph& g, int a, int b);

}  // namespace icover
