#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icover/graph.hpp"

namespace icover {

/// P_n: the path on labels 1..n (internally 0..n-1, consecutive ids
/// adjacent).
Graph make_path(int n);

/// Q_n (n >= 4): the path P_{n-2} plus a vertex n-1 adjacent to everything
/// except n-2, plus the pendant vertex n attached to n-1.
Graph make_q(int n);

/// The half-graph on two_n vertices (two_n even, >= 4): even vertex 2k is
/// adjacent to odd vertex 2l+1 exactly when k <= l. Stored 0-based like all
/// graphs here; the I/O layer shifts labels up by one.
Graph make_halfgraph(int two_n);

/// The eight graph classes of the 2-covered classification. The suffix -k
/// names the deficit: those graphs restrict to a literal path / quasi-path
/// after deleting the top k labels, and their indecomposability graph is
/// covered by {1, n-k}.
enum class ClassId { P, Q, Pm1, Qm1, Pm3, Qm3, Pm5, Qm5 };

inline constexpr ClassId kAllClassIds[] = {
    ClassId::P,   ClassId::Q,   ClassId::Pm1, ClassId::Qm1,
    ClassId::Pm3, ClassId::Qm3, ClassId::Pm5, ClassId::Qm5};

const char* class_name(ClassId c);
std::optional<ClassId> parse_class_id(const std::string& name);
int class_min_size(ClassId c);
int class_deficit(ClassId c);  // 0, 1, 3 or 5
bool class_uses_quasi_base(ClassId c);
/// The distinguished cover pair {1, n-k} in 0-based ids: {0, n-k-1}.
std::pair<int, int> class_cover_pair(ClassId c, int n);

struct PredicateResult {
  bool ok = false;
  std::string reason;  // first failed condition; empty on success
  explicit operator bool() const { return ok; }
};

/// Literal membership test in a class's canonical frame. The frame itself
/// (base prefix equal to the literal path / quasi-path) is a precondition
/// and raises WrongFrame; the class's combinatorial conditions are evaluated
/// verbatim and the first failure is reported. The -3 and -5 classes demand
/// exactly one of their listed shape assertions; holding several is a
/// failure, not a success.
PredicateResult class_predicate(const Graph& g, ClassId c);

/// Every graph of the class at size n, canonical frame, deterministic order.
/// For the -1 classes this walks the listed neighborhood shapes; for -3/-5
/// it walks all block assignments and adjacency completions consistent with
/// the class text and keeps those the predicate accepts.
std::vector<Graph> enumerate_class(ClassId c, int n);

/// `budget` samples drawn uniformly (with replacement) from the same
/// parameter space, keeping predicate hits, reproducible from the seed.
std::vector<Graph> enumerate_class_sampled(ClassId c, int n, long budget,
                                           std::uint64_t seed);

struct ClassWitness {
  bool complemented = false;
  std::vector<int> position_of;  // input vertex -> canonical position
};

/// Searches for a relabeling of g (or its complement) onto a graph that
/// satisfies the class predicate: every subset inducing the literal base,
/// every base isomorphism, every arrangement of the remaining vertices on
/// the top positions. Complete, so absence certifies that g is not
/// isomorphic to any class member.
std::optional<ClassWitness> class_member_witness(const Graph& g, ClassId c);

struct ClassificationResult {
  bool two_covered = false;
  std::optional<std::pair<int, int>> cover_pair;  // in input labels, 0-based
  bool complemented = false;
  std::optional<ClassId> class_id;
  std::optional<VertexSet> embedded_base;  // the X whose induced graph is pair-minimal
  std::optional<std::vector<int>> relabel;  // input vertex -> canonical position
};

/// The 2-covered decision for an indecomposable graph on >= 14 vertices:
/// find a covering pair of the indecomposability graph, then search subsets
/// of size n-k (k = 0, 1, 3, 5 in that order, subsets lexicographic) whose
/// induced graph is pair-minimal for the pinned pair, and land the witness
/// in the matching class frame. The returned witness is re-verified before
/// returning.
ClassificationResult classify_2covered(const Graph& g);

}  // namespace icover
