#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icover {

using Row = std::uint32_t;

// Hard size cap for every graph in this library. Adjacency is one bit row
// per vertex and all set algebra is single-word masks, so everything from
// interval closures to subset sweeps is a handful of word ops.
inline constexpr int kMaxVertices = 30;

enum class ErrorKind {
  LoopEdge,
  VertexOutOfRange,
  SizeCapExceeded,
  SizeTooSmall,
  SizeOdd,
  NotIndecomposable,
  KTooLarge,
  BaseTooSmall,
  BaseNotIndecomposable,
  OutsideTooSmall,
  WrongFrame,
  SizeBelowClassMinimum,
  SizeBelowTheoremBound,
  UnknownStatement,
  EnvelopeExceeded,
  MalformedPayload,
  UsageError,
  InternalAnomaly,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t position = 0)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message,
                       std::size_t position = 0);

inline Row vbit(int v) { return Row{1} << v; }
inline Row mask_below(int n) { return (Row{1} << n) - 1; }  // n <= kMaxVertices < 32

/// Subset of the vertices of a graph over a fixed universe [0, n).
/// Internally a bit mask; members() iterates ascending by index.
/// Vertex ids are 0-based everywhere in memory; only the I/O layer renders
/// them 1-based.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Row bits, int universe);
  static VertexSet empty_set(int universe) { return VertexSet(0, universe); }
  static VertexSet full_set(int universe);
  static VertexSet of(std::initializer_list<int> vertices, int universe);

  Row bits() const { return bits_; }
  int universe() const { return universe_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ & vbit(v)) != 0; }
  bool is_subset_of(const VertexSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  VertexSet complement_in_universe() const;

  std::vector<int> members() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_ && a.universe_ == b.universe_;
  }

 private:
  Row bits_ = 0;
  int universe_ = 0;
};

/// Orders sets by their ascending member sequences ({1,4} before {2,3},
/// and a prefix before its extensions). The tie-break used everywhere a
/// deterministic listing of sets is promised.
bool lex_less(const VertexSet& a, const VertexSet& b);
bool lex_less_bits(Row a, Row b);

/// Finite simple undirected graph on vertices [0, n). The adjacency relation
/// is kept symmetric and irreflexive by construction; rows at index >= n stay
/// zero so whole-object comparison is meaningful.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  Row vertex_mask() const { return n_ == 0 ? 0 : mask_below(n_); }
  Row neighbors(int v) const { return adj_[v]; }
  bool adjacent(int a, int b) const { return (adj_[a] & vbit(b)) != 0; }
  int degree(int v) const;
  int edge_count() const;

  void add_edge(int a, int b);
  void set_adjacent(int a, int b, bool value);

  std::vector<std::pair<int, int>> edges() const;  // ascending (a < b) pairs

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);
Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complement(const Graph& g);

/// Induced subgraph plus the relabeling that produced it. New ids follow the
/// ascending order of the kept original ids.
struct Induced {
  Graph graph;
  std::vector<int> old_of_new;
  std::array<int, kMaxVertices> new_of_old;  // -1 for dropped vertices
};

Induced induced_subgraph(const Graph& g, const VertexSet& x);

/// G - S, relabeled ascending. The workhorse of every deletion sweep.
Graph remove_vertices(const Graph& g, Row drop_mask);
inline Graph remove_vertex(const Graph& g, int v) {
  return remove_vertices(g, vbit(v));
}

/// Applies a relabeling: position_of[v] is the new index of old vertex v.
Graph apply_relabeling(const Graph& g, std::span<const int> position_of);

/// Canonical byte-comparable key, used for dedup sets.
struct GraphKey {
  int n;
  std::array<Row, kMaxVertices> rows;
  friend bool operator<(const GraphKey& a, const GraphKey& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.rows < b.rows;
  }
};
GraphKey graph_key(const Graph& g);

}  // namespace icover
