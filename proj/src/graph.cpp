#include "icover/graph.hpp"

#include <algorithm>
#include <bit>

namespace icover {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::SizeOdd: return "SizeOdd";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::BaseTooSmall: return "BaseTooSmall";
    case ErrorKind::BaseNotIndecomposable: return "BaseNotIndecomposable";
    case ErrorKind::OutsideTooSmall: return "OutsideTooSmall";
    case ErrorKind::WrongFrame: return "WrongFrame";
    case ErrorKind::SizeBelowClassMinimum: return "SizeBelowClassMinimum";
    case ErrorKind::SizeBelowTheoremBound: return "SizeBelowTheoremBound";
    case ErrorKind::UnknownStatement: return "UnknownStatement";
    case ErrorKind::EnvelopeExceeded: return "EnvelopeExceeded";
    case ErrorKind::MalformedPayload: return "MalformedPayload";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::InternalAnomaly: return "InternalAnomaly";
  }
  return "UnknownError";
}

void fail(ErrorKind kind, const std::string& message, std::size_t position) {
  throw Error(kind, message, position);
}

VertexSet::VertexSet(Row bits, int universe) : bits_(bits), universe_(universe) {
  if (universe < 0 || universe > kMaxVertices)
    fail(ErrorKind::SizeCapExceeded, "vertex set universe out of range");
  if (universe < kMaxVertices && (bits & ~mask_below(universe)) != 0)
    fail(ErrorKind::VertexOutOfRange, "vertex set member outside universe");
}

VertexSet VertexSet::full_set(int universe) {
  return VertexSet(universe == 0 ? 0 : mask_below(universe), universe);
}

VertexSet VertexSet::of(std::initializer_list<int> vertices, int universe) {
  Row bits = 0;
  for (int v : vertices) {
    if (v < 0 || v >= universe)
      fail(ErrorKind::VertexOutOfRange, "vertex set member outside universe");
    bits |= vbit(v);
  }
  return VertexSet(bits, universe);
}

int VertexSet::size() const { return std::popcount(bits_); }

VertexSet VertexSet::with(int v) const {
  if (v < 0 || v >= universe_)
    fail(ErrorKind::VertexOutOfRange, "vertex outside universe");
  return VertexSet(bits_ | vbit(v), universe_);
}

VertexSet VertexSet::without(int v) const {
  return VertexSet(bits_ & ~vbit(v), universe_);
}

VertexSet VertexSet::complement_in_universe() const {
  return VertexSet(~bits_ & (universe_ == 0 ? 0 : mask_below(universe_)),
                   universe_);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Row m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

bool lex_less_bits(Row a, Row b) {
  if (a == b) return false;
  Row diff = a ^ b;
  Row low = diff & (~diff + 1);
  // Everything below the lowest differing bit is common, so the sequences
  // diverge there. The side holding the bit has the smaller element at that
  // position unless the other side has already ended.
  if (b & low) {
    Row rest_a = a & ~(low | (low - 1));
    return rest_a == 0;  // a is a proper prefix
  }
  Row rest_b = b & ~(low | (low - 1));
  return rest_b != 0;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return lex_less_bits(a.bits(), b.bits());
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) fail(ErrorKind::VertexOutOfRange, "negative vertex count");
  if (n > kMaxVertices)
    fail(ErrorKind::SizeCapExceeded,
         "vertex count " + std::to_string(n) + " exceeds cap " +
             std::to_string(kMaxVertices));
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int a, int b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    fail(ErrorKind::VertexOutOfRange,
         "edge endpoint outside [0, " + std::to_string(n_) + ")");
  if (a == b) fail(ErrorKind::LoopEdge, "loop edge rejected");
  adj_[a] |= vbit(b);
  adj_[b] |= vbit(a);
}

void Graph::set_adjacent(int a, int b, bool value) {
  if (value) {
    add_edge(a, b);
  } else {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      fail(ErrorKind::VertexOutOfRange, "edge endpoint out of range");
    adj_[a] &= ~vbit(b);
    adj_[b] &= ~vbit(a);
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (Row m = adj_[a] & ~mask_below(a + 1); m; m &= m - 1)
      out.emplace_back(a, std::countr_zero(m));
  return out;
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);  // duplicates collapse for free
  return g;
}

Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return graph_from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph h(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b)) h.add_edge(a, b);
  return h;
}

Induced induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count() ||
      (x.bits() & ~g.vertex_mask()) != 0)
    fail(ErrorKind::VertexOutOfRange, "subset not within the graph's vertices");
  Induced out;
  out.new_of_old.fill(-1);
  out.old_of_new = x.members();
  int m = static_cast<int>(out.old_of_new.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i) out.new_of_old[out.old_of_new[i]] = i;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(out.old_of_new[i], out.old_of_new[j]))
        out.graph.add_edge(i, j);
  return out;
}

Graph remove_vertices(const Graph& g, Row drop_mask) {
  Row keep = g.vertex_mask() & ~drop_mask;
  int m = std::popcount(keep);
  Graph h(m);
  int idx[kMaxVertices];
  int i = 0;
  for (Row t = keep; t; t &= t - 1) idx[i++] = std::countr_zero(t);
  for (int a = 0; a < m; ++a) {
    Row r = g.neighbors(idx[a]) & keep;
    for (Row t = r; t; t &= t - 1) {
      int bpos = std::countr_zero(t);
      if (bpos > idx[a]) {
        // translate old id -> new id by rank within keep
        int b = std::popcount(keep & mask_below(bpos));
        h.add_edge(a, b);
      }
    }
  }
  return h;
}

Graph apply_relabeling(const Graph& g, std::span<const int> position_of) {
  int n = g.vertex_count();
  Graph h(n);
  for (auto [a, b] : g.edges()) h.add_edge(position_of[a], position_of[b]);
  return h;
}

GraphKey graph_key(const Graph& g) {
  GraphKey k;
  k.n = g.vertex_count();
  k.rows.fill(0);
  for (int v = 0; v < k.n; ++v) k.rows[v] = g.neighbors(v);
  return k;
}

}  // namespace icover
