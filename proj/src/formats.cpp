#include "icover/formats.hpp"

#include <cctype>
#include <sstream>

namespace icover {

namespace {

const std::string kGraph6Header = ">>graph6<<";

Graph parse_graph6(const std::string& payload) {
  std::size_t pos = 0;
  if (payload.compare(0, kGraph6Header.size(), kGraph6Header) == 0)
    pos = kGraph6Header.size();

  auto need = [&](std::size_t at) -> unsigned char {
    if (at >= payload.size())
      fail(ErrorKind::MalformedPayload, "truncated graph6 payload", at);
    unsigned char c = static_cast<unsigned char>(payload[at]);
    if (c < 63 || c > 126)
      fail(ErrorKind::MalformedPayload, "byte outside graph6 alphabet", at);
    return c;
  };

  long n;
  unsigned char first = need(pos);
  if (first == 126) {
    // '~' prefix: 18-bit size in the next three bytes ('~~' would mean the
    // 36-bit form, far beyond this library's cap anyway).
    if (pos + 1 < payload.size() &&
        static_cast<unsigned char>(payload[pos + 1]) == 126)
      fail(ErrorKind::SizeCapExceeded, "graph6 size beyond supported range",
           pos);
    long v = 0;
    for (int i = 1; i <= 3; ++i) v = (v << 6) | (need(pos + i) - 63);
    n = v;
    pos += 4;
  } else {
    n = first - 63;
    pos += 1;
  }
  if (n > kMaxVertices)
    fail(ErrorKind::SizeCapExceeded,
         "graph6 size " + std::to_string(n) + " exceeds cap");

  Graph g(static_cast<int>(n));
  long bits = n * (n - 1) / 2;
  long chunks = (bits + 5) / 6;
  long bit_index = 0;
  for (long c = 0; c < chunks; ++c) {
    unsigned char v = static_cast<unsigned char>(need(pos + c) - 63);
    for (int t = 5; t >= 0 && bit_index < bits; --t, ++bit_index) {
      if (!((v >> t) & 1)) continue;
      // column-major upper triangle: bit_index -> (i, j), i < j
      long idx = bit_index;
      int j = 1;
      while (idx >= j) idx -= j, ++j;
      g.add_edge(static_cast<int>(idx), j);
    }
  }
  pos += chunks;
  while (pos < payload.size()) {
    if (!std::isspace(static_cast<unsigned char>(payload[pos])))
      fail(ErrorKind::MalformedPayload, "trailing bytes after graph6 data", pos);
    ++pos;
  }
  return g;
}

Graph parse_edgelist(const std::string& payload) {
  std::istringstream in(payload);
  long n, m;
  if (!(in >> n >> m))
    fail(ErrorKind::MalformedPayload, "edge list must start with \"n m\"", 0);
  if (n < 0 || n > kMaxVertices)
    fail(n > kMaxVertices ? ErrorKind::SizeCapExceeded
                          : ErrorKind::MalformedPayload,
         "bad vertex count " + std::to_string(n));
  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    long u, v;
    if (!(in >> u >> v))
      fail(ErrorKind::MalformedPayload,
           "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    if (u < 1 || u > n || v < 1 || v > n)
      fail(ErrorKind::VertexOutOfRange,
           "edge endpoint outside 1.." + std::to_string(n));
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  std::string rest;
  if (in >> rest)
    fail(ErrorKind::MalformedPayload, "trailing tokens after edge list");
  return g;
}

}  // namespace

Graph parse_graph_text(const std::string& payload, GraphTextFormat format) {
  if (format == GraphTextFormat::Auto) {
    std::size_t pos = 0;
    while (pos < payload.size() &&
           std::isspace(static_cast<unsigned char>(payload[pos])))
      ++pos;
    if (pos == payload.size())
      fail(ErrorKind::MalformedPayload, "empty graph payload", pos);
    char c = payload[pos];
    format = std::isdigit(static_cast<unsigned char>(c))
                 ? GraphTextFormat::EdgeList
                 : GraphTextFormat::Graph6;
    if (format == GraphTextFormat::Graph6)
      return parse_graph6(payload.substr(pos));
    return parse_edgelist(payload.substr(pos));
  }
  return format == GraphTextFormat::Graph6 ? parse_graph6(payload)
                                           : parse_edgelist(payload);
}

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(63 + n));  // n <= 30 fits one byte
  long bits = static_cast<long>(n) * (n - 1) / 2;
  long chunks = (bits + 5) / 6;
  long bit_index = 0;
  for (long c = 0; c < chunks; ++c) {
    int v = 0;
    for (int t = 5; t >= 0; --t, ++bit_index) {
      if (bit_index >= bits) continue;
      long idx = bit_index;
      int j = 1;
      while (idx >= j) idx -= j, ++j;
      if (g.adjacent(static_cast<int>(idx), j)) v |= 1 << t;
    }
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

std::string encode_edgelist(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (auto [a, b] : es) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

}  // namespace icover
