#pragma once

#include <string>

#include "icover/graph.hpp"

namespace icover {

enum class GraphTextFormat { Auto, Graph6, EdgeList };

/// Parses either supported text format. Auto sniffs by the first byte:
/// a digit means edge-list text ("n m" then one "u v" line per edge,
/// 1-based), anything else is treated as graph6. Graph6 is decoded
/// bit-exactly: optional ">>graph6<<" header, single-byte or '~'-extended
/// size, then the upper triangle in column order packed big-endian into
/// 6-bit printable chunks.
Graph parse_graph_text(const std::string& payload,
                       GraphTextFormat format = GraphTextFormat::Auto);

std::string encode_graph6(const Graph& g);
std::string encode_edgelist(const Graph& g);

}  // namespace icover
