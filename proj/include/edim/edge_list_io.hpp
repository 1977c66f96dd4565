#pragma once

#include <iosfwd>
#include <string>

#include "edim/graph.hpp"

namespace edim {

// Text format: optional '#' comment lines and blank lines anywhere; the
// first data line holds the vertex count, every further data line holds one
// edge as two 0-based indices.  CRLF input is accepted, output is LF.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& text);

// Same format without the connectivity requirement; callers that accept
// disconnected input (the corona right factor) start from this.
struct RawEdgeList {
  int vertex_count = 0;
  std::vector<edge_t> edges;
};

RawEdgeList read_raw_edge_list(std::istream& in);
RawEdgeList read_raw_edge_list(const std::string& text);

std::string write_edge_list(const Graph& g);

}  // namespace edim
