#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edim/errors.hpp"

namespace edim {

using edge_t = std::pair<int, int>;

// Simple connected undirected graph over vertices 0..n-1 with a stable,
// indexed edge list.  Construction validates everything (range, loops,
// duplicates, connectivity) and the object is immutable afterwards.
class Graph {
public:
  Graph(int vertex_count, std::vector<edge_t> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<edge_t>& edges() const { return edges_; }
  edge_t edge(int index) const;

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  // Custom label if one was supplied, otherwise "v<index+1>".
  std::string label(int v) const;

  void check_vertex(int v) const;
  void check_edge(int index) const;

private:
  std::vector<edge_t> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Distances from one source to every vertex (breadth first search).
std::vector<int> bfs_distances(const Graph& g, int source);

// vv[u][v] = d(u, v); ve[e][v] = d(v, e) = min of the endpoint distances.
struct DistanceTables {
  std::vector<std::vector<int>> vv;
  std::vector<std::vector<int>> ve;
};

DistanceTables all_pairs_distances(const Graph& g);

int vertex_edge_distance(const Graph& g, int v, int edge_index);

}  // namespace edim
