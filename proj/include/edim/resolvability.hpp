#pragma once

#include <vector>

#include "edim/graph.hpp"

namespace edim {

// Distance vector of one edge (resp. vertex) against an ordered landmark set.
std::vector<int> edge_representation(const Graph& g, int edge_index,
                                     const std::vector<int>& landmarks);
std::vector<int> vertex_representation(const Graph& g, int v,
                                       const std::vector<int>& landmarks);

// A landmark set resolves an edge subset when the representations of those
// edges are pairwise distinct.  A subset of at most one edge is resolved by
// anything, the empty set included.
bool is_edge_metric_generator(const Graph& g, const std::vector<int>& landmarks);
bool is_edge_metric_generator(const Graph& g, const std::vector<int>& landmarks,
                              const std::vector<int>& edge_subset);

bool is_metric_generator(const Graph& g, const std::vector<int>& landmarks);
bool is_metric_generator(const Graph& g, const std::vector<int>& landmarks,
                         const std::vector<int>& vertex_subset);

struct BasisResult {
  int dimension = 0;
  std::vector<int> basis;  // lexicographically first optimal set
};

inline constexpr int default_subset_search_cap = 16;

// Exhaustive search over landmark sets by cardinality, then lexicographic
// order.  Resolving a non-empty target takes at least one landmark; an empty
// edge target (resp. at most one vertex) needs none.  Graphs larger than
// order_cap are rejected with size_cap_exceeded.
BasisResult brute_force_edim(const Graph& g,
                             int order_cap = default_subset_search_cap);
BasisResult brute_force_edim(const Graph& g, const std::vector<int>& edge_subset,
                             int order_cap = default_subset_search_cap);

BasisResult brute_force_dim(const Graph& g,
                            int order_cap = default_subset_search_cap);
BasisResult brute_force_dim(const Graph& g, const std::vector<int>& vertex_subset,
                            int order_cap = default_subset_search_cap);

// Largest entry of the vertex-edge distance table, 0 for edgeless input.
int max_vertex_edge_distance(const Graph& g);

// True when d(v, e) <= 1 for every vertex v and edge e.  The raw overload
// accepts a possibly disconnected edge set; an unreachable edge counts as
// infinitely far.
bool every_vertex_near_every_edge(const Graph& g);
bool every_vertex_near_every_edge(int vertex_count,
                                  const std::vector<edge_t>& edges);

}  // namespace edim
