#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edim/graph.hpp"
#include "edim/hitting_set.hpp"
#include "edim/resolvability.hpp"

namespace edim {

// A graph together with a non-empty set of root vertices.
struct RootedSubset {
  Graph graph;
  std::vector<int> roots;

  RootedSubset(Graph g, std::vector<int> u);
};

// Product vertices are pairs (left vertex, right vertex); pair_of/index_of
// give the bijection onto the vertex ids of the built graph.
struct ProductGraph {
  Graph graph;
  int left_order = 0;
  int right_order = 0;
  std::vector<std::pair<int, int>> pairs;  // vertex id -> (left, right)
  std::vector<int> pair_index;             // left * right_order + right -> id

  int index_of(int left, int right) const;
  std::pair<int, int> pair_of(int vertex) const;
};

// Copies of G, one per H-vertex, glued by copies of H at every root.
// Vertex (g, h) gets id g * n(H) + h.  Edge order: the G-layer for each
// H-vertex, then the H-layers root by root.
ProductGraph hierarchical_product(const RootedSubset& gu, const Graph& h);

// Shortest walk from a to b that passes through some root.
int through_root_distance(const RootedSubset& gu, int a, int b);

// Distance between product vertices, computed in the factors only: equal
// right coordinates use the plain G-distance, different ones go through a
// root and add the H-distance.
int product_distance(const RootedSubset& gu, const Graph& h,
                     std::pair<int, int> p1, std::pair<int, int> p2);

// Edge indices at the given distance from v, ascending.
std::vector<int> edges_at_distance(const Graph& g, int v, int distance);

HittingSetInstance build_rooted_edim_instance(const RootedSubset& gu);
HittingSetInstance build_rooted_edim_plus_instance(const RootedSubset& gu);

// Fewest vertices that split every pair of edges lying at equal distance
// from some root.  Zero (empty witness) when no such pair exists.
BasisResult rooted_edim(const RootedSubset& gu);

// As rooted_edim, but the set must also tell all pairs of distinct roots
// apart by vertex distance.  Identical to rooted_edim for a single root.
BasisResult rooted_edim_plus(const RootedSubset& gu);

// n(H) * (rooted_edim_plus + 1); needs at least two roots.
int product_edim_upper_bound(const RootedSubset& gu, const Graph& h);

struct ConditionalBound {
  int value = 0;
  bool applicable = false;
  // Filled by the exhaustive witness scan when requested: does any optimal
  // rooted_edim_plus witness meet the roots?
  std::optional<bool> applicable_any_witness;
};

// n(H) * rooted_edim_plus.  Valid when the computed witness contains a
// root, or when there is a single root whose graph is not a rooted path.
ConditionalBound product_edim_refined_bound(const RootedSubset& gu,
                                            const Graph& h,
                                            bool scan_all_witnesses = false);

// True when g is a path and the root is one of its ends (or g is a single
// vertex).
bool is_rooted_path(const Graph& g, int root);

// Exact value n(H) * rooted_edim for a single root; the rooted path case is
// excluded and H must have at least two vertices.
int product_edim_single_root(const Graph& g, int root, const Graph& h);

// H plus one extra vertex adjacent to all of H, rooted there.  The apex
// gets the highest index.  H may be disconnected in the raw overload.
RootedSubset join_with_apex(const Graph& h);
RootedSubset join_with_apex(int h_order, const std::vector<edge_t>& h_edges);

// Corona: one copy of H per G-vertex, joined to it.  Built as the
// hierarchical product of (H plus apex, rooted at the apex) with G, then
// relabeled so G keeps ids 0..n(G)-1 and copy j of H occupies the block
// n(G) + j*n(H) ... n(G) + (j+1)*n(H) - 1.
ProductGraph corona_product(const Graph& g, const Graph& h);
ProductGraph corona_product(const Graph& g, int h_order,
                            const std::vector<edge_t>& h_edges);

// Closed form for the edge dimension of the corona, for n(H) >= 2.
int corona_edim(const Graph& g, const Graph& h);
int corona_edim(const Graph& g, int h_order,
                const std::vector<edge_t>& h_edges);

struct RootedComponent {
  Graph graph;
  int root = 0;
};

// Disjoint copies of the components with their roots joined into a cycle,
// in component-major vertex order.  Takes at least three components.
Graph bridge_cycle(const std::vector<RootedComponent>& components);

// copies * rooted_edim(g, {root}) for the cycle of identical components.
int bridge_cycle_edim(const Graph& g, int root, int copies);

}  // namespace edim
