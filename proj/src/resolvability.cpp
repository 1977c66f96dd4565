#include "edim/resolvability.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>

namespace edim {

namespace {

// Rows are item-major distance vectors over all vertices; a landmark set
// resolves the items when the projected rows are pairwise distinct.
bool distinct_under(const std::vector<std::vector<int>>& rows,
                    const std::vector<int>& landmarks) {
  if (rows.size() <= 1) return true;
  std::vector<std::vector<int>> projected;
  projected.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> p;
    p.reserve(landmarks.size());
    for (int v : landmarks) p.push_back(row[v]);
    projected.push_back(std::move(p));
  }
  std::sort(projected.begin(), projected.end());
  return std::adjacent_find(projected.begin(), projected.end()) ==
         projected.end();
}

// k-subsets of 0..n-1 in lexicographic order; returns the first one accepted.
template <typename Accept>
bool first_subset(int n, int k, const Accept& accept, std::vector<int>& out) {
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (accept(subset)) {
      out = subset;
      return true;
    }
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

BasisResult minimum_distinguishing_set(int n,
                                       const std::vector<std::vector<int>>& rows,
                                       bool empty_target_resolved,
                                       int order_cap) {
  if (n > order_cap) {
    fail(errc::size_cap_exceeded,
         "graph order " + std::to_string(n) + " exceeds the search cap " +
             std::to_string(order_cap) + " (raise the cap to override)");
  }
  BasisResult result;
  if (empty_target_resolved) return result;
  for (int k = 1; k <= n; ++k) {
    auto accept = [&](const std::vector<int>& subset) {
      return distinct_under(rows, subset);
    };
    if (first_subset(n, k, accept, result.basis)) {
      result.dimension = k;
      return result;
    }
  }
  // Unreachable: the full vertex set resolves everything.
  fail(errc::infeasible, "no distinguishing set exists");
}

std::vector<std::vector<int>> edge_rows(const DistanceTables& tables,
                                        const std::vector<int>& edge_subset) {
  std::vector<std::vector<int>> rows;
  rows.reserve(edge_subset.size());
  for (int e : edge_subset) rows.push_back(tables.ve[e]);
  return rows;
}

std::vector<std::vector<int>> vertex_rows(const DistanceTables& tables,
                                          const std::vector<int>& vertex_subset) {
  std::vector<std::vector<int>> rows;
  rows.reserve(vertex_subset.size());
  for (int x : vertex_subset) rows.push_back(tables.vv[x]);
  return rows;
}

std::vector<int> all_indices(int count) {
  std::vector<int> ids(count);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

std::vector<int> edge_representation(const Graph& g, int edge_index,
                                     const std::vector<int>& landmarks) {
  g.check_edge(edge_index);
  auto [x, y] = g.edges()[edge_index];
  std::vector<int> rep;
  rep.reserve(landmarks.size());
  for (int v : landmarks) {
    g.check_vertex(v);
    auto dist = bfs_distances(g, v);
    rep.push_back(std::min(dist[x], dist[y]));
  }
  return rep;
}

std::vector<int> vertex_representation(const Graph& g, int u,
                                       const std::vector<int>& landmarks) {
  g.check_vertex(u);
  std::vector<int> rep;
  rep.reserve(landmarks.size());
  for (int v : landmarks) {
    g.check_vertex(v);
    rep.push_back(bfs_distances(g, v)[u]);
  }
  return rep;
}

bool is_edge_metric_generator(const Graph& g,
                              const std::vector<int>& landmarks) {
  return is_edge_metric_generator(g, landmarks, all_indices(g.edge_count()));
}

bool is_edge_metric_generator(const Graph& g, const std::vector<int>& landmarks,
                              const std::vector<int>& edge_subset) {
  for (int v : landmarks) g.check_vertex(v);
  for (int e : edge_subset) g.check_edge(e);
  auto tables = all_pairs_distances(g);
  return distinct_under(edge_rows(tables, edge_subset), landmarks);
}

bool is_metric_generator(const Graph& g, const std::vector<int>& landmarks) {
  return is_metric_generator(g, landmarks, all_indices(g.vertex_count()));
}

bool is_metric_generator(const Graph& g, const std::vector<int>& landmarks,
                         const std::vector<int>& vertex_subset) {
  for (int v : landmarks) g.check_vertex(v);
  for (int x : vertex_subset) g.check_vertex(x);
  auto tables = all_pairs_distances(g);
  return distinct_under(vertex_rows(tables, vertex_subset), landmarks);
}

BasisResult brute_force_edim(const Graph& g, int order_cap) {
  return brute_force_edim(g, all_indices(g.edge_count()), order_cap);
}

BasisResult brute_force_edim(const Graph& g, const std::vector<int>& edge_subset,
                             int order_cap) {
  for (int e : edge_subset) g.check_edge(e);
  auto tables = all_pairs_distances(g);
  return minimum_distinguishing_set(g.vertex_count(),
                                    edge_rows(tables, edge_subset),
                                    edge_subset.empty(), order_cap);
}

BasisResult brute_force_dim(const Graph& g, int order_cap) {
  return brute_force_dim(g, all_indices(g.vertex_count()), order_cap);
}

BasisResult brute_force_dim(const Graph& g, const std::vector<int>& vertex_subset,
                            int order_cap) {
  for (int x : vertex_subset) g.check_vertex(x);
  auto tables = all_pairs_distances(g);
  return minimum_distinguishing_set(g.vertex_count(),
                                    vertex_rows(tables, vertex_subset),
                                    vertex_subset.size() <= 1, order_cap);
}

int max_vertex_edge_distance(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  auto tables = all_pairs_distances(g);
  int best = 0;
  for (const auto& row : tables.ve) {
    for (int d : row) best = std::max(best, d);
  }
  return best;
}

bool every_vertex_near_every_edge(const Graph& g) {
  return max_vertex_edge_distance(g) <= 1;
}

bool every_vertex_near_every_edge(int vertex_count,
                                  const std::vector<edge_t>& edges) {
  if (vertex_count < 1) fail(errc::bad_params, "vertex count must be positive");
  if (edges.empty()) return true;
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      fail(errc::index_out_of_range, "edge endpoint outside the vertex range");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int source = 0; source < vertex_count; ++source) {
    std::vector<int> dist(vertex_count, -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop();
      for (int next : adj[cur]) {
        if (dist[next] < 0) {
          dist[next] = dist[cur] + 1;
          queue.push(next);
        }
      }
    }
    for (auto [u, v] : edges) {
      int du = dist[u] < 0 ? INT_MAX : dist[u];
      int dv = dist[v] < 0 ? INT_MAX : dist[v];
      if (std::min(du, dv) > 1) return false;
    }
  }
  return true;
}

}  // namespace edim
