#include "edim/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace edim {

Graph::Graph(int vertex_count, std::vector<edge_t> edges,
             std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count < 1) {
    fail(errc::bad_params, "vertex count must be at least 1, got " +
                               std::to_string(vertex_count));
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count) {
    fail(errc::bad_params, "label count does not match vertex count");
  }
  adj_.assign(vertex_count, {});

  std::set<edge_t> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      fail(errc::index_out_of_range,
           "edge " + std::to_string(i) + " = (" + std::to_string(u) + ", " +
               std::to_string(v) + ") has an endpoint outside 0.." +
               std::to_string(vertex_count - 1));
    }
    if (u == v) {
      fail(errc::loop_edge, "edge " + std::to_string(i) + " is a loop at " +
                                std::to_string(u));
    }
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      fail(errc::duplicate_edge,
           "edge " + std::to_string(i) + " = (" + std::to_string(u) + ", " +
               std::to_string(v) + ") repeats an earlier edge");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  // Connectivity is part of the construction contract.
  std::vector<char> visited(vertex_count, 0);
  std::queue<int> queue;
  queue.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop();
    for (int next : adj_[cur]) {
      if (!visited[next]) {
        visited[next] = 1;
        ++reached;
        queue.push(next);
      }
    }
  }
  if (reached != vertex_count) {
    fail(errc::disconnected,
         "graph is disconnected (" + std::to_string(reached) + " of " +
             std::to_string(vertex_count) + " vertices reachable from 0)");
  }
}

edge_t Graph::edge(int index) const {
  check_edge(index);
  return edges_[index];
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::string Graph::label(int v) const {
  check_vertex(v);
  if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
  return "v" + std::to_string(v + 1);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    fail(errc::index_out_of_range,
         "vertex index " + std::to_string(v) + " outside 0.." +
             std::to_string(vertex_count() - 1));
  }
}

void Graph::check_edge(int index) const {
  if (index < 0 || index >= edge_count()) {
    fail(errc::index_out_of_range,
         "edge index " + std::to_string(index) + " outside 0.." +
             std::to_string(edge_count() - 1));
  }
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  g.check_vertex(source);
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop();
    for (int next : g.neighbors(cur)) {
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push(next);
      }
    }
  }
  return dist;
}

DistanceTables all_pairs_distances(const Graph& g) {
  DistanceTables tables;
  tables.vv.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    tables.vv.push_back(bfs_distances(g, v));
  }
  tables.ve.assign(g.edge_count(), std::vector<int>(g.vertex_count(), 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    for (int v = 0; v < g.vertex_count(); ++v) {
      tables.ve[e][v] = std::min(tables.vv[x][v], tables.vv[y][v]);
    }
  }
  return tables;
}

int vertex_edge_distance(const Graph& g, int v, int edge_index) {
  g.check_vertex(v);
  g.check_edge(edge_index);
  auto dist = bfs_distances(g, v);
  auto [x, y] = g.edges()[edge_index];
  return std::min(dist[x], dist[y]);
}

}  // namespace edim
