#include "edim/catalog.hpp"

#include <string>

namespace edim {

namespace {

void want_params(const std::string& name, const std::vector<int>& params,
                 std::size_t count) {
  if (params.size() != count) {
    fail(errc::bad_params, "catalog graph '" + name + "' takes " +
                               std::to_string(count) + " parameter(s), got " +
                               std::to_string(params.size()));
  }
}

void want_min(const std::string& name, int value, int min_value) {
  if (value < min_value) {
    fail(errc::bad_params, "catalog graph '" + name +
                               "' needs a parameter of at least " +
                               std::to_string(min_value) + ", got " +
                               std::to_string(value));
  }
}

Graph make_path(int n) {
  std::vector<edge_t> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  std::vector<edge_t> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
  std::vector<edge_t> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
  std::vector<edge_t> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph make_wheel(int rim) {
  std::vector<edge_t> edges;
  for (int i = 1; i <= rim; ++i) edges.push_back({0, i});
  for (int i = 1; i < rim; ++i) edges.push_back({i, i + 1});
  edges.push_back({rim, 1});
  return Graph(rim + 1, std::move(edges));
}

Graph make_petersen() {
  std::vector<edge_t> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return Graph(10, std::move(edges));
}

// Corner c of the cube (bits of c are coordinates) is replaced by the
// triangle on vertices 3c+a, a in {0,1,2} being the axis of the incident
// cube edge.  Cube edges survive as one edge between the matching flags.
Graph make_truncated_cube() {
  std::vector<edge_t> edges;
  for (int c = 0; c < 8; ++c) {
    int base = 3 * c;
    edges.push_back({base, base + 1});
    edges.push_back({base, base + 2});
    edges.push_back({base + 1, base + 2});
  }
  for (int c = 0; c < 8; ++c) {
    for (int a = 0; a < 3; ++a) {
      int other = c ^ (1 << a);
      if (c < other) edges.push_back({3 * c + a, 3 * other + a});
    }
  }
  return Graph(24, std::move(edges));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"path", "n (n >= 1)", "path on n vertices, 0..n-1 in order"},
      {"cycle", "n (n >= 3)", "cycle on n vertices, cyclic order"},
      {"complete", "n (n >= 1)", "complete graph, edges lexicographic"},
      {"star", "m (m >= 1)", "star with center 0 and m leaves"},
      {"wheel", "n (n >= 3)", "hub 0 joined to the rim cycle 1..n"},
      {"petersen", "", "Petersen graph on 10 vertices"},
      {"truncated_cube", "", "truncated cube, 24 vertices and 36 edges"},
  };
  return entries;
}

Graph catalog_graph(const std::string& name, const std::vector<int>& params) {
  if (name == "path") {
    want_params(name, params, 1);
    want_min(name, params[0], 1);
    return make_path(params[0]);
  }
  if (name == "cycle") {
    want_params(name, params, 1);
    want_min(name, params[0], 3);
    return make_cycle(params[0]);
  }
  if (name == "complete") {
    want_params(name, params, 1);
    want_min(name, params[0], 1);
    return make_complete(params[0]);
  }
  if (name == "star") {
    want_params(name, params, 1);
    want_min(name, params[0], 1);
    return make_star(params[0]);
  }
  if (name == "wheel") {
    want_params(name, params, 1);
    want_min(name, params[0], 3);
    return make_wheel(params[0]);
  }
  if (name == "petersen") {
    want_params(name, params, 0);
    return make_petersen();
  }
  if (name == "truncated_cube") {
    want_params(name, params, 0);
    return make_truncated_cube();
  }
  fail(errc::unknown_name, "unknown catalog graph '" + name + "'");
}

}  // namespace edim
