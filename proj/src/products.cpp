#include "edim/products.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <string>

namespace edim {

RootedSubset::RootedSubset(Graph g, std::vector<int> u)
    : graph(std::move(g)), roots(std::move(u)) {
  if (roots.empty()) {
    fail(errc::bad_params, "root set must not be empty");
  }
  std::set<int> seen;
  for (int r : roots) {
    graph.check_vertex(r);
    if (!seen.insert(r).second) {
      fail(errc::bad_params, "root " + std::to_string(r) + " listed twice");
    }
  }
}

int ProductGraph::index_of(int left, int right) const {
  if (left < 0 || left >= left_order || right < 0 || right >= right_order) {
    fail(errc::index_out_of_range, "factor coordinates outside the product");
  }
  return pair_index[left * right_order + right];
}

std::pair<int, int> ProductGraph::pair_of(int vertex) const {
  graph.check_vertex(vertex);
  return pairs[vertex];
}

ProductGraph hierarchical_product(const RootedSubset& gu, const Graph& h) {
  const Graph& g = gu.graph;
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();

  std::vector<edge_t> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) * nh +
                static_cast<std::size_t>(gu.roots.size()) * h.edge_count());
  for (int hv = 0; hv < nh; ++hv) {
    for (auto [a, b] : g.edges()) {
      edges.push_back({a * nh + hv, b * nh + hv});
    }
  }
  for (int root : gu.roots) {
    for (auto [x, y] : h.edges()) {
      edges.push_back({root * nh + x, root * nh + y});
    }
  }

  ProductGraph product{Graph(ng * nh, std::move(edges)), ng, nh, {}, {}};
  product.pairs.reserve(ng * nh);
  product.pair_index.resize(ng * nh);
  for (int gv = 0; gv < ng; ++gv) {
    for (int hv = 0; hv < nh; ++hv) {
      product.pairs.push_back({gv, hv});
      product.pair_index[gv * nh + hv] = gv * nh + hv;
    }
  }
  return product;
}

int through_root_distance(const RootedSubset& gu, int a, int b) {
  auto from_a = bfs_distances(gu.graph, a);
  auto from_b = bfs_distances(gu.graph, b);
  int best = INT_MAX;
  for (int root : gu.roots) {
    best = std::min(best, from_a[root] + from_b[root]);
  }
  return best;
}

int product_distance(const RootedSubset& gu, const Graph& h,
                     std::pair<int, int> p1, std::pair<int, int> p2) {
  auto [g1, h1] = p1;
  auto [g2, h2] = p2;
  gu.graph.check_vertex(g1);
  gu.graph.check_vertex(g2);
  h.check_vertex(h1);
  h.check_vertex(h2);
  if (h1 == h2) {
    return bfs_distances(gu.graph, g1)[g2];
  }
  return through_root_distance(gu, g1, g2) + bfs_distances(h, h1)[h2];
}

std::vector<int> edges_at_distance(const Graph& g, int v, int distance) {
  g.check_vertex(v);
  std::vector<int> result;
  auto dist = bfs_distances(g, v);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    if (std::min(dist[x], dist[y]) == distance) result.push_back(e);
  }
  return result;
}

namespace {

void add_equidistant_pair_constraints(const RootedSubset& gu,
                                      const DistanceTables& tables,
                                      HittingSetInstance& instance) {
  const Graph& g = gu.graph;
  const int m = g.edge_count();
  std::set<std::pair<int, int>> seen;
  for (int root : gu.roots) {
    // bucket edges by their distance from this root
    std::vector<std::vector<int>> buckets(g.vertex_count());
    for (int e = 0; e < m; ++e) {
      buckets[tables.ve[e][root]].push_back(e);
    }
    for (const auto& bucket : buckets) {
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          int i = bucket[a];
          int j = bucket[b];
          if (!seen.insert({i, j}).second) continue;
          std::vector<int> diff;
          for (int v = 0; v < g.vertex_count(); ++v) {
            if (tables.ve[i][v] != tables.ve[j][v]) diff.push_back(v);
          }
          instance.add_constraint(std::move(diff),
                                  {i, j, pair_kind::edge_pair});
        }
      }
    }
  }
}

}  // namespace

HittingSetInstance build_rooted_edim_instance(const RootedSubset& gu) {
  HittingSetInstance instance(gu.graph.vertex_count());
  auto tables = all_pairs_distances(gu.graph);
  add_equidistant_pair_constraints(gu, tables, instance);
  return instance;
}

HittingSetInstance build_rooted_edim_plus_instance(const RootedSubset& gu) {
  HittingSetInstance instance(gu.graph.vertex_count());
  auto tables = all_pairs_distances(gu.graph);
  add_equidistant_pair_constraints(gu, tables, instance);
  for (std::size_t a = 0; a < gu.roots.size(); ++a) {
    for (std::size_t b = a + 1; b < gu.roots.size(); ++b) {
      int i = std::min(gu.roots[a], gu.roots[b]);
      int j = std::max(gu.roots[a], gu.roots[b]);
      std::vector<int> diff;
      for (int v = 0; v < gu.graph.vertex_count(); ++v) {
        if (tables.vv[v][i] != tables.vv[v][j]) diff.push_back(v);
      }
      instance.add_constraint(std::move(diff), {i, j, pair_kind::vertex_pair});
    }
  }
  return instance;
}

BasisResult rooted_edim(const RootedSubset& gu) {
  auto result = solve_hitting_set(build_rooted_edim_instance(gu));
  return {result.optimum, result.witness};
}

BasisResult rooted_edim_plus(const RootedSubset& gu) {
  auto result = solve_hitting_set(build_rooted_edim_plus_instance(gu));
  return {result.optimum, result.witness};
}

int product_edim_upper_bound(const RootedSubset& gu, const Graph& h) {
  if (gu.roots.size() < 2) {
    fail(errc::requires_multiple_roots,
         "the general upper bound needs at least two roots");
  }
  return h.vertex_count() * (rooted_edim_plus(gu).dimension + 1);
}

namespace {

bool meets_roots(const std::vector<int>& witness,
                 const std::vector<int>& roots) {
  for (int v : witness) {
    if (std::find(roots.begin(), roots.end(), v) != roots.end()) return true;
  }
  return false;
}

bool hits_all(const HittingSetInstance& instance,
              const std::vector<int>& subset) {
  for (const auto& constraint : instance.constraints()) {
    bool hit = false;
    for (int v : subset) {
      if (std::binary_search(constraint.vertices.begin(),
                             constraint.vertices.end(), v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Walks every optimum-sized subset and reports whether some valid one
// contains a root.  Exponential; meant for small graphs.
bool any_optimal_witness_meets_roots(const RootedSubset& gu, int optimum) {
  auto instance = build_rooted_edim_plus_instance(gu);
  const int n = gu.graph.vertex_count();
  if (optimum == 0) return false;
  std::vector<int> subset(optimum);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (hits_all(instance, subset) && meets_roots(subset, gu.roots)) {
      return true;
    }
    int i = optimum - 1;
    while (i >= 0 && subset[i] == n - optimum + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < optimum; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

ConditionalBound product_edim_refined_bound(const RootedSubset& gu,
                                            const Graph& h,
                                            bool scan_all_witnesses) {
  auto plus = rooted_edim_plus(gu);
  ConditionalBound bound;
  bound.value = h.vertex_count() * plus.dimension;
  bool single_nonpath_root =
      gu.roots.size() == 1 && !is_rooted_path(gu.graph, gu.roots[0]);
  bound.applicable = single_nonpath_root || meets_roots(plus.basis, gu.roots);
  if (scan_all_witnesses) {
    bound.applicable_any_witness =
        single_nonpath_root ||
        any_optimal_witness_meets_roots(gu, plus.dimension);
  }
  return bound;
}

bool is_rooted_path(const Graph& g, int root) {
  g.check_vertex(root);
  if (g.vertex_count() == 1) return true;
  if (g.edge_count() != g.vertex_count() - 1) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return g.degree(root) == 1;
}

int product_edim_single_root(const Graph& g, int root, const Graph& h) {
  if (is_rooted_path(g, root)) {
    fail(errc::rooted_path_excluded,
         "paths rooted at an end are outside this formula");
  }
  if (h.vertex_count() < 2) {
    fail(errc::h_too_small, "the second factor needs at least two vertices");
  }
  return h.vertex_count() * rooted_edim({g, {root}}).dimension;
}

RootedSubset join_with_apex(const Graph& h) {
  return join_with_apex(h.vertex_count(), h.edges());
}

RootedSubset join_with_apex(int h_order, const std::vector<edge_t>& h_edges) {
  if (h_order < 1) {
    fail(errc::bad_params, "joining an apex needs at least one vertex");
  }
  std::vector<edge_t> edges = h_edges;
  const int apex = h_order;
  for (int v = 0; v < h_order; ++v) edges.push_back({v, apex});
  return RootedSubset(Graph(h_order + 1, std::move(edges)), {apex});
}

ProductGraph corona_product(const Graph& g, const Graph& h) {
  return corona_product(g, h.vertex_count(), h.edges());
}

ProductGraph corona_product(const Graph& g, int h_order,
                            const std::vector<edge_t>& h_edges) {
  auto rooted = join_with_apex(h_order, h_edges);
  auto raw = hierarchical_product(rooted, g);

  const int ng = g.vertex_count();
  const int nh = h_order;
  const int apex = h_order;

  // raw id (a, j) = a * ng + j; corona id: apex row becomes G itself,
  // row a < nh becomes slot a of copy j.
  auto relabel = [&](int raw_id) {
    int a = raw_id / ng;
    int j = raw_id % ng;
    if (a == apex) return j;
    return ng + j * nh + a;
  };

  std::vector<edge_t> edges;
  edges.reserve(raw.graph.edge_count());
  for (auto [u, v] : raw.graph.edges()) {
    edges.push_back({relabel(u), relabel(v)});
  }

  ProductGraph corona{Graph(ng * (nh + 1), std::move(edges)), nh + 1, ng,
                      {}, {}};
  corona.pairs.assign(ng * (nh + 1), {0, 0});
  corona.pair_index.assign((nh + 1) * ng, 0);
  for (int a = 0; a <= nh; ++a) {
    for (int j = 0; j < ng; ++j) {
      int id = relabel(a * ng + j);
      corona.pairs[id] = {a, j};
      corona.pair_index[a * ng + j] = id;
    }
  }
  return corona;
}

int corona_edim(const Graph& g, const Graph& h) {
  return corona_edim(g, h.vertex_count(), h.edges());
}

int corona_edim(const Graph& g, int h_order,
                const std::vector<edge_t>& h_edges) {
  if (h_order < 2) {
    fail(errc::h_too_small,
         "the corona formula needs at least two vertices in the second factor");
  }
  if (g.vertex_count() == 1 && !h_edges.empty() &&
      every_vertex_near_every_edge(h_order, h_edges)) {
    return h_order;
  }
  return g.vertex_count() * (h_order - 1);
}

Graph bridge_cycle(const std::vector<RootedComponent>& components) {
  if (components.size() < 3) {
    fail(errc::too_few_components,
         "a bridge cycle needs at least three components");
  }
  std::vector<int> offsets;
  int total = 0;
  for (const auto& component : components) {
    component.graph.check_vertex(component.root);
    offsets.push_back(total);
    total += component.graph.vertex_count();
  }
  std::vector<edge_t> edges;
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (auto [u, v] : components[i].graph.edges()) {
      edges.push_back({offsets[i] + u, offsets[i] + v});
    }
  }
  for (std::size_t i = 0; i + 1 < components.size(); ++i) {
    edges.push_back({offsets[i] + components[i].root,
                     offsets[i + 1] + components[i + 1].root});
  }
  edges.push_back({offsets[0] + components[0].root,
                   offsets.back() + components.back().root});
  return Graph(total, std::move(edges));
}

int bridge_cycle_edim(const Graph& g, int root, int copies) {
  if (copies < 3) {
    fail(errc::too_few_components,
         "a bridge cycle needs at least three components");
  }
  if (is_rooted_path(g, root)) {
    fail(errc::rooted_path_excluded,
         "paths rooted at an end are outside this formula");
  }
  return copies * rooted_edim({g, {root}}).dimension;
}

}  // namespace edim
