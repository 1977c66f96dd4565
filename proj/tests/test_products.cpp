#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "edim/catalog.hpp"
#include "edim/graph.hpp"
#include "edim/products.hpp"
#include "edim/random_graphs.hpp"
#include "edim/resolvability.hpp"
#include "test_util.hpp"

using edim::edge_t;
using edim::errc;
using edim::Graph;
using edim::RootedSubset;

namespace {

std::set<edge_t> normalized_edges(const Graph& g) {
  std::set<edge_t> out;
  for (auto [u, v] : g.edges()) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

}  // namespace

TEST_CASE("rooted subset validation") {
  auto p3 = edim::catalog_graph("path", {3});
  CHECK(error_code_of([&] { RootedSubset(p3, {}); }) == errc::bad_params);
  CHECK(error_code_of([&] { RootedSubset(p3, {0, 0}); }) == errc::bad_params);
  CHECK(error_code_of([&] { RootedSubset(p3, {3}); }) ==
        errc::index_out_of_range);
}

TEST_CASE("two paths give a longer path") {
  auto k2 = edim::catalog_graph("path", {2});
  RootedSubset gu(k2, {0});
  auto product = edim::hierarchical_product(gu, k2);

  CHECK(product.graph.vertex_count() == 4);
  CHECK(product.graph.edge_count() == 3);
  CHECK(product.graph.edges() ==
        std::vector<edge_t>{{0, 2}, {1, 3}, {0, 1}});
  CHECK(product.left_order == 2);
  CHECK(product.right_order == 2);
  CHECK(product.index_of(1, 0) == 2);
  CHECK(product.pair_of(3) == std::pair<int, int>{1, 1});
  CHECK(error_code_of([&] { product.index_of(2, 0); }) ==
        errc::index_out_of_range);
  CHECK(error_code_of([&] { product.pair_of(4); }) ==
        errc::index_out_of_range);

  // the far ends of the two copies sit at distance 3
  CHECK(edim::product_distance(gu, k2, {1, 0}, {1, 1}) == 3);
}

TEST_CASE("through root distances") {
  auto p3 = edim::catalog_graph("path", {3});
  RootedSubset one_root(p3, {0});
  CHECK(edim::through_root_distance(one_root, 2, 2) == 4);
  CHECK(edim::through_root_distance(one_root, 0, 2) == 2);

  RootedSubset two_roots(p3, {0, 2});
  CHECK(edim::through_root_distance(two_roots, 2, 2) == 0);
  CHECK(edim::through_root_distance(two_roots, 0, 1) == 1);
}

TEST_CASE("factor only distances match search on the built product") {
  auto g = edim::catalog_graph("path", {3});
  auto h = edim::catalog_graph("path", {3});
  RootedSubset gu(g, {0, 2});
  auto product = edim::hierarchical_product(gu, h);
  auto tables = edim::all_pairs_distances(product.graph);
  for (int a = 0; a < product.graph.vertex_count(); ++a) {
    for (int b = 0; b < product.graph.vertex_count(); ++b) {
      CHECK(edim::product_distance(gu, h, product.pairs[a], product.pairs[b]) ==
            tables.vv[a][b]);
    }
  }
}

TEST_CASE("edges at a given distance from a vertex") {
  auto p4 = edim::catalog_graph("path", {4});
  CHECK(edim::edges_at_distance(p4, 0, 0) == std::vector<int>{0});
  CHECK(edim::edges_at_distance(p4, 0, 1) == std::vector<int>{1});
  CHECK(edim::edges_at_distance(p4, 0, 2) == std::vector<int>{2});
  CHECK(edim::edges_at_distance(p4, 0, 3).empty());
  CHECK(edim::edges_at_distance(p4, 0, -1).empty());

  auto c4 = edim::catalog_graph("cycle", {4});
  CHECK(edim::edges_at_distance(c4, 0, 0) == std::vector<int>{0, 3});
  CHECK(edim::edges_at_distance(c4, 0, 1) == std::vector<int>{1, 2});
}

TEST_CASE("root equidistant pair constraints on a 4-cycle") {
  auto c4 = edim::catalog_graph("cycle", {4});
  RootedSubset gu(c4, {0, 2});

  auto instance = edim::build_rooted_edim_instance(gu);
  REQUIRE(instance.constraints().size() == 1);
  CHECK(instance.constraints()[0].vertices == std::vector<int>{1, 3});
  // both equidistant pairs collapse to the same separating set; the second
  // root repeats them and is deduplicated before merging
  CHECK(instance.constraints()[0].origins.size() == 2);

  CHECK(edim::rooted_edim(gu).dimension == 1);

  auto plus_instance = edim::build_rooted_edim_plus_instance(gu);
  REQUIRE(plus_instance.constraints().size() == 2);
  CHECK(plus_instance.constraints()[1].vertices == std::vector<int>{0, 2});
  CHECK(plus_instance.constraints()[1].origins[0].kind ==
        edim::pair_kind::vertex_pair);
  CHECK(edim::rooted_edim_plus(gu).dimension == 2);
}

TEST_CASE("root aware values on small cases") {
  auto k3 = edim::catalog_graph("complete", {3});
  CHECK(edim::rooted_edim({k3, {0}}).dimension == 1);

  auto star3 = edim::catalog_graph("star", {3});
  auto instance = edim::build_rooted_edim_instance({star3, {0}});
  CHECK(instance.constraints().size() == 3);
  CHECK(edim::rooted_edim({star3, {0}}).dimension == 2);

  // middle of a path: the two sides must be told apart
  auto p5 = edim::catalog_graph("path", {5});
  CHECK(edim::rooted_edim({p5, {2}}).dimension == 1);

  // single root: the plus variant adds nothing
  CHECK(edim::rooted_edim_plus({k3, {0}}).dimension == 1);
}

TEST_CASE("paths rooted at an end separate all their edge pairs for free") {
  for (int n = 1; n <= 5; ++n) {
    auto path = edim::catalog_graph("path", {n});
    auto result = edim::rooted_edim({path, {0}});
    CHECK(result.dimension == 0);
    CHECK(result.basis.empty());
    if (n >= 2) CHECK(edim::rooted_edim({path, {n - 1}}).dimension == 0);
  }
}

TEST_CASE("rooted path recognition") {
  auto p4 = edim::catalog_graph("path", {4});
  CHECK(edim::is_rooted_path(p4, 0));
  CHECK(edim::is_rooted_path(p4, 3));
  CHECK_FALSE(edim::is_rooted_path(p4, 1));
  CHECK(edim::is_rooted_path(edim::catalog_graph("complete", {1}), 0));
  CHECK(edim::is_rooted_path(edim::catalog_graph("path", {2}), 1));
  CHECK_FALSE(edim::is_rooted_path(edim::catalog_graph("cycle", {4}), 0));
  CHECK_FALSE(edim::is_rooted_path(edim::catalog_graph("star", {3}), 0));
  CHECK_FALSE(edim::is_rooted_path(edim::catalog_graph("star", {3}), 1));
}

TEST_CASE("value chain between the plain and root aware searches") {
  std::mt19937 rng(987654);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto g = edim::random_connected_graph(rng, n, 30);
    int usize = 1 + static_cast<int>(rng() % n);
    auto roots = edim::random_subset(rng, n, usize);
    RootedSubset gu(g, roots);

    int base = edim::rooted_edim(gu).dimension;
    int plus = edim::rooted_edim_plus(gu).dimension;
    int restricted = edim::brute_force_dim(g, roots).dimension;
    CHECK(base <= plus);
    CHECK(plus <= base + restricted);
  }
}

TEST_CASE("single root product value and its guards") {
  auto k3 = edim::catalog_graph("complete", {3});
  auto p2 = edim::catalog_graph("path", {2});
  CHECK(edim::product_edim_single_root(k3, 0, p2) == 2);

  auto product = edim::hierarchical_product({k3, {0}}, p2);
  CHECK(edim::brute_force_edim(product.graph).dimension == 2);

  CHECK(error_code_of([&] {
          edim::product_edim_single_root(edim::catalog_graph("path", {4}), 0,
                                         p2);
        }) == errc::rooted_path_excluded);
  CHECK(error_code_of([&] {
          edim::product_edim_single_root(
              k3, 0, edim::catalog_graph("complete", {1}));
        }) == errc::h_too_small);
}

TEST_CASE("general bound needs several roots") {
  auto k3 = edim::catalog_graph("complete", {3});
  auto p2 = edim::catalog_graph("path", {2});
  CHECK(error_code_of([&] {
          edim::product_edim_upper_bound({k3, {0}}, p2);
        }) == errc::requires_multiple_roots);

  RootedSubset gu(k3, {0, 1});
  CHECK(edim::rooted_edim_plus(gu).dimension == 2);
  CHECK(edim::product_edim_upper_bound(gu, p2) == 6);
}

TEST_CASE("refined bound applicability") {
  auto p2 = edim::catalog_graph("path", {2});

  // a path rooted at its end never qualifies
  RootedSubset path_end(p2, {0});
  auto rejected = edim::product_edim_refined_bound(path_end, p2);
  CHECK_FALSE(rejected.applicable);
  CHECK_FALSE(rejected.applicable_any_witness.has_value());

  // single non path root qualifies outright
  auto k3 = edim::catalog_graph("complete", {3});
  auto single = edim::product_edim_refined_bound({k3, {0}}, p2, true);
  CHECK(single.applicable);
  CHECK(single.value == 2);
  REQUIRE(single.applicable_any_witness.has_value());
  CHECK(*single.applicable_any_witness);

  // interior roots of a 4-path: every smallest witness avoids them
  auto p4 = edim::catalog_graph("path", {4});
  RootedSubset interior(p4, {1, 2});
  CHECK(edim::rooted_edim_plus(interior).dimension == 1);
  auto scanned = edim::product_edim_refined_bound(interior, p2, true);
  CHECK_FALSE(scanned.applicable);
  REQUIRE(scanned.applicable_any_witness.has_value());
  CHECK_FALSE(*scanned.applicable_any_witness);
}

TEST_CASE("eleven vertex path with every second vertex rooted") {
  auto g = edim::catalog_graph("path", {11});
  auto h = edim::catalog_graph("path", {2});
  RootedSubset gu(g, {0, 2, 4, 6, 8, 10});

  auto plus = edim::rooted_edim_plus(gu);
  CHECK(plus.dimension == 1);
  REQUIRE(plus.basis.size() == 1);
  CHECK((plus.basis[0] == 0 || plus.basis[0] == 10));

  CHECK(edim::product_edim_upper_bound(gu, h) == 4);
  auto refined = edim::product_edim_refined_bound(gu, h, true);
  CHECK(refined.value == 2);
  CHECK(refined.applicable);
  REQUIRE(refined.applicable_any_witness.has_value());
  CHECK(*refined.applicable_any_witness);

  auto product = edim::hierarchical_product(gu, h);
  CHECK(product.graph.vertex_count() == 22);
  CHECK(product.graph.edge_count() == 26);
  CHECK(edim::brute_force_edim(product.graph, 22).dimension == 2);
}

TEST_CASE("apex join turns any graph into a rooted cone") {
  auto p3 = edim::catalog_graph("path", {3});
  auto cone = edim::join_with_apex(p3);
  CHECK(cone.graph.vertex_count() == 4);
  CHECK(cone.graph.edge_count() == 5);
  CHECK(cone.roots == std::vector<int>{3});
  CHECK(cone.graph.degree(3) == 3);

  auto from_raw = edim::join_with_apex(2, {});
  CHECK(from_raw.graph.vertex_count() == 3);
  CHECK(from_raw.graph.edge_count() == 2);
  CHECK(from_raw.roots == std::vector<int>{2});
}

TEST_CASE("corona construction and coordinates") {
  auto p2 = edim::catalog_graph("path", {2});
  auto corona = edim::corona_product(p2, 1, {});

  CHECK(corona.graph.vertex_count() == 4);
  CHECK(corona.graph.edge_count() == 3);
  CHECK(normalized_edges(corona.graph) ==
        std::set<edge_t>{{0, 1}, {0, 2}, {1, 3}});
  // base keeps its ids, the copies follow
  CHECK(corona.left_order == 2);
  CHECK(corona.right_order == 2);
  CHECK(corona.pair_of(0) == std::pair<int, int>{1, 0});
  CHECK(corona.pair_of(2) == std::pair<int, int>{0, 0});
  CHECK(corona.index_of(1, 1) == 1);
  CHECK(corona.index_of(0, 1) == 3);

  auto k3 = edim::catalog_graph("complete", {3});
  auto big = edim::corona_product(k3, edim::catalog_graph("path", {3}));
  CHECK(big.graph.vertex_count() == 12);
  CHECK(big.graph.edge_count() == 3 + 3 * (2 + 3));
}

TEST_CASE("corona closed form against the exhaustive search") {
  auto k1 = edim::catalog_graph("complete", {1});
  auto p2 = edim::catalog_graph("path", {2});
  auto k3 = edim::catalog_graph("complete", {3});

  // close range second factor with an edge: first branch
  CHECK(edim::corona_edim(k1, 2, {{0, 1}}) == 2);
  CHECK(edim::brute_force_edim(edim::corona_product(k1, 2, {{0, 1}}).graph)
            .dimension == 2);

  CHECK(edim::corona_edim(k1, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}) == 4);
  CHECK(edim::brute_force_edim(
            edim::corona_product(k1, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}).graph)
            .dimension == 4);

  // edgeless second factor falls through to the general branch
  CHECK(edim::corona_edim(k1, 2, {}) == 1);
  CHECK(edim::brute_force_edim(edim::corona_product(k1, 2, {}).graph)
            .dimension == 1);
  CHECK(edim::corona_edim(k1, 3, {}) == 2);

  // second factor out of close range
  CHECK(edim::corona_edim(k1, 4, {{0, 1}, {1, 2}, {2, 3}}) == 3);

  // larger base: always the general branch
  CHECK(edim::corona_edim(p2, 2, {{0, 1}}) == 2);
  CHECK(edim::brute_force_edim(edim::corona_product(p2, 2, {{0, 1}}).graph)
            .dimension == 2);
  CHECK(edim::corona_edim(k3, k3) == 6);

  CHECK(error_code_of([&] { edim::corona_edim(p2, 1, {}); }) ==
        errc::h_too_small);
}

TEST_CASE("bridge cycle construction") {
  auto p2 = edim::catalog_graph("path", {2});
  std::vector<edim::RootedComponent> three = {{p2, 0}, {p2, 0}, {p2, 0}};
  auto g = edim::bridge_cycle(three);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(normalized_edges(g) ==
        std::set<edge_t>{{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}, {0, 4}});

  auto k3 = edim::catalog_graph("complete", {3});
  auto p3 = edim::catalog_graph("path", {3});
  std::vector<edim::RootedComponent> mixed = {{p2, 1}, {k3, 0}, {p3, 1}};
  auto h = edim::bridge_cycle(mixed);
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 1 + 3 + 2 + 3);

  CHECK(error_code_of([&] {
          edim::bridge_cycle({{p2, 0}, {p2, 0}});
        }) == errc::too_few_components);
  CHECK(error_code_of([&] {
          edim::bridge_cycle({{p2, 5}, {p2, 0}, {p2, 0}});
        }) == errc::index_out_of_range);
}

TEST_CASE("bridge cycle value matches the exhaustive search") {
  auto k3 = edim::catalog_graph("complete", {3});
  CHECK(edim::bridge_cycle_edim(k3, 0, 3) == 3);

  std::vector<edim::RootedComponent> copies(3, {k3, 0});
  auto g = edim::bridge_cycle(copies);
  CHECK(edim::brute_force_edim(g).dimension == 3);

  CHECK(error_code_of([&] { edim::bridge_cycle_edim(k3, 0, 2); }) ==
        errc::too_few_components);
  CHECK(error_code_of([&] {
          edim::bridge_cycle_edim(edim::catalog_graph("path", {2}), 0, 3);
        }) == errc::rooted_path_excluded);
}
