#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "edim/catalog.hpp"
#include "edim/edge_list_io.hpp"
#include "edim/graph.hpp"
#include "test_util.hpp"

using edim::edge_t;
using edim::errc;
using edim::Graph;

namespace {

std::set<edge_t> normalized_edges(const Graph& g) {
  std::set<edge_t> out;
  for (auto [u, v] : g.edges()) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

int triangle_count(const Graph& g) {
  int count = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      for (int w = v + 1; w < g.vertex_count(); ++w)
        if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w)) ++count;
  return count;
}

}  // namespace

TEST_CASE("graph accessors on a small path") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge(1) == edge_t{1, 2});
  CHECK(g.label(0) == "v1");
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("custom labels are kept, bad label counts rejected") {
  Graph g(2, {{0, 1}}, {"left", "right"});
  CHECK(g.label(1) == "right");
  CHECK(error_code_of([] { Graph(2, {{0, 1}}, {"only one"}); }) ==
        errc::bad_params);
}

TEST_CASE("construction rejects malformed input") {
  CHECK(error_code_of([] { Graph(0, {}); }) == errc::bad_params);
  CHECK(error_code_of([] { Graph(2, {{0, 0}}); }) == errc::loop_edge);
  CHECK(error_code_of([] { Graph(2, {{0, 1}, {1, 0}}); }) ==
        errc::duplicate_edge);
  CHECK(error_code_of([] { Graph(2, {{0, 2}}); }) == errc::index_out_of_range);
  CHECK(error_code_of([] { Graph(4, {{0, 1}, {2, 3}}); }) ==
        errc::disconnected);
}

TEST_CASE("index checks throw on bad arguments") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(error_code_of([&] { g.neighbors(-1); }) == errc::index_out_of_range);
  CHECK(error_code_of([&] { g.edge(5); }) == errc::index_out_of_range);
  CHECK(error_code_of([&] { edim::bfs_distances(g, 3); }) ==
        errc::index_out_of_range);
}

TEST_CASE("bfs and distance tables on a path and a cycle") {
  auto p4 = edim::catalog_graph("path", {4});
  CHECK(edim::bfs_distances(p4, 0) == std::vector<int>{0, 1, 2, 3});

  auto tables = edim::all_pairs_distances(p4);
  CHECK(tables.vv[0][3] == 3);
  CHECK(tables.vv[2][1] == 1);
  // edge 2 = (2,3); nearer endpoint decides
  CHECK(tables.ve[2][0] == 2);
  CHECK(tables.ve[2][3] == 0);
  CHECK(edim::vertex_edge_distance(p4, 0, 2) == 2);

  auto c6 = edim::catalog_graph("cycle", {6});
  auto ct = edim::all_pairs_distances(c6);
  CHECK(ct.vv[0][3] == 3);
  CHECK(ct.vv[1][5] == 2);
  CHECK(edim::vertex_edge_distance(c6, 3, 0) == 2);
}

TEST_CASE("catalog families have the expected shape") {
  auto path = edim::catalog_graph("path", {5});
  CHECK(path.vertex_count() == 5);
  CHECK(path.edge_count() == 4);

  auto cycle = edim::catalog_graph("cycle", {6});
  CHECK(cycle.edge_count() == 6);
  CHECK(cycle.adjacent(5, 0));

  auto complete = edim::catalog_graph("complete", {5});
  CHECK(complete.edge_count() == 10);
  CHECK(complete.edges()[0] == edge_t{0, 1});

  auto star = edim::catalog_graph("star", {4});
  CHECK(star.vertex_count() == 5);
  CHECK(star.degree(0) == 4);

  auto wheel = edim::catalog_graph("wheel", {5});
  CHECK(wheel.vertex_count() == 6);
  CHECK(wheel.edge_count() == 10);
  CHECK(wheel.degree(0) == 5);

  auto petersen = edim::catalog_graph("petersen", {});
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  CHECK(triangle_count(petersen) == 0);
}

TEST_CASE("truncated cube is cubic with eight triangles") {
  auto g = edim::catalog_graph("truncated_cube", {});
  CHECK(g.vertex_count() == 24);
  CHECK(g.edge_count() == 36);
  for (int v = 0; v < 24; ++v) CHECK(g.degree(v) == 3);
  CHECK(triangle_count(g) == 8);
}

TEST_CASE("catalog rejects bad names and parameters") {
  CHECK(error_code_of([] { edim::catalog_graph("moebius", {5}); }) ==
        errc::unknown_name);
  CHECK(error_code_of([] { edim::catalog_graph("cycle", {2}); }) ==
        errc::bad_params);
  CHECK(error_code_of([] { edim::catalog_graph("path", {}); }) ==
        errc::bad_params);
  CHECK(error_code_of([] { edim::catalog_graph("petersen", {10}); }) ==
        errc::bad_params);
}

TEST_CASE("edge list writing uses count then one edge per line") {
  auto p3 = edim::catalog_graph("path", {3});
  CHECK(edim::write_edge_list(p3) == "3\n0 1\n1 2\n");
}

TEST_CASE("edge list round trip keeps the graph") {
  auto petersen = edim::catalog_graph("petersen", {});
  auto back = edim::read_edge_list(edim::write_edge_list(petersen));
  CHECK(back.vertex_count() == 10);
  CHECK(normalized_edges(back) == normalized_edges(petersen));
}

TEST_CASE("edge list reader accepts comments, blanks and CRLF") {
  std::string text =
      "# a triangle\r\n"
      "\r\n"
      "3\r\n"
      "0 1\r\n"
      "# middle comment\n"
      "1 2\n"
      "\n"
      "0 2\n";
  auto g = edim::read_edge_list(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("edge list reader reports line numbers on bad input") {
  CHECK(error_code_of([] { edim::read_edge_list(std::string("")); }) ==
        errc::parse_error);
  CHECK(error_code_of([] { edim::read_edge_list(std::string("# only\n")); }) ==
        errc::parse_error);

  auto message =
      error_message_of([] { edim::read_edge_list(std::string("3\n0 1 2\n")); });
  CHECK(message.find("line 2") != std::string::npos);

  message = error_message_of(
      [] { edim::read_edge_list(std::string("3\n0 1\nx y\n")); });
  CHECK(message.find("line 3") != std::string::npos);

  CHECK(error_code_of([] {
          edim::read_edge_list(std::string("3 3\n0 1\n"));
        }) == errc::parse_error);
  CHECK(error_code_of([] {
          edim::read_edge_list(std::string("2\n0 99999999999\n"));
        }) == errc::parse_error);
  // structurally fine but not a graph
  CHECK(error_code_of([] {
          edim::read_edge_list(std::string("2\n0 1\n0 1\n"));
        }) == errc::duplicate_edge);
  CHECK(error_code_of([] {
          edim::read_edge_list(std::string("3\n0 1\n"));
        }) == errc::disconnected);
}

TEST_CASE("raw edge list reader keeps disconnected input") {
  auto raw = edim::read_raw_edge_list(std::string("4\n0 1\n"));
  CHECK(raw.vertex_count == 4);
  CHECK(raw.edges == std::vector<edge_t>{{0, 1}});
}
