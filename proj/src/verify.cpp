#include "edim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "edim/catalog.hpp"
#include "edim/edge_list_io.hpp"
#include "edim/errors.hpp"
#include "edim/graph.hpp"
#include "edim/hitting_set.hpp"
#include "edim/products.hpp"
#include "edim/random_graphs.hpp"
#include "edim/resolvability.hpp"

namespace edim {

const char* to_string(check_status status) {
  switch (status) {
    case check_status::pass:
      return "pass";
    case check_status::fail:
      return "fail";
    case check_status::skip:
      return "skip";
  }
  return "?";
}

namespace {

struct CheckContext {
  std::vector<std::string> failures;
  std::string note;
  bool skipped = false;

  void expect(bool condition, const std::string& message) {
    if (!condition) failures.push_back(message);
  }
  void skip(const std::string& reason) {
    skipped = true;
    note = reason;
  }
};

std::string format_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

std::string show_set(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i] + 1);
  }
  return out + "}";
}

void check_k3_ilp_example(CheckContext& ctx) {
  auto g = catalog_graph("complete", {3});
  auto instance = build_edge_instance(g);
  ctx.expect(instance.constraints().size() == 3,
             "expected 3 covering rows, got " +
                 std::to_string(instance.constraints().size()));
  std::vector<std::vector<int>> want_rows = {{1, 2}, {0, 2}, {0, 1}};
  std::vector<std::pair<int, int>> want_pairs = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t i = 0;
       i < instance.constraints().size() && i < want_rows.size(); ++i) {
    const auto& c = instance.constraints()[i];
    ctx.expect(c.vertices == want_rows[i],
               "row " + std::to_string(i + 1) + " holds " +
                   show_set(c.vertices) + ", expected " +
                   show_set(want_rows[i]));
    ctx.expect(c.origins.size() == 1 &&
                   c.origins[0].kind == pair_kind::edge_pair &&
                   c.origins[0].first == want_pairs[i].first &&
                   c.origins[0].second == want_pairs[i].second,
               "row " + std::to_string(i + 1) + " has unexpected origin");
  }
  auto lp = export_lp(instance);
  auto p1 = lp.find("c1: x2 + x3 >= 1");
  auto p2 = lp.find("c2: x1 + x3 >= 1");
  auto p3 = lp.find("c3: x1 + x2 >= 1");
  ctx.expect(p1 != std::string::npos && p2 != std::string::npos &&
                 p3 != std::string::npos && p1 < p2 && p2 < p3,
             "LP rows missing or out of order");
  auto result = edim_via_ilp(g, {});
  ctx.expect(result.optimum == 2,
             "optimum " + std::to_string(result.optimum) + ", expected 2");
  ctx.expect(result.witness == std::vector<int>({1, 2}),
             "witness " + show_set(result.witness) + ", expected {2,3}");
  ctx.expect(result.optimal, "solver did not report optimality");
  ctx.note = "3 rows, optimum 2, witness " + show_set(result.witness);
}

void check_path_characterization(CheckContext& ctx) {
  for (int n = 2; n <= 12; ++n) {
    auto g = catalog_graph("path", {n});
    auto brute = brute_force_edim(g);
    auto ilp = edim_via_ilp(g, {});
    ctx.expect(brute.dimension == 1, "brute value " +
                                         std::to_string(brute.dimension) +
                                         " on the " + std::to_string(n) +
                                         "-vertex path");
    ctx.expect(ilp.optimum == 1, "ilp value " + std::to_string(ilp.optimum) +
                                     " on the " + std::to_string(n) +
                                     "-vertex path");
  }
  ctx.note = "paths on 2..12 vertices all give 1";
}

void check_hierarchical_path_product(CheckContext& ctx) {
  auto g = catalog_graph("path", {11});
  auto h = catalog_graph("path", {2});
  RootedSubset gu(g, {0, 2, 4, 6, 8, 10});

  auto plus = rooted_edim_plus(gu);
  ctx.expect(plus.dimension == 1,
             "root-aware value " + std::to_string(plus.dimension) +
                 ", expected 1");

  int general = product_edim_upper_bound(gu, h);
  ctx.expect(general == 4,
             "general bound " + std::to_string(general) + ", expected 4");

  auto refined = product_edim_refined_bound(gu, h, true);
  ctx.expect(refined.value == 2,
             "refined bound " + std::to_string(refined.value) + ", expected 2");
  ctx.expect(refined.applicable, "refined bound not applicable to the witness");

  auto product = hierarchical_product(gu, h);
  ctx.expect(product.graph.vertex_count() == 22 &&
                 product.graph.edge_count() == 26,
             "product has " + std::to_string(product.graph.vertex_count()) +
                 " vertices and " + std::to_string(product.graph.edge_count()) +
                 " edges, expected 22 and 26");

  auto ilp = edim_via_ilp(product.graph, {});
  ctx.expect(ilp.optimum == 2,
             "product value " + std::to_string(ilp.optimum) + ", expected 2");
  auto brute = brute_force_edim(product.graph, 22);
  ctx.expect(brute.dimension == 2, "exhaustive product value " +
                                       std::to_string(brute.dimension) +
                                       ", expected 2");
  ctx.note = "bound 2 attained on the 22-vertex product";
}

void check_truncated_cube(CheckContext& ctx) {
  auto g = catalog_graph("truncated_cube", {});
  auto ilp = edim_via_ilp(g, {});
  ctx.expect(ilp.optimum == 3,
             "value " + std::to_string(ilp.optimum) + ", expected 3");
  ctx.expect(is_edge_metric_generator(g, ilp.witness),
             "witness does not separate all edges");
  auto brute = brute_force_edim(g, 24);
  ctx.expect(brute.dimension == 3, "exhaustive value " +
                                       std::to_string(brute.dimension) +
                                       ", expected 3");
  ctx.note = "24-vertex graph, value 3, witness " + show_set(ilp.witness);
}

void check_product_distance_formula(CheckContext& ctx) {
  std::mt19937 rng(20240501);
  int done = 0;
  long long pairs_checked = 0;
  while (done < 50) {
    int ng = 2 + static_cast<int>(rng() % 6);
    int max_nh = std::min(8, 60 / ng);
    int nh = 1 + static_cast<int>(rng() % max_nh);
    auto g = random_connected_graph(rng, ng, 25);
    auto h = random_connected_graph(rng, nh, 25);
    int usize = 1 + static_cast<int>(rng() % ng);
    RootedSubset gu(g, random_subset(rng, ng, usize));
    auto product = hierarchical_product(gu, h);
    auto tables = all_pairs_distances(product.graph);
    const int total = product.graph.vertex_count();
    for (int a = 0; a < total && ctx.failures.size() < 5; ++a) {
      for (int b = a; b < total; ++b) {
        int direct = product_distance(gu, h, product.pairs[a],
                                      product.pairs[b]);
        if (direct != tables.vv[a][b]) {
          ctx.failures.push_back(
              "instance " + std::to_string(done) + ": formula gives " +
              std::to_string(direct) + " but search gives " +
              std::to_string(tables.vv[a][b]) + " for vertices " +
              std::to_string(a + 1) + "," + std::to_string(b + 1));
        }
        ++pairs_checked;
      }
    }
    ++done;
  }
  ctx.note = "50 random products, " + std::to_string(pairs_checked) +
             " vertex pairs matched";
}

void check_single_root_formula(CheckContext& ctx) {
  std::mt19937 rng(20240502);
  int done = 0;
  while (done < 30 && ctx.failures.size() < 5) {
    int ng = 2 + static_cast<int>(rng() % 6);
    auto g = random_connected_graph(rng, ng, 30);
    int root = static_cast<int>(rng() % ng);
    if (is_rooted_path(g, root)) continue;
    int max_nh = 14 / ng;
    if (max_nh < 2) continue;
    int nh = 2 + static_cast<int>(rng() % (max_nh - 1));
    auto h = random_connected_graph(rng, nh, 30);
    int formula = product_edim_single_root(g, root, h);
    auto product = hierarchical_product(RootedSubset(g, {root}), h);
    auto brute = brute_force_edim(product.graph, 14);
    if (formula != brute.dimension) {
      ctx.failures.push_back("instance " + std::to_string(done) +
                             ": formula " + std::to_string(formula) +
                             " but exhaustive search " +
                             std::to_string(brute.dimension));
    }
    ++done;
  }
  ctx.note = std::to_string(done) + " single-root products matched";
}

void check_multi_root_bounds(CheckContext& ctx) {
  std::mt19937 rng(20240503);
  int done = 0;
  int refined_hits = 0;
  while (done < 30 && ctx.failures.size() < 5) {
    int ng = 2 + static_cast<int>(rng() % 6);
    auto g = random_connected_graph(rng, ng, 30);
    int usize = 2 + static_cast<int>(rng() % (ng - 1));
    RootedSubset gu(g, random_subset(rng, ng, usize));
    int max_nh = 14 / ng;
    if (max_nh < 1) continue;
    int nh = 1 + static_cast<int>(rng() % max_nh);
    auto h = random_connected_graph(rng, nh, 30);

    int general = product_edim_upper_bound(gu, h);
    auto refined = product_edim_refined_bound(gu, h, true);
    auto product = hierarchical_product(gu, h);
    int actual = brute_force_edim(product.graph, 14).dimension;

    if (actual > general) {
      ctx.failures.push_back("instance " + std::to_string(done) + ": value " +
                             std::to_string(actual) +
                             " above the general bound " +
                             std::to_string(general));
    }
    bool covered = refined.applicable ||
                   refined.applicable_any_witness.value_or(false);
    if (covered) {
      ++refined_hits;
      if (actual > refined.value) {
        ctx.failures.push_back(
            "instance " + std::to_string(done) + ": value " +
            std::to_string(actual) + " above the applicable refined bound " +
            std::to_string(refined.value));
      }
    }
    ++done;
  }
  ctx.note = std::to_string(done) + " instances, refined bound applicable on " +
             std::to_string(refined_hits);
}

void check_corona_formula(CheckContext& ctx) {
  struct RawGraph {
    const char* name;
    int order;
    std::vector<edge_t> edges;
  };
  std::vector<Graph> left = {
      catalog_graph("complete", {1}),
      catalog_graph("path", {2}),
      catalog_graph("path", {3}),
      catalog_graph("complete", {3}),
  };
  std::vector<RawGraph> right = {
      {"two vertices, one edge", 2, {{0, 1}}},
      {"two isolated vertices", 2, {}},
      {"3-vertex path", 3, {{0, 1}, {1, 2}}},
      {"triangle", 3, {{0, 1}, {0, 2}, {1, 2}}},
      {"three isolated vertices", 3, {}},
      {"4-vertex path", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"4-cycle", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {"edge plus isolated vertex", 3, {{0, 1}}},
  };
  int checked = 0;
  int near_branch = 0;
  int general_branch = 0;
  for (const auto& g : left) {
    for (const auto& h : right) {
      if (g.vertex_count() * (h.order + 1) > 14) continue;
      bool near = g.vertex_count() == 1 && !h.edges.empty() &&
                  every_vertex_near_every_edge(h.order, h.edges);
      (near ? near_branch : general_branch) += 1;
      int formula = corona_edim(g, h.order, h.edges);
      auto corona = corona_product(g, h.order, h.edges);
      int actual = brute_force_edim(corona.graph, 14).dimension;
      if (formula != actual) {
        ctx.failures.push_back(std::string("corona with ") + h.name + ": " +
                               "formula " + std::to_string(formula) +
                               " but exhaustive search " +
                               std::to_string(actual));
      }
      ++checked;
    }
  }
  ctx.expect(near_branch > 0 && general_branch > 0,
             "both formula branches need coverage");
  ctx.note = std::to_string(checked) + " coronas matched (" +
             std::to_string(near_branch) + " close-range, " +
             std::to_string(general_branch) + " general)";
}

void check_ilp_matches_brute(CheckContext& ctx) {
  std::mt19937 rng(20240504);
  for (int t = 0; t < 200 && ctx.failures.size() < 5; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto g = random_connected_graph(rng, n, 30);
    auto ilp = edim_via_ilp(g, {});
    auto brute = brute_force_edim(g);
    if (ilp.optimum != brute.dimension) {
      ctx.failures.push_back("instance " + std::to_string(t) + ": ilp " +
                             std::to_string(ilp.optimum) + " vs exhaustive " +
                             std::to_string(brute.dimension));
      continue;
    }
    if (static_cast<int>(ilp.witness.size()) != ilp.optimum ||
        !is_edge_metric_generator(g, ilp.witness)) {
      ctx.failures.push_back("instance " + std::to_string(t) +
                             ": witness does not separate all edges");
    }
  }
  ctx.note = "200 random graphs on up to 8 vertices agreed";
}

void check_supplied_graphs(CheckContext& ctx, const std::string& data_dir) {
  struct Target {
    const char* file;
    int expected;
  };
  const std::vector<Target> targets = {
      {"k13_u_p2.el", 2},
      {"w_u_p2.el", 2},
      {"bn16.el", 3},
  };
  if (data_dir.empty()) {
    ctx.skip(
        "needs externally encoded graphs; pass a data directory holding "
        "k13_u_p2.el, w_u_p2.el, bn16.el");
    return;
  }
  int found = 0;
  std::vector<std::string> notes;
  for (const auto& target : targets) {
    auto path = std::filesystem::path(data_dir) / target.file;
    if (!std::filesystem::exists(path)) {
      notes.push_back(std::string(target.file) + " absent");
      continue;
    }
    ++found;
    std::ifstream in(path);
    auto g = read_edge_list(in);
    auto result = edim_via_ilp(g, {});
    if (result.optimum == target.expected) {
      notes.push_back(std::string(target.file) + " value " +
                      std::to_string(result.optimum) + " as recorded");
    } else {
      ctx.failures.push_back(std::string(target.file) + " gives " +
                             std::to_string(result.optimum) + ", recorded " +
                             std::to_string(target.expected));
    }
  }
  if (found == 0) {
    ctx.skip("no encoded graph files present in " + data_dir);
    return;
  }
  std::string joined;
  for (const auto& n : notes) {
    if (!joined.empty()) joined += "; ";
    joined += n;
  }
  ctx.note = joined;
}

struct TimedCheck {
  std::string name;
  double budget_seconds;
  std::function<void(CheckContext&)> body;
};

}  // namespace

std::vector<CheckResult> run_verification(
    const VerifyOptions& options,
    const std::function<void(const CheckResult&)>& on_result) {
  const std::vector<TimedCheck> checks = {
      {"k3_ilp_example", 1.0, check_k3_ilp_example},
      {"path_edim_characterization", 1.0, check_path_characterization},
      {"hierarchical_path_product", 1.0, check_hierarchical_path_product},
      {"truncated_cube_edim", 10.0, check_truncated_cube},
      {"product_distance_formula", 30.0, check_product_distance_formula},
      {"single_root_product_formula", 300.0, check_single_root_formula},
      {"multi_root_upper_bounds", 300.0, check_multi_root_bounds},
      {"corona_formula", 120.0, check_corona_formula},
      {"ilp_matches_brute_force", 120.0, check_ilp_matches_brute},
      {"supplied_graphs", 60.0,
       [&options](CheckContext& ctx) {
         check_supplied_graphs(ctx, options.data_dir);
       }},
  };

  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    CheckContext ctx;
    auto start = std::chrono::steady_clock::now();
    try {
      check.body(ctx);
    } catch (const std::exception& e) {
      ctx.failures.push_back(std::string("unexpected error: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    CheckResult result;
    result.name = check.name;
    if (ctx.skipped) {
      result.status = check_status::skip;
      result.detail = ctx.note;
    } else if (!ctx.failures.empty()) {
      result.status = check_status::fail;
      result.detail = ctx.failures.front();
      if (ctx.failures.size() > 1) {
        result.detail +=
            " (+" + std::to_string(ctx.failures.size() - 1) + " more)";
      }
    } else if (elapsed > check.budget_seconds) {
      result.status = check_status::fail;
      result.detail = "finished in " + format_seconds(elapsed) +
                      ", over the " + format_seconds(check.budget_seconds) +
                      " budget";
    } else {
      result.status = check_status::pass;
      result.detail = ctx.note.empty()
                          ? format_seconds(elapsed)
                          : ctx.note + " (" + format_seconds(elapsed) + ")";
    }
    results.push_back(result);
    if (on_result) on_result(result);
  }
  return results;
}

}  // namespace edim
