#include "edim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "edim/catalog.hpp"
#include "edim/edge_list_io.hpp"
#include "edim/errors.hpp"
#include "edim/graph.hpp"
#include "edim/hitting_set.hpp"
#include "edim/products.hpp"
#include "edim/resolvability.hpp"
#include "edim/verify.hpp"

namespace edim {
namespace {

using nlohmann::json;

// Bad flag combinations found after CLI11 parsing; reported as exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw usage_error(what + " must be an integer, got '" + token + "'");
  }
}

struct SourceOpts {
  std::string file;
  std::vector<std::string> catalog;
  std::string flag_prefix;

  void attach(CLI::App* cmd, const std::string& prefix,
              const std::string& what) {
    flag_prefix = prefix;
    auto* f = cmd->add_option("--" + prefix + "file", file,
                              "edge list file for " + what);
    auto* c = cmd->add_option("--" + prefix + "catalog", catalog,
                              "catalog name plus parameters for " + what);
    f->excludes(c);
    c->excludes(f);
  }

  std::string flags() const {
    return "--" + flag_prefix + "file or --" + flag_prefix + "catalog";
  }
};

std::vector<int> catalog_params(const SourceOpts& src) {
  std::vector<int> params;
  for (std::size_t i = 1; i < src.catalog.size(); ++i) {
    params.push_back(parse_int(src.catalog[i], "catalog parameter"));
  }
  return params;
}

Graph load_graph(const SourceOpts& src) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) fail(errc::io_error, "cannot open " + src.file);
    return read_edge_list(in);
  }
  if (!src.catalog.empty()) {
    return catalog_graph(src.catalog[0], catalog_params(src));
  }
  throw usage_error("a graph is needed; give " + src.flags());
}

// Like load_graph but keeps disconnected inputs, for the corona right factor.
RawEdgeList load_raw(const SourceOpts& src) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) fail(errc::io_error, "cannot open " + src.file);
    return read_raw_edge_list(in);
  }
  if (!src.catalog.empty()) {
    auto g = catalog_graph(src.catalog[0], catalog_params(src));
    return {g.vertex_count(), g.edges()};
  }
  throw usage_error("a graph is needed; give " + src.flags());
}

// Comma separated 1-based labels -> 0-based ids.
std::vector<int> parse_roots(const std::string& text, const Graph& g) {
  std::vector<int> roots;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    int label = parse_int(token, "--roots entry");
    if (label < 1 || label > g.vertex_count()) {
      fail(errc::index_out_of_range,
           "--roots label " + std::to_string(label) + " outside 1.." +
               std::to_string(g.vertex_count()));
    }
    roots.push_back(label - 1);
  }
  if (roots.empty()) throw usage_error("--roots needs at least one label");
  return roots;
}

std::string join_labels(const Graph& g, const std::vector<int>& vertices) {
  std::string out;
  for (int v : vertices) {
    if (!out.empty()) out += " ";
    out += g.label(v);
  }
  return out.empty() ? "(empty)" : out;
}

json one_based(const std::vector<int>& vertices) {
  json array = json::array();
  for (int v : vertices) array.push_back(v + 1);
  return array;
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) fail(errc::io_error, "cannot write " + path);
  file << text;
}

struct DimOpts {
  SourceOpts source;
  std::string method = "ilp";
  int cap = default_subset_search_cap;
  double timeout = 0.0;
  bool as_json = false;
};

void attach_dim_opts(CLI::App* cmd, DimOpts& opts) {
  opts.source.attach(cmd, "", "the graph");
  cmd->add_option("--method", opts.method, "ilp or brute")
      ->check(CLI::IsMember({"ilp", "brute"}));
  cmd->add_option("--cap", opts.cap,
                  "largest vertex count the brute method accepts");
  cmd->add_option("--timeout", opts.timeout,
                  "time limit in seconds for the ilp method");
  cmd->add_flag("--json", opts.as_json, "structured output");
}

int run_dimension(const DimOpts& opts, bool edge_version, std::ostream& out,
                  const std::string& kind = "") {
  Graph g = load_graph(opts.source);
  int dimension = 0;
  std::vector<int> basis;
  bool optimal = true;
  if (opts.method == "brute") {
    auto result =
        edge_version ? brute_force_edim(g, opts.cap) : brute_force_dim(g, opts.cap);
    dimension = result.dimension;
    basis = result.basis;
  } else {
    SolveOptions solve;
    if (opts.timeout > 0) solve.time_limit_seconds = opts.timeout;
    auto result = edge_version ? edim_via_ilp(g, solve) : dim_via_ilp(g, solve);
    dimension = result.optimum;
    basis = result.witness;
    optimal = result.optimal;
  }
  if (opts.as_json) {
    json doc{{"dimension", dimension},
             {"basis", one_based(basis)},
             {"method", opts.method},
             {"optimal", optimal}};
    if (!kind.empty()) doc["kind"] = kind;
    out << doc.dump(2) << "\n";
  } else {
    out << "dimension: " << dimension << "\n";
    out << "basis: " << join_labels(g, basis) << "\n";
    if (!kind.empty()) out << "kind: " << kind << "\n";
    out << "method: " << opts.method << "\n";
    out << "optimal: " << (optimal ? "yes" : "no") << "\n";
  }
  return 0;
}

struct BoundRow {
  std::string bound_name;
  int value = 0;
  bool applicable = false;
  std::string note;
};

void print_bounds(const std::vector<BoundRow>& rows, bool as_json,
                  std::ostream& out) {
  if (as_json) {
    json array = json::array();
    for (const auto& row : rows) {
      array.push_back(json{{"bound_name", row.bound_name},
                           {"value", row.value},
                           {"applicable", row.applicable},
                           {"note", row.note}});
    }
    out << json{{"bounds", array}}.dump(2) << "\n";
    return;
  }
  for (const auto& row : rows) {
    out << row.bound_name << ": value " << row.value << ", applicable "
        << (row.applicable ? "yes" : "no");
    if (!row.note.empty()) out << " (" << row.note << ")";
    out << "\n";
  }
}

struct BoundsOpts {
  SourceOpts g_source;
  SourceOpts h_source;
  bool hier = false;
  bool corona = false;
  bool bridge = false;
  std::string roots;
  int root_label = 0;
  int copies = 0;
  bool scan_witnesses = false;
  bool as_json = false;
};

int run_bounds(const BoundsOpts& opts, std::ostream& out) {
  int picked = int(opts.hier) + int(opts.corona) + int(opts.bridge);
  if (picked != 1) {
    throw usage_error(
        "pick exactly one of --hier, --corona, --bridge-cycle");
  }
  std::vector<BoundRow> rows;
  if (opts.hier) {
    Graph g = load_graph(opts.g_source);
    Graph h = load_graph(opts.h_source);
    if (opts.roots.empty()) throw usage_error("--hier needs --roots");
    RootedSubset gu(g, parse_roots(opts.roots, g));
    const int nh = h.vertex_count();
    auto base = rooted_edim(gu);
    auto plus = rooted_edim_plus(gu);
    rows.push_back({"rooted_edim", base.dimension, true, ""});
    rows.push_back({"rooted_edim_plus", plus.dimension, true, ""});

    bool multi = gu.roots.size() >= 2;
    rows.push_back({"general_upper_bound", nh * (plus.dimension + 1), multi,
                    multi ? "" : "needs at least two roots"});

    bool scan = opts.scan_witnesses && g.vertex_count() <= 12;
    auto refined = product_edim_refined_bound(gu, h, scan);
    std::string note = "decided on the returned witness";
    if (refined.applicable_any_witness) {
      note += *refined.applicable_any_witness
                  ? "; some optimal witness meets the roots"
                  : "; no optimal witness meets the roots";
    } else if (opts.scan_witnesses) {
      note += "; witness scan skipped, graph is over 12 vertices";
    } else {
      note += "; other optimal witnesses may differ";
    }
    rows.push_back({"refined_upper_bound", refined.value, refined.applicable,
                    note});

    bool single_exact = gu.roots.size() == 1 &&
                        !is_rooted_path(g, gu.roots[0]) && nh >= 2;
    rows.push_back({"single_root_exact", nh * base.dimension, single_exact,
                    single_exact ? "" : "needs one root, a non-path shape and "
                                        "at least two vertices in the second "
                                        "factor"});
  } else if (opts.corona) {
    Graph g = load_graph(opts.g_source);
    auto h = load_raw(opts.h_source);
    int value = corona_edim(g, h.vertex_count, h.edges);
    rows.push_back({"corona_exact", value, true, ""});
  } else {
    Graph g = load_graph(opts.g_source);
    if (opts.root_label < 1 || opts.root_label > g.vertex_count()) {
      fail(errc::index_out_of_range,
           "--root label " + std::to_string(opts.root_label) + " outside 1.." +
               std::to_string(g.vertex_count()));
    }
    int value = bridge_cycle_edim(g, opts.root_label - 1, opts.copies);
    rows.push_back({"bridge_cycle_exact", value, true, ""});
  }
  print_bounds(rows, opts.as_json, out);
  return 0;
}

struct VerifyCmdOpts {
  std::string data_dir;
  bool as_json = false;
};

int run_verify(const VerifyCmdOpts& opts, std::ostream& out) {
  std::vector<CheckResult> results;
  if (opts.as_json) {
    results = run_verification({opts.data_dir});
  } else {
    results = run_verification({opts.data_dir}, [&](const CheckResult& r) {
      out << to_string(r.status) << "  " << r.name << ": " << r.detail << "\n";
    });
  }
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  for (const auto& r : results) {
    if (r.status == check_status::pass) ++passed;
    if (r.status == check_status::fail) ++failed;
    if (r.status == check_status::skip) ++skipped;
  }
  if (opts.as_json) {
    json array = json::array();
    for (const auto& r : results) {
      array.push_back(json{{"name", r.name},
                           {"status", to_string(r.status)},
                           {"detail", r.detail}});
    }
    out << json{{"all_pass", failed == 0}, {"checks", array}}.dump(2) << "\n";
  } else {
    out << "summary: " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
  }
  return failed > 0 ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"edge metric dimension toolkit"};
  app.require_subcommand(1);

  DimOpts edim_opts;
  auto* edim_cmd =
      app.add_subcommand("edim", "edge metric dimension of a graph");
  attach_dim_opts(edim_cmd, edim_opts);

  DimOpts dim_opts;
  auto* dim_cmd = app.add_subcommand("dim", "metric dimension of a graph");
  attach_dim_opts(dim_cmd, dim_opts);

  DimOpts basis_opts;
  std::string basis_kind = "edge";
  auto* basis_cmd =
      app.add_subcommand("basis", "smallest separating vertex set");
  attach_dim_opts(basis_cmd, basis_opts);
  basis_cmd->add_option("--kind", basis_kind, "separate edges or vertices")
      ->check(CLI::IsMember({"edge", "vertex"}));

  auto* product_cmd =
      app.add_subcommand("product", "construct a product graph");
  product_cmd->require_subcommand(1);

  SourceOpts hier_g, hier_h;
  std::string hier_roots, hier_output;
  auto* hier_cmd = product_cmd->add_subcommand(
      "hier", "hierarchical product of a rooted graph with a second factor");
  hier_g.attach(hier_cmd, "", "the left factor");
  hier_h.attach(hier_cmd, "h-", "the right factor");
  hier_cmd->add_option("--roots", hier_roots, "comma separated 1-based labels")
      ->required();
  hier_cmd->add_option("-o,--output", hier_output, "write the edge list here");

  SourceOpts corona_g, corona_h;
  std::string corona_output;
  auto* corona_cmd = product_cmd->add_subcommand(
      "corona", "one joined copy of the second factor per vertex");
  corona_g.attach(corona_cmd, "", "the left factor");
  corona_h.attach(corona_cmd, "h-", "the right factor");
  corona_cmd->add_option("-o,--output", corona_output,
                         "write the edge list here");

  SourceOpts bridge_g;
  int bridge_root = 0;
  int bridge_copies = 0;
  std::string bridge_output;
  auto* bridge_cmd = product_cmd->add_subcommand(
      "bridge-cycle", "copies of a rooted graph with the roots cycled");
  bridge_g.attach(bridge_cmd, "", "the component");
  bridge_cmd->add_option("--root", bridge_root, "1-based root label")
      ->required();
  bridge_cmd->add_option("--copies", bridge_copies, "number of copies")
      ->required();
  bridge_cmd->add_option("-o,--output", bridge_output,
                         "write the edge list here");

  BoundsOpts bounds_opts;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "closed forms and bounds for products");
  bounds_opts.g_source.attach(bounds_cmd, "", "the left factor");
  bounds_opts.h_source.attach(bounds_cmd, "h-", "the right factor");
  bounds_cmd->add_flag("--hier", bounds_opts.hier, "hierarchical product");
  bounds_cmd->add_flag("--corona", bounds_opts.corona, "corona product");
  bounds_cmd->add_flag("--bridge-cycle", bounds_opts.bridge,
                       "cycled copies of a rooted graph");
  bounds_cmd->add_option("--roots", bounds_opts.roots,
                         "comma separated 1-based labels (--hier)");
  bounds_cmd->add_option("--root", bounds_opts.root_label,
                         "1-based root label (--bridge-cycle)");
  bounds_cmd->add_option("--copies", bounds_opts.copies,
                         "number of copies (--bridge-cycle)");
  bounds_cmd->add_flag("--scan-witnesses", bounds_opts.scan_witnesses,
                       "also decide applicability over every optimal witness "
                       "(graphs up to 12 vertices)");
  bounds_cmd->add_flag("--json", bounds_opts.as_json, "structured output");

  SourceOpts lp_source;
  std::string lp_output;
  auto* lp_cmd = app.add_subcommand(
      "export-lp", "write the edge separation covering model in LP format");
  lp_source.attach(lp_cmd, "", "the graph");
  lp_cmd->add_option("-o,--output", lp_output, "write the model here");

  VerifyCmdOpts verify_opts;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the built-in check suite");
  verify_cmd->add_option("--data", verify_opts.data_dir,
                         "directory with user-supplied edge lists");
  verify_cmd->add_flag("--json", verify_opts.as_json, "structured output");

  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in graphs");
  catalog_cmd->add_flag("--json", catalog_json, "structured output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (edim_cmd->parsed()) return run_dimension(edim_opts, true, out);
    if (dim_cmd->parsed()) return run_dimension(dim_opts, false, out);
    if (basis_cmd->parsed()) {
      return run_dimension(basis_opts, basis_kind == "edge", out, basis_kind);
    }
    if (hier_cmd->parsed()) {
      Graph g = load_graph(hier_g);
      Graph h = load_graph(hier_h);
      RootedSubset gu(g, parse_roots(hier_roots, g));
      auto product = hierarchical_product(gu, h);
      write_output(write_edge_list(product.graph), hier_output, out);
      return 0;
    }
    if (corona_cmd->parsed()) {
      Graph g = load_graph(corona_g);
      auto h = load_raw(corona_h);
      auto product = corona_product(g, h.vertex_count, h.edges);
      write_output(write_edge_list(product.graph), corona_output, out);
      return 0;
    }
    if (bridge_cmd->parsed()) {
      Graph g = load_graph(bridge_g);
      if (bridge_root < 1 || bridge_root > g.vertex_count()) {
        fail(errc::index_out_of_range,
             "--root label " + std::to_string(bridge_root) + " outside 1.." +
                 std::to_string(g.vertex_count()));
      }
      std::vector<RootedComponent> components(
          static_cast<std::size_t>(std::max(bridge_copies, 0)),
          RootedComponent{g, bridge_root - 1});
      Graph built = bridge_cycle(components);
      write_output(write_edge_list(built), bridge_output, out);
      return 0;
    }
    if (bounds_cmd->parsed()) return run_bounds(bounds_opts, out);
    if (lp_cmd->parsed()) {
      Graph g = load_graph(lp_source);
      auto instance = build_edge_instance(g);
      write_output(export_lp(instance), lp_output, out);
      return 0;
    }
    if (verify_cmd->parsed()) return run_verify(verify_opts, out);
    if (catalog_cmd->parsed()) {
      if (catalog_json) {
        json array = json::array();
        for (const auto& entry : catalog_entries()) {
          array.push_back(json{{"name", entry.name},
                               {"params", entry.params},
                               {"description", entry.description}});
        }
        out << json{{"catalog", array}}.dump(2) << "\n";
      } else {
        for (const auto& entry : catalog_entries()) {
          out << entry.name;
          if (!entry.params.empty()) out << " " << entry.params;
          out << "\n    " << entry.description << "\n";
        }
      }
      return 0;
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace edim
