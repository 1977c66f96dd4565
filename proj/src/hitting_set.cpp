#include "edim/hitting_set.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <sstream>

namespace edim {

HittingSetInstance::HittingSetInstance(int universe, bool merge_duplicates)
    : universe_(universe), merge_duplicates_(merge_duplicates) {
  if (universe < 0) fail(errc::bad_params, "universe size must be >= 0");
}

void HittingSetInstance::add_constraint(std::vector<int> vertices,
                                        ConstraintOrigin origin) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  for (int v : vertices) {
    if (v < 0 || v >= universe_) {
      fail(errc::index_out_of_range,
           "constraint element " + std::to_string(v) + " outside universe");
    }
  }
  if (merge_duplicates_) {
    auto it = position_.find(vertices);
    if (it != position_.end()) {
      constraints_[it->second].origins.push_back(origin);
      return;
    }
    position_.emplace(vertices, static_cast<int>(constraints_.size()));
  }
  constraints_.push_back({std::move(vertices), {origin}});
}

namespace {

using clock_type = std::chrono::steady_clock;

struct Search {
  const std::vector<Constraint>* constraints = nullptr;
  std::vector<std::vector<int>> containing;  // vertex -> constraint ids
  int universe = 0;

  std::vector<int> cover_count;  // per constraint, by chosen vertices
  std::vector<char> excluded;
  std::vector<int> chosen;

  int best_size = INT_MAX;
  std::vector<int> best;
  int root_upper_bound = 0;

  long long nodes = 0;
  bool timed_out = false;
  bool has_deadline = false;
  clock_type::time_point deadline;

  // Scans the uncovered constraints once: lower bound from a greedily grown
  // family of pairwise disjoint ones, plus the branching constraint (fewest
  // remaining elements, first such on ties).  Returns false when some
  // constraint cannot be covered any more.
  bool scan(int& lower_bound, int& branch_constraint) {
    lower_bound = 0;
    branch_constraint = -1;
    int branch_size = INT_MAX;
    std::vector<char> marked(universe, 0);
    const auto& cons = *constraints;
    for (std::size_t c = 0; c < cons.size(); ++c) {
      if (cover_count[c] > 0) continue;
      int remaining = 0;
      bool disjoint = true;
      for (int v : cons[c].vertices) {
        if (excluded[v]) continue;
        ++remaining;
        if (marked[v]) disjoint = false;
      }
      if (remaining == 0) return false;
      if (disjoint) {
        ++lower_bound;
        for (int v : cons[c].vertices) {
          if (!excluded[v]) marked[v] = 1;
        }
      }
      if (remaining < branch_size) {
        branch_size = remaining;
        branch_constraint = static_cast<int>(c);
      }
    }
    return true;
  }

  void dfs() {
    if (timed_out) return;
    ++nodes;
    if (has_deadline && clock_type::now() > deadline) {
      timed_out = true;
      return;
    }

    int lower_bound = 0;
    int branch_constraint = -1;
    if (!scan(lower_bound, branch_constraint)) return;

    if (branch_constraint < 0) {  // everything covered
      if (static_cast<int>(chosen.size()) < best_size) {
        best_size = static_cast<int>(chosen.size());
        best = chosen;
      }
      return;
    }

    int allowed = std::min(best_size, root_upper_bound + 1);
    if (static_cast<int>(chosen.size()) + lower_bound >= allowed) return;

    int element = -1;
    for (int v : (*constraints)[branch_constraint].vertices) {
      if (!excluded[v] && v > element) element = v;
    }

    // take the element
    chosen.push_back(element);
    for (int c : containing[element]) ++cover_count[c];
    dfs();
    for (int c : containing[element]) --cover_count[c];
    chosen.pop_back();

    // leave it out
    excluded[element] = 1;
    dfs();
    excluded[element] = 0;
  }
};

// Repeatedly picks the vertex hitting the most uncovered constraints,
// lowest index on ties.
std::vector<int> greedy_cover(const std::vector<Constraint>& constraints,
                              int universe) {
  std::vector<char> covered(constraints.size(), 0);
  std::size_t uncovered = constraints.size();
  std::vector<int> result;
  while (uncovered > 0) {
    std::vector<int> hits(universe, 0);
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      if (covered[c]) continue;
      for (int v : constraints[c].vertices) ++hits[v];
    }
    int pick = 0;
    for (int v = 1; v < universe; ++v) {
      if (hits[v] > hits[pick]) pick = v;
    }
    result.push_back(pick);
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      if (covered[c]) continue;
      const auto& vs = constraints[c].vertices;
      if (std::find(vs.begin(), vs.end(), pick) != vs.end()) {
        covered[c] = 1;
        --uncovered;
      }
    }
  }
  return result;
}

}  // namespace

SolveResult solve_hitting_set(const HittingSetInstance& instance,
                              const SolveOptions& options) {
  for (const auto& constraint : instance.constraints()) {
    if (constraint.vertices.empty()) {
      fail(errc::infeasible, "constraint with no vertices cannot be hit");
    }
  }

  SolveResult result;
  if (instance.constraints().empty()) return result;

  auto start = clock_type::now();
  auto greedy = greedy_cover(instance.constraints(), instance.universe());

  Search search;
  search.constraints = &instance.constraints();
  search.universe = instance.universe();
  search.containing.assign(instance.universe(), {});
  for (std::size_t c = 0; c < instance.constraints().size(); ++c) {
    for (int v : instance.constraints()[c].vertices) {
      search.containing[v].push_back(static_cast<int>(c));
    }
  }
  search.cover_count.assign(instance.constraints().size(), 0);
  search.excluded.assign(instance.universe(), 0);
  search.root_upper_bound = static_cast<int>(greedy.size());
  if (options.time_limit_seconds) {
    search.has_deadline = true;
    search.deadline =
        start + std::chrono::duration_cast<clock_type::duration>(
                    std::chrono::duration<double>(*options.time_limit_seconds));
  }

  int root_lower = 0;
  int unused = -1;
  search.scan(root_lower, unused);
  search.dfs();

  if (search.best_size == INT_MAX) {
    // Only possible when the clock ran out before any leaf: fall back to
    // the greedy cover as incumbent.
    result.witness = greedy;
    result.optimum = static_cast<int>(greedy.size());
  } else {
    result.witness = search.best;
    result.optimum = search.best_size;
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.optimal = !search.timed_out;
  result.stats.nodes = search.nodes;
  result.stats.seconds =
      std::chrono::duration<double>(clock_type::now() - start).count();
  result.stats.root_lower_bound = root_lower;
  result.stats.root_upper_bound = search.root_upper_bound;
  return result;
}

HittingSetInstance build_edge_instance(const Graph& g) {
  HittingSetInstance instance(g.vertex_count());
  if (g.edge_count() < 2) return instance;
  auto tables = all_pairs_distances(g);
  for (int i = 0; i < g.edge_count(); ++i) {
    for (int j = i + 1; j < g.edge_count(); ++j) {
      std::vector<int> diff;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (tables.ve[i][v] != tables.ve[j][v]) diff.push_back(v);
      }
      instance.add_constraint(std::move(diff), {i, j, pair_kind::edge_pair});
    }
  }
  return instance;
}

HittingSetInstance build_vertex_instance(const Graph& g) {
  HittingSetInstance instance(g.vertex_count());
  if (g.vertex_count() < 2) return instance;
  auto tables = all_pairs_distances(g);
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int j = i + 1; j < g.vertex_count(); ++j) {
      std::vector<int> diff;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (tables.vv[v][i] != tables.vv[v][j]) diff.push_back(v);
      }
      instance.add_constraint(std::move(diff), {i, j, pair_kind::vertex_pair});
    }
  }
  return instance;
}

SolveResult edim_via_ilp(const Graph& g, const SolveOptions& options) {
  // Single-edge graphs keep the one-landmark convention of the exhaustive
  // search; there is nothing for the solver to decide.
  if (g.edge_count() == 1) {
    SolveResult result;
    result.optimum = 1;
    result.witness = {0};
    return result;
  }
  return solve_hitting_set(build_edge_instance(g), options);
}

SolveResult dim_via_ilp(const Graph& g, const SolveOptions& options) {
  return solve_hitting_set(build_vertex_instance(g), options);
}

namespace {

void append_wrapped(std::ostringstream& out, const std::string& head,
                    const std::vector<std::string>& terms,
                    const std::string& separator, const std::string& tail) {
  std::string line = head;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string piece = (i == 0 ? terms[i] : separator + terms[i]);
    if (line.size() + piece.size() > 72 && !line.empty()) {
      out << line << "\n";
      line = " ";
      piece = terms[i];
    }
    line += piece;
  }
  line += tail;
  out << line << "\n";
}

}  // namespace

std::string export_lp(const HittingSetInstance& instance,
                      const std::string& objective_name) {
  std::ostringstream out;
  std::vector<std::string> vars;
  vars.reserve(instance.universe());
  for (int v = 0; v < instance.universe(); ++v) {
    vars.push_back("x" + std::to_string(v + 1));
  }

  out << "Minimize\n";
  append_wrapped(out, " " + objective_name + ": ", vars, " + ", "");
  out << "Subject To\n";
  for (std::size_t c = 0; c < instance.constraints().size(); ++c) {
    std::vector<std::string> terms;
    for (int v : instance.constraints()[c].vertices) {
      terms.push_back("x" + std::to_string(v + 1));
    }
    append_wrapped(out, " c" + std::to_string(c + 1) + ": ", terms, " + ",
                   " >= 1");
  }
  out << "Binary\n";
  append_wrapped(out, " ", vars, " ", "");
  out << "End\n";
  return out.str();
}

}  // namespace edim
