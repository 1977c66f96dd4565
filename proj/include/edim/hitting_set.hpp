#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

enum class pair_kind { edge_pair, vertex_pair };

struct ConstraintOrigin {
  int first = 0;
  int second = 0;
  pair_kind kind = pair_kind::edge_pair;
};

struct Constraint {
  std::vector<int> vertices;  // sorted, usually non-empty
  std::vector<ConstraintOrigin> origins;
};

// Minimum hitting set instance over vertices 0..universe-1.  Constraints
// with identical vertex sets are merged and their origin tags concatenated;
// order of first appearance is kept.
class HittingSetInstance {
public:
  explicit HittingSetInstance(int universe, bool merge_duplicates = true);

  int universe() const { return universe_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void add_constraint(std::vector<int> vertices, ConstraintOrigin origin);

private:
  int universe_;
  bool merge_duplicates_;
  std::vector<Constraint> constraints_;
  std::map<std::vector<int>, int> position_;
};

struct SolveStats {
  long long nodes = 0;
  double seconds = 0.0;
  int root_lower_bound = 0;
  int root_upper_bound = 0;
};

struct SolveOptions {
  std::optional<double> time_limit_seconds;
};

struct SolveResult {
  int optimum = 0;
  std::vector<int> witness;  // sorted ascending
  bool optimal = true;       // false when the time budget ran out
  SolveStats stats;
};

// One constraint per unordered edge pair: the vertices whose edge distances
// to the two edges differ.  Graphs with fewer than two edges give an empty
// instance.
HittingSetInstance build_edge_instance(const Graph& g);

// Vertex analogue, one constraint per unordered vertex pair.
HittingSetInstance build_vertex_instance(const Graph& g);

// Exact branch and bound.  Deterministic: branches on an element of a
// smallest uncovered constraint, higher vertex indices first.  On timeout
// the incumbent is returned with optimal = false instead of an error.
SolveResult solve_hitting_set(const HittingSetInstance& instance,
                              const SolveOptions& options = {});

SolveResult edim_via_ilp(const Graph& g, const SolveOptions& options = {});
SolveResult dim_via_ilp(const Graph& g, const SolveOptions& options = {});

// LP text with a binary variable x<j+1> per vertex j and one covering row
// per constraint, in instance order.
std::string export_lp(const HittingSetInstance& instance,
                      const std::string& objective_name = "edim");

}  // namespace edim
