#pragma once

#include <string>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

struct CatalogEntry {
  std::string name;
  std::string params;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

// Families by name:
//   path n        vertices 0..n-1 in path order (n >= 1)
//   cycle n       cyclic order 0..n-1 (n >= 3)
//   complete n    edges in lexicographic order (n >= 1)
//   star m        center 0, leaves 1..m (m >= 1)
//   wheel n       hub 0, rim cycle 1..n (n >= 3)
//   petersen      outer 5-cycle 0..4, inner 5..9
//   truncated_cube
Graph catalog_graph(const std::string& name, const std::vector<int>& params);

}  // namespace edim
