#include "edim/random_graphs.hpp"

#include <algorithm>
#include <set>

#include "edim/errors.hpp"

namespace edim {

Graph random_connected_graph(std::mt19937& rng, int n, int extra_percent) {
  if (n < 1) fail(errc::bad_params, "need at least one vertex");
  std::vector<edge_t> edges;
  std::set<edge_t> present;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % v);
    edges.push_back({parent, v});
    present.insert({parent, v});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present.count({u, v})) continue;
      if (static_cast<int>(rng() % 100) < extra_percent) {
        edges.push_back({u, v});
        present.insert({u, v});
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<int> random_subset(std::mt19937& rng, int n, int k) {
  if (k < 0 || k > n) fail(errc::bad_params, "subset size out of range");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  // partial Fisher-Yates, avoiding std::shuffle so runs match across
  // standard libraries
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng() % (n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace edim
