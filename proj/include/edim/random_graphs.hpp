#pragma once

#include <random>
#include <vector>

#include "edim/graph.hpp"

namespace edim {

// Random tree on n vertices plus a percentage of the remaining pairs.
// Deterministic for a given engine state.
Graph random_connected_graph(std::mt19937& rng, int n, int extra_percent);

// k distinct values from 0..n-1, ascending.
std::vector<int> random_subset(std::mt19937& rng, int n, int k);

}  // namespace edim
