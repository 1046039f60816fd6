#pragma once

#include <random>

#include "kcut/graph.hpp"

namespace kcut {

// Uniform random labeled tree (Pruefer decoding). n >= 1.
Graph random_tree(int n, std::mt19937_64& rng);

// Random spanning tree plus `extra` distinct random non-tree edges
// (clamped to the available pairs). Always connected. n >= 1.
Graph random_connected_graph(int n, int extra, std::mt19937_64& rng);

// G(n,p) unioned with a random spanning tree, so always connected. n >= 1.
Graph random_connected_gnp(int n, double p, std::mt19937_64& rng);

// Connected spanning subgraph of g: a random spanning tree of g plus each
// remaining edge with probability 1/2. Requires g connected.
Graph random_connected_spanning_subgraph(const Graph& g, std::mt19937_64& rng);

} // namespace kcut
