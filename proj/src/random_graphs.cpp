#include "kcut/random_graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kcut {

namespace {

std::vector<Edge> pruefer_tree_edges(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    if (n < 2) return edges;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& x : seq) x = pick(rng);
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<size_t>(x)];
    // Classic linear-time decoding with a pointer-and-leaf walk.
    int ptr = 0;
    while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--degree[static_cast<size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[static_cast<size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

} // namespace

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    return Graph::from_edges(n, pruefer_tree_edges(n, rng));
}

Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
    if (n < 1)
        throw std::invalid_argument("random_connected_graph: n must be >= 1");
    std::vector<Edge> edges = pruefer_tree_edges(n, rng);
    uint64_t have[64] = {};
    for (const Edge& e : edges) {
        have[e.u] |= uint64_t{1} << e.v;
        have[e.v] |= uint64_t{1} << e.u;
    }
    std::vector<Edge> pool;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!((have[i] >> j) & 1u)) pool.emplace_back(i, j);
    std::shuffle(pool.begin(), pool.end(), rng);
    int take = std::min<int>(extra, static_cast<int>(pool.size()));
    edges.insert(edges.end(), pool.begin(), pool.begin() + take);
    return Graph::from_edges(n, edges);
}

Graph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
    if (n < 1)
        throw std::invalid_argument("random_connected_gnp: n must be >= 1");
    std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
    std::vector<Edge> edges = pruefer_tree_edges(n, rng);
    uint64_t have[64] = {};
    for (const Edge& e : edges) {
        have[e.u] |= uint64_t{1} << e.v;
        have[e.v] |= uint64_t{1} << e.u;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!((have[i] >> j) & 1u) && coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph random_connected_spanning_subgraph(const Graph& g, std::mt19937_64& rng) {
    if (!is_connected(g))
        throw std::invalid_argument(
            "random_connected_spanning_subgraph: input must be connected");
    std::vector<Edge> order = g.edges();
    std::shuffle(order.begin(), order.end(), rng);
    // Kruskal on the shuffled order gives a random spanning tree.
    std::vector<int> parent(static_cast<size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    std::vector<Edge> keep;
    std::vector<Edge> rest;
    for (const Edge& e : order) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            keep.push_back(e);
        } else {
            rest.push_back(e);
        }
    }
    std::bernoulli_distribution coin(0.5);
    for (const Edge& e : rest)
        if (coin(rng)) keep.push_back(e);
    return Graph::from_edges(g.order(), keep);
}

} // namespace kcut
