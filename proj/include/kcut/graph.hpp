#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kcut {

// Undirected edge, stored normalized with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b);

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }

    std::string str() const;
};

// Simple undirected graph on vertices 0..n-1, n <= 64.
// Adjacency is stored as one 64-bit row mask per vertex.
class Graph {
public:
    Graph() = default;

    // Build from an explicit vertex count and edge list.
    // Throws std::invalid_argument on n outside [0,64], endpoints outside
    // [0,n), or duplicate edges. Loops are impossible by Edge's invariant.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    uint64_t row(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    // Edges sorted lexicographically by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> neighbors(int v) const;

    uint64_t full_mask() const {
        return n_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1);
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    uint64_t adj_[64] = {};
};

struct ComponentInfo {
    int count = 0;
    std::vector<int> comp_id;        // comp_id[v], components numbered by
                                     // ascending smallest member
    std::vector<uint64_t> comp_mask; // one bit mask per component
};

ComponentInfo components(const Graph& g);
bool is_connected(const Graph& g);

// Number of connected components of the subgraph induced on `active`
// (a bit mask of vertices). Vertices outside the mask are ignored.
int count_components_masked(const Graph& g, uint64_t active);

// All cut edges (bridges), sorted. Linear-time lowpoint computation.
std::vector<Edge> bridges(const Graph& g);

// Copy of g with the listed edges removed.
// Throws std::invalid_argument if an edge is absent.
Graph remove_edges(const Graph& g, const std::vector<Edge>& removed);

struct LineGraphResult {
    Graph graph;                 // L(G); vertex i corresponds to vertex_map[i]
    std::vector<Edge> vertex_map; // = g.edges()
};

// Line graph. Throws std::invalid_argument when g has more than 64 edges
// (the result would not fit the vertex limit). m = 0 yields the empty graph.
LineGraphResult line_graph(const Graph& g);

enum class GraphFamily {
    path,                // P_n, vertices 0..n-1 in path order, n >= 1
    cycle,               // C_n, vertex i adjacent to (i+1) mod n, n >= 3
    star,                // K_{1,n-1}, center 0, n >= 2
    wheel,               // W_n: cycle 0..n-2 plus hub n-1, n >= 4
    complete,            // K_n, n >= 1
    complete_minus_edge, // K_n minus the edge {0,1}, n >= 3
    tree,                // fixed non-path, non-star test tree: parent(i) = (i-1)/2
};

Graph make_family(GraphFamily f, int n);

// Star on {0,..,k-2} with center 0, plus a path 0, k-1, k, .., n-1.
// Requires k >= 3 and n >= k. Has exactly k-1 cut edges incident to
// leaves/path start, max degree k-1 at vertex 0.
Graph make_broom(int n, int k);

// Parse "name:n" (e.g. "cycle:7", "complete-minus-edge:5").
// '-' and '_' are interchangeable in the name. Throws parse_error.
Graph parse_family(const std::string& tag);

std::string family_name(GraphFamily f);

} // namespace kcut
