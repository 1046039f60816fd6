#include "kcut/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "kcut/errors.hpp"

namespace kcut {

Edge::Edge(int a, int b) {
    if (a < 0 || b < 0 || a > 63 || b > 63)
        throw std::invalid_argument("edge endpoint out of range [0,63]: (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b)
        throw std::invalid_argument("loop edge not allowed: (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
    u = std::min(a, b);
    v = std::max(a, b);
}

std::string Edge::str() const {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("graph order must be in [0,64], got " +
                                    std::to_string(n));
    Graph g;
    g.n_ = n;
    g.edges_ = edges;
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        if (e.v >= n)
            throw std::invalid_argument("edge " + e.str() +
                                        " has endpoint outside [0," +
                                        std::to_string(n) + ")");
        if (i > 0 && g.edges_[i] == g.edges_[i - 1])
            throw std::invalid_argument("duplicate edge " + e.str());
        g.adj_[e.u] |= uint64_t{1} << e.v;
        g.adj_[e.v] |= uint64_t{1} << e.u;
    }
    return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = 64;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    uint64_t m = adj_[v];
    while (m) {
        int w = std::countr_zero(m);
        out.push_back(w);
        m &= m - 1;
    }
    return out;
}

ComponentInfo components(const Graph& g) {
    ComponentInfo info;
    info.comp_id.assign(g.order(), -1);
    uint64_t unseen = g.full_mask();
    while (unseen) {
        int start = std::countr_zero(unseen);
        uint64_t comp = 0;
        uint64_t frontier = uint64_t{1} << start;
        while (frontier) {
            comp |= frontier;
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.row(v);
            }
            frontier = next & unseen & ~comp;
        }
        uint64_t c = comp;
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            info.comp_id[v] = info.count;
        }
        info.comp_mask.push_back(comp);
        ++info.count;
        unseen &= ~comp;
    }
    return info;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return count_components_masked(g, g.full_mask()) == 1;
}

int count_components_masked(const Graph& g, uint64_t active) {
    int count = 0;
    uint64_t unseen = active;
    while (unseen) {
        ++count;
        uint64_t comp = 0;
        uint64_t frontier = unseen & (~unseen + 1);
        while (frontier) {
            comp |= frontier;
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.row(v);
            }
            frontier = next & active & ~comp;
        }
        unseen &= ~comp;
    }
    return count;
}

std::vector<Edge> bridges(const Graph& g) {
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> result;
    int timer = 0;
    // Iterative DFS to keep the stack shallow regardless of graph shape.
    struct Frame {
        int v;
        int parent;
        uint64_t rest; // neighbors not yet explored
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, g.row(root)});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.rest) {
                int w = std::countr_zero(fr.rest);
                fr.rest &= fr.rest - 1;
                if (w == fr.parent) {
                    // Skip exactly one parent edge; simple graphs have no
                    // multi-edges, so skipping every occurrence is safe too.
                    continue;
                }
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, fr.v, g.row(w)});
                } else {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                int v = fr.v, p = fr.parent;
                stack.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) result.emplace_back(p, v);
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& removed) {
    std::vector<Edge> keep = g.edges();
    for (const Edge& e : removed) {
        auto it = std::find(keep.begin(), keep.end(), e);
        if (it == keep.end())
            throw std::invalid_argument("edge " + e.str() +
                                        " not present in graph");
        keep.erase(it);
    }
    return Graph::from_edges(g.order(), keep);
}

LineGraphResult line_graph(const Graph& g) {
    int m = g.size();
    if (m > 64)
        throw std::invalid_argument("line graph order " + std::to_string(m) +
                                    " exceeds vertex limit 64");
    LineGraphResult res;
    res.vertex_map = g.edges();
    std::vector<Edge> ledges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = res.vertex_map[i];
            const Edge& b = res.vertex_map[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                ledges.emplace_back(i, j);
        }
    res.graph = Graph::from_edges(m, ledges);
    return res;
}

Graph make_family(GraphFamily f, int n) {
    auto need = [&](bool ok, int least) {
        if (!ok)
            throw std::invalid_argument(family_name(f) + " requires n >= " +
                                        std::to_string(least) + ", got " +
                                        std::to_string(n));
    };
    std::vector<Edge> e;
    switch (f) {
    case GraphFamily::path:
        need(n >= 1, 1);
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
    case GraphFamily::cycle:
        need(n >= 3, 3);
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        break;
    case GraphFamily::star:
        need(n >= 2, 2);
        for (int i = 1; i < n; ++i) e.emplace_back(0, i);
        break;
    case GraphFamily::wheel:
        need(n >= 4, 4);
        for (int i = 0; i < n - 1; ++i) e.emplace_back(i, (i + 1) % (n - 1));
        for (int i = 0; i < n - 1; ++i) e.emplace_back(i, n - 1);
        break;
    case GraphFamily::complete:
        need(n >= 1, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        break;
    case GraphFamily::complete_minus_edge:
        need(n >= 3, 3);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!(i == 0 && j == 1)) e.emplace_back(i, j);
        break;
    case GraphFamily::tree:
        need(n >= 1, 1);
        for (int i = 1; i < n; ++i) e.emplace_back((i - 1) / 2, i);
        break;
    }
    return Graph::from_edges(n, e);
}

Graph make_broom(int n, int k) {
    if (k < 3)
        throw std::invalid_argument("broom requires k >= 3, got " +
                                    std::to_string(k));
    if (n < k)
        throw std::invalid_argument("broom requires n >= k, got n = " +
                                    std::to_string(n) + ", k = " +
                                    std::to_string(k));
    std::vector<Edge> e;
    for (int i = 1; i <= k - 2; ++i) e.emplace_back(0, i);
    e.emplace_back(0, k - 1);
    for (int i = k - 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

std::string family_name(GraphFamily f) {
    switch (f) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::star: return "star";
    case GraphFamily::wheel: return "wheel";
    case GraphFamily::complete: return "complete";
    case GraphFamily::complete_minus_edge: return "complete-minus-edge";
    case GraphFamily::tree: return "tree";
    }
    return "?";
}

Graph parse_family(const std::string& tag) {
    auto colon = tag.find(':');
    if (colon == std::string::npos)
        throw parse_error("family tag must look like name:n, got '" + tag + "'");
    std::string name = tag.substr(0, colon);
    std::string num = tag.substr(colon + 1);
    for (char& c : name)
        if (c == '_') c = '-';
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(num, &pos);
        if (pos != num.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw parse_error("family tag '" + tag + "': cannot parse order '" +
                          num + "'");
    }
    GraphFamily f;
    if (name == "path") f = GraphFamily::path;
    else if (name == "cycle") f = GraphFamily::cycle;
    else if (name == "star") f = GraphFamily::star;
    else if (name == "wheel") f = GraphFamily::wheel;
    else if (name == "complete") f = GraphFamily::complete;
    else if (name == "complete-minus-edge") f = GraphFamily::complete_minus_edge;
    else if (name == "tree") f = GraphFamily::tree;
    else throw parse_error("unknown family name '" + name + "'");
    try {
        return make_family(f, n);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("family tag '") + tag + "': " + e.what());
    }
}

} // namespace kcut
