#include "kcut/extremal.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "kcut/errors.hpp"
#include "kcut/formulas.hpp"
#include "kcut/graph6.hpp"

namespace kcut {

namespace {

// Bit i of an edge mask stands for edge_slots(n)[i], pairs in lex order.
std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

uint64_t next_same_popcount(uint64_t x, uint64_t limit_mask) {
    uint64_t c = x & (~x + 1);
    uint64_t r = x + c;
    if (r > limit_mask || r < x) return 0;
    uint64_t next = (((r ^ x) >> 2) / c) | r;
    return next > limit_mask ? 0 : next;
}

bool mask_connected(int n, const std::vector<Edge>& slots, uint64_t mask) {
    uint64_t rows[64] = {};
    uint64_t mm = mask;
    while (mm) {
        int i = std::countr_zero(mm);
        mm &= mm - 1;
        rows[slots[static_cast<size_t>(i)].u] |=
            uint64_t{1} << slots[static_cast<size_t>(i)].v;
        rows[slots[static_cast<size_t>(i)].v] |=
            uint64_t{1} << slots[static_cast<size_t>(i)].u;
    }
    uint64_t all = n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    uint64_t comp = 1;
    uint64_t frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & all & ~comp;
        comp |= frontier;
    }
    return comp == all;
}

Graph graph_from_mask(int n, const std::vector<Edge>& slots, uint64_t mask) {
    std::vector<Edge> edges;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        edges.push_back(slots[static_cast<size_t>(i)]);
    }
    return Graph::from_edges(n, edges);
}

struct TableBuilder {
    int n, k;
    long long ub;
    std::vector<ExtremalRow> rows;
    const SolveOptions* opts;

    TableBuilder(int n_, int k_, const SolveOptions& o) : n(n_), k(k_), opts(&o) {
        ub = lambda_range(n, k).upper;
        for (int t = k - 1; t <= ub; ++t) {
            ExtremalRow r;
            r.t = t;
            rows.push_back(r);
        }
        if (n == 1) rows.clear();
    }

    ExtremalRow& row(int t) { return rows[static_cast<size_t>(t - (k - 1))]; }

    // True when a graph with m edges could still change the table.
    bool useful(long long m) const {
        for (const ExtremalRow& r : rows)
            if (!r.feasible || m <= r.f) return true;
        return false;
    }

    void feed(const Graph& g) {
        long long m = g.size();
        if (!useful(m)) return;
        int t = lambda_k_enumerate(g, k, *opts).value;
        ExtremalRow& r = row(t);
        std::string g6 = to_graph6(g);
        if (!r.feasible || m < r.f) {
            r.feasible = true;
            r.f = m;
            r.witness_g6 = g6;
        } else if (m == r.f && g6 < r.witness_g6) {
            r.witness_g6 = g6;
        }
    }

    // Once every t is feasible with f below the current edge class, nothing
    // later in an ascending-size sweep can change the table.
    bool done(long long current_class_m) const {
        for (const ExtremalRow& r : rows)
            if (!r.feasible || current_class_m <= r.f) return false;
        return true;
    }
};

void check_k_range(int n, int k) {
    if (k < 2 || k > n)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " outside [2," + std::to_string(n) + "]");
}

} // namespace

void for_each_connected_labeled(int n, const GraphCallback& fn) {
    if (n < 1 || n > 7)
        throw std::invalid_argument(
            "full enumeration supports 1 <= n <= 7, got " + std::to_string(n) +
            "; use a graph6 stream for larger orders");
    std::vector<Edge> slots = edge_slots(n);
    int nslots = static_cast<int>(slots.size());
    uint64_t limit = nslots == 0 ? 0 : ((uint64_t{1} << nslots) - 1);
    if (n == 1) {
        fn(Graph::from_edges(1, {}));
        return;
    }
    for (int c = n - 1; c <= nslots; ++c) {
        uint64_t mask = (uint64_t{1} << c) - 1;
        while (mask) {
            if (mask_connected(n, slots, mask))
                fn(graph_from_mask(n, slots, mask));
            mask = next_same_popcount(mask, limit);
        }
    }
}

void ingest_graph6_stream(std::istream& in, int expected_order,
                          const GraphCallback& fn) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " +
                              e.what());
        }
        if (expected_order >= 0 && g.order() != expected_order)
            throw parse_error("line " + std::to_string(lineno) + ": order " +
                              std::to_string(g.order()) + ", expected " +
                              std::to_string(expected_order));
        fn(g);
    }
}

ExtremalTable f_table_enumerate(int n, int k, const SolveOptions& opts) {
    check_k_range(n, k);
    TableBuilder tb(n, k, opts);
    std::vector<Edge> slots = edge_slots(n);
    int nslots = static_cast<int>(slots.size());
    uint64_t limit = nslots == 0 ? 0 : ((uint64_t{1} << nslots) - 1);
    for (int c = n - 1; c <= nslots; ++c) {
        if (tb.done(c)) break;
        uint64_t mask = (uint64_t{1} << c) - 1;
        while (mask) {
            if (mask_connected(n, slots, mask))
                tb.feed(graph_from_mask(n, slots, mask));
            mask = next_same_popcount(mask, limit);
        }
    }
    ExtremalTable table;
    table.n = n;
    table.k = k;
    table.rows = std::move(tb.rows);
    return table;
}

ExtremalTable f_table_stream(int n, int k, std::istream& in,
                             const SolveOptions& opts) {
    check_k_range(n, k);
    TableBuilder tb(n, k, opts);
    ingest_graph6_stream(in, n, [&](const Graph& g) {
        if (is_connected(g)) tb.feed(g);
    });
    ExtremalTable table;
    table.n = n;
    table.k = k;
    table.rows = std::move(tb.rows);
    return table;
}

std::vector<std::string> verify_f_bounds(const ExtremalTable& table) {
    int n = table.n, k = table.k;
    long long ub = lambda_range(n, k).upper;
    long long clique_part = max_edges_with_k_components(n, k);
    std::vector<std::string> findings;
    auto fail = [&](const std::string& msg) {
        throw internal_error("f(" + std::to_string(n) + "," +
                             std::to_string(k) + ") table: " + msg);
    };
    for (const ExtremalRow& r : table.rows) {
        if (!r.feasible) {
            findings.push_back("t = " + std::to_string(r.t) +
                               " is infeasible: no connected graph of order " +
                               std::to_string(n) + " has lambda_" +
                               std::to_string(k) + " = " +
                               std::to_string(r.t));
            if (r.t == k - 1 || r.t == k || r.t == ub - 1 || r.t == ub)
                fail("t = " + std::to_string(r.t) +
                     " infeasible at an anchor level");
            continue;
        }
        long long lo = n - k + r.t;
        long long hi = clique_part + r.t;
        if (r.f < lo || r.f > hi)
            fail("f(" + std::to_string(r.t) + ") = " + std::to_string(r.f) +
                 " outside [" + std::to_string(lo) + "," + std::to_string(hi) +
                 "]");
        if ((r.t == k - 1 || r.t == k) && r.f != lo)
            fail("f(" + std::to_string(r.t) + ") = " + std::to_string(r.f) +
                 ", expected the lower anchor " + std::to_string(lo));
        if ((r.t == ub - 1 || r.t == ub) && r.f != hi)
            fail("f(" + std::to_string(r.t) + ") = " + std::to_string(r.f) +
                 ", expected the upper anchor " + std::to_string(hi));
    }
    for (size_t i = 0; i + 1 < table.rows.size(); ++i) {
        const ExtremalRow& a = table.rows[i];
        const ExtremalRow& b = table.rows[i + 1];
        if (a.feasible && b.feasible && b.f < a.f)
            findings.push_back("f is not monotone between t = " +
                               std::to_string(a.t) + " (f = " +
                               std::to_string(a.f) + ") and t = " +
                               std::to_string(b.t) + " (f = " +
                               std::to_string(b.f) + ")");
    }
    return findings;
}

std::string f_table_csv(const ExtremalTable& table) {
    int n = table.n, k = table.k;
    long long clique_part = max_edges_with_k_components(n, k);
    std::ostringstream out;
    out << "t,f,witness_graph6,lower_tight,upper_tight\n";
    for (const ExtremalRow& r : table.rows) {
        if (!r.feasible) {
            out << r.t << ",,,false,false\n";
            continue;
        }
        bool lo = (r.f == n - k + r.t);
        bool hi = (r.f == clique_part + r.t);
        out << r.t << "," << r.f << "," << r.witness_g6 << ","
            << (lo ? "true" : "false") << "," << (hi ? "true" : "false")
            << "\n";
    }
    return out.str();
}

} // namespace kcut
