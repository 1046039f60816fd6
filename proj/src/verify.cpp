#include "kcut/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "kcut/errors.hpp"
#include "kcut/extremal.hpp"
#include "kcut/formulas.hpp"
#include "kcut/gen_connectivity.hpp"
#include "kcut/graph6.hpp"
#include "kcut/greedy.hpp"
#include "kcut/random_graphs.hpp"
#include "kcut/solver.hpp"

namespace kcut {

namespace {

using PerGraphFn = std::function<void(const Graph&, SuiteResult&)>;

std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

bool mask_connected(int n, const std::vector<Edge>& slots, uint64_t mask) {
    uint64_t rows[64] = {};
    uint64_t mm = mask;
    while (mm) {
        int i = std::countr_zero(mm);
        mm &= mm - 1;
        const Edge& e = slots[static_cast<size_t>(i)];
        rows[e.u] |= uint64_t{1} << e.v;
        rows[e.v] |= uint64_t{1} << e.u;
    }
    uint64_t all = (uint64_t{1} << n) - 1;
    uint64_t comp = 1, frontier = 1;
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

// Run fn over every connected labeled graph of order n. With threads > 1
// the mask space splits into contiguous chunks whose results merge in chunk
// order, so the outcome is identical for every worker count.
void sweep_connected_order(int n, int threads, const PerGraphFn& fn,
                           SuiteResult& total) {
    std::vector<Edge> slots = edge_slots(n);
    int nslots = static_cast<int>(slots.size());
    uint64_t nmasks = uint64_t{1} << nslots;
    if (n == 1) {
        fn(Graph::from_edges(1, {}), total);
        ++total.graphs_checked;
        return;
    }
    auto run_range = [&](uint64_t lo, uint64_t hi, SuiteResult& out) {
        for (uint64_t mask = lo; mask < hi; ++mask) {
            if (std::popcount(mask) < n - 1) continue;
            if (!mask_connected(n, slots, mask)) continue;
            fn(graph_from_mask(n, slots, mask), out);
            ++out.graphs_checked;
        }
    };
    int workers = std::max(1, threads);
    if (workers == 1 || nmasks < 4096) {
        run_range(0, nmasks, total);
        return;
    }
    std::vector<SuiteResult> parts(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    uint64_t chunk = nmasks / static_cast<uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
        uint64_t lo = chunk * static_cast<uint64_t>(w);
        uint64_t hi = (w == workers - 1) ? nmasks : lo + chunk;
        pool.emplace_back([&, lo, hi, w]() {
            run_range(lo, hi, parts[static_cast<size_t>(w)]);
        });
    }
    for (auto& t : pool) t.join();
    for (const SuiteResult& p : parts) {
        total.graphs_checked += p.graphs_checked;
        total.checks += p.checks;
        total.violations.insert(total.violations.end(), p.violations.begin(),
                                p.violations.end());
        total.notes.insert(total.notes.end(), p.notes.begin(), p.notes.end());
    }
}

void sweep_connected(int nmax, int threads, const PerGraphFn& fn,
                     SuiteResult& total) {
    for (int n = 2; n <= nmax; ++n) sweep_connected_order(n, threads, fn, total);
}

std::string tag(const Graph& g, int k) {
    return "n=" + std::to_string(g.order()) + " graph6=" + to_graph6(g) +
           " k=" + std::to_string(k);
}

uint64_t mix_seed(uint64_t seed, const std::string& s) {
    uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace

SuiteResult verify_observations(int nmax, int samples_per_graph,
                                uint64_t seed) {
    SuiteResult res;
    res.suite = "observations";
    sweep_connected(nmax, 1, [&](const Graph& g, SuiteResult& out) {
        int n = g.order();
        std::vector<int> lam(static_cast<size_t>(n) + 1, -1);
        for (int k = 2; k <= n; ++k)
            lam[static_cast<size_t>(k)] = lambda_k_bb(g, k).value;
        for (int k = 2; k < n; ++k) {
            ++out.checks;
            if (lam[static_cast<size_t>(k)] > lam[static_cast<size_t>(k) + 1])
                out.violations.push_back(
                    tag(g, k) + ": lambda_k = " +
                    std::to_string(lam[static_cast<size_t>(k)]) +
                    " exceeds lambda_{k+1} = " +
                    std::to_string(lam[static_cast<size_t>(k) + 1]));
        }
        std::mt19937_64 rng(mix_seed(seed, to_graph6(g)));
        for (int s = 0; s < samples_per_graph; ++s) {
            Graph h = random_connected_spanning_subgraph(g, rng);
            for (int k = 2; k <= n; ++k) {
                ++out.checks;
                int lh = lambda_k_bb(h, k).value;
                if (lh > lam[static_cast<size_t>(k)])
                    out.violations.push_back(
                        tag(g, k) + ": spanning subgraph " + to_graph6(h) +
                        " has lambda_k = " + std::to_string(lh) +
                        " above the supergraph's " +
                        std::to_string(lam[static_cast<size_t>(k)]));
            }
        }
    }, res);
    return res;
}

SuiteResult verify_solver_agreement(int nmax, int threads) {
    SuiteResult res;
    res.suite = "solver_agreement";
    sweep_connected(nmax, threads, [](const Graph& g, SuiteResult& out) {
        int n = g.order();
        for (int k = 2; k <= n; ++k) {
            ++out.checks;
            SolveResult a = lambda_k_enumerate(g, k);
            SolveResult b = lambda_k_bb(g, k);
            if (a.value != b.value) {
                out.violations.push_back(
                    tag(g, k) + ": enumerate = " + std::to_string(a.value) +
                    ", branch-and-bound = " + std::to_string(b.value));
                continue;
            }
            try {
                validate_certificate(g, a.certificate);
                validate_certificate(g, b.certificate);
            } catch (const internal_error& e) {
                out.violations.push_back(tag(g, k) +
                                         ": certificate invalid: " + e.what());
                continue;
            }
            if (static_cast<int>(a.certificate.removed_edges.size()) != a.value ||
                static_cast<int>(b.certificate.removed_edges.size()) != b.value)
                out.violations.push_back(tag(g, k) +
                                         ": |removed| differs from the value");
        }
    }, res);
    return res;
}

SuiteResult verify_extremal(int nmax, int threads) {
    SuiteResult res;
    res.suite = "extremal";
    sweep_connected(nmax, threads, [](const Graph& g, SuiteResult& out) {
        int n = g.order();
        for (int k = 2; k <= n; ++k) {
            ++out.checks;
            int lam = lambda_k_bb(g, k).value;
            try {
                characterize_extremal(g, k, lam);
            } catch (const internal_error& e) {
                out.violations.push_back(tag(g, k) + ": " + e.what());
            }
        }
    }, res);
    return res;
}

namespace {

void bounds_check_one(const Graph& g, int k, const BoundsOptions& opts,
                      SuiteResult& out, uint64_t& skipped_entries) {
    ++out.checks;
    try {
        BoundsReport r = evaluate_bounds(g, k, opts);
        skipped_entries += r.skipped.size();
        for (const std::string& v : r.violations)
            out.violations.push_back(tag(g, k) + ": " + v);
    } catch (const internal_error& e) {
        out.violations.push_back(tag(g, k) + ": INTERNAL: " + e.what());
    }
}

} // namespace

SuiteResult verify_bounds_exhaustive(int nmax, const BoundsOptions& opts,
                                     int threads) {
    SuiteResult res;
    res.suite = "bounds_exhaustive";
    sweep_connected(nmax, threads, [&opts](const Graph& g, SuiteResult& out) {
        uint64_t local_skips = 0;
        int n = g.order();
        for (int k = 2; k <= n; ++k)
            bounds_check_one(g, k, opts, out, local_skips);
        if (local_skips > 0)
            out.notes.push_back("graph6=" + to_graph6(g) + ": " +
                                std::to_string(local_skips) +
                                " bound(s) skipped on budget");
    }, res);
    std::sort(res.notes.begin(), res.notes.end());
    return res;
}

SuiteResult verify_bounds_random(int count, int nmax, uint64_t seed,
                                 const BoundsOptions& opts) {
    SuiteResult res;
    res.suite = "bounds_random";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, nmax);
    std::uniform_real_distribution<double> pick_p(0.1, 0.95);
    uint64_t skipped_entries = 0;
    for (int i = 0; i < count; ++i) {
        int n = pick_n(rng);
        Graph g = random_connected_gnp(n, pick_p(rng), rng);
        ++res.graphs_checked;
        for (int k = 2; k <= n; ++k)
            bounds_check_one(g, k, opts, res, skipped_entries);
    }
    res.notes.push_back(std::to_string(skipped_entries) +
                        " bound entries skipped on budget across the pool");
    return res;
}

SuiteResult verify_lambda2(int count, int nmax, uint64_t seed) {
    SuiteResult res;
    res.suite = "lambda2";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, nmax);
    std::uniform_real_distribution<double> pick_p(0.05, 0.95);
    for (int i = 0; i < count; ++i) {
        int n = pick_n(rng);
        Graph g = random_connected_gnp(n, pick_p(rng), rng);
        ++res.graphs_checked;
        ++res.checks;
        int solver = lambda_k_bb(g, 2).value;
        int sw = global_min_cut(g);
        if (solver != sw)
            res.violations.push_back(
                tag(g, 2) + ": solver = " + std::to_string(solver) +
                ", contraction min cut = " + std::to_string(sw));
    }
    return res;
}

SuiteResult verify_formulas(uint64_t seed) {
    SuiteResult res;
    res.suite = "formulas";
    std::mt19937_64 rng(seed);
    auto check = [&](const Graph& g, GraphFamily f, int n, const std::string& what) {
        ++res.graphs_checked;
        for (int k = 2; k <= n; ++k) {
            ++res.checks;
            int expect = lambda_k_closed_form(f, n, k);
            int got = lambda_k_enumerate(g, k).value;
            if (expect != got)
                res.violations.push_back(
                    what + " n=" + std::to_string(n) + " k=" +
                    std::to_string(k) + ": closed form " +
                    std::to_string(expect) + ", solver " + std::to_string(got));
        }
    };
    for (int n = 2; n <= 9; ++n) {
        for (int rep = 0; rep < 2; ++rep) {
            Graph t = random_tree(n, rng);
            if (t.size() != n - 1 || !is_connected(t)) {
                res.violations.push_back("random_tree(" + std::to_string(n) +
                                         ") is not a tree");
                continue;
            }
            check(t, GraphFamily::tree, n, "random tree " + to_graph6(t));
        }
    }
    for (int n = 3; n <= 9; ++n)
        check(make_family(GraphFamily::cycle, n), GraphFamily::cycle, n, "cycle");
    for (int n = 4; n <= 8; ++n)
        check(make_family(GraphFamily::wheel, n), GraphFamily::wheel, n, "wheel");
    for (int n = 2; n <= 8; ++n)
        check(make_family(GraphFamily::complete, n), GraphFamily::complete, n,
              "complete");
    for (int n = 3; n <= 8; ++n)
        check(make_family(GraphFamily::complete_minus_edge, n),
              GraphFamily::complete_minus_edge, n, "complete-minus-edge");
    return res;
}

SuiteResult verify_sharpness() {
    SuiteResult res;
    res.suite = "sharpness";
    auto has_tight = [](const BoundsReport& r, const std::string& name) {
        return std::find(r.tight.begin(), r.tight.end(), name) != r.tight.end();
    };
    auto entry_value = [](const std::vector<BoundEntry>& v,
                          const std::string& name) -> long long {
        for (const BoundEntry& e : v)
            if (e.name == name) return e.value;
        return -1;
    };

    // Trees: the Steiner-edge lower bound (k-1)*lambda'_k is tight.
    for (auto [n, k] : std::vector<std::pair<int, int>>{
             {6, 2}, {7, 3}, {8, 5}, {9, 4}}) {
        ++res.checks;
        Graph t = make_family(GraphFamily::tree, n);
        BoundsReport r = evaluate_bounds(t, k);
        long long v = entry_value(r.lower_bounds, "steiner_edge");
        if (!r.lambda_known || v != r.lambda_k || v != k - 1 ||
            !has_tight(r, "steiner_edge"))
            res.violations.push_back("tree n=" + std::to_string(n) + " k=" +
                                     std::to_string(k) +
                                     ": steiner_edge not tight (value " +
                                     std::to_string(v) + ", lambda " +
                                     std::to_string(r.lambda_k) + ")");
    }

    // Brooms: Delta * kappa_{k-1} is tight.
    for (auto [n, k] : std::vector<std::pair<int, int>>{
             {6, 3}, {7, 4}, {8, 5}, {9, 4}}) {
        ++res.checks;
        Graph b = make_broom(n, k);
        BoundsReport r = evaluate_bounds(b, k);
        long long v = entry_value(r.upper_bounds, "degree_kappa");
        if (!r.lambda_known || v != r.lambda_k || v != k - 1 ||
            !has_tight(r, "degree_kappa"))
            res.violations.push_back("broom n=" + std::to_string(n) + " k=" +
                                     std::to_string(k) +
                                     ": degree_kappa not tight (value " +
                                     std::to_string(v) + ", lambda " +
                                     std::to_string(r.lambda_k) + ")");
    }

    // Cycles with n >= 2k: line_graph and greedy_degree both tight ...
    for (auto [n, k] : std::vector<std::pair<int, int>>{
             {6, 2}, {6, 3}, {7, 3}, {8, 4}, {10, 5}}) {
        ++res.checks;
        Graph c = make_family(GraphFamily::cycle, n);
        BoundsReport r = evaluate_bounds(c, k);
        long long lg = entry_value(r.lower_bounds, "line_graph");
        long long gd = entry_value(r.upper_bounds, "greedy_degree");
        if (!r.lambda_known || r.lambda_k != k || lg != k || gd != k ||
            !has_tight(r, "line_graph") || !has_tight(r, "greedy_degree"))
            res.violations.push_back(
                "cycle n=" + std::to_string(n) + " k=" + std::to_string(k) +
                ": expected lambda = line_graph = greedy_degree = k, got "
                "lambda " + std::to_string(r.lambda_k) + ", line_graph " +
                std::to_string(lg) + ", greedy_degree " + std::to_string(gd));
        // ... and Delta*kappa_{k-1} strictly slack for k >= 3.
        if (k >= 3) {
            ++res.checks;
            long long dk = entry_value(r.upper_bounds, "degree_kappa");
            if (dk != 2 * (k - 1) || dk <= r.lambda_k)
                res.violations.push_back(
                    "cycle n=" + std::to_string(n) + " k=" +
                    std::to_string(k) + ": degree_kappa should be 2(k-1) = " +
                    std::to_string(2 * (k - 1)) + " and strictly above k, got " +
                    std::to_string(dk));
        }
    }

    // Wheels, 3 <= k <= n-1: (k-1)*lambda'_k strictly below lambda_k.
    for (int n : {5, 6, 7}) {
        Graph w = make_family(GraphFamily::wheel, n);
        for (int k = 3; k <= n - 1; ++k) {
            ++res.checks;
            BoundsReport r = evaluate_bounds(w, k);
            long long v = entry_value(r.lower_bounds, "steiner_edge");
            if (!r.lambda_known || r.lambda_k != 2 * k - 1 || v < 0 ||
                v >= r.lambda_k)
                res.violations.push_back(
                    "wheel n=" + std::to_string(n) + " k=" + std::to_string(k) +
                    ": steiner_edge " + std::to_string(v) +
                    " should be strictly below lambda " +
                    std::to_string(r.lambda_k));
        }
    }
    return res;
}

SuiteResult verify_ftable(int nmax) {
    SuiteResult res;
    res.suite = "ftable";
    for (int n = 2; n <= nmax; ++n) {
        for (int k = 2; k <= n; ++k) {
            ExtremalTable table = f_table_enumerate(n, k);
            ++res.graphs_checked;
            try {
                std::vector<std::string> findings = verify_f_bounds(table);
                for (const std::string& f : findings)
                    res.notes.push_back("f(" + std::to_string(n) + "," +
                                        std::to_string(k) + "): " + f);
            } catch (const internal_error& e) {
                res.violations.push_back(e.what());
            }
            for (const ExtremalRow& row : table.rows) {
                if (!row.feasible) continue;
                ++res.checks;
                Graph w = parse_graph6(row.witness_g6);
                if (w.order() != n || !is_connected(w) ||
                    w.size() != row.f ||
                    lambda_k_enumerate(w, k).value != row.t)
                    res.violations.push_back(
                        "f(" + std::to_string(n) + "," + std::to_string(k) +
                        ", t=" + std::to_string(row.t) + "): witness " +
                        row.witness_g6 + " fails revalidation");
            }
        }
    }
    return res;
}

SuiteResult verify_greedy(int nmax, int threads) {
    SuiteResult res;
    res.suite = "greedy";
    sweep_connected(nmax, threads, [](const Graph& g, SuiteResult& out) {
        int n = g.order();
        int delta = g.max_degree();
        for (int k = 2; k <= n; ++k) {
            ++out.checks;
            GreedyTrace tr = greedy_k_split(g, k);
            std::string t = tag(g, k);
            if (static_cast<int>(tr.steps.size()) != k - 1)
                out.violations.push_back(t + ": greedy ran " +
                                         std::to_string(tr.steps.size()) +
                                         " steps, expected k-1");
            if (tr.final_components < k)
                out.violations.push_back(
                    t + ": greedy left " + std::to_string(tr.final_components) +
                    " components");
            long long bound = static_cast<long long>(delta - 1) * (k - 1) + 1;
            if (tr.total_removed > bound)
                out.violations.push_back(
                    t + ": greedy removed " + std::to_string(tr.total_removed) +
                    " edges, above the bound " + std::to_string(bound));
            int lam = lambda_k_bb(g, k).value;
            if (tr.total_removed < lam)
                out.violations.push_back(
                    t + ": greedy removed " + std::to_string(tr.total_removed) +
                    " edges, below lambda_k = " + std::to_string(lam) +
                    " (not a feasible cut?)");
            // Structural O(kn): each step at most 3 sweeps of <= n vertices.
            std::vector<Edge> all_removed;
            for (size_t i = 0; i < tr.steps.size(); ++i) {
                const GreedyStep& s = tr.steps[i];
                if (s.scanned_vertices > 3 * n)
                    out.violations.push_back(
                        t + ": step " + std::to_string(i + 1) + " scanned " +
                        std::to_string(s.scanned_vertices) +
                        " vertices, above 3n");
                if (i == 0) {
                    if (static_cast<int>(s.removed.size()) > delta)
                        out.violations.push_back(t + ": |Y_1| above Delta");
                } else if (!s.fallback &&
                           static_cast<int>(s.removed.size()) > delta - 1) {
                    out.violations.push_back(
                        t + ": |Y_" + std::to_string(i + 1) +
                        "| above Delta-1 without a fallback event");
                }
                all_removed.insert(all_removed.end(), s.removed.begin(),
                                   s.removed.end());
            }
            std::sort(all_removed.begin(), all_removed.end());
            if (std::adjacent_find(all_removed.begin(), all_removed.end()) !=
                all_removed.end())
                out.violations.push_back(t + ": step edge sets overlap");
            Graph h = remove_edges(g, all_removed);
            if (components(h).count != tr.final_components)
                out.violations.push_back(
                    t + ": final_components disagrees with recomputation");
            if (tr.fallback_used)
                out.notes.push_back(t + ": fallback event recorded");
        }
    }, res);
    std::sort(res.notes.begin(), res.notes.end());
    return res;
}

} // namespace kcut
