#include "kcut/solver.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "kcut/errors.hpp"
#include "kcut/greedy.hpp"

namespace kcut {

namespace {

constexpr uint64_t kSatLimit = uint64_t{1} << 62;

void check_inputs(const Graph& g, int k, const char* who) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) +
                                    ": graph must be connected");
    if (k < 2 || k > g.order())
        throw std::invalid_argument(std::string(who) + ": k = " +
                                    std::to_string(k) + " outside [2," +
                                    std::to_string(g.order()) + "]");
}

// Certificate from a complete block assignment (already a restricted
// growth string). Verifies the k-component invariant for optimal cuts.
CutCertificate make_certificate(const Graph& g, int k, const uint8_t* assign) {
    CutCertificate cert;
    cert.k = k;
    cert.partition.k = k;
    cert.partition.block_of.assign(assign, assign + g.order());
    cert.removed_edges = crossing_edges(g, cert.partition);
    Graph h = remove_edges(g, cert.removed_edges);
    cert.components_after = components(h).count;
    if (cert.components_after != k)
        throw internal_error("optimal partition into " + std::to_string(k) +
                             " blocks leaves " +
                             std::to_string(cert.components_after) +
                             " components; the merge argument forbids this");
    return cert;
}

// Lexicographically least optimal partition for k = n-1: merge the pair
// (i, j) realizing the smallest j with a neighbor i < j.
SolveResult solve_k_n_minus_1(const Graph& g) {
    int n = g.order();
    int bi = -1, bj = -1;
    for (int j = 1; j < n && bj == -1; ++j) {
        uint64_t below = g.row(j) & ((uint64_t{1} << j) - 1);
        if (below) {
            bj = j;
            bi = std::countr_zero(below);
        }
    }
    // A connected graph on n >= 2 vertices always has such a pair.
    uint8_t assign[64];
    for (int v = 0; v < n; ++v) {
        if (v < bj) assign[v] = static_cast<uint8_t>(v);
        else if (v == bj) assign[v] = static_cast<uint8_t>(bi);
        else assign[v] = static_cast<uint8_t>(v - 1);
    }
    SolveResult res;
    res.value = g.size() - 1;
    res.certificate = make_certificate(g, n - 1, assign);
    res.partitions_visited = 0;
    return res;
}

SolveResult solve_k_n(const Graph& g) {
    int n = g.order();
    uint8_t assign[64];
    for (int v = 0; v < n; ++v) assign[v] = static_cast<uint8_t>(v);
    SolveResult res;
    res.value = g.size();
    res.certificate = make_certificate(g, n, assign);
    res.partitions_visited = 0;
    return res;
}

struct SearchState {
    int n = 0;
    int k = 0;
    const uint64_t* rows = nullptr;
    uint64_t budget = 0;
    bool prune_with_incumbent = false;

    uint64_t block_mask[64] = {};
    uint8_t assign[64] = {};
    uint64_t assigned = 0;
    int used = 0;
    long long cross = 0;

    long long best = LLONG_MAX;
    uint8_t best_assign[64] = {};
    uint64_t visited = 0; // leaves for enumerate, tree nodes for bb

    void charge(const char* who) {
        if (++visited > budget)
            throw budget_error(std::string(who) + ": partition budget " +
                               std::to_string(budget) + " exceeded");
    }

    void dfs(int v, bool counting_nodes) {
        if (v == n) {
            if (!counting_nodes) charge("lambda_k_enumerate");
            if (used == k && cross < best) {
                best = cross;
                std::copy(assign, assign + n, best_assign);
            }
            return;
        }
        if (counting_nodes) charge("lambda_k_bb");
        // Assigning v to an existing block keeps used constant; the
        // remaining n-v-1 vertices must still be able to open k-used blocks.
        if (used + (n - v - 1) >= k) {
            for (int b = 0; b < used && b < k; ++b) {
                long long add = std::popcount(rows[v] & assigned) -
                                std::popcount(rows[v] & block_mask[b]);
                if (prune_with_incumbent && cross + add >= best) continue;
                assign[v] = static_cast<uint8_t>(b);
                block_mask[b] |= uint64_t{1} << v;
                assigned |= uint64_t{1} << v;
                cross += add;
                dfs(v + 1, counting_nodes);
                cross -= add;
                assigned &= ~(uint64_t{1} << v);
                block_mask[b] &= ~(uint64_t{1} << v);
            }
        }
        if (used < k) {
            long long add = std::popcount(rows[v] & assigned);
            if (!(prune_with_incumbent && cross + add >= best)) {
                int b = used;
                assign[v] = static_cast<uint8_t>(b);
                block_mask[b] = uint64_t{1} << v;
                assigned |= uint64_t{1} << v;
                cross += add;
                ++used;
                dfs(v + 1, counting_nodes);
                --used;
                cross -= add;
                assigned &= ~(uint64_t{1} << v);
                block_mask[b] = 0;
            }
        }
    }
};

// Merge the greedy splitting result down to exactly k blocks: start from
// the components of G minus the greedy cut, then repeatedly restore the
// lexicographically least removed edge joining two blocks.
void greedy_seed(const Graph& g, int k, uint8_t* seed_assign, long long& seed_value) {
    GreedyTrace tr = greedy_k_split(g, k);
    std::vector<Edge> removed;
    for (const GreedyStep& s : tr.steps)
        removed.insert(removed.end(), s.removed.begin(), s.removed.end());
    std::sort(removed.begin(), removed.end());

    Graph h = remove_edges(g, removed);
    ComponentInfo info = components(h);
    std::vector<int> label = info.comp_id;
    int comp_count = info.count;
    while (comp_count > k) {
        bool merged = false;
        for (const Edge& e : removed) {
            if (label[e.u] != label[e.v]) {
                int a = label[e.u], b = label[e.v];
                for (int& l : label)
                    if (l == b) l = a;
                --comp_count;
                merged = true;
                break;
            }
        }
        if (!merged)
            throw internal_error("greedy seed: cannot merge components back "
                                 "to k blocks");
    }
    Partition p = partition_from_labels(label);
    seed_value = static_cast<long long>(crossing_edges(g, p).size());
    for (int v = 0; v < g.order(); ++v) seed_assign[v] = p.block_of[v];
}

} // namespace

uint64_t stirling2_capped(int n, int k, uint64_t cap) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return 1; // S(0,0)
    uint64_t lim = cap >= kSatLimit ? kSatLimit : cap + 1;
    std::vector<uint64_t> prev(k + 1, 0), cur(k + 1, 0);
    prev[0] = 1;
    for (int i = 1; i <= n; ++i) {
        cur[0] = 0;
        int jmax = std::min(i, k);
        for (int j = 1; j <= jmax; ++j) {
            uint64_t a = prev[j];
            uint64_t t;
            if (a > lim / j) t = lim;
            else t = static_cast<uint64_t>(j) * a;
            uint64_t b = prev[j - 1];
            cur[j] = (t > lim - b) ? lim : t + b;
        }
        for (int j = jmax + 1; j <= k; ++j) cur[j] = 0;
        std::swap(prev, cur);
    }
    return prev[k];
}

SolveResult lambda_k_enumerate(const Graph& g, int k, const SolveOptions& opts) {
    check_inputs(g, k, "lambda_k_enumerate");
    int n = g.order();
    if (k == n) return solve_k_n(g);
    if (k == n - 1) return solve_k_n_minus_1(g);

    uint64_t count = stirling2_capped(n, k, opts.max_partitions);
    if (count > opts.max_partitions)
        throw budget_error("lambda_k_enumerate: S(" + std::to_string(n) + "," +
                           std::to_string(k) + ") exceeds the partition budget " +
                           std::to_string(opts.max_partitions));

    uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
    SearchState st;
    st.n = n;
    st.k = k;
    st.rows = rows;
    st.budget = opts.max_partitions;
    st.prune_with_incumbent = false;
    st.dfs(0, /*counting_nodes=*/false);

    if (st.visited != count)
        throw internal_error("enumerated " + std::to_string(st.visited) +
                             " partitions, Stirling count is " +
                             std::to_string(count));
    SolveResult res;
    res.value = static_cast<int>(st.best);
    res.certificate = make_certificate(g, k, st.best_assign);
    res.partitions_visited = st.visited;
    return res;
}

SolveResult lambda_k_bb(const Graph& g, int k, const SolveOptions& opts) {
    check_inputs(g, k, "lambda_k_bb");
    int n = g.order();
    if (k == n) return solve_k_n(g);
    if (k == n - 1) return solve_k_n_minus_1(g);

    uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
    SearchState st;
    st.n = n;
    st.k = k;
    st.rows = rows;
    st.budget = opts.max_partitions;
    st.prune_with_incumbent = true;
    greedy_seed(g, k, st.best_assign, st.best);
    st.dfs(0, /*counting_nodes=*/true);

    SolveResult res;
    res.value = static_cast<int>(st.best);
    res.certificate = make_certificate(g, k, st.best_assign);
    res.partitions_visited = st.visited;
    return res;
}

int global_min_cut(const Graph& g) {
    int n = g.order();
    if (n < 2)
        throw std::invalid_argument("global_min_cut: need at least 2 vertices");
    if (!is_connected(g))
        throw std::invalid_argument("global_min_cut: graph must be connected");
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (const Edge& e : g.edges()) {
        w[e.u][e.v] = 1;
        w[e.v][e.u] = 1;
    }
    std::vector<int> vert(n);
    std::iota(vert.begin(), vert.end(), 0);
    int best = INT_MAX;
    while (vert.size() > 1) {
        size_t sz = vert.size();
        std::vector<long long> weight(sz, 0);
        std::vector<char> in_a(sz, 0);
        size_t prev = 0, last = 0;
        long long cut_of_phase = 0;
        for (size_t step = 0; step < sz; ++step) {
            size_t sel = sz;
            for (size_t i = 0; i < sz; ++i)
                if (!in_a[i] && (sel == sz || weight[i] > weight[sel])) sel = i;
            in_a[sel] = 1;
            prev = last;
            last = sel;
            cut_of_phase = weight[sel];
            for (size_t i = 0; i < sz; ++i)
                if (!in_a[i]) weight[i] += w[vert[sel]][vert[i]];
        }
        best = std::min(best, static_cast<int>(cut_of_phase));
        // Contract last into prev.
        for (size_t i = 0; i < sz; ++i) {
            w[vert[prev]][vert[i]] += w[vert[last]][vert[i]];
            w[vert[i]][vert[prev]] = w[vert[prev]][vert[i]];
        }
        w[vert[prev]][vert[prev]] = 0;
        vert.erase(vert.begin() + static_cast<long>(last));
    }
    return best;
}

bool has_nonsingleton_optimal_partition(const Graph& g, int k, int lambda,
                                        const SolveOptions& opts) {
    check_inputs(g, k, "has_nonsingleton_optimal_partition");
    int n = g.order();
    if (2 * k > n) return false;

    uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);

    struct S2 {
        int n, k;
        const uint64_t* rows;
        long long target;
        uint64_t budget;
        uint64_t nodes = 0;
        uint64_t block_mask[64] = {};
        int block_size[64] = {};
        uint64_t assigned = 0;
        int used = 0;
        int singles = 0;
        long long cross = 0;

        bool dfs(int v) {
            if (v == n) return used == k && singles == 0 && cross == target;
            if (++nodes > budget)
                throw budget_error("has_nonsingleton_optimal_partition: "
                                   "partition budget exceeded");
            int remaining = n - v;
            for (int b = 0; b < used; ++b) {
                long long add = std::popcount(rows[v] & assigned) -
                                std::popcount(rows[v] & block_mask[b]);
                if (cross + add > target) continue;
                int nsingles = singles - (block_size[b] == 1 ? 1 : 0);
                // After placing v: every singleton still needs one more
                // vertex and every unopened block needs two.
                if (nsingles + 2 * (k - used) > remaining - 1) continue;
                block_mask[b] |= uint64_t{1} << v;
                ++block_size[b];
                assigned |= uint64_t{1} << v;
                singles = nsingles;
                cross += add;
                bool ok = dfs(v + 1);
                cross -= add;
                singles = nsingles + (block_size[b] == 2 ? 1 : 0);
                assigned &= ~(uint64_t{1} << v);
                --block_size[b];
                block_mask[b] &= ~(uint64_t{1} << v);
                if (ok) return true;
            }
            if (used < k) {
                long long add = std::popcount(rows[v] & assigned);
                if (cross + add <= target &&
                    (singles + 1) + 2 * (k - used - 1) <= remaining - 1) {
                    int b = used;
                    block_mask[b] = uint64_t{1} << v;
                    block_size[b] = 1;
                    assigned |= uint64_t{1} << v;
                    ++singles;
                    ++used;
                    cross += add;
                    bool ok = dfs(v + 1);
                    cross -= add;
                    --used;
                    --singles;
                    assigned &= ~(uint64_t{1} << v);
                    block_size[b] = 0;
                    block_mask[b] = 0;
                    if (ok) return true;
                }
            }
            return false;
        }
    } st;
    st.n = n;
    st.k = k;
    st.rows = rows;
    st.target = lambda;
    st.budget = opts.max_partitions;
    return st.dfs(0);
}

} // namespace kcut
