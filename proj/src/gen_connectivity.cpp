#include "kcut/gen_connectivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kcut/errors.hpp"

namespace kcut {

namespace {

std::vector<int> mask_to_vertices(uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Next subset of the same popcount (Gosper's hack); 0 when exhausted.
uint64_t next_same_popcount(uint64_t x, uint64_t limit_mask) {
    uint64_t c = x & (~x + 1);
    uint64_t r = x + c;
    if (r > limit_mask || r < x) return 0;
    uint64_t next = (((r ^ x) >> 2) / c) | r;
    return next > limit_mask ? 0 : next;
}

struct SubTree {
    uint32_t emask = 0;    // indices into g.edges()
    uint64_t vmask = 0;    // endpoint set
    uint64_t leafmask = 0; // degree-1 vertices
};

// Every edge subset that forms a tree (checked with union-find).
std::vector<SubTree> all_subtrees(const Graph& g, const GenConnOptions& opts) {
    int m = g.size();
    if (m > opts.max_edges_steiner)
        throw budget_error("steiner: " + std::to_string(m) +
                           " edges exceed the Steiner edge budget " +
                           std::to_string(opts.max_edges_steiner));
    const std::vector<Edge>& edges = g.edges();
    std::vector<SubTree> out;
    int parent[64];
    for (uint32_t emask = 1; emask < (1u << m); ++emask) {
        uint64_t vmask = 0;
        int deg[64] = {};
        uint32_t t = emask;
        while (t) {
            int i = std::countr_zero(t);
            t &= t - 1;
            vmask |= uint64_t{1} << edges[i].u;
            vmask |= uint64_t{1} << edges[i].v;
            ++deg[edges[i].u];
            ++deg[edges[i].v];
        }
        uint64_t vm = vmask;
        while (vm) {
            int v = std::countr_zero(vm);
            vm &= vm - 1;
            parent[v] = v;
        }
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        bool acyclic = true;
        int merges = 0;
        t = emask;
        while (t && acyclic) {
            int i = std::countr_zero(t);
            t &= t - 1;
            int a = find(edges[i].u), b = find(edges[i].v);
            if (a == b) acyclic = false;
            else {
                parent[a] = b;
                ++merges;
            }
        }
        if (!acyclic || merges != std::popcount(vmask) - 1) continue;
        SubTree st;
        st.emask = emask;
        st.vmask = vmask;
        vm = vmask;
        while (vm) {
            int v = std::countr_zero(vm);
            vm &= vm - 1;
            if (deg[v] == 1) st.leafmask |= uint64_t{1} << v;
        }
        out.push_back(st);
    }
    return out;
}

// Inclusion-minimal S-trees from the shared subtree list: span S, every
// leaf in S. Sorted small-first for the packing search.
std::vector<SubTree> minimal_s_trees(const std::vector<SubTree>& trees,
                                     uint64_t smask) {
    std::vector<SubTree> out;
    for (const SubTree& t : trees)
        if ((smask & ~t.vmask) == 0 && (t.leafmask & ~smask) == 0)
            out.push_back(t);
    std::sort(out.begin(), out.end(), [](const SubTree& a, const SubTree& b) {
        int pa = std::popcount(a.emask), pb = std::popcount(b.emask);
        return pa != pb ? pa < pb : a.emask < b.emask;
    });
    return out;
}

struct Packer {
    const std::vector<SubTree>* cands = nullptr;
    int total_edges = 0;
    int s_size = 0;
    uint64_t smask = 0;
    std::vector<uint32_t> incident; // incident[v]: edge-index mask at v
    bool internally = false;
    uint64_t budget = 0;
    uint64_t nodes = 0;

    int best = 0;
    std::vector<int> best_pick;
    std::vector<int> pick;

    int free_bound(uint32_t used_e) const {
        int free_edges = total_edges - std::popcount(used_e);
        int by_edges = free_edges / std::max(1, s_size - 1);
        int by_degree = free_edges;
        uint64_t sm = smask;
        while (sm) {
            int v = std::countr_zero(sm);
            sm &= sm - 1;
            by_degree = std::min(
                by_degree, std::popcount(incident[static_cast<size_t>(v)] &
                                         ~used_e));
        }
        return std::min(by_edges, by_degree);
    }

    void go(size_t start, uint32_t used_e, uint64_t used_nonS) {
        if (static_cast<int>(pick.size()) > best) {
            best = static_cast<int>(pick.size());
            best_pick = pick;
        }
        if (++nodes > budget)
            throw budget_error("steiner packing search exceeded " +
                               std::to_string(budget) + " nodes");
        if (static_cast<int>(pick.size()) + free_bound(used_e) <= best) return;
        for (size_t j = start; j < cands->size(); ++j) {
            const SubTree& c = (*cands)[j];
            if (c.emask & used_e) continue;
            if (internally && ((c.vmask & ~smask) & used_nonS)) continue;
            pick.push_back(static_cast<int>(j));
            go(j + 1, used_e | c.emask, used_nonS | (c.vmask & ~smask));
            pick.pop_back();
        }
    }
};

void verify_packing(const Graph& g, const std::vector<int>& s,
                    SteinerMode mode,
                    const std::vector<std::vector<Edge>>& trees) {
    uint64_t smask = 0;
    for (int v : s) smask |= uint64_t{1} << v;
    std::vector<uint64_t> vmasks;
    uint64_t all_edges = 0;
    for (const auto& tree : trees) {
        uint64_t vmask = 0;
        uint64_t emask = 0;
        for (const Edge& e : tree) {
            const std::vector<Edge>& es = g.edges();
            auto it = std::find(es.begin(), es.end(), e);
            if (it == es.end())
                throw internal_error("packing tree uses edge " + e.str() +
                                     " absent from the graph");
            size_t idx = static_cast<size_t>(it - es.begin());
            if ((emask >> idx) & 1u)
                throw internal_error("packing tree repeats edge " + e.str());
            emask |= uint64_t{1} << idx;
            vmask |= uint64_t{1} << e.u;
            vmask |= uint64_t{1} << e.v;
        }
        if ((smask & ~vmask) != 0)
            throw internal_error("packing tree does not span S");
        if (std::popcount(vmask) != static_cast<int>(tree.size()) + 1)
            throw internal_error("packing tree has a cycle");
        Graph sub = Graph::from_edges(g.order(), tree);
        if (count_components_masked(sub, vmask) != 1)
            throw internal_error("packing tree is not connected");
        if (emask & all_edges)
            throw internal_error("packing trees share an edge");
        all_edges |= emask;
        if (mode == SteinerMode::internally_disjoint)
            for (uint64_t prior : vmasks)
                if ((prior & vmask) & ~smask)
                    throw internal_error("packing trees share a non-S vertex");
        vmasks.push_back(vmask);
    }
}

SteinerPackResult pack_candidates(const Graph& g,
                                  const std::vector<SubTree>& cands,
                                  const std::vector<int>& s_sorted,
                                  uint64_t smask, SteinerMode mode,
                                  const GenConnOptions& opts) {
    Packer packer;
    packer.cands = &cands;
    packer.total_edges = g.size();
    packer.s_size = static_cast<int>(s_sorted.size());
    packer.smask = smask;
    packer.internally = (mode == SteinerMode::internally_disjoint);
    packer.budget = opts.max_pack_nodes;
    packer.incident.assign(static_cast<size_t>(g.order()), 0);
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        packer.incident[static_cast<size_t>(e.u)] |= uint32_t{1} << i;
        packer.incident[static_cast<size_t>(e.v)] |= uint32_t{1} << i;
    }
    packer.go(0, 0, 0);

    SteinerPackResult res;
    res.count = packer.best;
    res.packing.s_vertices = s_sorted;
    res.packing.mode = mode;
    for (int idx : packer.best_pick) {
        std::vector<Edge> tree;
        uint32_t em = cands[static_cast<size_t>(idx)].emask;
        while (em) {
            int i = std::countr_zero(em);
            em &= em - 1;
            tree.push_back(g.edges()[static_cast<size_t>(i)]);
        }
        res.packing.trees.push_back(std::move(tree));
    }
    verify_packing(g, res.packing.s_vertices, mode, res.packing.trees);
    if (static_cast<int>(res.packing.trees.size()) != res.count)
        throw internal_error("steiner_pack: packing size disagrees with count");
    return res;
}

int prime_k_impl(const Graph& g, int k, SteinerMode mode,
                 const GenConnOptions& opts) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (!is_connected(g)) return 0;
    int n = g.order();
    if (n < k) return 1;
    std::vector<SubTree> trees = all_subtrees(g, opts);
    int bestv = -1;
    uint64_t smask = (k == 64) ? ~uint64_t{0} : ((uint64_t{1} << k) - 1);
    uint64_t limit = g.full_mask();
    while (smask) {
        std::vector<int> s = mask_to_vertices(smask);
        std::vector<SubTree> cands = minimal_s_trees(trees, smask);
        SteinerPackResult r = pack_candidates(g, cands, s, smask, mode, opts);
        if (bestv < 0 || r.count < bestv) bestv = r.count;
        if (bestv == 1) break; // cannot go lower on a connected graph
        smask = next_same_popcount(smask, limit);
    }
    return bestv;
}

} // namespace

KappaResult kappa_k(const Graph& g, int k, const GenConnOptions& opts) {
    int n = g.order();
    if (k < 2 || k > n)
        throw std::invalid_argument("kappa_k: k = " + std::to_string(k) +
                                    " outside [2," + std::to_string(n) + "]");
    uint64_t examined = 0;
    uint64_t limit = g.full_mask();
    for (int s = 0; s <= n; ++s) {
        // Prefer a component split at this size: scan the whole size class
        // first, so outcome == component_split iff a minimum-size splitting
        // set exists.
        uint64_t x = (s == 0) ? 0 : ((s == 64) ? ~uint64_t{0}
                                               : ((uint64_t{1} << s) - 1));
        while (true) {
            if (++examined > opts.max_subsets)
                throw budget_error("kappa_k: subset budget " +
                                   std::to_string(opts.max_subsets) +
                                   " exceeded");
            if (count_components_masked(g, limit & ~x) >= k) {
                KappaResult res;
                res.value = s;
                res.cert.removed = mask_to_vertices(x);
                res.cert.outcome = CutOutcome::component_split;
                return res;
            }
            if (s == 0) break;
            x = next_same_popcount(x, limit);
            if (x == 0) break;
        }
        if (n - s < k) {
            KappaResult res;
            res.value = s;
            for (int v = 0; v < s; ++v) res.cert.removed.push_back(v);
            res.cert.outcome = CutOutcome::too_few_vertices;
            return res;
        }
    }
    throw internal_error("kappa_k: search exhausted without an answer");
}

SteinerPackResult steiner_pack(const Graph& g, const std::vector<int>& s,
                               SteinerMode mode, const GenConnOptions& opts) {
    int n = g.order();
    if (s.size() < 2)
        throw std::invalid_argument("steiner_pack: |S| must be >= 2");
    uint64_t smask = 0;
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("steiner_pack: S contains " +
                                        std::to_string(v) + ", outside [0," +
                                        std::to_string(n) + ")");
        smask |= uint64_t{1} << v;
    }
    std::vector<int> s_sorted = mask_to_vertices(smask);
    if (s_sorted.size() != s.size())
        throw std::invalid_argument("steiner_pack: S has repeated vertices");
    if (!is_connected(g))
        throw std::invalid_argument("steiner_pack: graph must be connected");

    std::vector<SubTree> trees = all_subtrees(g, opts);
    std::vector<SubTree> cands = minimal_s_trees(trees, smask);
    return pack_candidates(g, cands, s_sorted, smask, mode, opts);
}

int lambda_prime_k(const Graph& g, int k, const GenConnOptions& opts) {
    return prime_k_impl(g, k, SteinerMode::edge_disjoint, opts);
}

int kappa_prime_k(const Graph& g, int k, const GenConnOptions& opts) {
    return prime_k_impl(g, k, SteinerMode::internally_disjoint, opts);
}

} // namespace kcut
