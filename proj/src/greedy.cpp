#include "kcut/greedy.hpp"

#include <bit>
#include <stdexcept>

namespace kcut {

namespace {

struct CompState {
    std::vector<uint64_t> masks; // component masks of the current graph
    int scans = 0;               // vertices visited to compute them
};

CompState sweep_components(const uint64_t* rows, uint64_t all) {
    CompState st;
    uint64_t unseen = all;
    while (unseen) {
        uint64_t comp = 0;
        uint64_t frontier = unseen & (~unseen + 1);
        while (frontier) {
            comp |= frontier;
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                ++st.scans;
                next |= rows[v];
            }
            frontier = next & ~comp;
        }
        st.masks.push_back(comp);
        unseen &= ~comp;
    }
    return st;
}

} // namespace

GreedyTrace greedy_k_split(const Graph& g, int k) {
    int n = g.order();
    if (!is_connected(g))
        throw std::invalid_argument("greedy_k_split: graph must be connected");
    if (k < 2 || k > n)
        throw std::invalid_argument("greedy_k_split: k = " + std::to_string(k) +
                                    " outside [2," + std::to_string(n) + "]");
    GreedyTrace trace;
    trace.delta = g.max_degree();

    uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
    uint64_t all = g.full_mask();

    // Current component masks; the input is connected, so no initial sweep.
    std::vector<uint64_t> comps{all};
    uint64_t prior_nb = 0; // vertices adjacent in G to an earlier v_j

    for (int i = 1; i <= k - 1; ++i) {
        GreedyStep step;

        // Pick the target component: most vertices, ties to the smallest
        // minimum vertex id. The masks are produced in ascending min-vertex
        // order, so the first strict maximum realizes the tie rule.
        uint64_t target = 0;
        int best_sz = -1;
        for (uint64_t m : comps) {
            int sz = std::popcount(m);
            if (sz > best_sz) {
                best_sz = sz;
                target = m;
            }
        }

        // Selection sweep over the target component.
        int chosen = -1;
        int chosen_deg = 0;
        bool chosen_prior = false;
        uint64_t t = target;
        while (t) {
            int v = std::countr_zero(t);
            t &= t - 1;
            ++step.scanned_vertices;
            int deg = std::popcount(rows[v]);
            bool prior = (prior_nb >> v) & 1u;
            bool better;
            if (chosen == -1) {
                better = true;
            } else if (deg != chosen_deg) {
                better = deg < chosen_deg;
            } else if (prior != chosen_prior) {
                better = prior;
            } else {
                better = false; // ascending id scan: first wins
            }
            if (i == 1) {
                // v_1 ignores the prior-neighbor preference (there is none);
                // min degree then min id over the whole graph.
                better = (chosen == -1) || deg < chosen_deg;
            }
            if (better) {
                chosen = v;
                chosen_deg = deg;
                chosen_prior = prior;
            }
        }
        step.vertex = chosen;
        step.fallback = (i >= 2) && (chosen_deg >= trace.delta) && (chosen_deg > 0);

        // Removal sweep: delete every current edge at the chosen vertex.
        uint64_t nb = rows[chosen];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            ++step.scanned_vertices;
            step.removed.emplace_back(chosen, w);
            rows[w] &= ~(uint64_t{1} << chosen);
        }
        rows[chosen] = 0;
        prior_nb |= g.row(chosen);

        // Component recount sweep.
        CompState st = sweep_components(rows, all);
        step.scanned_vertices += st.scans;
        comps = std::move(st.masks);
        step.components_after = static_cast<int>(comps.size());

        trace.total_removed += static_cast<int>(step.removed.size());
        trace.chosen.push_back(chosen);
        if (step.fallback) trace.fallback_used = true;
        if (trace.first_step_reaching_k == -1 && step.components_after >= k)
            trace.first_step_reaching_k = i;
        trace.steps.push_back(std::move(step));
    }
    trace.final_components = trace.steps.back().components_after;
    return trace;
}

} // namespace kcut
