#pragma once

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

struct GreedyStep {
    int vertex = -1;            // v_i
    std::vector<Edge> removed;  // Y_i: edges incident to v_i in G_i
    bool fallback = false;      // every vertex of the largest component still
                                // had full degree Delta (i >= 2 only)
    int components_after = 0;   // components of G_{i+1}
    int scanned_vertices = 0;   // work accounting: vertex visits this step
};

struct GreedyTrace {
    std::vector<int> chosen;        // v_1 .. v_{k-1}
    std::vector<GreedyStep> steps;  // removed_per_step lives in steps[i].removed
    int total_removed = 0;
    int final_components = 0;
    int first_step_reaching_k = -1; // 1-based step index, -1 if never
    bool fallback_used = false;
    int delta = 0;                  // Delta(G), for bound checks
};

// Greedy splitting: isolate k-1 vertices, one per step.
//   v_1: minimum-id vertex of minimum degree in G.
//   v_i (i >= 2): within a largest component of the current graph (ties:
//   smallest minimum vertex id), the vertex minimizing (current degree,
//   not-adjacent-in-G-to-an-earlier-v_j, id).
// The loop always runs k-1 steps even if >= k components appear early.
// Each step performs at most 3 linear sweeps (selection, removal, component
// recount), recorded in scanned_vertices; hence O(kn) overall.
// Throws std::invalid_argument on disconnected input or k outside [2,n].
GreedyTrace greedy_k_split(const Graph& g, int k);

} // namespace kcut
