#pragma once

#include <cstdint>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

struct GenConnOptions {
    int max_edges_steiner = 16;        // refuse Steiner enumeration above this m
    uint64_t max_pack_nodes = 2'000'000;  // packing search nodes per S
    uint64_t max_subsets = 20'000'000;    // cumulative vertex subsets in kappa_k
};

enum class CutOutcome {
    component_split,   // components(G - X) >= k
    too_few_vertices,  // n - |X| < k
};

struct VertexCutCertificate {
    std::vector<int> removed; // X, ascending
    CutOutcome outcome = CutOutcome::component_split;
};

struct KappaResult {
    int value = 0;
    VertexCutCertificate cert;
};

// kappa_k: minimum |X| whose removal leaves >= k components or fewer than
// k vertices. Search by increasing |X|; within the minimum size the
// component_split outcome is preferred (so outcome == component_split iff
// some minimum-size splitting set exists), and the certificate is the
// lexicographically least qualifying subset for that outcome.
// Preconditions: 2 <= k <= n. Throws budget_error past opts.max_subsets.
KappaResult kappa_k(const Graph& g, int k, const GenConnOptions& opts = {});

enum class SteinerMode { edge_disjoint, internally_disjoint };

struct SteinerPacking {
    std::vector<int> s_vertices;          // S, ascending
    SteinerMode mode = SteinerMode::edge_disjoint;
    std::vector<std::vector<Edge>> trees; // each inclusion-minimal S-tree
};

struct SteinerPackResult {
    int count = 0;
    SteinerPacking packing;
};

// Maximum number of pairwise disjoint S-trees (per mode), by exhaustive
// packing over inclusion-minimal S-trees. Every returned packing is
// re-verified (S-containment, acyclicity, connectivity, disjointness);
// failure to verify is an internal_error.
// Preconditions: S subset of V, |S| >= 2, g connected.
// Throws budget_error when m > opts.max_edges_steiner or the packing
// search exceeds opts.max_pack_nodes.
SteinerPackResult steiner_pack(const Graph& g, const std::vector<int>& s,
                               SteinerMode mode,
                               const GenConnOptions& opts = {});

// lambda'_k: min over all |S| = k of the edge-disjoint S-tree packing
// number. kappa'_k: same with internally disjoint trees. Conventions:
// disconnected -> 0; connected with n < k -> 1 (stated for kappa'_k;
// lambda'_k mirrors them).
// Preconditions: k >= 2.
int lambda_prime_k(const Graph& g, int k, const GenConnOptions& opts = {});
int kappa_prime_k(const Graph& g, int k, const GenConnOptions& opts = {});

} // namespace kcut
