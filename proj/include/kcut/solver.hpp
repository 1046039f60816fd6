#pragma once

#include <cstdint>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"

namespace kcut {

struct SolveOptions {
    uint64_t max_partitions = 100'000'000; // enumeration/search budget
};

struct SolveResult {
    int value = 0;
    CutCertificate certificate;
    uint64_t partitions_visited = 0;
};

// min(S(n,k), cap + 1), computed with a saturating DP. Used as the
// enumeration budget precheck.
uint64_t stirling2_capped(int n, int k, uint64_t cap);

// Exact lambda_k by exhaustive enumeration of partitions into exactly k
// blocks (restricted growth strings in lexicographic order). Certificate is
// the lexicographically least optimal partition. partitions_visited = S(n,k)
// unless a k = n / k = n-1 short-circuit applies (then 0).
// Throws std::invalid_argument (disconnected input, k outside [2,n]) and
// budget_error (S(n,k) above opts.max_partitions).
SolveResult lambda_k_enumerate(const Graph& g, int k, const SolveOptions& opts = {});

// Exact lambda_k by branch-and-bound over the same assignment tree, seeded
// with the greedy splitting result (merged down to exactly k blocks) and
// pruned by crossing-edges-so-far. Value always equals lambda_k_enumerate;
// the certificate is some optimal partition (not necessarily the lex-least
// one). partitions_visited counts assignment-tree nodes, charged against
// the same budget.
SolveResult lambda_k_bb(const Graph& g, int k, const SolveOptions& opts = {});

// Classical global min cut (= lambda_2) via Stoer-Wagner contractions.
// Independent of the partition machinery; used as a cross-check oracle.
// Throws std::invalid_argument on disconnected input or n < 2.
int global_min_cut(const Graph& g);

// True iff some partition into exactly k blocks, every block of size >= 2,
// has crossing number exactly lambda (assumed = lambda_k(g)). Decides
// whether an optimal cut exists in which no component is a single vertex.
bool has_nonsingleton_optimal_partition(const Graph& g, int k, int lambda,
                                        const SolveOptions& opts = {});

} // namespace kcut
