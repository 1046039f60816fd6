#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcut/bounds.hpp"

namespace kcut {

struct SuiteResult {
    std::string suite;
    uint64_t graphs_checked = 0;
    uint64_t checks = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool passed() const { return violations.empty(); }
};

// Observations 1-2: lambda_k monotone in k, and monotone under connected
// spanning subgraphs (sampled). Exhaustive over connected graphs n <= nmax.
SuiteResult verify_observations(int nmax, int samples_per_graph = 2,
                                uint64_t seed = 12345);

// Branch-and-bound vs plain enumeration, values equal and certificates
// valid, exhaustive over connected graphs n <= nmax, all k.
SuiteResult verify_solver_agreement(int nmax, int threads = 1);

// The three extremal characterizations in both directions, exhaustive over
// connected graphs n <= nmax, all k.
SuiteResult verify_extremal(int nmax, int threads = 1);

// The literal bound chain max(lower) <= lambda_k <= min(upper) for every
// computed bound (witnessed or not), exhaustive over connected graphs
// n <= nmax, all k. Budget-skipped bounds are noted, never violations.
SuiteResult verify_bounds_exhaustive(int nmax, const BoundsOptions& opts = {},
                                     int threads = 1);

// Same chain on `count` random connected graphs of order <= nmax.
SuiteResult verify_bounds_random(int count, int nmax, uint64_t seed,
                                 const BoundsOptions& opts = {});

// lambda_k(-, 2) against the contraction-based global min cut on random
// connected graphs.
SuiteResult verify_lambda2(int count, int nmax, uint64_t seed);

// Closed forms vs enumeration on the named graph families.
SuiteResult verify_formulas(uint64_t seed = 99);

// The named tight/slack witnesses for the bounds.
SuiteResult verify_sharpness();

// f-table sandwich and anchors for all n <= nmax, 2 <= k <= n, plus
// witness revalidation.
SuiteResult verify_ftable(int nmax);

// Greedy splitting contract on all connected graphs n <= nmax, all k.
SuiteResult verify_greedy(int nmax, int threads = 1);

} // namespace kcut
