#pragma once

#include <string>

#include "kcut/graph.hpp"

namespace kcut {

// C(n,2), clamped to 0 for n < 2.
long long binom2(long long n);

// Closed-form lambda_k for the supported families.
//   tree  -> k-1            cycle -> k
//   wheel -> 2k-1 (k <= n-1), 2k-2 (k = n)
//   complete -> C(n,2) - C(n-k+1,2)
//   complete_minus_edge -> C(n,2) - C(n-k+1,2) - 1
// path and star use the tree formula.
// Throws std::invalid_argument on k outside [2,n] or n invalid for the family.
int lambda_k_closed_form(GraphFamily f, int n, int k);

// Maximum edge count of a graph of order n with at least k components:
// C(n-k+1, 2). Precondition 1 <= k <= n.
long long max_edges_with_k_components(int n, int k);

struct LambdaRange {
    int lower = 0;      // k-1
    long long upper = 0; // C(n,2) - C(n-k+1,2)
};

// Universal range of lambda_k over connected graphs of order n.
// Precondition 2 <= k <= n.
LambdaRange lambda_range(int n, int k);

enum class ExtremalClass {
    LowerTight,    // lam = k-1        (iff >= k-1 cut edges)
    UpperTight,    // lam = UB         (iff complete)
    UpperMinusOne, // lam = UB-1       (iff K_n minus one edge)
    Interior,      // strictly between
};

std::string extremal_class_name(ExtremalClass c);

// Classify lam = lambda_k(g) against the extremal levels and verify the
// structural characterization of each level in both directions:
//   lam = k-1   <=>  |bridges(g)| >= k-1
//   lam = UB    <=>  g complete (m = C(n,2))
//   lam = UB-1  <=>  g is K_n minus exactly one edge (m = C(n,2)-1)
// Tags are assigned with precedence LowerTight, UpperTight, UpperMinusOne
// (levels can coincide for tiny n). Throws internal_error when structure
// and value disagree. Preconditions: g connected, lam = lambda_k(g).
ExtremalClass characterize_extremal(const Graph& g, int k, int lam);

} // namespace kcut
