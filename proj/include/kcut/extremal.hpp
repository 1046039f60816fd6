#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/solver.hpp"

namespace kcut {

using GraphCallback = std::function<void(const Graph&)>;

// Every labeled connected simple graph of order n, enumerated by edge-count
// class ascending (Gosper order within a class). Throws std::invalid_argument
// for n outside [1,7] — larger orders must come from a graph6 stream.
void for_each_connected_labeled(int n, const GraphCallback& fn);

// One graph6 string per line; blank lines skipped. Parse failures and order
// mismatches are parse_errors carrying the 1-based line number.
// expected_order = -1 accepts any order.
void ingest_graph6_stream(std::istream& in, int expected_order,
                          const GraphCallback& fn);

struct ExtremalRow {
    int t = 0;
    bool feasible = false;
    long long f = -1;            // minimum edge count, when feasible
    std::string witness_g6;     // lexicographically least among minimum-size
};

struct ExtremalTable {
    int n = 0;
    int k = 0;
    std::vector<ExtremalRow> rows; // t = k-1 .. UB, in order
};

// f(n,k,t) over the full labeled universe (n <= 7).
ExtremalTable f_table_enumerate(int n, int k, const SolveOptions& opts = {});

// f(n,k,t) over a caller-supplied graph6 stream (one graph per line, order
// n; the caller is responsible for covering all connected graphs of order
// n). Disconnected entries are skipped.
ExtremalTable f_table_stream(int n, int k, std::istream& in,
                             const SolveOptions& opts = {});

// Check the sandwich n-k+t <= f <= C(n-k+1,2)+t for every feasible t,
// with equality required at t in {k-1, k} (lower) and t in {UB-1, UB}
// (upper), intersected with the valid t range. A violated bound throws
// internal_error. The returned strings are informational findings
// (infeasible t values, non-monotone steps), never errors.
std::vector<std::string> verify_f_bounds(const ExtremalTable& table);

// CSV with header: t,f,witness_graph6,lower_tight,upper_tight.
// Infeasible rows leave f and the witness empty.
std::string f_table_csv(const ExtremalTable& table);

} // namespace kcut
