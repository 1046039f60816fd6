#include "kcut/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "kcut/errors.hpp"
#include "kcut/formulas.hpp"

namespace kcut {

namespace {

void check_chain_entry(const BoundEntry& e, int lambda, int k,
                       BoundsReport& report) {
    bool violated = e.is_lower ? (e.value > lambda) : (e.value < lambda);
    if (!violated) {
        if (e.value == lambda) report.tight.push_back(e.name);
        return;
    }
    std::string ineq =
        e.is_lower ? (e.name + " = " + std::to_string(e.value) +
                      " > lambda_" + std::to_string(k) + " = " +
                      std::to_string(lambda))
                   : (e.name + " = " + std::to_string(e.value) +
                      " < lambda_" + std::to_string(k) + " = " +
                      std::to_string(lambda));
    if (e.witnessed)
        throw internal_error("bound chain violated: " + ineq +
                             " although the bound's hypothesis holds (" +
                             e.note + ")");
    report.violations.push_back(ineq + " [" + e.note + "]");
}

} // namespace

BoundsReport evaluate_bounds(const Graph& g, int k, const BoundsOptions& opts) {
    int n = g.order();
    if (!is_connected(g))
        throw std::invalid_argument("evaluate_bounds: graph must be connected");
    if (k < 2 || k > n)
        throw std::invalid_argument("evaluate_bounds: k = " + std::to_string(k) +
                                    " outside [2," + std::to_string(n) + "]");
    BoundsReport report;
    report.n = n;
    report.k = k;
    report.delta = g.max_degree();

    if (opts.compute_lambda) {
        try {
            SolveResult sr = lambda_k_bb(g, k, opts.solve);
            report.lambda_known = true;
            report.lambda_k = sr.value;
        } catch (const budget_error&) {
            report.skipped.push_back("lambda_k");
        }
    }

    if (opts.trivial)
        report.lower_bounds.push_back(
            {"trivial", k - 1, true, true, "k-1 always"});

    if (opts.steiner_edge) {
        try {
            long long lp = lambda_prime_k(g, k, opts.gen);
            report.lower_bounds.push_back(
                {"steiner_edge", (k - 1) * lp, true, true,
                 "lambda'_k = " + std::to_string(lp)});
        } catch (const budget_error&) {
            report.skipped.push_back("steiner_edge");
        }
    }

    if (opts.steiner_vertex) {
        try {
            long long kp = kappa_prime_k(g, k, opts.gen);
            report.lower_bounds.push_back(
                {"steiner_vertex", (k - 1) * kp, true, true,
                 "kappa'_k = " + std::to_string(kp)});
        } catch (const budget_error&) {
            report.skipped.push_back("steiner_vertex");
        }
    }

    if (opts.line_graph) {
        try {
            int m = g.size();
            long long value;
            if (m < k) {
                value = 0; // L(G) has fewer than k vertices already
            } else {
                LineGraphResult lg = line_graph(g);
                value = kappa_k(lg.graph, k, opts.gen).value;
            }
            BoundEntry e{"line_graph", value, true, true, ""};
            // The proof assumes the optimal cut's components each keep an
            // edge; witnessed iff some optimal cut has no trivial component.
            if (report.lambda_known) {
                try {
                    bool nonsingleton = has_nonsingleton_optimal_partition(
                        g, k, report.lambda_k, opts.solve);
                    e.witnessed = nonsingleton;
                    e.note = nonsingleton
                                 ? "an optimal cut with no trivial component exists"
                                 : "every optimal cut isolates a vertex";
                } catch (const budget_error&) {
                    e.witnessed = false;
                    e.note = "witness search over budget";
                }
            } else {
                e.witnessed = false;
                e.note = "lambda_k unknown";
            }
            report.lower_bounds.push_back(e);
        } catch (const budget_error&) {
            report.skipped.push_back("line_graph");
        } catch (const std::invalid_argument&) {
            // line graph order above 64 vertices
            report.skipped.push_back("line_graph");
        }
    }

    if (opts.clique)
        report.upper_bounds.push_back(
            {"clique", lambda_range(n, k).upper, false, true,
             "C(n,2) - C(n-k+1,2) always"});

    if (opts.degree_kappa && k >= 3) {
        try {
            KappaResult kr = kappa_k(g, k - 1, opts.gen);
            BoundEntry e{"degree_kappa",
                         static_cast<long long>(report.delta) * kr.value,
                         false, true, ""};
            bool split = kr.cert.outcome == CutOutcome::component_split;
            e.witnessed = split;
            e.note = split ? "kappa_{k-1} attained by a component split"
                           : "kappa_{k-1} attained only by the fewer-than-"
                             "(k-1)-vertices branch";
            report.upper_bounds.push_back(e);
        } catch (const budget_error&) {
            report.skipped.push_back("degree_kappa");
        }
    }

    if (opts.greedy_degree)
        report.upper_bounds.push_back(
            {"greedy_degree",
             static_cast<long long>(report.delta - 1) * (k - 1) + 1, false,
             true, "greedy splitting realizes it constructively"});

    if (report.lambda_known) {
        for (const BoundEntry& e : report.lower_bounds)
            check_chain_entry(e, report.lambda_k, k, report);
        for (const BoundEntry& e : report.upper_bounds)
            check_chain_entry(e, report.lambda_k, k, report);
        std::sort(report.tight.begin(), report.tight.end());
    }
    return report;
}

long long regular_bound(int r, int k) {
    if (r < 2)
        throw std::invalid_argument("regular_bound: r must be >= 2, got " +
                                    std::to_string(r));
    if (k < 2)
        throw std::invalid_argument("regular_bound: k must be >= 2, got " +
                                    std::to_string(k));
    return static_cast<long long>(r - 1) * (k - 1) + 1;
}

} // namespace kcut
