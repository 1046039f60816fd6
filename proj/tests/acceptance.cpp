// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit code =
// number of failed criteria. Criteria 3 and 4 assert biconditionals and
// bound chains exactly as claimed by the source material; the claims are
// false in identified regimes (see README), so those two criteria report
// the counterexamples and fail. They are intentionally not weakened.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "kcut/bounds.hpp"
#include "kcut/verify.hpp"

using namespace kcut;

namespace {

int failures = 0;

void report(int index, const std::string& label, const SuiteResult& r,
            double secs) {
    bool pass = r.passed();
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << index << ". " << label
              << "  (graphs: " << r.graphs_checked << ", checks: " << r.checks
              << ", violations: " << r.violations.size() << ", "
              << static_cast<int>(secs * 1000) << " ms)\n";
    if (!pass) {
        ++failures;
        size_t show = std::min<size_t>(r.violations.size(), 5);
        for (size_t i = 0; i < show; ++i)
            std::cout << "         " << r.violations[i] << "\n";
        if (r.violations.size() > show)
            std::cout << "         ... and " << (r.violations.size() - show)
                      << " more\n";
    }
}

template <typename Fn>
void criterion(int index, const std::string& label, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = fn();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    report(index, label, r, secs);
}

} // namespace

int main() {
    int threads =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    bool nightly = false;
    if (const char* env = std::getenv("KCUT_ACCEPT_N7"))
        nightly = std::string(env) == "1";

    criterion(1, "closed formulas agree with the solver on all families",
              [] { return verify_formulas(99); });

    int agree_nmax = nightly ? 7 : 6;
    criterion(2,
              "branch-and-bound matches plain enumeration, exhaustive n <= " +
                  std::to_string(agree_nmax),
              [&] { return verify_solver_agreement(agree_nmax, threads); });

    criterion(3,
              "extremal characterizations hold exhaustively for n <= 6 "
              "(expected to fail: the upper-minus-one biconditional is "
              "false at k=2)",
              [&] { return verify_extremal(6, threads); });

    BoundsOptions bopts;
    bopts.gen.max_subsets = 200'000; // keep line-graph cuts on dense n=10
                                     // samples within the run budget
    criterion(4,
              "raw bound chain holds on 500 random connected graphs, n <= 10 "
              "(expected to fail: two bounds are false outside their "
              "witnessed regimes)",
              [&] { return verify_bounds_random(500, 10, 20260816, bopts); });

    criterion(5, "sharpness witnesses reproduce the exact (in)equalities",
              [] { return verify_sharpness(); });

    criterion(6,
              "f(n,k,t) tables verify their anchors for n <= 6 "
              "(expected to fail: at k = 2 the t = UB-1 anchor is beaten "
              "by clique-minus-matching graphs)",
              [] { return verify_ftable(6); });

    criterion(7, "lambda_2 matches the contraction min-cut on 1000 samples",
              [] { return verify_lambda2(1000, 12, 424242); });

    criterion(8, "greedy splitting satisfies its guarantees, exhaustive n <= 6",
              [&] { return verify_greedy(6, threads); });

    std::cout << (failures == 0
                      ? "all criteria passed\n"
                      : std::to_string(failures) + " criterion(s) failed\n");
    return failures;
}
