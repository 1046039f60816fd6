// kcut: exact k-way edge connectivity on small graphs.
//
// Subcommands: lambda, bounds, greedy, ftable, verify. Every run prints one
// JSON report to stdout. Exit codes: 0 success, 1 a checked property was
// violated, 2 bad input, 3 budget or timeout exceeded, 4 internal
// cross-check failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kcut/bounds.hpp"
#include "kcut/errors.hpp"
#include "kcut/extremal.hpp"
#include "kcut/graph.hpp"
#include "kcut/graph6.hpp"
#include "kcut/greedy.hpp"
#include "kcut/json_io.hpp"
#include "kcut/solver.hpp"
#include "kcut/verify.hpp"

using namespace kcut;

namespace {

struct CommonOpts {
    int threads = 0; // 0 = use KCUT_THREADS or 1
    uint64_t max_partitions = 100'000'000ull;
    int max_edges_steiner = 16;
    int timeout_secs = 300;
};

struct GraphInput {
    std::string graph6_s;
    std::string edges_path;
    std::string family_s;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--threads", c.threads,
                    "worker threads for verify sweeps (default: KCUT_THREADS "
                    "env or 1)");
    sub->add_option("--max-partitions", c.max_partitions,
                    "abort enumeration beyond this many partitions")
        ->capture_default_str();
    sub->add_option("--max-edges-steiner", c.max_edges_steiner,
                    "skip Steiner-tree packing above this edge count")
        ->capture_default_str();
    sub->add_option("--timeout-secs", c.timeout_secs,
                    "hard wall-clock limit; 0 disables")
        ->capture_default_str();
}

void add_graph_input(CLI::App* sub, GraphInput& in) {
    sub->add_option("--graph6", in.graph6_s, "graph in graph6 notation");
    sub->add_option("--edges", in.edges_path,
                    "edge-list file: first line 'n m', then one 'u v' per line");
    sub->add_option("--family", in.family_s,
                    "named family, e.g. cycle:8, wheel:6, complete:5, "
                    "complete-minus-edge:5, path:4, star:7, tree:9");
}

int resolve_threads(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("KCUT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

Graph load_graph(const GraphInput& in) {
    int provided = (!in.graph6_s.empty() ? 1 : 0) +
                   (!in.edges_path.empty() ? 1 : 0) +
                   (!in.family_s.empty() ? 1 : 0);
    if (provided != 1)
        throw parse_error(
            "provide exactly one of --graph6, --edges, --family");
    if (!in.graph6_s.empty()) return parse_graph6(in.graph6_s);
    if (!in.family_s.empty()) return parse_family(in.family_s);
    std::ifstream f(in.edges_path);
    if (!f) throw parse_error("cannot open edge list file: " + in.edges_path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_edge_list(buf.str());
}

void arm_watchdog(int secs) {
    if (secs <= 0) return;
    std::thread([secs]() {
        std::this_thread::sleep_for(std::chrono::seconds(secs));
        std::cerr << "kcut: timed out after " << secs << " seconds\n";
        std::_Exit(3);
    }).detach();
}

Json input_echo(const Graph& g) {
    Json j;
    j["graph6"] = to_graph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    return j;
}

void emit(const std::string& command, const Json& params, const Json& result,
          double ms, const std::vector<std::string>& budget_notes) {
    Json report;
    report["command"] = command;
    report["params"] = params;
    report["result"] = result;
    report["timing_ms"] = ms;
    report["budget_notes"] = budget_notes;
    std::cout << report.dump(2) << "\n";
}

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

int run_lambda(const GraphInput& in, int k, const std::string& method,
               const CommonOpts& c) {
    Graph g = load_graph(in);
    SolveOptions opts;
    opts.max_partitions = c.max_partitions;
    Timer timer;
    Json result;
    if (method == "enumerate" || method == "bb") {
        SolveResult r = method == "enumerate" ? lambda_k_enumerate(g, k, opts)
                                              : lambda_k_bb(g, k, opts);
        validate_certificate(g, r.certificate);
        result = json_of(r);
        result["method"] = method;
    } else if (method == "both") {
        SolveResult a = lambda_k_enumerate(g, k, opts);
        SolveResult b = lambda_k_bb(g, k, opts);
        validate_certificate(g, a.certificate);
        validate_certificate(g, b.certificate);
        if (a.value != b.value)
            throw internal_error(
                "solver disagreement: enumerate = " + std::to_string(a.value) +
                ", branch-and-bound = " + std::to_string(b.value));
        result["value"] = a.value;
        result["enumerate"] = json_of(a);
        result["branch_and_bound"] = json_of(b);
        result["method"] = "both";
    } else {
        throw parse_error("unknown --method: " + method);
    }
    Json params;
    params["k"] = k;
    params["method"] = method;
    params["max_partitions"] = c.max_partitions;
    params["input"] = input_echo(g);
    emit("lambda", params, result, timer.ms(), {});
    return 0;
}

int run_bounds(const GraphInput& in, int k, const CommonOpts& c) {
    Graph g = load_graph(in);
    BoundsOptions opts;
    opts.solve.max_partitions = c.max_partitions;
    opts.gen.max_edges_steiner = c.max_edges_steiner;
    Timer timer;
    BoundsReport r = evaluate_bounds(g, k, opts);
    Json params;
    params["k"] = k;
    params["max_partitions"] = c.max_partitions;
    params["max_edges_steiner"] = c.max_edges_steiner;
    params["input"] = input_echo(g);
    emit("bounds", params, json_of(r), timer.ms(), r.skipped);
    return r.violations.empty() ? 0 : 1;
}

int run_greedy(const GraphInput& in, int k) {
    Graph g = load_graph(in);
    Timer timer;
    GreedyTrace t = greedy_k_split(g, k);
    Json params;
    params["k"] = k;
    params["input"] = input_echo(g);
    emit("greedy", params, json_of(t), timer.ms(), {});
    return 0;
}

int run_ftable(int n, int k, const std::string& graphs_path, bool csv,
               const CommonOpts& c) {
    SolveOptions opts;
    opts.max_partitions = c.max_partitions;
    Timer timer;
    ExtremalTable table;
    if (!graphs_path.empty()) {
        std::ifstream f(graphs_path);
        if (!f) throw parse_error("cannot open graph6 file: " + graphs_path);
        table = f_table_stream(n, k, f, opts);
    } else {
        table = f_table_enumerate(n, k, opts);
    }
    // The anchor check can genuinely fail (the claimed equality at t = UB-1
    // is false at k = 2); still emit the computed table before exiting 4.
    std::vector<std::string> findings;
    std::string anchor_error;
    try {
        findings = verify_f_bounds(table);
    } catch (const internal_error& e) {
        anchor_error = e.what();
    }
    if (csv) {
        std::cout << f_table_csv(table);
    } else {
        Json params;
        params["n"] = n;
        params["k"] = k;
        if (!graphs_path.empty()) params["graphs"] = graphs_path;
        Json result = json_of(table);
        result["findings"] = findings;
        if (!anchor_error.empty()) result["anchor_error"] = anchor_error;
        emit("ftable", params, result, timer.ms(), {});
    }
    if (!anchor_error.empty()) {
        std::cerr << "kcut: " << anchor_error << "\n";
        return 4;
    }
    return 0;
}

int run_verify(const std::string& suite, int nmax, const CommonOpts& c) {
    int threads = resolve_threads(c.threads);
    BoundsOptions bopts;
    bopts.solve.max_partitions = c.max_partitions;
    bopts.gen.max_edges_steiner = c.max_edges_steiner;
    Timer timer;
    std::vector<SuiteResult> results;
    if (suite == "obs" || suite == "all")
        results.push_back(verify_observations(nmax));
    if (suite == "extremal" || suite == "all")
        results.push_back(verify_extremal(nmax, threads));
    if (suite == "bounds" || suite == "all")
        results.push_back(verify_bounds_exhaustive(nmax, bopts, threads));
    if (results.empty())
        throw parse_error("unknown --suite: " + suite +
                          " (expected all, obs, extremal, or bounds)");
    Json arr = Json::array();
    bool ok = true;
    for (const SuiteResult& r : results) {
        arr.push_back(json_of(r));
        ok = ok && r.passed();
    }
    Json params;
    params["suite"] = suite;
    params["nmax"] = nmax;
    params["threads"] = threads;
    emit("verify", params, arr, timer.ms(), {});
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-way edge connectivity on small graphs (n <= 64)"};
    app.require_subcommand(1);

    CommonOpts common;
    GraphInput input;
    int k = 2;
    std::string method = "both";
    int ft_n = 0, ft_k = 2;
    std::string graphs_path;
    bool csv = false;
    std::string suite = "all";
    int nmax = 5;

    CLI::App* lambda = app.add_subcommand(
        "lambda", "minimum number of edges whose removal leaves >= k "
                  "components");
    add_graph_input(lambda, input);
    lambda->add_option("--k", k, "number of components")->required();
    lambda->add_option("--method", method, "enumerate, bb, or both")
        ->capture_default_str();
    add_common(lambda, common);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "evaluate every lower/upper bound and check the chain");
    add_graph_input(bounds, input);
    bounds->add_option("--k", k, "number of components")->required();
    add_common(bounds, common);

    CLI::App* greedy = app.add_subcommand(
        "greedy", "run the greedy splitting heuristic and print its trace");
    add_graph_input(greedy, input);
    greedy->add_option("--k", k, "number of components")->required();
    add_common(greedy, common);

    CLI::App* ftable = app.add_subcommand(
        "ftable", "extremal table f(n,k,t): fewest edges of a connected "
                  "order-n graph with lambda_k = t");
    ftable->add_option("--n", ft_n, "graph order")->required();
    ftable->add_option("--k", ft_k, "number of components")->required();
    ftable->add_option("--graphs", graphs_path,
                       "graph6 stream to scan instead of enumerating");
    ftable->add_flag("--csv", csv, "emit CSV instead of JSON");
    add_common(ftable, common);

    CLI::App* verify = app.add_subcommand(
        "verify", "self-check suites over exhaustive small-graph sweeps");
    verify->add_option("--suite", suite, "all, obs, extremal, or bounds")
        ->capture_default_str();
    verify->add_option("--nmax", nmax, "largest graph order to sweep")
        ->capture_default_str();
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    arm_watchdog(common.timeout_secs);
    try {
        if (lambda->parsed()) return run_lambda(input, k, method, common);
        if (bounds->parsed()) return run_bounds(input, k, common);
        if (greedy->parsed()) return run_greedy(input, k);
        if (ftable->parsed())
            return run_ftable(ft_n, ft_k, graphs_path, csv, common);
        if (verify->parsed()) return run_verify(suite, nmax, common);
    } catch (const parse_error& e) {
        std::cerr << "kcut: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "kcut: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "kcut: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "kcut: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
