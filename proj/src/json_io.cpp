#include "kcut/json_io.hpp"

#include "kcut/formulas.hpp"
#include "kcut/graph6.hpp"

namespace kcut {

Json json_of(const Edge& e) { return Json::array({e.u, e.v}); }

namespace {

Json edges_json(const std::vector<Edge>& edges) {
    Json arr = Json::array();
    for (const Edge& e : edges) arr.push_back(json_of(e));
    return arr;
}

} // namespace

Json json_of(const Graph& g) {
    Json j;
    j["order"] = g.order();
    j["size"] = g.size();
    j["graph6"] = to_graph6(g);
    return j;
}

Json json_of(const Partition& p) {
    Json j;
    j["k"] = p.k;
    j["block_of"] = p.block_of;
    return j;
}

Json json_of(const CutCertificate& c) {
    Json j;
    j["k"] = c.k;
    j["partition"] = json_of(c.partition);
    j["removed_edges"] = edges_json(c.removed_edges);
    j["components_after"] = c.components_after;
    return j;
}

Json json_of(const SolveResult& r) {
    Json j;
    j["value"] = r.value;
    j["certificate"] = json_of(r.certificate);
    j["partitions_visited"] = r.partitions_visited;
    return j;
}

Json json_of(const GreedyTrace& t) {
    Json j;
    j["chosen"] = t.chosen;
    Json steps = Json::array();
    for (const GreedyStep& s : t.steps) {
        Json js;
        js["vertex"] = s.vertex;
        js["removed"] = edges_json(s.removed);
        js["fallback"] = s.fallback;
        js["components_after"] = s.components_after;
        js["scanned_vertices"] = s.scanned_vertices;
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["total_removed"] = t.total_removed;
    j["final_components"] = t.final_components;
    j["first_step_reaching_k"] = t.first_step_reaching_k;
    j["fallback_used"] = t.fallback_used;
    j["delta"] = t.delta;
    return j;
}

Json json_of(const KappaResult& r) {
    Json j;
    j["value"] = r.value;
    j["removed"] = r.cert.removed;
    j["outcome"] = r.cert.outcome == CutOutcome::component_split
                       ? "component_split"
                       : "too_few_vertices";
    return j;
}

Json json_of(const SteinerPackResult& r) {
    Json j;
    j["count"] = r.count;
    j["s_vertices"] = r.packing.s_vertices;
    j["mode"] = r.packing.mode == SteinerMode::edge_disjoint
                    ? "edge_disjoint"
                    : "internally_disjoint";
    Json trees = Json::array();
    for (const auto& t : r.packing.trees) trees.push_back(edges_json(t));
    j["trees"] = trees;
    return j;
}

Json json_of(const BoundsReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["delta"] = r.delta;
    if (r.lambda_known) j["lambda_k"] = r.lambda_k;
    else j["lambda_k"] = nullptr;
    auto side = [](const std::vector<BoundEntry>& entries) {
        Json out;
        for (const BoundEntry& e : entries) {
            Json je;
            je["value"] = e.value;
            je["witnessed"] = e.witnessed;
            if (!e.note.empty()) je["note"] = e.note;
            out[e.name] = je;
        }
        return out;
    };
    j["lower_bounds"] = side(r.lower_bounds);
    j["upper_bounds"] = side(r.upper_bounds);
    j["tight"] = r.tight;
    j["skipped"] = r.skipped;
    j["violations"] = r.violations;
    return j;
}

Json json_of(const ExtremalTable& t) {
    Json j;
    j["n"] = t.n;
    j["k"] = t.k;
    long long clique_part = max_edges_with_k_components(t.n, t.k);
    Json rows = Json::array();
    for (const ExtremalRow& r : t.rows) {
        Json jr;
        jr["t"] = r.t;
        if (r.feasible) {
            jr["f"] = r.f;
            jr["witness_graph6"] = r.witness_g6;
            jr["lower_tight"] = (r.f == t.n - t.k + r.t);
            jr["upper_tight"] = (r.f == clique_part + r.t);
        } else {
            jr["f"] = nullptr;
        }
        rows.push_back(jr);
    }
    j["rows"] = rows;
    return j;
}

Json json_of(const SuiteResult& s) {
    Json j;
    j["suite"] = s.suite;
    j["graphs_checked"] = s.graphs_checked;
    j["checks"] = s.checks;
    j["violations"] = s.violations;
    j["notes"] = s.notes;
    j["passed"] = s.passed();
    return j;
}

} // namespace kcut
