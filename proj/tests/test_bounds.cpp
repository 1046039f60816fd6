#include <doctest.h>

#include <algorithm>

#include "kcut/bounds.hpp"
#include "kcut/graph.hpp"

using namespace kcut;

namespace {

const BoundEntry* find_entry(const std::vector<BoundEntry>& v,
                             const std::string& name) {
    for (const BoundEntry& e : v)
        if (e.name == name) return &e;
    return nullptr;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

} // namespace

TEST_CASE("bounds on C_8, k=3: everything sound and line_graph tight") {
    BoundsReport r = evaluate_bounds(make_family(GraphFamily::cycle, 8), 3);
    CHECK(r.lambda_known);
    CHECK(r.lambda_k == 3);
    CHECK(r.violations.empty());
    CHECK(r.skipped.empty());

    const BoundEntry* lg = find_entry(r.lower_bounds, "line_graph");
    REQUIRE(lg != nullptr);
    CHECK(lg->value == 3);
    CHECK(lg->witnessed); // opposite-arc cuts leave no trivial component
    const BoundEntry* triv = find_entry(r.lower_bounds, "trivial");
    REQUIRE(triv != nullptr);
    CHECK(triv->value == 2);
    const BoundEntry* se = find_entry(r.lower_bounds, "steiner_edge");
    REQUIRE(se != nullptr);
    CHECK(se->value == 2); // (k-1) * lambda'_3(C_8) = 2*1
    const BoundEntry* dk = find_entry(r.upper_bounds, "degree_kappa");
    REQUIRE(dk != nullptr);
    CHECK(dk->value == 4); // 2 * kappa_2 = 2*2, strictly slack
    CHECK(dk->witnessed);
    const BoundEntry* gd = find_entry(r.upper_bounds, "greedy_degree");
    REQUIRE(gd != nullptr);
    CHECK(gd->value == 3);
    CHECK(has(r.tight, "line_graph"));
    CHECK(has(r.tight, "greedy_degree"));
    CHECK_FALSE(has(r.tight, "degree_kappa"));
}

TEST_CASE("K_4, k=2: the line-graph bound fails and is reported as data") {
    BoundsReport r = evaluate_bounds(make_family(GraphFamily::complete, 4), 2);
    CHECK(r.lambda_k == 3);
    const BoundEntry* lg = find_entry(r.lower_bounds, "line_graph");
    REQUIRE(lg != nullptr);
    CHECK(lg->value == 4); // kappa_2(octahedron)
    CHECK_FALSE(lg->witnessed);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].find("line_graph") != std::string::npos);
    CHECK(r.violations[0].find("4") != std::string::npos);
}

TEST_CASE("K_{1,3}, k=2: the star variant of the same defect") {
    BoundsReport r = evaluate_bounds(make_family(GraphFamily::star, 4), 2);
    CHECK(r.lambda_k == 1);
    const BoundEntry* lg = find_entry(r.lower_bounds, "line_graph");
    REQUIRE(lg != nullptr);
    CHECK(lg->value == 2); // kappa_2(K_3)
    CHECK_FALSE(lg->witnessed);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("K_5, k=5: degree_kappa fails via the too-few-vertices branch") {
    BoundsReport r = evaluate_bounds(make_family(GraphFamily::complete, 5), 5);
    CHECK(r.lambda_k == 10);
    const BoundEntry* dk = find_entry(r.upper_bounds, "degree_kappa");
    REQUIRE(dk != nullptr);
    CHECK(dk->value == 8); // 4 * kappa_4(K_5) = 4*2
    CHECK_FALSE(dk->witnessed);
    bool found = false;
    for (const std::string& v : r.violations)
        found = found || v.find("degree_kappa") != std::string::npos;
    CHECK(found);
}

TEST_CASE("degree_kappa is omitted at k=2") {
    BoundsReport r = evaluate_bounds(make_family(GraphFamily::cycle, 5), 2);
    CHECK(find_entry(r.upper_bounds, "degree_kappa") == nullptr);
}

TEST_CASE("broom: degree_kappa witnessed and tight") {
    BoundsReport r = evaluate_bounds(make_broom(7, 4), 4);
    CHECK(r.lambda_k == 3);
    const BoundEntry* dk = find_entry(r.upper_bounds, "degree_kappa");
    REQUIRE(dk != nullptr);
    CHECK(dk->value == 3); // Delta * kappa_3 = 3 * 1
    CHECK(dk->witnessed);  // removing the star center is a genuine split
    CHECK(has(r.tight, "degree_kappa"));
    CHECK(r.violations.empty());
}

TEST_CASE("budgets degrade to skips, not failures") {
    BoundsOptions opts;
    opts.gen.max_edges_steiner = 5;
    BoundsReport r =
        evaluate_bounds(make_family(GraphFamily::cycle, 8), 3, opts);
    CHECK(has(r.skipped, "steiner_edge"));
    CHECK(has(r.skipped, "steiner_vertex"));
    CHECK(find_entry(r.lower_bounds, "steiner_edge") == nullptr);
    // The rest still computes.
    CHECK(r.lambda_known);
    CHECK(find_entry(r.upper_bounds, "clique") != nullptr);

    // K_12 has 66 edges: its line graph exceeds the 64-vertex ceiling and
    // the bound is skipped rather than failing the whole report.
    BoundsReport big =
        evaluate_bounds(make_family(GraphFamily::complete, 12), 2);
    CHECK(has(big.skipped, "line_graph"));
    CHECK(big.lambda_k == 11);
}

TEST_CASE("clique bound and trivial bound are universal") {
    for (int n : {4, 5, 6}) {
        for (int k = 2; k <= n; ++k) {
            BoundsReport r =
                evaluate_bounds(make_family(GraphFamily::complete_minus_edge,
                                            std::max(n, 3)),
                                k);
            const BoundEntry* cl = find_entry(r.upper_bounds, "clique");
            REQUIRE(cl != nullptr);
            CHECK(cl->witnessed);
            CHECK(r.lambda_k <= cl->value);
            const BoundEntry* tr = find_entry(r.lower_bounds, "trivial");
            REQUIRE(tr != nullptr);
            CHECK(tr->value == k - 1);
            CHECK(r.lambda_k >= tr->value);
        }
    }
}

TEST_CASE("line_graph bound when the line graph has fewer than k vertices") {
    // P_3 has 2 edges; at k=3 the line graph cannot split into 3 pieces,
    // and the fewer-than-k convention gives kappa_3(L) = 0.
    BoundsReport r = evaluate_bounds(make_family(GraphFamily::path, 3), 3);
    const BoundEntry* lg = find_entry(r.lower_bounds, "line_graph");
    REQUIRE(lg != nullptr);
    CHECK(lg->value == 0);
    CHECK(r.violations.empty()); // 0 <= lambda_3 = 2 holds trivially
}

TEST_CASE("regular_bound") {
    CHECK(regular_bound(3, 3) == 5);  // cubic, k=3
    CHECK(regular_bound(2, 4) == 4);  // cycles
    CHECK_THROWS(regular_bound(1, 3));
    CHECK_THROWS(regular_bound(3, 1));
}
