#include <doctest.h>

#include <stdexcept>

#include "kcut/errors.hpp"
#include "kcut/formulas.hpp"
#include "kcut/graph.hpp"
#include "kcut/solver.hpp"

using namespace kcut;

TEST_CASE("closed forms match the solver on named instances") {
    CHECK(lambda_k_closed_form(GraphFamily::cycle, 6, 3) == 3);
    CHECK(lambda_k_closed_form(GraphFamily::wheel, 7, 4) == 7);
    CHECK(lambda_k_closed_form(GraphFamily::complete_minus_edge, 6, 3) == 8);
    CHECK(lambda_k_closed_form(GraphFamily::complete, 5, 3) == 7);
    CHECK(lambda_k_closed_form(GraphFamily::tree, 9, 4) == 3);
    CHECK(lambda_k_closed_form(GraphFamily::path, 5, 2) == 1);
    // Wheel at k = n loses the hub branch: 2k-2.
    CHECK(lambda_k_closed_form(GraphFamily::wheel, 6, 6) == 10);
    CHECK(lambda_k_enumerate(make_family(GraphFamily::wheel, 6), 6).value ==
          10);
    CHECK(lambda_k_enumerate(make_family(GraphFamily::wheel, 7), 4).value ==
          7);
    CHECK(lambda_k_enumerate(make_family(GraphFamily::complete_minus_edge, 6),
                             3)
              .value == 8);
}

TEST_CASE("edge budget for k components") {
    // Largest size of a graph on n vertices with at least k components:
    // one clique on n-k+1 vertices plus k-1 isolated vertices.
    CHECK(max_edges_with_k_components(6, 3) == 6);  // C(4,2)
    CHECK(max_edges_with_k_components(6, 1) == 15); // C(6,2)
    CHECK(max_edges_with_k_components(6, 6) == 0);
    CHECK_THROWS_AS(max_edges_with_k_components(4, 5), std::invalid_argument);
}

TEST_CASE("lambda range") {
    LambdaRange r = lambda_range(6, 3);
    CHECK(r.lower == 2);
    CHECK(r.upper == 9); // C(6,2) - C(4,2)
    CHECK(lambda_range(10, 2).upper == 9);
    CHECK(lambda_range(5, 5).upper == 10);
}

TEST_CASE("extremal classification on the four reference points") {
    Graph p5 = make_family(GraphFamily::path, 5);
    CHECK(characterize_extremal(p5, 3, 2) == ExtremalClass::LowerTight);
    Graph k6 = make_family(GraphFamily::complete, 6);
    CHECK(characterize_extremal(k6, 3, 9) == ExtremalClass::UpperTight);
    Graph k6e = make_family(GraphFamily::complete_minus_edge, 6);
    CHECK(characterize_extremal(k6e, 3, 8) == ExtremalClass::UpperMinusOne);
    Graph c6 = make_family(GraphFamily::cycle, 6);
    CHECK(characterize_extremal(c6, 3, 3) == ExtremalClass::Interior);
}

TEST_CASE("extremal classification precedence at tiny orders") {
    // K_2 at k=2 is simultaneously a tree and complete: lower wins.
    Graph k2 = make_family(GraphFamily::complete, 2);
    CHECK(characterize_extremal(k2, 2, 1) == ExtremalClass::LowerTight);
    // P_3 = K_3 - e attains both k-1 and UB-1.
    Graph p3 = make_family(GraphFamily::path, 3);
    CHECK(characterize_extremal(p3, 2, 1) == ExtremalClass::LowerTight);
    // K_3 at k=2: UB = 2 and the graph is complete.
    Graph k3 = make_family(GraphFamily::complete, 3);
    CHECK(characterize_extremal(k3, 2, 2) == ExtremalClass::UpperTight);
}

TEST_CASE("the upper-minus-one biconditional fails at k=2 on K_n minus a matching") {
    // lambda_2(C_4) = 2 = UB-1 but C_4 = K_4 minus a perfect matching is not
    // K_4 minus one edge. The classification is specified to hard-fail on
    // such a structure/value disagreement, and this family shows the
    // claimed characterization is false at k=2.
    Graph c4 = make_family(GraphFamily::cycle, 4);
    REQUIRE(lambda_k_enumerate(c4, 2).value == 2);
    CHECK_THROWS_AS(characterize_extremal(c4, 2, 2), internal_error);
    // Same shape one order up: K_5 minus two disjoint edges.
    Graph k5mm = remove_edges(make_family(GraphFamily::complete, 5),
                              {Edge(0, 1), Edge(2, 3)});
    REQUIRE(lambda_k_enumerate(k5mm, 2).value == 3); // = UB-1 = n-2
    CHECK_THROWS_AS(characterize_extremal(k5mm, 2, 3), internal_error);
    // For k >= 3 the same graph classifies cleanly (Interior).
    CHECK(characterize_extremal(k5mm, 3, lambda_k_enumerate(k5mm, 3).value) ==
          ExtremalClass::Interior);
}

TEST_CASE("classification rejects an inconsistent lambda") {
    Graph k6 = make_family(GraphFamily::complete, 6);
    // Claiming lambda_3(K_6) = 8 = UB-1 contradicts completeness.
    CHECK_THROWS_AS(characterize_extremal(k6, 3, 8), internal_error);
}

TEST_CASE("closed form preconditions") {
    CHECK_THROWS_AS(lambda_k_closed_form(GraphFamily::cycle, 6, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(lambda_k_closed_form(GraphFamily::cycle, 6, 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(lambda_k_closed_form(GraphFamily::wheel, 3, 2),
                    std::invalid_argument);
}
