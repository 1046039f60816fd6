#include <doctest.h>

#include <stdexcept>

#include "kcut/errors.hpp"
#include "kcut/graph.hpp"
#include "kcut/graph6.hpp"
#include "kcut/partition.hpp"
#include "kcut/solver.hpp"

using namespace kcut;

namespace {

Graph petersen() {
    return Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},          // outer C_5
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},          // spokes
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});        // pentagram
}

Graph k23() {
    return Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                 {1, 4}});
}

} // namespace

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2_capped(10, 3, uint64_t{1} << 62) == 9330);
    CHECK(stirling2_capped(6, 3, uint64_t{1} << 62) == 90);
    CHECK(stirling2_capped(5, 5, uint64_t{1} << 62) == 1);
    CHECK(stirling2_capped(4, 1, uint64_t{1} << 62) == 1);
    // Saturates instead of overflowing.
    CHECK(stirling2_capped(64, 20, uint64_t{1} << 62) > uint64_t{1} << 60);
}

TEST_CASE("lambda_3 of the Petersen graph") {
    SolveResult r = lambda_k_enumerate(petersen(), 3);
    CHECK(r.value == 5);
    CHECK(r.partitions_visited == 9330); // visits every 3-partition
    validate_certificate(petersen(), r.certificate);
    SolveResult b = lambda_k_bb(petersen(), 3);
    CHECK(b.value == 5);
    CHECK(b.partitions_visited < 9330); // pruning must help on Petersen
    validate_certificate(petersen(), b.certificate);
}

TEST_CASE("lambda_2 equals classical edge connectivity") {
    CHECK(lambda_k_enumerate(k23(), 2).value == 2);
    CHECK(global_min_cut(k23()) == 2);
    CHECK(global_min_cut(make_family(GraphFamily::cycle, 6)) == 2);
    CHECK(global_min_cut(make_family(GraphFamily::complete, 5)) == 4);
    CHECK(global_min_cut(make_family(GraphFamily::path, 4)) == 1);
    CHECK(global_min_cut(petersen()) == 3);
}

TEST_CASE("short circuits at k = n and k = n-1") {
    Graph k4 = make_family(GraphFamily::complete, 4);
    SolveResult all = lambda_k_enumerate(k4, 4);
    CHECK(all.value == 6);
    CHECK(all.partitions_visited == 0);
    CHECK(all.certificate.removed_edges.size() == 6);
    SolveResult one_merge = lambda_k_bb(k4, 3);
    CHECK(one_merge.value == 5);
    CHECK(one_merge.partitions_visited == 0);
    validate_certificate(k4, one_merge.certificate);
    // The lex-least optimal partition merges {0,1}.
    CHECK(one_merge.certificate.partition.block_of[0] == 0);
    CHECK(one_merge.certificate.partition.block_of[1] == 0);
}

TEST_CASE("solver preconditions") {
    Graph p4 = make_family(GraphFamily::path, 4);
    CHECK_THROWS_AS(lambda_k_enumerate(p4, 1), std::invalid_argument);
    CHECK_THROWS_AS(lambda_k_enumerate(p4, 5), std::invalid_argument);
    Graph two = Graph::from_edges(2, {});
    CHECK_THROWS_AS(lambda_k_enumerate(two, 2), std::invalid_argument);
}

TEST_CASE("partition budget") {
    SolveOptions tight;
    tight.max_partitions = 100;
    CHECK_THROWS_AS(lambda_k_enumerate(petersen(), 3, tight), budget_error);
    // The branch-and-bound node count also respects the budget.
    CHECK_THROWS_AS(lambda_k_bb(petersen(), 5, tight), budget_error);
}

TEST_CASE("certificate validation catches corruption") {
    Graph c6 = make_family(GraphFamily::cycle, 6);
    SolveResult r = lambda_k_enumerate(c6, 3);
    CHECK(r.value == 3);
    CutCertificate bad = r.certificate;
    bad.components_after = 4;
    CHECK_THROWS_AS(validate_certificate(c6, bad), internal_error);
    CutCertificate wrong_edges = r.certificate;
    wrong_edges.removed_edges.pop_back();
    CHECK_THROWS_AS(validate_certificate(c6, wrong_edges), internal_error);
}

TEST_CASE("partition helpers") {
    Partition p = partition_from_labels({7, 7, 3, 7, 3, 1});
    CHECK(p.k == 3);
    // RGS relabeling by first appearance: 7->0, 3->1, 1->2.
    CHECK(p.block_of == std::vector<uint8_t>({0, 0, 1, 0, 1, 2}));
    CHECK_NOTHROW(validate_partition(p, 6));
    Graph c6 = make_family(GraphFamily::cycle, 6);
    std::vector<Edge> cross = crossing_edges(c6, p);
    CHECK(cross.size() == 5); // only edge (0,1) stays inside a block
}

TEST_CASE("nonsingleton optimal partitions") {
    // C_6 at k=2: cutting two opposite edges leaves two paths of 3.
    CHECK(has_nonsingleton_optimal_partition(
        make_family(GraphFamily::cycle, 6), 2, 2));
    // K_4 at k=2: every optimal (3-edge) cut isolates a vertex.
    CHECK_FALSE(has_nonsingleton_optimal_partition(
        make_family(GraphFamily::complete, 4), 2, 3));
    // Stars: every cut isolates leaves.
    CHECK_FALSE(has_nonsingleton_optimal_partition(
        make_family(GraphFamily::star, 5), 2, 1));
    // Two triangles joined by an edge, k=2: cut the middle edge.
    Graph barbell = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(has_nonsingleton_optimal_partition(barbell, 2, 1));
    // 2k > n leaves no room for k blocks of size 2.
    CHECK_FALSE(has_nonsingleton_optimal_partition(
        make_family(GraphFamily::complete, 5), 3, 7));
}

TEST_CASE("bb agrees with enumerate on assorted graphs") {
    std::vector<Graph> pool = {
        k23(),
        make_family(GraphFamily::wheel, 7),
        make_family(GraphFamily::complete_minus_edge, 6),
        make_broom(8, 4),
        parse_graph6("D?{"),
    };
    for (const Graph& g : pool) {
        for (int k = 2; k <= g.order(); ++k) {
            SolveResult a = lambda_k_enumerate(g, k);
            SolveResult b = lambda_k_bb(g, k);
            CAPTURE(to_graph6(g));
            CAPTURE(k);
            CHECK(a.value == b.value);
            validate_certificate(g, a.certificate);
            validate_certificate(g, b.certificate);
        }
    }
}
