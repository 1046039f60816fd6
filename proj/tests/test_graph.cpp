#include <doctest.h>

#include <stdexcept>

#include "kcut/graph.hpp"

using namespace kcut;

TEST_CASE("edges normalize and reject loops") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK(e.str() == "{1,3}");
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Edge(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Edge(0, 64), std::invalid_argument);
}

TEST_CASE("from_edges validates and sorts") {
    Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges()[0] == Edge(0, 1));
    CHECK(g.edges()[2] == Edge(2, 3));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 1);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}),
                    std::invalid_argument); // duplicate
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), std::invalid_argument);
}

TEST_CASE("components and connectivity") {
    Graph g = Graph::from_edges(5, {{0, 1}, {3, 4}});
    ComponentInfo ci = components(g);
    CHECK(ci.count == 3);
    // Components numbered by ascending smallest member: {0,1}, {2}, {3,4}.
    CHECK(ci.comp_id[0] == 0);
    CHECK(ci.comp_id[1] == 0);
    CHECK(ci.comp_id[2] == 1);
    CHECK(ci.comp_id[3] == 2);
    CHECK(ci.comp_id[4] == 2);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(make_family(GraphFamily::path, 4)));
    CHECK_FALSE(is_connected(Graph::from_edges(0, {})));
    CHECK(is_connected(Graph::from_edges(1, {})));
}

TEST_CASE("count_components_masked") {
    Graph c6 = make_family(GraphFamily::cycle, 6);
    CHECK(count_components_masked(c6, c6.full_mask()) == 1);
    // Drop vertices 0 and 3: two paths remain.
    uint64_t active = c6.full_mask() & ~(uint64_t{1} | (uint64_t{1} << 3));
    CHECK(count_components_masked(c6, active) == 2);
    CHECK(count_components_masked(c6, 0) == 0);
}

TEST_CASE("bridges") {
    // Two triangles joined by a bridge (2,3).
    Graph g = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    std::vector<Edge> b = bridges(g);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Edge(2, 3));
    CHECK(bridges(make_family(GraphFamily::cycle, 5)).empty());
    Graph p5 = make_family(GraphFamily::path, 5);
    CHECK(bridges(p5).size() == 4);
    Graph star = make_family(GraphFamily::star, 7);
    CHECK(bridges(star).size() == 6);
}

TEST_CASE("remove_edges") {
    Graph c4 = make_family(GraphFamily::cycle, 4);
    Graph h = remove_edges(c4, {Edge(0, 1)});
    CHECK(h.size() == 3);
    CHECK_FALSE(h.adjacent(0, 1));
    CHECK_THROWS_AS(remove_edges(c4, {Edge(0, 2)}), std::invalid_argument);
}

TEST_CASE("line graphs") {
    // L(K_{1,3}) = K_3.
    Graph star = make_family(GraphFamily::star, 4);
    LineGraphResult lg = line_graph(star);
    CHECK(lg.graph.order() == 3);
    CHECK(lg.graph.size() == 3);
    CHECK(lg.vertex_map == star.edges());
    // L(C_n) = C_n.
    Graph c5 = make_family(GraphFamily::cycle, 5);
    LineGraphResult lc = line_graph(c5);
    CHECK(lc.graph.order() == 5);
    CHECK(lc.graph.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(lc.graph.degree(v) == 2);
    // L(K_4) is the octahedron: 6 vertices, 4-regular.
    LineGraphResult lk = line_graph(make_family(GraphFamily::complete, 4));
    CHECK(lk.graph.order() == 6);
    for (int v = 0; v < 6; ++v) CHECK(lk.graph.degree(v) == 4);
    // Edgeless input.
    CHECK(line_graph(Graph::from_edges(3, {})).graph.order() == 0);
}

TEST_CASE("families") {
    CHECK(make_family(GraphFamily::path, 1).size() == 0);
    CHECK(make_family(GraphFamily::cycle, 3).size() == 3);
    CHECK_THROWS_AS(make_family(GraphFamily::cycle, 2), std::invalid_argument);
    Graph w6 = make_family(GraphFamily::wheel, 6);
    CHECK(w6.size() == 10);
    CHECK(w6.degree(5) == 5); // hub is the last vertex
    CHECK_THROWS_AS(make_family(GraphFamily::wheel, 3), std::invalid_argument);
    Graph k5e = make_family(GraphFamily::complete_minus_edge, 5);
    CHECK(k5e.size() == 9);
    CHECK_FALSE(k5e.adjacent(0, 1));
    Graph t7 = make_family(GraphFamily::tree, 7);
    CHECK(t7.size() == 6);
    CHECK(is_connected(t7));
    Graph star5 = make_family(GraphFamily::star, 5);
    CHECK(star5.degree(0) == 4);
}

TEST_CASE("broom") {
    // Star with k-2 leaves at the handle end of a path; Delta = k-1.
    Graph b = make_broom(8, 4);
    CHECK(b.order() == 8);
    CHECK(b.size() == 7);
    CHECK(is_connected(b));
    CHECK(b.max_degree() == 3);
    CHECK(b.degree(0) == 3);
    CHECK_THROWS_AS(make_broom(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_broom(3, 4), std::invalid_argument);
}

TEST_CASE("parse_family") {
    Graph g = parse_family("cycle:6");
    CHECK(g.order() == 6);
    CHECK(parse_family("complete-minus-edge:5").size() == 9);
    CHECK(parse_family("complete_minus_edge:5").size() == 9);
    CHECK_THROWS(parse_family("blob:4"));
    CHECK_THROWS(parse_family("cycle"));
    CHECK_THROWS(parse_family("cycle:x"));
}
