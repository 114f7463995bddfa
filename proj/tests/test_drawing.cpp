#include "doctest.h"

#include <algorithm>
#include <set>

#include "locross/drawing.hpp"
#include "locross/graph.hpp"

using namespace locross;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("octahedron drawn planar has no crossings") {
    std::vector<Point> pts = {{0, 0}, {16, 0}, {8, 14}, {8, 2}, {10, 6}, {6, 6}};
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                    {0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}});
    Drawing d = straight_line_crossings(pts, g);
    CHECK(validate_drawing(d).empty());
    CHECK(d.crossings.empty());
    CHECK(local_crossing_number_of_drawing(d) == 0);
    CHECK(d.skeleton.simple_graph() == g);
    CHECK(euler_genus(d.skeleton) == 0);
}

TEST_CASE("convex K5 has five crossings, two per diagonal") {
    std::vector<Point> pts = {{0, 0}, {10, 0}, {12, 7}, {5, 12}, {-2, 8}};
    Drawing d = straight_line_crossings(pts, complete_graph(5));
    CHECK(validate_drawing(d).empty());
    CHECK(d.crossings.size() == 5);
    CHECK(local_crossing_number_of_drawing(d) == 2);
    CHECK(d.skeleton.vertex_count() == 10);
    CHECK(euler_genus(d.skeleton) == 0);

    // exactly the five "diagonals" are crossed, each by the two others
    std::set<int> crossed;
    for (const Crossing& c : d.crossings) {
        crossed.insert(c.edges[0]);
        crossed.insert(c.edges[1]);
    }
    CHECK(crossed.size() == 5);
    for (int e : crossed) {
        auto [u, v] = d.base.edges()[e];
        CHECK((v - u == 2 || v - u == 3));  // hull edges differ by 1 or 4
    }

    PlanarizeResult pr = planarize(d);
    CHECK(pr.skeleton == d.skeleton.simple_graph());
    CHECK(pr.crossings.size() == 5);
    for (const CrossingInfo& ci : pr.crossings) {
        auto [u0, v0] = d.base.edges()[ci.edges[0]];
        auto [u1, v1] = d.base.edges()[ci.edges[1]];
        CHECK(ci.tails[0] == std::min(u0, v0));
        CHECK(ci.tails[1] == std::min(u1, v1));
    }
}

TEST_CASE("degenerate positions are rejected with a diagnosis") {
    Graph g2 = Graph::from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(straight_line_crossings({{0, 0}, {0, 0}}, g2),
                    std::invalid_argument);

    // vertex 2 interior to edge 0-1
    Graph g4 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(
        straight_line_crossings({{0, 0}, {4, 0}, {2, 0}, {2, 5}}, g4),
        std::invalid_argument);

    // collinear overlapping edges sharing endpoint 0
    Graph g3 = Graph::from_edges(3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(straight_line_crossings({{0, 0}, {2, 0}, {4, 0}}, g3),
                    std::invalid_argument);

    // three edges concurrent through the origin
    Graph g6 = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(
        straight_line_crossings(
            {{-1, -1}, {1, 1}, {-1, 1}, {1, -1}, {0, 2}, {0, -2}}, g6),
        std::invalid_argument);
}

TEST_CASE("grid projection drawing matches the grid and the crossing budget") {
    for (auto [p, q, r] : {std::tuple{3, 3, 2}, {4, 4, 3}, {2, 5, 4}}) {
        Drawing d = grid_projection_drawing(p, q, r);
        CHECK(validate_drawing(d).empty());
        CHECK(d.base == grid3(p, q, r));
        CHECK(local_crossing_number_of_drawing(d) <= r - 1);
        CHECK(euler_genus_components(d.skeleton) == 0);
        // skeleton = base vertices plus one per crossing
        CHECK(d.skeleton.vertex_count() ==
              d.base.vertex_count() + static_cast<int>(d.crossings.size()));
    }
}

TEST_CASE("validate_drawing notices route corruption") {
    Drawing d = grid_projection_drawing(3, 3, 2);
    REQUIRE(!d.crossings.empty());
    Drawing bad = d;
    std::swap(bad.routes[bad.crossings[0].edges[0]],
              bad.routes[bad.crossings[0].edges[1]]);
    CHECK(!validate_drawing(bad).empty());
}
