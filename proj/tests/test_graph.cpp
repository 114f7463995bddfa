#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "locross/graph.hpp"

using namespace locross;

TEST_CASE("grid3 sizes and ids") {
    Graph g = grid3(3, 3, 2);
    CHECK(g.vertex_count() == 18);
    CHECK(g.edge_count() == 33);  // 2*3*2*2 + 3*3 = derived by hand: 12+12+9
    CHECK(grid3_id(3, 3, 2, 0, 0, 0) == 0);
    CHECK(grid3_id(3, 3, 2, 2, 2, 1) == 17);
    CHECK(g.has_edge(grid3_id(3, 3, 2, 0, 0, 0), grid3_id(3, 3, 2, 1, 0, 0)));
    CHECK(g.has_edge(grid3_id(3, 3, 2, 0, 0, 0), grid3_id(3, 3, 2, 0, 0, 1)));
    CHECK(!g.has_edge(0, grid3_id(3, 3, 2, 1, 1, 0)));
}

TEST_CASE("graph basics reject loops and duplicates") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS(g.add_edge(1, 0));
    CHECK_THROWS(g.add_edge(1, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(g.component_count() == 2);
    CHECK(!g.connected());
}

TEST_CASE("bfs layering of a grid is valid and distance-ordered") {
    Graph g = grid3(4, 4, 1);
    Layering l = bfs_layering(g, 0);
    CHECK(l.validate(g).empty());
    CHECK(l.layers.size() == 7);  // distances 0..6 on a 4x4 grid from a corner
    CHECK(l.layers[0] == std::vector<int>{0});
    auto parent = bfs_tree(g, 0);
    CHECK(parent[0] == -1);
    for (int v = 1; v < g.vertex_count(); ++v) {
        CHECK(parent[v] >= 0);
        CHECK(l.layer_of(parent[v], g.vertex_count()) + 1 == l.layer_of(v, g.vertex_count()));
    }
}

TEST_CASE("rational parsing and exact fraction comparison") {
    Rational r = Rational::parse("1/3");
    CHECK(r.num == 1);
    CHECK(r.den == 3);
    CHECK(at_most_fraction(1, r, 3));
    CHECK(!at_most_fraction(2, r, 3));
    CHECK(at_most_fraction(2, Rational::parse("2/3"), 3));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("random_regular is simple, regular and deterministic") {
    Graph a = random_regular(4, 20, 7);
    Graph b = random_regular(4, 20, 7);
    CHECK(a == b);
    for (int v = 0; v < 20; ++v) CHECK(a.degree(v) == 4);
    Graph c = random_regular(4, 20, 8);
    CHECK(!(a == c));
    CHECK_THROWS(random_regular(3, 5, 0));  // odd k*n
}

TEST_CASE("subdivide replaces edges by paths") {
    Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph c6 = subdivide(c3, 1);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK(c6.connected());
}

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == 0);
    CHECK(cyclomatic_number(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
    CHECK(cyclomatic_number(Graph(5)) == 0);
}

TEST_CASE("induced subgraph follows the given order") {
    Graph g = grid3(3, 3, 1);
    Graph s = induced_subgraph(g, {4, 1, 7});
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    CHECK(s.has_edge(0, 1));
    CHECK(s.has_edge(0, 2));
    CHECK(!s.has_edge(1, 2));
}

TEST_CASE("zigzag branch sets certify complete-graph minors") {
    for (int n = 2; n <= 5; ++n) {
        auto [g, b] = zigzag_branch_sets(n);
        CHECK(g.vertex_count() == 4 * n * n);
        Graph kn(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) kn.add_edge(i, j);
        }
        MinorCheck mc = verify_minor(g, b, kn);
        CHECK(mc.ok);
        CHECK(mc.violation.empty());
    }
}

TEST_CASE("verify_minor reports violations") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    BranchSets b;
    b.sets = {{0, 1}, {2, 3}};
    CHECK(!verify_minor(g, b, k2).ok);  // no edge between the branch sets
    b.sets = {{0}, {1}};
    CHECK(verify_minor(g, b, k2).ok);
    b.sets = {{0, 2}, {1}};
    CHECK(!verify_minor(g, b, k2).ok);  // disconnected branch set
}

TEST_CASE("brute-force separator on small graphs") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto s = min_separator_bruteforce(p4, Rational(1, 2));
    CHECK(s.size() == 1);
    CHECK(is_eps_separator(p4, s, Rational(1, 2)));

    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    auto sk = min_separator_bruteforce(k4, Rational(1, 2));
    CHECK(sk == std::vector<int>{0, 1});  // lexicographically least of size 2
    CHECK_THROWS(min_separator_bruteforce(grid3(5, 5, 1), Rational(1, 2), 20));
}

TEST_CASE("expander blow-up structure") {
    Graph h = random_regular(4, 6, 3);
    int q = 4, r = 2;
    GridBlowup bu = expander_blowup_gk(h, q, r);
    CHECK(bu.graph.vertex_count() == q * q * r * h.vertex_count());
    // each block induces a q x q x r grid
    Graph cell = grid3(q, q, r);
    for (int v = 0; v < h.vertex_count(); ++v) {
        CHECK(induced_subgraph(bu.graph, bu.blocks[v]) == cell);
    }
    // each H-edge contributes a q*r matching between its endpoint blocks
    for (auto [u, v] : h.edges()) {
        std::set<int> bu_u(bu.blocks[u].begin(), bu.blocks[u].end());
        std::set<int> bu_v(bu.blocks[v].begin(), bu.blocks[v].end());
        int crossing = 0;
        for (auto [a, b] : bu.graph.edges()) {
            if ((bu_u.count(a) && bu_v.count(b)) || (bu_u.count(b) && bu_v.count(a)))
                ++crossing;
        }
        CHECK(crossing == q * r);
    }
    // the union of two endpoint blocks is a 2q x q x r grid
    auto [u0, v0] = h.edges()[0];
    std::vector<int> both = bu.blocks[u0];
    both.insert(both.end(), bu.blocks[v0].begin(), bu.blocks[v0].end());
    Graph uni = induced_subgraph(bu.graph, both);
    Graph big = grid3(2 * q, q, r);
    CHECK(uni.vertex_count() == big.vertex_count());
    CHECK(uni.edge_count() == big.edge_count());
    std::vector<int> du(uni.vertex_count()), db(big.vertex_count());
    for (int i = 0; i < uni.vertex_count(); ++i) du[i] = uni.degree(i);
    for (int i = 0; i < big.vertex_count(); ++i) db[i] = big.degree(i);
    std::sort(du.begin(), du.end());
    std::sort(db.begin(), db.end());
    CHECK(du == db);
    CHECK_THROWS(expander_blowup_gk(h, 3, 2));  // q < 2r
}
