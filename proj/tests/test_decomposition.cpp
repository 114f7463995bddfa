#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "locross/decomposition.hpp"
#include "locross/graph.hpp"

using namespace locross;

namespace {

// Path decomposition of P_n as a TreeDecomposition: bags {i, i+1}.
TreeDecomposition path_td(int n) {
    TreeDecomposition td;
    td.tree = Graph(n - 1);
    for (int i = 0; i + 2 < n; ++i) td.tree.add_edge(i, i + 1);
    for (int i = 0; i + 1 < n; ++i) td.bags.push_back({i, i + 1});
    return td;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("validate_td accepts a correct decomposition") {
    Graph p5 = path_graph(5);
    TreeDecomposition td = path_td(5);
    CHECK(validate_td(p5, td).empty());
    CHECK(td.width() == 1);
}

TEST_CASE("validate_td pinpoints violations") {
    Graph p4 = path_graph(4);
    TreeDecomposition td = path_td(4);

    SUBCASE("uncovered edge") {
        Graph g = p4;
        g.add_edge(0, 3);
        CHECK(validate_td(g, td).find("edge") != std::string::npos);
    }
    SUBCASE("disconnected trace") {
        td.bags[0] = {0, 1, 3};  // vertex 3 now appears in bags 0 and 2 only
        td.bags[1] = {1, 2};
        CHECK(!validate_td(p4, td).empty());
    }
    SUBCASE("missing vertex") {
        Graph g(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        CHECK(!validate_td(g, td).empty());  // vertex 4 in no bag
    }
    SUBCASE("tree is not a tree") {
        td.tree.add_edge(0, 2);
        CHECK(!validate_td(p4, td).empty());
    }
}

TEST_CASE("layered width and validate_ltd") {
    Graph p6 = path_graph(6);
    LayeredTreeDecomposition ltd;
    ltd.td = path_td(6);
    ltd.layering.layers = {{0, 1}, {2, 3}, {4, 5}};
    ltd.layered_width = layered_width(ltd.td, ltd.layering, 6);
    CHECK(ltd.layered_width == 2);
    CHECK(validate_ltd(p6, ltd).empty());

    ltd.layered_width = 1;  // understated certificate
    CHECK(!validate_ltd(p6, ltd).empty());

    ltd.layered_width = 2;
    ltd.layering.layers = {{0, 3}, {1, 2}, {4, 5}};  // edge 3-4 skips a layer
    CHECK(!validate_ltd(p6, ltd).empty());
}

TEST_CASE("flatten_layered respects the square-root width bound") {
    // Long path layered one vertex per layer: k = 1.
    int n = 100;
    Graph g = path_graph(n);
    LayeredTreeDecomposition ltd;
    ltd.td = path_td(n);
    ltd.layering.layers.resize(n);
    for (int i = 0; i < n; ++i) ltd.layering.layers[i] = {i};
    ltd.layered_width = 1;
    REQUIRE(validate_ltd(g, ltd).empty());

    TreeDecomposition flat = flatten_layered(g, ltd);
    CHECK(validate_td(g, flat).empty());
    CHECK(flat.width() <= static_cast<int>(2 * std::sqrt(1.0 * n)) - 1);
}

TEST_CASE("flatten_layered keeps everything when the graph is small") {
    Graph p3 = path_graph(3);
    LayeredTreeDecomposition ltd;
    ltd.td = path_td(3);
    ltd.layering.layers = {{0}, {1}, {2}};
    ltd.layered_width = 1;
    TreeDecomposition flat = flatten_layered(p3, ltd);
    CHECK(validate_td(p3, flat).empty());
}

TEST_CASE("separator_from_td returns a balanced bag") {
    Graph p9 = path_graph(9);
    TreeDecomposition td = path_td(9);
    std::vector<int> s = separator_from_td(p9, td);
    CHECK(s.size() <= 2);
    CHECK(is_eps_separator(p9, s, Rational(1, 2)));
}

TEST_CASE("pathwidth constant floor matches 1/(1 - sqrt(2/3))") {
    double floor = pathwidth_constant_floor();
    CHECK(floor == doctest::Approx(1.0 / (1.0 - std::sqrt(2.0 / 3.0))));
}

TEST_CASE("pathwidth_decomposition with an exact provider") {
    // Provider: whole graph in one bag. Valid width n-1 <= c*sqrt(n)-1 when
    // c >= sqrt(n).
    TdProvider trivial = [](const Graph& g) {
        TreeDecomposition td;
        td.tree = Graph(1);
        std::vector<int> all(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
        td.bags.push_back(all);
        return td;
    };
    Graph g = cycle_graph(10);
    PathDecomposition pd = pathwidth_decomposition(g, trivial, 4.0);
    CHECK(validate_td(g, pd.as_tree()).empty());
}

TEST_CASE("exact treewidth oracle") {
    CHECK(exact_treewidth(path_graph(5)) == 1);
    CHECK(exact_treewidth(cycle_graph(5)) == 2);
    CHECK(exact_treewidth(complete_graph(4)) == 3);
    CHECK(exact_treewidth(grid3(3, 3, 1)) == 3);
    CHECK(exact_treewidth(grid3(3, 3, 2), 18) == 6);
    CHECK(exact_treewidth(Graph(3)) == 0);
    CHECK_THROWS(exact_treewidth(grid3(4, 4, 1), 12));
}

TEST_CASE("exact pathwidth oracle") {
    CHECK(exact_pathwidth(path_graph(6)) == 1);
    CHECK(exact_pathwidth(cycle_graph(6)) == 2);
    CHECK(exact_pathwidth(complete_graph(4)) == 3);
    CHECK(exact_pathwidth(grid3(3, 3, 1)) == 3);
    // star K_{1,4}
    Graph star(5);
    for (int i = 1; i < 5; ++i) star.add_edge(0, i);
    CHECK(exact_pathwidth(star) == 1);
    CHECK_THROWS(exact_pathwidth(grid3(4, 4, 1), 12));
}

TEST_CASE("pathwidth is at least treewidth on small instances") {
    for (const Graph& g : {grid3(3, 3, 1), cycle_graph(7), complete_graph(5),
                           path_graph(8)}) {
        CHECK(exact_pathwidth(g) >= exact_treewidth(g));
    }
}
