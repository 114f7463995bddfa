#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "locross/mapgraph.hpp"

using namespace locross;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

bool induces_path(const Graph& g, const std::vector<int>& verts) {
    Graph s = induced_subgraph(g, verts);
    if (s.edge_count() != s.vertex_count() - 1 || !s.connected()) return false;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (s.degree(v) > 2) return false;
    return true;
}

}  // namespace

TEST_CASE("half_square basics") {
    // star: centre 3 in B, leaves 0,1,2 in A -> triangle
    Graph star = Graph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
    CHECK(half_square(star, {0, 1, 2}) == complete_graph(3));

    // path a-b-a gives a single edge
    Graph p3 = Graph::from_edges(3, {{0, 2}, {1, 2}});
    CHECK(half_square(p3, {0, 1}) == complete_graph(2));

    // C6 alternating gives a triangle
    Graph c6 = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(half_square(c6, {0, 2, 4}) == complete_graph(3));

    // edges inside A are rejected
    Graph bad = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS(half_square(bad, {0, 1}));
}

TEST_CASE("medial witness reproduces the embedded graph") {
    for (const RotationSystem& rs :
         {grid_rotation(3, 4), torus_rotation(4, 4), random_planar_triangulation(12, 5)}) {
        MapWitness w = medial_witness(rs);
        CHECK(validate_witness(w).empty());
        CHECK(w.d == 2);
        CHECK(static_cast<int>(w.a.size()) == rs.vertex_count());
        CHECK(static_cast<int>(w.b.size()) == rs.edge_count());
        CHECK(half_square(w.h, w.a) == rs.simple_graph());
        CHECK(euler_genus_components(w.rs) == euler_genus(rs));
    }
}

TEST_CASE("witness_to_map recovers the map graph and its nations") {
    RotationSystem rs = grid_rotation(3, 3);
    MapWitness w = medial_witness(rs);
    MapConversion mc = witness_to_map(w);
    CHECK(mc.map == half_square(w.h, w.a));
    CHECK(mc.nations.nations.size() == w.a.size());
    // every nation walk stays inside B (reindexed ids < |B|)
    for (const auto& nation : mc.nations.nations)
        for (int b : nation) CHECK((0 <= b && b < static_cast<int>(w.b.size())));
}

TEST_CASE("yz generator: smallest instance is K4") {
    YzInstance yz = yz_generator(1, 1, 1);
    CHECK(validate_witness(yz.witness).empty());
    CHECK(yz.z.vertex_count() == 4);
    CHECK(yz.z == complete_graph(4));
    CHECK(yz.z == half_square(yz.witness.h, yz.witness.a));
}

TEST_CASE("yz generator: sizes, rows and columns") {
    for (auto [p, q, r] : {std::tuple{2, 2, 2}, {3, 2, 1}, {2, 3, 3}}) {
        YzInstance yz = yz_generator(p, q, r);
        CHECK(validate_witness(yz.witness).empty());
        CHECK(yz.z.vertex_count() == 4 * p * q * r);
        CHECK(yz.z == half_square(yz.witness.h, yz.witness.a));
        CHECK(yz.columns.size() == static_cast<size_t>(p * r));
        CHECK(yz.rows.size() == static_cast<size_t>(q * r));

        std::vector<char> seen(yz.z.vertex_count(), 0);
        for (const auto& col : yz.columns) {
            CHECK(col.size() == static_cast<size_t>(2 * q));
            CHECK(induces_path(yz.z, col));
            for (int v : col) {
                CHECK(!seen[v]);
                seen[v] = 1;
            }
        }
        for (const auto& row : yz.rows) {
            CHECK(row.size() == static_cast<size_t>(2 * p));
            CHECK(induces_path(yz.z, row));
            for (int v : row) {
                CHECK(!seen[v]);
                seen[v] = 1;
            }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == yz.z.vertex_count());
    }
}

TEST_CASE("map decomposition meets the (2g+3)(2d+1) certificate") {
    YzInstance yz = yz_generator(2, 2, 2);
    LtdCertificate cert;
    LayeredTreeDecomposition ltd = map_ltd(yz.witness, &cert);
    CHECK(validate_ltd(yz.z, ltd).empty());
    CHECK(cert.g == 0);
    CHECK(cert.k == yz.witness.d);
    CHECK(cert.bound == (2 * cert.g + 3) * (2 * cert.k + 1));
    CHECK(ltd.layered_width == cert.achieved);
    CHECK(cert.achieved <= cert.bound);
    // frozen reference for the deterministic pipeline
    CHECK(cert.k == 8);
    CHECK(cert.bound == 51);
    CHECK(cert.achieved == 10);
}

TEST_CASE("map decomposition on a torus witness") {
    MapWitness w = medial_witness(torus_rotation(4, 4));
    LtdCertificate cert;
    LayeredTreeDecomposition ltd = map_ltd(w, &cert);
    CHECK(validate_ltd(half_square(w.h, w.a), ltd).empty());
    CHECK(cert.g == 2);
    CHECK(cert.k == 2);
    CHECK(cert.bound == (2 * 2 + 3) * (2 * 2 + 1));
    CHECK(cert.achieved <= cert.bound);
}

TEST_CASE("map blow-up of a 4-regular graph") {
    Graph k5 = complete_graph(5);
    int q = 8, r = 2;
    MapBlowup bu = map_blowup(k5, q, r);
    CHECK(bu.small_q);
    CHECK(validate_witness(bu.witness).empty());
    CHECK(bu.cells == (q * q - 4) * k5.vertex_count());
    CHECK(bu.map.vertex_count() == (4 * q * q * r - 16 * r) * k5.vertex_count());
    CHECK(bu.map == half_square(bu.witness.h, bu.witness.a));
    CHECK(bu.nation_blocks.size() == 5);
    std::set<int> all;
    for (const auto& blk : bu.nation_blocks) {
        CHECK(blk.size() == static_cast<size_t>(4 * q * q * r - 16 * r));
        all.insert(blk.begin(), blk.end());
    }
    CHECK(static_cast<int>(all.size()) == bu.map.vertex_count());

    CHECK_THROWS(map_blowup(k5, 7, 2));  // q too small
    CHECK_THROWS(map_blowup(k5, 8, 1));  // r too small
    CHECK_THROWS(map_blowup(complete_graph(4), 8, 2));  // not 4-regular
}
