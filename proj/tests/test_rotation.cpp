#include "doctest.h"

#include <set>

#include "locross/rotation.hpp"

using namespace locross;

namespace {

// Planar rotation of K4 read off a straight-line drawing:
// 0 (0,0), 1 (4,0), 2 (2,3), 3 (2,1) with neighbours sorted by angle.
RotationSystem k4_planar() {
    return RotationSystem::from_neighbor_lists(
        4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
}

}  // namespace

TEST_CASE("K4 planar rotation has four triangular faces") {
    RotationSystem rs = k4_planar();
    CHECK(rs.vertex_count() == 4);
    CHECK(rs.edge_count() == 6);
    CHECK(rs.connected());
    auto faces = trace_faces(rs);
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(f.darts.size() == 3);
    CHECK(euler_genus(rs) == 0);
}

TEST_CASE("dart bookkeeping") {
    RotationSystem rs = k4_planar();
    for (int d = 0; d < 2 * rs.edge_count(); ++d) {
        CHECK(RotationSystem::twin(d) == (d ^ 1));
        CHECK(rs.dart_tail(d) == rs.dart_head(RotationSystem::twin(d)));
        CHECK(rs.dart_tail(rs.face_next(d)) == rs.dart_head(d));
    }
}

TEST_CASE("grid rotation is planar with the expected faces") {
    RotationSystem rs = grid_rotation(3, 3);
    CHECK(rs.vertex_count() == 9);
    CHECK(rs.edge_count() == 12);
    CHECK(euler_genus(rs) == 0);
    auto faces = trace_faces(rs);
    CHECK(faces.size() == 5);
    std::multiset<size_t> lens;
    for (const auto& f : faces) lens.insert(f.darts.size());
    CHECK(lens == std::multiset<size_t>{4, 4, 4, 4, 8});
}

TEST_CASE("torus rotation of C4 x C4 has Euler genus 2") {
    RotationSystem rs = torus_rotation(4, 4);
    CHECK(rs.vertex_count() == 16);
    CHECK(rs.edge_count() == 32);
    CHECK(euler_genus(rs) == 2);
    auto faces = trace_faces(rs);
    CHECK(faces.size() == 16);
    for (const auto& f : faces) CHECK(f.darts.size() == 4);
}

TEST_CASE("triangulation preserves vertices, genus and the edge prefix") {
    for (const RotationSystem& rs :
         {grid_rotation(4, 3), torus_rotation(4, 5), k4_planar()}) {
        RotationSystem t = triangulate(rs);
        CHECK(t.vertex_count() == rs.vertex_count());
        CHECK(euler_genus(t) == euler_genus(rs));
        for (int e = 0; e < rs.edge_count(); ++e)
            CHECK(t.edge_list()[e] == rs.edge_list()[e]);
        auto faces = trace_faces(t);
        for (const auto& f : faces) CHECK(f.darts.size() == 3);
        CHECK(3 * static_cast<int>(faces.size()) == 2 * t.edge_count());
    }
}

TEST_CASE("random planar triangulations are triangulations") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
        RotationSystem rs = random_planar_triangulation(20, seed);
        CHECK(rs.vertex_count() == 20);
        CHECK(rs.edge_count() == 3 * 20 - 6);
        CHECK(euler_genus(rs) == 0);
        for (const auto& f : trace_faces(rs)) CHECK(f.darts.size() == 3);
    }
    // deterministic per seed
    RotationSystem a = random_planar_triangulation(15, 9);
    RotationSystem b = random_planar_triangulation(15, 9);
    CHECK(a.edge_list() == b.edge_list());
    CHECK(a.rotation() == b.rotation());
}

TEST_CASE("component-wise genus handles isolated vertices") {
    // torus plus an isolated vertex and a disjoint triangle
    RotationSystem torus = torus_rotation(4, 4);
    std::vector<std::pair<int, int>> edges = torus.edge_list();
    std::vector<std::vector<int>> rot = torus.rotation();
    rot.push_back({});  // vertex 16, isolated
    int e0 = static_cast<int>(edges.size());
    edges.push_back({17, 18});
    edges.push_back({18, 19});
    edges.push_back({17, 19});
    rot.push_back({2 * e0, 2 * (e0 + 2)});          // 17
    rot.push_back({2 * e0 + 1, 2 * (e0 + 1)});      // 18
    rot.push_back({2 * (e0 + 1) + 1, 2 * (e0 + 2) + 1});  // 19
    RotationSystem rs(20, edges, rot);
    CHECK(!rs.connected());
    CHECK(euler_genus_components(rs) == 2);
}
