#include "doctest.h"

#include <sstream>

#include "locross/decomposition.hpp"
#include "locross/drawing.hpp"
#include "locross/graph.hpp"
#include "locross/mapgraph.hpp"
#include "locross/rotation.hpp"
#include "locross/surface_ltw.hpp"

using namespace locross;

namespace {

template <typename T, typename W, typename R>
void roundtrip_stable(const T& value, W write, R read) {
    std::ostringstream first;
    write(first, value);
    std::istringstream in(first.str());
    T back = read(in);
    std::ostringstream second;
    write(second, back);
    CHECK(first.str() == second.str());
}

}  // namespace

TEST_CASE("edge-list round trip") {
    roundtrip_stable(
        grid3(3, 4, 2),
        [](std::ostream& os, const Graph& g) { write_edge_list(os, g); },
        [](std::istream& is) { return read_edge_list(is); });

    Graph g = random_regular(4, 18, 11);
    std::ostringstream os;
    write_edge_list(os, g);
    std::istringstream is(os.str());
    CHECK(read_edge_list(is) == g);
}

TEST_CASE("rotation round trip") {
    for (const RotationSystem& rs :
         {grid_rotation(3, 3), torus_rotation(4, 3), random_planar_triangulation(10, 2)}) {
        roundtrip_stable(
            rs, [](std::ostream& os, const RotationSystem& r) { write_rotation(os, r); },
            [](std::istream& is) { return read_rotation(is); });
        std::ostringstream os;
        write_rotation(os, rs);
        std::istringstream is(os.str());
        RotationSystem back = read_rotation(is);
        CHECK(back.edge_list() == rs.edge_list());
        CHECK(back.rotation() == rs.rotation());
    }
}

TEST_CASE("decomposition JSON round trip") {
    RotationSystem rs = grid_rotation(4, 4);
    auto [ltd, trace] = planar_ltd(rs, 0);
    roundtrip_stable(
        ltd,
        [](std::ostream& os, const LayeredTreeDecomposition& l) {
            write_decomposition_json(os, l);
        },
        [](std::istream& is) { return read_layered_decomposition_json(is); });

    roundtrip_stable(
        ltd.td,
        [](std::ostream& os, const TreeDecomposition& t) {
            write_decomposition_json(os, t);
        },
        [](std::istream& is) { return read_decomposition_json(is); });
}

TEST_CASE("drawing JSON round trip") {
    Drawing d = grid_projection_drawing(3, 3, 2);
    roundtrip_stable(
        d, [](std::ostream& os, const Drawing& dr) { write_drawing_json(os, dr); },
        [](std::istream& is) { return read_drawing_json(is); });
    std::ostringstream os;
    write_drawing_json(os, d);
    std::istringstream is(os.str());
    Drawing back = read_drawing_json(is);
    CHECK(validate_drawing(back).empty());
    CHECK(back.base == d.base);
    CHECK(back.routes == d.routes);
}

TEST_CASE("witness JSON round trip") {
    for (const MapWitness& w :
         {medial_witness(grid_rotation(3, 3)), yz_generator(2, 2, 1).witness}) {
        roundtrip_stable(
            w, [](std::ostream& os, const MapWitness& x) { write_witness_json(os, x); },
            [](std::istream& is) { return read_witness_json(is); });
        std::ostringstream os;
        write_witness_json(os, w);
        std::istringstream is(os.str());
        MapWitness back = read_witness_json(is);
        CHECK(validate_witness(back).empty());
        CHECK(back.d == w.d);
        CHECK(half_square(back.h, back.a) == half_square(w.h, w.a));
    }
}
