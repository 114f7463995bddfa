#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "locross/decomposition.hpp"
#include "locross/graph.hpp"
#include "locross/rotation.hpp"
#include "locross/surface_ltw.hpp"

namespace locross {

/// Bipartite witness of a map graph: the map graph is half_square(h, a).
/// All witnesses produced here are normalized: a = {0..|a|-1},
/// b = {|a|..n-1}.
struct MapWitness {
    Graph h;
    std::vector<int> a, b;  // sorted bipartition of V(h)
    RotationSystem rs;      // embedding of h
    int d = 0;              // max degree over b
};

/// Empty string if the witness invariants hold, else a description.
std::string validate_witness(const MapWitness& w);

/// Graph on A (reindexed by ascending id) where two vertices are adjacent
/// iff they share a neighbour in B. Throws if (A, B) is not a bipartition
/// with all edges crossing.
Graph half_square(const Graph& h, const std::vector<int>& a);

/// The embedded nation structure: vertex set B (reindexed by ascending id),
/// one edge per corner of an A-vertex (consecutive incident edges in the
/// rotation), nations = the B-walks around each A-vertex, lakes = the
/// H-faces of length >= 6 as their B-subsequences.
struct NationStructure {
    RotationSystem g0;
    std::vector<std::vector<int>> nations;  // per A-vertex, cyclic B-walk
    std::vector<std::vector<int>> lakes;
};

struct MapConversion {
    NationStructure nations;
    Graph map;  // == half_square(h, a)
};

MapConversion witness_to_map(const MapWitness& w);

/// Witness with d = 2 whose half-square is the embedded graph itself:
/// A = V(G), B = one vertex per edge, incidences inherited from the
/// rotation. Same genus as the input embedding.
MapWitness medial_witness(const RotationSystem& rs);

/// Layered tree decomposition of half_square(w.h, w.a) with layered width
/// at most (2g+3)(2d+1): BFS layering of H from a root in A (A at even
/// depths), planar decomposition of H, then each B-vertex in a bag is
/// replaced by its neighbourhood.
LayeredTreeDecomposition map_ltd(const MapWitness& w, LtdCertificate* cert = nullptr);

/// The Y/Z instance family: Y = (p+1)x(q+1) grid, each edge subdivided r-1
/// times, plus a vertex adjacent to the 4r boundary vertices of each
/// internal cell. Nations are the 4r triangles per cell; Z is the map graph
/// on the 4pqr triangles.
struct YzInstance {
    MapWitness witness;  // A = triangles, B = V(Y)
    Graph z;             // the map graph, |V| = 4pqr
    /// Partition of V(Z): pr columns (2q vertices each) and qr rows
    /// (2p vertices each), every part inducing a path in Z.
    std::vector<std::vector<int>> columns, rows;
};

YzInstance yz_generator(int p, int q, int r);

/// Blow-up of a 4-regular graph: each vertex becomes a (q+1)x(q+1) grid
/// block with its four corner vertices removed, blocks glued along sides
/// per edge (side order by sorted-neighbour rank), edges subdivided r-1
/// times and every 4-cell starred. The map graph has (4q^2 r - 16r)|V(h)|
/// vertices. Requires q >= 8 (q < 100 sets the small_q flag) and r >= 2.
struct MapBlowup {
    MapWitness witness;
    Graph map;
    int cells = 0;
    /// map-vertex ids of the nations owned by each h-vertex block
    std::vector<std::vector<int>> nation_blocks;
    bool small_q = false;
};

MapBlowup map_blowup(const Graph& h, int q, int r);

// ---- Witness JSON: {A, B, edges, rotation, d} ----------------------------

void write_witness_json(std::ostream& os, const MapWitness& w);
MapWitness read_witness_json(std::istream& is);

}  // namespace locross
