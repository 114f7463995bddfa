#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "locross/graph.hpp"

namespace locross {

/// Combinatorial orientable embedding: a multigraph (parallel edges allowed,
/// loops not) plus a cyclic order of incident edges at every vertex.
///
/// Edge e has two darts 2e (first endpoint -> second) and 2e+1 (reverse).
/// rotation()[v] lists the darts leaving v in cyclic order. Faces are traced
/// with next(d) = rotation successor of twin(d) at the head of d.
class RotationSystem {
public:
    RotationSystem() = default;
    /// rotation given as darts leaving each vertex.
    RotationSystem(int n, std::vector<std::pair<int, int>> edges,
                   std::vector<std::vector<int>> rotation);
    /// Convenience for simple graphs: cyclic neighbour lists per vertex.
    static RotationSystem from_neighbor_lists(
        int n, const std::vector<std::vector<int>>& cyclic_neighbors);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }

    int dart_tail(int d) const {
        auto [u, v] = edges_[d >> 1];
        return (d & 1) ? v : u;
    }
    int dart_head(int d) const {
        auto [u, v] = edges_[d >> 1];
        return (d & 1) ? u : v;
    }
    static int twin(int d) { return d ^ 1; }

    /// The dart following d along its face: rotation successor of twin(d).
    int face_next(int d) const;

    /// Underlying simple graph (parallel edges collapsed).
    Graph simple_graph() const;

    bool connected() const;

private:
    void build_positions();

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rot_;   // darts leaving v, cyclic
    std::vector<int> pos_;                // pos_[d] = index of d in rot_[tail(d)]
};

/// A face as the cyclic sequence of darts along its boundary walk.
struct Face {
    std::vector<int> darts;
};

std::vector<Face> trace_faces(const RotationSystem& rs);

/// Euler genus 2 - n + m - f; even and >= 0 for orientable rotation systems
/// of connected graphs.
int euler_genus(const RotationSystem& rs);

/// Sum of Euler genera over connected components (isolated vertices count
/// as spheres).
int euler_genus_components(const RotationSystem& rs);

/// Add edges (parallel edges on distinct faces permitted) until every face is
/// a triangle. Vertex set and genus are preserved. Diagonals in a face whose
/// boundary walk has no repeated vertex are fanned from its minimum-id vertex.
RotationSystem triangulate(const RotationSystem& rs);

// ---- Standard embeddings -------------------------------------------------

/// Planar rotation of the a x b grid (ids row-major: y*a + x).
RotationSystem grid_rotation(int a, int b);

/// Toroidal rotation of C_a [] C_b (cartesian product of cycles, a, b >= 3),
/// every vertex ordered (+x, +y, -x, -y); Euler genus 2.
/// Ids row-major: y*a + x.
RotationSystem torus_rotation(int a, int b);

/// Random planar triangulation on n >= 3 vertices grown by repeatedly
/// inserting a vertex into a uniformly random face of the current
/// triangulation. Deterministic per seed.
RotationSystem random_planar_triangulation(int n, std::uint64_t seed);

// ---- Text format ---------------------------------------------------------

/// "n m" header, m lines "u v" (edge id = line index), then per vertex one
/// line "v: e1 e2 ... ek" with incident edge ids in cyclic order.
void write_rotation(std::ostream& os, const RotationSystem& rs);
RotationSystem read_rotation(std::istream& is);

}  // namespace locross
