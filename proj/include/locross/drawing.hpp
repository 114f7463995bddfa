#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "locross/graph.hpp"
#include "locross/rotation.hpp"

namespace locross {

/// A crossing point of two base edges, realized as a degree-4 vertex of the
/// planarization skeleton.
struct Crossing {
    int vertex = -1;              // skeleton vertex id
    std::array<int, 2> edges{};   // the two crossing base-edge ids, ascending
};

/// A drawing of a graph with crossings, stored combinatorially: the base
/// graph, the planarization skeleton with its rotation system, the crossing
/// vertices, and for every base edge its route through the skeleton.
struct Drawing {
    Graph base;
    RotationSystem skeleton;
    std::vector<Crossing> crossings;
    /// routes[e] = skeleton vertex path from min(u,v) to max(u,v) for base
    /// edge e = uv; interior vertices are crossing vertices.
    std::vector<std::vector<int>> routes;
};

/// Empty string if the drawing invariants hold, else a description.
std::string validate_drawing(const Drawing& d);

struct CrossingInfo {
    int vertex = -1;
    std::array<int, 2> edges{};  // crossing base-edge ids
    std::array<int, 2> tails{};  // tail endpoint of each, min->max orientation
};

struct PlanarizeResult {
    Graph skeleton;
    std::vector<CrossingInfo> crossings;
};

/// The planarization: the skeleton as a simple graph plus, for each crossing
/// vertex, its two crossing edges and their tails under the min->max
/// orientation.
PlanarizeResult planarize(const Drawing& d);

/// Max crossings on a single edge (route interior length).
int local_crossing_number_of_drawing(const Drawing& d);

struct Point {
    long long x = 0;
    long long y = 0;
};

/// Drawing induced by placing the vertices of g at the given integer points
/// and drawing edges as straight segments. All intersection predicates are
/// exact. Throws std::invalid_argument on degenerate position (coinciding
/// points, a vertex interior to an edge, overlapping collinear edges, or
/// concurrent crossing points), naming the offending pair.
Drawing straight_line_crossings(const std::vector<Point>& points, const Graph& g);

/// Straight-line drawing of grid3(p, q, r) under the projection
/// (x, y, z) -> (x + z/(r+1), y + z/(r+2)), scaled to integer coordinates.
/// At most r-1 crossings per edge.
Drawing grid_projection_drawing(int p, int q, int r);

// ---- JSON format: {base, skeleton, crossings, routes} --------------------

void write_drawing_json(std::ostream& os, const Drawing& d);
Drawing read_drawing_json(std::istream& is);

}  // namespace locross
