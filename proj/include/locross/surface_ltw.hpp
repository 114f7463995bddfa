#pragma once

#include <utility>
#include <vector>

#include "locross/decomposition.hpp"
#include "locross/drawing.hpp"
#include "locross/graph.hpp"
#include "locross/rotation.hpp"

namespace locross {

/// Intermediate objects of the surface decomposition: the BFS vertical paths,
/// the dual graph over triangulation faces, its spanning tree and the g
/// leftover dual edges whose primal endpoints seed every bag.
struct SurfaceDecompositionTrace {
    int bfs_root = 0;
    std::vector<std::vector<int>> vertical_paths;  // per vertex, sorted
    /// One entry per non-tree triangulation edge: the two faces it separates.
    std::vector<std::pair<int, int>> dual_edges;
    std::vector<int> dual_edge_primal;  // triangulation edge id per dual edge
    std::vector<char> in_dual_tree;     // spanning-tree membership per dual edge
    std::vector<int> leftover;          // dual edge indices outside the tree
    int genus = 0;
};

/// Layered tree decomposition of the embedded graph with layered width at
/// most 2g+3 (3 when planar): BFS layering from r, decomposition tree = the
/// spanning tree of the dual of a triangulation, one bag per face.
/// Requires a connected rotation system; n < 3 degenerates to a single bag.
std::pair<LayeredTreeDecomposition, SurfaceDecompositionTrace> planar_ltd(
    const RotationSystem& rs, int r);

/// planar_ltd on each connected component (components with fewer than three
/// vertices get single bags), joined into one decomposition by empty bridge
/// bags; layers with equal BFS depth are merged across components. The root
/// is used for its component; other components use their smallest vertex.
LayeredTreeDecomposition planar_ltd_any(const RotationSystem& rs, int r);

struct LtdCertificate {
    int g = 0;      // Euler genus of the drawing's skeleton embedding
    int k = 0;      // max crossings per edge
    int bound = 0;  // (4g+6)(k+1), or 6(k+1) when g = 0
    int achieved = 0;
};

/// Layered tree decomposition of the base graph of a drawing with at most k
/// crossings per edge on a genus-g surface; layered width <= (4g+6)(k+1)
/// (<= 6(k+1) when g = 0). Planarize, decompose the skeleton, replace each
/// crossing vertex by the tails of its two edges, regroup layers in blocks
/// of k+1.
LayeredTreeDecomposition gk_planar_ltd(const Drawing& d, int root = 0,
                                       LtdCertificate* cert = nullptr);

/// Provider for pathwidth_decomposition on planar graphs: embeds each input
/// subgraph (Boyer-Myrvold), decomposes with planar_ltd_any and flattens.
/// Width <= 2*sqrt(3n) - 1 on every planar input with n vertices.
TdProvider planar_sqrt_td_provider();

}  // namespace locross
