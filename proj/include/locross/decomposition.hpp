#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "locross/graph.hpp"

namespace locross {

/// Tree of bags covering every edge, with connected vertex traces.
/// The empty graph gets the empty decomposition (no nodes, width -1).
struct TreeDecomposition {
    Graph tree;                          // node ids; must be a tree
    std::vector<std::vector<int>> bags;  // bags[x] sorted ascending

    int width() const;
};

struct LayeredTreeDecomposition {
    TreeDecomposition td;
    Layering layering;
    int layered_width = 0;  // certified max |bag ∩ layer|
};

struct PathDecomposition {
    std::vector<std::vector<int>> bags;  // sorted ascending

    int width() const;
    TreeDecomposition as_tree() const;
};

/// Empty string if valid; otherwise pinpoints the violation
/// (edge uncovered | vertex subtree disconnected | structural defect).
std::string validate_td(const Graph& g, const TreeDecomposition& td);

/// Max over bags and layers of |bag ∩ layer|.
int layered_width(const TreeDecomposition& td, const Layering& l, int n);

/// validate_td plus the layering invariant plus the certified layered width.
std::string validate_ltd(const Graph& g, const LayeredTreeDecomposition& ltd);

/// Turn a layered tree decomposition of layered width k into a plain tree
/// decomposition of width <= 2*sqrt(k*n) - 1 by deleting every ell-th block
/// of layers, restricting the decomposition to the leftover strips, and
/// adding the deleted set to every bag. Minimizes over nearby block lengths
/// and all offsets.
TreeDecomposition flatten_layered(const Graph& g, const LayeredTreeDecomposition& ltd);

/// A bag S of td such that every component of g - S has at most n/2
/// vertices; |S| <= width(td) + 1. Found by walking the tree toward the
/// heavier side.
std::vector<int> separator_from_td(const Graph& g, const TreeDecomposition& td);

using TdProvider = std::function<TreeDecomposition(const Graph&)>;

/// Minimum admissible constant in the pathwidth recursion; declared
/// constants below it are clamped up to this value.
double pathwidth_constant_floor();

/// Balanced-separator recursion: provider must return decompositions of
/// width <= c*sqrt(n') - 1 on every induced subgraph. Result width is at
/// most c' * sqrt(n) - 1 with c' = c / (1 - sqrt(2/3)).
PathDecomposition pathwidth_decomposition(const Graph& g, const TdProvider& provider,
                                          double c);

/// Exact treewidth / pathwidth by exhaustive ordering search with
/// memoization over vertex subsets. Refuses graphs above the cap.
int exact_treewidth(const Graph& g, int cap = 12);
int exact_pathwidth(const Graph& g, int cap = 12);

// ---- JSON format ---------------------------------------------------------
// {nodes:[{id,bag:[...]}], edges:[[id,id]], layering:[[...],...]}
// The layering block is present only when writing a LayeredTreeDecomposition.

void write_decomposition_json(std::ostream& os, const TreeDecomposition& td);
void write_decomposition_json(std::ostream& os, const LayeredTreeDecomposition& ltd);
TreeDecomposition read_decomposition_json(std::istream& is);
LayeredTreeDecomposition read_layered_decomposition_json(std::istream& is);

}  // namespace locross
