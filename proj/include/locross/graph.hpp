#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locross {

/// Simple undirected graph with dense integer vertex ids in [0, n).
/// No self-loops, no parallel edges. Immutable in spirit: build once,
/// then treat as read-only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> component_of(int v) const;
    int component_count() const;
    bool connected() const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // stored with u < v
    std::vector<std::vector<int>> adj_;
};

/// Ordered partition of V(G) such that every edge joins the same or
/// adjacent classes.
struct Layering {
    std::vector<std::vector<int>> layers;

    int layer_of(int v, int n) const;
    /// Empty string if valid against g, else a description of the violation.
    std::string validate(const Graph& g) const;
};

/// Pairwise disjoint nonempty vertex sets of a host graph.
struct BranchSets {
    std::vector<std::vector<int>> sets;
};

struct MinorCheck {
    bool ok = false;
    std::string violation;  // names the failing set or pair
};

/// Exact rational, used for separator balance tests (avoids float cutoffs).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(const std::string& text);  // "a/b" or "a"
};

/// True iff count <= eps * total, exactly.
bool at_most_fraction(long long count, const Rational& eps, long long total);

// ---- Layerings and trees -------------------------------------------------

Layering bfs_layering(const Graph& g, int root);

/// parent[v] for every v, parent[root] = -1; tree distances equal graph
/// distances from root.
std::vector<int> bfs_tree(const Graph& g, int root);

// ---- Generators ----------------------------------------------------------

/// p x q x r grid graph on [p]x[q]x[r], row-major ids:
/// id(x,y,z) = (z*q + y)*p + x with x fastest.
Graph grid3(int p, int q, int r);
int grid3_id(int p, int q, int r, int x, int y, int z);

/// Configuration-model k-regular graph on n vertices; pairings with loops
/// or repeated edges are rejected and retried, at most max_retries times.
Graph random_regular(int k, int n, std::uint64_t seed, int max_retries = 200000);

/// Replace every edge by a path with t internal vertices. New vertices get
/// ids n, n+1, ... in edge order.
Graph subdivide(const Graph& g, int t);

int cyclomatic_number(const Graph& g);

/// Subgraph induced by verts; new ids follow the order of verts (which must
/// contain no duplicates).
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// ---- Minors --------------------------------------------------------------

MinorCheck verify_minor(const Graph& g, const BranchSets& b, const Graph& h);

/// The 2n x 2n king graph (grid with both diagonals across each face)
/// together with the zig-zag branch sets certifying a K_n minor.
/// Coordinates (x, y) in [1, 2n]^2 map to id (y-1)*2n + (x-1).
std::pair<Graph, BranchSets> zigzag_branch_sets(int n);

// ---- Brute-force separator oracle ----------------------------------------

/// Minimum-cardinality eps-separator, ties broken lexicographically on the
/// sorted vertex-id sequence. Exhaustive; refuses graphs above the cap.
std::vector<int> min_separator_bruteforce(const Graph& g, const Rational& eps,
                                          int cap = 20);

/// True iff every component of g - s has at most eps*|V(g)| vertices.
bool is_eps_separator(const Graph& g, const std::vector<int>& s,
                      const Rational& eps);

// ---- Expander blow-up (lower-bound instances) ----------------------------

struct GridBlowup {
    Graph graph;
    /// block[v] = ids of the q x q x r grid copy replacing vertex v of H,
    /// indexed row-major like grid3(q, q, r).
    std::vector<std::vector<int>> blocks;
    int q = 0;
    int r = 0;
};

/// Replace each vertex of a 4-regular H by a q x q x r grid block and each
/// edge by a matching of q*r edges so that the union of the two endpoint
/// blocks is a 2q x q x r grid.
GridBlowup expander_blowup_gk(const Graph& h, int q, int r);

// ---- Edge-list text format -----------------------------------------------

void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace locross
