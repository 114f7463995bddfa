#include "locross/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace locross {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    }
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), target) != a.end();
}

std::vector<int> Graph::component_of(int v) const {
    check_vertex(v);
    std::vector<bool> seen(n_, false);
    std::vector<int> comp;
    std::queue<int> q;
    q.push(v);
    seen[v] = true;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        comp.push_back(u);
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

int Graph::component_count() const {
    std::vector<bool> seen(n_, false);
    int count = 0;
    for (int v = 0; v < n_; ++v) {
        if (seen[v]) continue;
        ++count;
        std::queue<int> q;
        q.push(v);
        seen[v] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
    }
    return count;
}

bool Graph::connected() const { return n_ <= 1 || component_count() == 1; }

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    auto a = edges_;
    auto b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

int Layering::layer_of(int v, int n) const {
    for (std::size_t i = 0; i < layers.size(); ++i) {
        for (int u : layers[i]) {
            if (u == v) return static_cast<int>(i);
        }
    }
    (void)n;
    return -1;
}

std::string Layering::validate(const Graph& g) const {
    std::vector<int> idx(g.vertex_count(), -1);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        for (int v : layers[i]) {
            if (v < 0 || v >= g.vertex_count())
                return "layer vertex " + std::to_string(v) + " out of range";
            if (idx[v] != -1)
                return "vertex " + std::to_string(v) + " appears in two layers";
            idx[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (idx[v] == -1) return "vertex " + std::to_string(v) + " missing from layering";
    }
    for (auto [u, v] : g.edges()) {
        if (std::abs(idx[u] - idx[v]) > 1) {
            return "edge " + std::to_string(u) + "-" + std::to_string(v) +
                   " spans non-adjacent layers " + std::to_string(idx[u]) + "," +
                   std::to_string(idx[v]);
        }
    }
    return {};
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("rational denominator must be positive");
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

bool at_most_fraction(long long count, const Rational& eps, long long total) {
    // count <= (num/den) * total, exactly
    return count * eps.den <= eps.num * total;
}

Layering bfs_layering(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("bfs root out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    Layering l;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == -1) {
            throw std::invalid_argument("graph is disconnected: vertex " +
                                        std::to_string(v) + " unreachable from root " +
                                        std::to_string(root));
        }
        if (static_cast<int>(l.layers.size()) <= dist[v]) l.layers.resize(dist[v] + 1);
        l.layers[dist[v]].push_back(v);
    }
    return l;
}

std::vector<int> bfs_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("bfs root out of range");
    std::vector<int> parent(g.vertex_count(), -2);
    parent[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (parent[w] == -2) {
                parent[w] = u;
                q.push(w);
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (parent[v] == -2) {
            throw std::invalid_argument("graph is disconnected: vertex " +
                                        std::to_string(v) + " unreachable from root " +
                                        std::to_string(root));
        }
    }
    return parent;
}

int grid3_id(int p, int q, int r, int x, int y, int z) {
    (void)r;
    return (z * q + y) * p + x;
}

Graph grid3(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1)
        throw std::invalid_argument("grid3 dimensions must be positive");
    Graph g(p * q * r);
    for (int z = 0; z < r; ++z) {
        for (int y = 0; y < q; ++y) {
            for (int x = 0; x < p; ++x) {
                int id = grid3_id(p, q, r, x, y, z);
                if (x + 1 < p) g.add_edge(id, grid3_id(p, q, r, x + 1, y, z));
                if (y + 1 < q) g.add_edge(id, grid3_id(p, q, r, x, y + 1, z));
                if (z + 1 < r) g.add_edge(id, grid3_id(p, q, r, x, y, z + 1));
            }
        }
    }
    return g;
}

Graph random_regular(int k, int n, std::uint64_t seed, int max_retries) {
    if (k < 3) throw std::invalid_argument("random_regular requires k >= 3");
    if (n < k + 1) throw std::invalid_argument("random_regular requires n >= k+1");
    if ((static_cast<long long>(k) * n) % 2 != 0)
        throw std::invalid_argument("random_regular requires k*n even");
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(k) * n);
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < k; ++j) points[static_cast<std::size_t>(v) * k + j] = v;
    }
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // Fisher-Yates with the raw engine; std::shuffle's behaviour is
        // implementation-defined across standard libraries.
        for (std::size_t i = points.size() - 1; i > 0; --i) {
            std::size_t j = rng() % (i + 1);
            std::swap(points[i], points[j]);
        }
        std::vector<std::pair<int, int>> pairs;
        bool ok = true;
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = true;
            pairs.emplace_back(u, v);
        }
        if (ok) return Graph::from_edges(n, pairs);
    }
    throw std::runtime_error("random_regular: pairing failed after " +
                             std::to_string(max_retries) + " retries");
}

Graph subdivide(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("subdivide requires t >= 0");
    if (t == 0) return g;
    Graph out(g.vertex_count() + t * g.edge_count());
    int next = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 0; i < t; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.vertex_count() + g.component_count();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (index[verts[i]] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
        index[verts[i]] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(verts.size()));
    for (auto [u, v] : g.edges()) {
        if (index[u] != -1 && index[v] != -1) out.add_edge(index[u], index[v]);
    }
    return out;
}

MinorCheck verify_minor(const Graph& g, const BranchSets& b, const Graph& h) {
    MinorCheck res;
    if (static_cast<int>(b.sets.size()) != h.vertex_count()) {
        res.violation = "branch set count " + std::to_string(b.sets.size()) +
                        " differs from |V(H)| = " + std::to_string(h.vertex_count());
        return res;
    }
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        if (b.sets[i].empty()) {
            res.violation = "set " + std::to_string(i) + " empty";
            return res;
        }
        for (int v : b.sets[i]) {
            if (v < 0 || v >= g.vertex_count()) {
                res.violation = "set " + std::to_string(i) + " contains out-of-range vertex " +
                                std::to_string(v);
                return res;
            }
            if (owner[v] != -1) {
                res.violation = "sets " + std::to_string(owner[v]) + " and " +
                                std::to_string(i) + " share vertex " + std::to_string(v);
                return res;
            }
            owner[v] = static_cast<int>(i);
        }
    }
    // connectivity of each branch set
    for (std::size_t i = 0; i < b.sets.size(); ++i) {
        const auto& s = b.sets[i];
        std::vector<bool> in_set(g.vertex_count(), false);
        for (int v : s) in_set[v] = true;
        std::vector<bool> seen(g.vertex_count(), false);
        std::queue<int> q;
        q.push(s[0]);
        seen[s[0]] = true;
        int reached = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ++reached;
            for (int w : g.neighbors(u)) {
                if (in_set[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        if (reached != static_cast<int>(s.size())) {
            res.violation = "set " + std::to_string(i) + " disconnected";
            return res;
        }
    }
    // adjacency for every H-edge
    for (auto [i, j] : h.edges()) {
        bool found = false;
        for (int v : b.sets[i]) {
            for (int w : g.neighbors(v)) {
                if (owner[w] == j) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            res.violation = "no edge between sets " + std::to_string(i) + " and " +
                            std::to_string(j);
            return res;
        }
    }
    res.ok = true;
    return res;
}

std::pair<Graph, BranchSets> zigzag_branch_sets(int n) {
    if (n < 1) throw std::invalid_argument("zigzag_branch_sets requires n >= 1");
    const int side = 2 * n;
    auto id = [side](int x, int y) { return (y - 1) * side + (x - 1); };
    Graph g(side * side);
    for (int y = 1; y <= side; ++y) {
        for (int x = 1; x <= side; ++x) {
            if (x + 1 <= side) g.add_edge(id(x, y), id(x + 1, y));
            if (y + 1 <= side) g.add_edge(id(x, y), id(x, y + 1));
            if (x + 1 <= side && y + 1 <= side) {
                g.add_edge(id(x, y), id(x + 1, y + 1));
                g.add_edge(id(x + 1, y), id(x, y + 1));
            }
        }
    }
    BranchSets b;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> set;
        // zig-zag row R_i: x runs 1..2n, y alternates 2i-1 (odd x), 2i (even x)
        for (int x = 1; x <= side; ++x) set.push_back(id(x, x % 2 == 1 ? 2 * i - 1 : 2 * i));
        // zig-zag column C_i: y runs 1..2n, x alternates 2i (odd y), 2i-1 (even y)
        for (int y = 1; y <= side; ++y) set.push_back(id(y % 2 == 1 ? 2 * i : 2 * i - 1, y));
        std::sort(set.begin(), set.end());
        b.sets.push_back(std::move(set));
    }
    return {std::move(g), std::move(b)};
}

bool is_eps_separator(const Graph& g, const std::vector<int>& s, const Rational& eps) {
    std::vector<bool> removed(g.vertex_count(), false);
    for (int v : s) removed[v] = true;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v] || seen[v]) continue;
        long long size = 0;
        std::queue<int> q;
        q.push(v);
        seen[v] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ++size;
            for (int w : g.neighbors(u)) {
                if (!removed[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        if (!at_most_fraction(size, eps, g.vertex_count())) return false;
    }
    return true;
}

std::vector<int> min_separator_bruteforce(const Graph& g, const Rational& eps, int cap) {
    const int n = g.vertex_count();
    if (n > cap) {
        throw std::invalid_argument("min_separator_bruteforce: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    }
    for (int size = 0; size <= n; ++size) {
        // lexicographic combinations of {0..n-1} of the given size
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (size == 0 || comb[0] <= n - size) {
                if (is_eps_separator(g, comb, eps)) return comb;
            }
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("min_separator_bruteforce: no separator found");  // unreachable
}

namespace {

// Side faces of a q x q x r block, each a q x r grid indexed by (a, z).
// 0: x=0, 1: x=q-1, 2: y=0, 3: y=q-1.
int side_vertex(int q, int r, int side, int a, int z) {
    switch (side) {
        case 0: return grid3_id(q, q, r, 0, a, z);
        case 1: return grid3_id(q, q, r, q - 1, a, z);
        case 2: return grid3_id(q, q, r, a, 0, z);
        default: return grid3_id(q, q, r, a, q - 1, z);
    }
}

}  // namespace

GridBlowup expander_blowup_gk(const Graph& h, int q, int r) {
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) > 4) {
            throw std::invalid_argument("expander_blowup_gk: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(h.degree(v)) +
                                        " > 4 (side capacity exceeded)");
        }
    }
    if (q < 2 * r) throw std::invalid_argument("expander_blowup_gk requires q >= 2r");
    const int block_size = q * q * r;
    GridBlowup out;
    out.q = q;
    out.r = r;
    out.graph = Graph(block_size * h.vertex_count());
    Graph cell = grid3(q, q, r);
    out.blocks.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        int base = v * block_size;
        out.blocks[v].resize(block_size);
        std::iota(out.blocks[v].begin(), out.blocks[v].end(), base);
        for (auto [a, b] : cell.edges()) out.graph.add_edge(base + a, base + b);
    }
    // Side assignment: the i-th incident edge (neighbors in increasing order)
    // of each vertex uses side i of that vertex's block.
    std::vector<std::vector<int>> sorted_nbrs(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        sorted_nbrs[v] = h.neighbors(v);
        std::sort(sorted_nbrs[v].begin(), sorted_nbrs[v].end());
    }
    auto side_of = [&](int v, int w) {
        const auto& nb = sorted_nbrs[v];
        return static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin());
    };
    for (auto [u, v] : h.edges()) {
        int su = side_of(u, v);
        int sv = side_of(v, u);
        for (int a = 0; a < q; ++a) {
            for (int z = 0; z < r; ++z) {
                out.graph.add_edge(u * block_size + side_vertex(q, r, su, a, z),
                                   v * block_size + side_vertex(q, r, sv, a, z));
            }
        }
    }
    return out;
}

void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::runtime_error("edge list: missing header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated at edge " + std::to_string(i));
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_edge_list(f);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_edge_list(f, g);
}

}  // namespace locross
