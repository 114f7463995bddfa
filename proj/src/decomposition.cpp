#include "locross/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace locross {

namespace {

int max_bag_minus_one(const std::vector<std::vector<int>>& bags) {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool bag_contains(const std::vector<int>& bag, int v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int TreeDecomposition::width() const { return max_bag_minus_one(bags); }

int PathDecomposition::width() const { return max_bag_minus_one(bags); }

TreeDecomposition PathDecomposition::as_tree() const {
    TreeDecomposition td;
    td.tree = Graph(static_cast<int>(bags.size()));
    for (std::size_t i = 0; i + 1 < bags.size(); ++i)
        td.tree.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
    td.bags = bags;
    return td;
}

std::string validate_td(const Graph& g, const TreeDecomposition& td) {
    const int nodes = td.tree.vertex_count();
    if (static_cast<int>(td.bags.size()) != nodes) return "bag count differs from node count";
    if (nodes == 0) return g.vertex_count() == 0 ? std::string{} : "no bags but graph nonempty";
    if (!td.tree.connected() || td.tree.edge_count() != nodes - 1)
        return "decomposition tree is not a tree";
    for (const auto& b : td.bags) {
        if (!std::is_sorted(b.begin(), b.end()) ||
            std::adjacent_find(b.begin(), b.end()) != b.end())
            return "bag not sorted/unique";
        for (int v : b) {
            if (v < 0 || v >= g.vertex_count()) return "bag vertex out of range";
        }
    }
    // occurrence lists
    std::vector<std::vector<int>> nodes_of(g.vertex_count());
    for (int x = 0; x < nodes; ++x) {
        for (int v : td.bags[x]) nodes_of[v].push_back(x);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (nodes_of[v].empty())
            return "vertex " + std::to_string(v) + " appears in no bag";
    }
    // connected traces: union nodes along tree edges whose shared bag content
    // includes the vertex, then every vertex must have one trace component
    UnionFind uf(nodes);
    std::vector<int> trace_merges(g.vertex_count(), 0);
    for (auto [x, y] : td.tree.edges()) {
        const auto& small = td.bags[x].size() <= td.bags[y].size() ? td.bags[x] : td.bags[y];
        const auto& big = td.bags[x].size() <= td.bags[y].size() ? td.bags[y] : td.bags[x];
        for (int v : small) {
            if (bag_contains(big, v)) ++trace_merges[v];
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<int>(nodes_of[v].size()) - trace_merges[v] != 1)
            return "vertex " + std::to_string(v) + " subtree disconnected";
    }
    // edge coverage
    for (auto [u, v] : g.edges()) {
        const auto& cand = nodes_of[u].size() <= nodes_of[v].size() ? nodes_of[u] : nodes_of[v];
        int other = nodes_of[u].size() <= nodes_of[v].size() ? v : u;
        bool covered = false;
        for (int x : cand) {
            if (bag_contains(td.bags[x], other)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return "edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered";
    }
    return {};
}

int layered_width(const TreeDecomposition& td, const Layering& l, int n) {
    std::vector<int> layer_of(n, -1);
    for (std::size_t i = 0; i < l.layers.size(); ++i) {
        for (int v : l.layers[i]) layer_of[v] = static_cast<int>(i);
    }
    int best = 0;
    std::vector<int> count(l.layers.size(), 0);
    for (const auto& bag : td.bags) {
        for (int v : bag) {
            int li = layer_of[v];
            if (li >= 0) best = std::max(best, ++count[li]);
        }
        for (int v : bag) {
            int li = layer_of[v];
            if (li >= 0) count[li] = 0;
        }
    }
    return best;
}

std::string validate_ltd(const Graph& g, const LayeredTreeDecomposition& ltd) {
    if (auto err = validate_td(g, ltd.td); !err.empty()) return err;
    if (auto err = ltd.layering.validate(g); !err.empty()) return err;
    int lw = layered_width(ltd.td, ltd.layering, g.vertex_count());
    if (lw > ltd.layered_width)
        return "achieved layered width " + std::to_string(lw) +
               " exceeds certified value " + std::to_string(ltd.layered_width);
    return {};
}

TreeDecomposition flatten_layered(const Graph& g, const LayeredTreeDecomposition& ltd) {
    if (auto err = validate_ltd(g, ltd); !err.empty())
        throw std::invalid_argument("flatten_layered: invalid input: " + err);
    const int n = g.vertex_count();
    TreeDecomposition best;
    if (n == 0) return best;
    const int t = static_cast<int>(ltd.layering.layers.size());
    const int k = std::max(1, layered_width(ltd.td, ltd.layering, n));
    const int ell_star = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(n) / k))));
    int best_width = n;  // single-bag fallback is always available

    std::vector<int> layer_of(n, -1);
    for (int i = 0; i < t; ++i) {
        for (int v : ltd.layering.layers[i]) layer_of[v] = i;
    }

    auto build = [&](int ell, int offset) {
        std::vector<int> deleted;  // S_offset
        for (int i = offset; i < t; i += ell) {
            for (int v : ltd.layering.layers[i]) deleted.push_back(v);
        }
        std::sort(deleted.begin(), deleted.end());
        // strips of consecutive surviving layers
        std::vector<std::pair<int, int>> strips;  // [lo, hi] layer ranges
        auto is_deleted = [&](int i) { return i % ell == offset; };
        int i = 0;
        while (i < t) {
            if (is_deleted(i)) {
                ++i;
                continue;
            }
            int j = i;
            while (j + 1 < t && !is_deleted(j + 1)) ++j;
            strips.emplace_back(i, j);
            i = j + 1;
        }
        TreeDecomposition out;
        if (strips.empty()) {
            out.tree = Graph(1);
            out.bags.push_back(deleted);
            return out;
        }
        const int per = ltd.td.tree.vertex_count();
        out.tree = Graph(per * static_cast<int>(strips.size()));
        out.bags.resize(out.tree.vertex_count());
        for (std::size_t s = 0; s < strips.size(); ++s) {
            int base = static_cast<int>(s) * per;
            for (auto [x, y] : ltd.td.tree.edges()) out.tree.add_edge(base + x, base + y);
            if (s > 0) out.tree.add_edge(base - per, base);
            auto [lo, hi] = strips[s];
            for (int x = 0; x < per; ++x) {
                std::vector<int> bag;
                for (int v : ltd.td.bags[x]) {
                    if (layer_of[v] >= lo && layer_of[v] <= hi) bag.push_back(v);
                }
                bag.insert(bag.end(), deleted.begin(), deleted.end());
                std::sort(bag.begin(), bag.end());
                out.bags[base + x] = std::move(bag);
            }
        }
        return out;
    };

    for (int ell = std::max(1, ell_star - 2); ell <= ell_star + 2; ++ell) {
        for (int offset = 0; offset < ell && offset < t; ++offset) {
            TreeDecomposition cand = build(ell, offset);
            if (cand.width() < best_width) {
                best_width = cand.width();
                best = std::move(cand);
            }
        }
    }
    if (best.tree.vertex_count() == 0) {
        // degenerate: single bag with everything
        best.tree = Graph(1);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        best.bags.push_back(std::move(all));
    }
    return best;
}

std::vector<int> separator_from_td(const Graph& g, const TreeDecomposition& td) {
    if (auto err = validate_td(g, td); !err.empty())
        throw std::invalid_argument("separator_from_td: invalid decomposition: " + err);
    const int n = g.vertex_count();
    if (n == 0) return {};
    const int nodes = td.tree.vertex_count();

    std::vector<std::vector<int>> nodes_of(n);
    for (int x = 0; x < nodes; ++x) {
        for (int v : td.bags[x]) nodes_of[v].push_back(x);
    }

    std::vector<bool> visited_node(nodes, false);
    int x = 0;
    while (true) {
        visited_node[x] = true;
        const auto& bag = td.bags[x];
        // components of g - bag
        std::vector<bool> removed(n, false);
        for (int v : bag) removed[v] = true;
        std::vector<int> comp(n, -1);
        std::vector<int> comp_size;
        for (int v = 0; v < n; ++v) {
            if (removed[v] || comp[v] != -1) continue;
            int c = static_cast<int>(comp_size.size());
            comp_size.push_back(0);
            std::queue<int> q;
            q.push(v);
            comp[v] = c;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                ++comp_size[c];
                for (int w : g.neighbors(u)) {
                    if (!removed[w] && comp[w] == -1) {
                        comp[w] = c;
                        q.push(w);
                    }
                }
            }
        }
        int heavy = -1;
        for (std::size_t c = 0; c < comp_size.size(); ++c) {
            if (2 * comp_size[c] > n) heavy = static_cast<int>(c);
        }
        if (heavy == -1) return bag;
        // move toward the heavy component: find a node holding one of its
        // vertices and step along the tree path from x to it
        int witness = -1;
        for (int v = 0; v < n && witness == -1; ++v) {
            if (comp[v] == heavy) witness = nodes_of[v][0];
        }
        // BFS in the tree from x to witness; take the first step
        std::vector<int> parent(nodes, -2);
        parent[x] = -1;
        std::queue<int> q;
        q.push(x);
        while (!q.empty() && parent[witness] == -2) {
            int u = q.front();
            q.pop();
            for (int w : td.tree.neighbors(u)) {
                if (parent[w] == -2) {
                    parent[w] = u;
                    q.push(w);
                }
            }
        }
        int step = witness;
        while (parent[step] != x) step = parent[step];
        if (visited_node[step])
            throw std::logic_error("separator_from_td: walk revisited a node");
        x = step;
    }
}

double pathwidth_constant_floor() { return 1.0 / (1.0 - std::sqrt(2.0 / 3.0)); }

namespace {

struct PathwidthContext {
    const Graph* g;
    const TdProvider* provider;
    double c;
};

std::vector<std::vector<int>> pathwidth_recurse(const PathwidthContext& ctx,
                                                const std::vector<int>& verts) {
    const std::size_t n = verts.size();
    if (n == 0) return {};
    if (n == 1) return {{verts[0]}};

    Graph sub = induced_subgraph(*ctx.g, verts);
    TreeDecomposition td = (*ctx.provider)(sub);
    if (auto err = validate_td(sub, td); !err.empty())
        throw std::runtime_error("pathwidth provider returned invalid decomposition (" + err +
                                 ") on a subgraph with " + std::to_string(n) + " vertices");
    double allowed = ctx.c * std::sqrt(static_cast<double>(n)) - 1.0;
    if (td.width() > allowed + 1e-9)
        throw std::runtime_error("pathwidth provider exceeded its width contract: width " +
                                 std::to_string(td.width()) + " > " + std::to_string(allowed) +
                                 " on a subgraph with " + std::to_string(n) + " vertices");

    std::vector<int> sep_local = separator_from_td(sub, td);
    std::vector<int> sep;
    for (int v : sep_local) sep.push_back(verts[v]);
    std::sort(sep.begin(), sep.end());

    // components of sub - sep, mapped back to original ids
    std::vector<bool> removed(n, false);
    for (int v : sep_local) removed[v] = true;
    std::vector<std::vector<int>> groups;
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        if (removed[v] || seen[v]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(static_cast<int>(v));
        seen[v] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(verts[u]);
            for (int w : sub.neighbors(u)) {
                if (!removed[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(static_cast<int>(w));
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        groups.push_back(std::move(comp));
    }
    // merge the two smallest groups while more than two remain;
    // ties broken by smaller lowest vertex id
    auto group_less = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    };
    while (groups.size() > 2) {
        std::sort(groups.begin(), groups.end(), group_less);
        std::vector<int> merged = groups[0];
        merged.insert(merged.end(), groups[1].begin(), groups[1].end());
        std::sort(merged.begin(), merged.end());
        groups.erase(groups.begin(), groups.begin() + 2);
        groups.push_back(std::move(merged));
    }
    for (const auto& grp : groups) {
        if (3 * grp.size() > 2 * n)
            throw std::logic_error("pathwidth grouping produced an oversized group");
    }

    std::vector<std::vector<int>> bags;
    auto append_with_sep = [&](const std::vector<std::vector<int>>& part) {
        for (const auto& b : part) {
            std::vector<int> merged;
            std::set_union(b.begin(), b.end(), sep.begin(), sep.end(),
                           std::back_inserter(merged));
            bags.push_back(std::move(merged));
        }
    };
    if (!groups.empty()) append_with_sep(pathwidth_recurse(ctx, groups[0]));
    bags.push_back(sep);
    if (groups.size() > 1) append_with_sep(pathwidth_recurse(ctx, groups[1]));
    return bags;
}

}  // namespace

PathDecomposition pathwidth_decomposition(const Graph& g, const TdProvider& provider,
                                          double c) {
    PathwidthContext ctx{&g, &provider, std::max(c, pathwidth_constant_floor())};
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    PathDecomposition pd;
    pd.bags = pathwidth_recurse(ctx, all);
    return pd;
}

namespace {

void check_oracle_cap(const Graph& g, int cap, const char* name) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument(std::string(name) + ": n = " +
                                    std::to_string(g.vertex_count()) + " exceeds cap " +
                                    std::to_string(cap));
}

}  // namespace

int exact_treewidth(const Graph& g, int cap) {
    check_oracle_cap(g, cap, "exact_treewidth");
    const int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::vector<int> f(std::size_t(1) << n, 0);
    // q(W, v): neighbours of v outside W∪{v} reachable from v via W
    auto q_count = [&](std::uint64_t w, int v) {
        std::uint64_t frontier = std::uint64_t(1) << v;
        std::uint64_t visited = frontier;
        std::uint64_t out = 0;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t fcopy = frontier;
            while (fcopy) {
                int u = std::countr_zero(fcopy);
                fcopy &= fcopy - 1;
                std::uint64_t nb = adj[u] & ~visited;
                out |= nb & ~w;
                next |= nb & w;
                visited |= nb;
            }
            frontier = next;
        }
        return std::popcount(out & ~(std::uint64_t(1) << v));
    };
    for (std::uint64_t s = 1; s <= full; ++s) {
        int best = n;
        std::uint64_t scopy = s;
        while (scopy) {
            int v = std::countr_zero(scopy);
            scopy &= scopy - 1;
            std::uint64_t rest = s & ~(std::uint64_t(1) << v);
            best = std::min(best, std::max(f[rest], q_count(rest, v)));
        }
        f[s] = best;
    }
    return f[full];
}

int exact_pathwidth(const Graph& g, int cap) {
    check_oracle_cap(g, cap, "exact_pathwidth");
    const int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::vector<int> f(std::size_t(1) << n, 0);
    for (std::uint64_t s = 1; s <= full; ++s) {
        int boundary = 0;
        std::uint64_t scopy = s;
        while (scopy) {
            int v = std::countr_zero(scopy);
            scopy &= scopy - 1;
            if (adj[v] & ~s) ++boundary;
        }
        int best = n;
        scopy = s;
        while (scopy) {
            int v = std::countr_zero(scopy);
            scopy &= scopy - 1;
            best = std::min(best, f[s & ~(std::uint64_t(1) << v)]);
        }
        f[s] = std::max(best, boundary);
    }
    return f[full];
}

// ---- JSON ----------------------------------------------------------------

namespace {

nlohmann::ordered_json td_to_json(const TreeDecomposition& td) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (int x = 0; x < td.tree.vertex_count(); ++x) {
        j["nodes"].push_back({{"id", x}, {"bag", td.bags[x]}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [x, y] : td.tree.edges()) j["edges"].push_back({x, y});
    return j;
}

TreeDecomposition td_from_json(const nlohmann::json& j) {
    TreeDecomposition td;
    int nodes = static_cast<int>(j.at("nodes").size());
    td.tree = Graph(nodes);
    td.bags.resize(nodes);
    for (const auto& node : j.at("nodes")) {
        int id = node.at("id").get<int>();
        td.bags.at(id) = node.at("bag").get<std::vector<int>>();
        std::sort(td.bags.at(id).begin(), td.bags.at(id).end());
    }
    for (const auto& e : j.at("edges")) td.tree.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return td;
}

}  // namespace

void write_decomposition_json(std::ostream& os, const TreeDecomposition& td) {
    os << td_to_json(td).dump(2) << '\n';
}

void write_decomposition_json(std::ostream& os, const LayeredTreeDecomposition& ltd) {
    auto j = td_to_json(ltd.td);
    j["layering"] = ltd.layering.layers;
    j["layered_width"] = ltd.layered_width;
    os << j.dump(2) << '\n';
}

TreeDecomposition read_decomposition_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    return td_from_json(j);
}

LayeredTreeDecomposition read_layered_decomposition_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    LayeredTreeDecomposition ltd;
    ltd.td = td_from_json(j);
    ltd.layering.layers = j.at("layering").get<std::vector<std::vector<int>>>();
    ltd.layered_width = j.at("layered_width").get<int>();
    return ltd;
}

}  // namespace locross
