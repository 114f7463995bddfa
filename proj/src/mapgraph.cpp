#include "locross/mapgraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace locross {

namespace {

using i128 = __int128;

/// Angular order around the origin, counter-clockwise from the positive
/// x-axis; ties broken lexicographically (cannot occur in valid drawings).
bool angle_less(long long ax, long long ay, long long bx, long long by) {
    auto half = [](long long x, long long y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    i128 cr = i128(ax) * by - i128(ay) * bx;
    if (cr != 0) return cr > 0;
    return std::make_pair(ax, ay) < std::make_pair(bx, by);
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::string validate_witness(const MapWitness& w) {
    const int n = w.h.vertex_count();
    std::vector<int> side(n, -1);
    for (int v : w.a) {
        if (v < 0 || v >= n || side[v] != -1) return "invalid A class";
        side[v] = 0;
    }
    for (int v : w.b) {
        if (v < 0 || v >= n || side[v] != -1) return "invalid B class";
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (side[v] == -1) return "vertex " + std::to_string(v) + " in neither class";
    }
    if (!std::is_sorted(w.a.begin(), w.a.end()) || !std::is_sorted(w.b.begin(), w.b.end()))
        return "classes not sorted";
    for (auto [u, v] : w.h.edges()) {
        if (side[u] == side[v])
            return "edge " + std::to_string(u) + "-" + std::to_string(v) +
                   " inside one class";
    }
    for (int v : w.b) {
        if (w.h.degree(v) > w.d)
            return "B-vertex " + std::to_string(v) + " exceeds degree bound";
    }
    if (!(w.rs.simple_graph() == w.h)) return "rotation system disagrees with H";
    return {};
}

Graph half_square(const Graph& h, const std::vector<int>& a) {
    const int n = h.vertex_count();
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= n || pos[a[i]] != -1)
            throw std::invalid_argument("half_square: invalid A class");
        pos[a[i]] = static_cast<int>(i);
    }
    for (auto [u, v] : h.edges()) {
        if ((pos[u] == -1) == (pos[v] == -1))
            throw std::invalid_argument("half_square: H not bipartite over (A, B)");
    }
    Graph g(static_cast<int>(a.size()));
    for (int w = 0; w < n; ++w) {
        if (pos[w] != -1) continue;
        const auto& nb = h.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = pos[nb[i]], y = pos[nb[j]];
                if (!g.has_edge(x, y)) g.add_edge(x, y);
            }
        }
    }
    return g;
}

MapConversion witness_to_map(const MapWitness& w) {
    if (auto err = validate_witness(w); !err.empty())
        throw std::invalid_argument("witness_to_map: " + err);
    const int n = w.h.vertex_count();
    const int mh = w.h.edge_count();
    std::vector<int> pos_b(n, -1);
    for (std::size_t i = 0; i < w.b.size(); ++i) pos_b[w.b[i]] = static_cast<int>(i);

    MapConversion out;
    out.nations.nations.resize(w.a.size());

    // one G0 edge per corner of an A-vertex; remember, per H-dart leaving a
    // B-vertex, the G0 darts hugging its two sides
    std::vector<int> before(2 * mh, -1), after(2 * mh, -1);
    std::vector<std::pair<int, int>> g0_edges;
    for (std::size_t ai = 0; ai < w.a.size(); ++ai) {
        const auto& darts = w.rs.rotation()[w.a[ai]];
        const int t = static_cast<int>(darts.size());
        for (int d : darts) out.nations.nations[ai].push_back(pos_b[w.rs.dart_head(d)]);
        if (t < 2) continue;
        for (int j = 0; j < t; ++j) {
            int d1 = darts[j], d2 = darts[(j + 1) % t];
            int id = static_cast<int>(g0_edges.size());
            g0_edges.emplace_back(pos_b[w.rs.dart_head(d1)], pos_b[w.rs.dart_head(d2)]);
            before[RotationSystem::twin(d1)] = 2 * id;
            after[RotationSystem::twin(d2)] = 2 * id + 1;
        }
    }
    std::vector<std::vector<int>> rot(w.b.size());
    for (std::size_t bi = 0; bi < w.b.size(); ++bi) {
        const auto& darts = w.rs.rotation()[w.b[bi]];
        const int s = static_cast<int>(darts.size());
        for (int i = 0; i < s; ++i) {
            if (after[darts[i]] != -1) rot[bi].push_back(after[darts[i]]);
            if (before[darts[(i + 1) % s]] != -1) rot[bi].push_back(before[darts[(i + 1) % s]]);
        }
    }
    out.nations.g0 = RotationSystem(static_cast<int>(w.b.size()), std::move(g0_edges),
                                    std::move(rot));
    for (const auto& f : trace_faces(w.rs)) {
        if (f.darts.size() < 6) continue;
        std::vector<int> lake;
        for (int d : f.darts) {
            int v = w.rs.dart_tail(d);
            if (pos_b[v] != -1) lake.push_back(pos_b[v]);
        }
        out.nations.lakes.push_back(std::move(lake));
    }
    out.map = half_square(w.h, w.a);
    return out;
}

MapWitness medial_witness(const RotationSystem& rs) {
    const int n = rs.vertex_count();
    const int m = rs.edge_count();
    MapWitness w;
    w.h = Graph(n + m);
    std::vector<std::pair<int, int>> hedges;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = rs.edge_list()[e];
        w.h.add_edge(u, n + e);
        hedges.emplace_back(u, n + e);
        w.h.add_edge(v, n + e);
        hedges.emplace_back(v, n + e);
    }
    std::vector<std::vector<int>> rot(n + m);
    for (int v = 0; v < n; ++v) {
        for (int d : rs.rotation()[v]) {
            int he = 2 * (d >> 1) + (d & 1);
            rot[v].push_back(2 * he);  // tail of H-edge he is the G-vertex
        }
    }
    for (int e = 0; e < m; ++e) {
        rot[n + e] = {2 * (2 * e) + 1, 2 * (2 * e + 1) + 1};
    }
    w.rs = RotationSystem(n + m, std::move(hedges), std::move(rot));
    w.a.resize(n);
    std::iota(w.a.begin(), w.a.end(), 0);
    w.b.resize(m);
    std::iota(w.b.begin(), w.b.end(), n);
    w.d = 2;
    return w;
}

LayeredTreeDecomposition map_ltd(const MapWitness& w, LtdCertificate* cert) {
    if (auto err = validate_witness(w); !err.empty())
        throw std::invalid_argument("map_ltd: " + err);
    const int na = static_cast<int>(w.a.size());
    for (int i = 0; i < na; ++i) {
        if (w.a[i] != i)
            throw std::invalid_argument("map_ltd: witness must be normalized (A = 0..|A|-1)");
    }
    LayeredTreeDecomposition out;
    if (na == 0) return out;

    LayeredTreeDecomposition hltd = planar_ltd_any(w.rs, 0);
    out.td.tree = hltd.td.tree;
    for (const auto& bag : hltd.td.bags) {
        std::vector<int> sub;
        for (int v : bag) {
            if (v < na) {
                sub.push_back(v);
            } else {
                for (int u : w.h.neighbors(v)) sub.push_back(u);
            }
        }
        out.td.bags.push_back(sorted_unique(std::move(sub)));
    }
    for (std::size_t i = 0; i < hltd.layering.layers.size(); ++i) {
        std::vector<int> avs;
        for (int v : hltd.layering.layers[i]) {
            if (v < na) avs.push_back(v);
        }
        if (i % 2 == 1 && !avs.empty())
            throw std::logic_error("map_ltd: A-vertex at odd BFS depth");
        if (i % 2 == 0) out.layering.layers.push_back(std::move(avs));
    }
    while (!out.layering.layers.empty() && out.layering.layers.back().empty())
        out.layering.layers.pop_back();
    out.layered_width = layered_width(out.td, out.layering, na);
    if (cert) {
        cert->g = euler_genus_components(w.rs);
        cert->k = w.d;
        cert->bound = (2 * cert->g + 3) * (2 * w.d + 1);
        cert->achieved = out.layered_width;
    }
    return out;
}

// ---- Y/Z family ----------------------------------------------------------

namespace {

struct YGeometry {
    int p, q, r;
    int base_h, base_v, base_c, total;

    YGeometry(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
        int grid = (p + 1) * (q + 1);
        base_h = grid;
        base_v = base_h + p * (q + 1) * (r - 1);
        base_c = base_v + (p + 1) * q * (r - 1);
        total = base_c + p * q;
    }
    int gridv(int i, int j) const { return j * (p + 1) + i; }
    /// s-th internal vertex (1-based) on the edge (i,j)-(i+1,j)
    int hsub(int i, int j, int s) const { return base_h + (j * p + i) * (r - 1) + (s - 1); }
    int vsub(int i, int j, int s) const { return base_v + (j * (p + 1) + i) * (r - 1) + (s - 1); }
    int center(int i, int j) const { return base_c + j * p + i; }

    std::pair<long long, long long> coord(int v) const {
        if (v < base_h) {
            return {2LL * r * (v % (p + 1)), 2LL * r * (v / (p + 1))};
        }
        if (v < base_v) {
            int t = v - base_h, s = t % (r - 1) + 1, cell = t / (r - 1);
            return {2LL * r * (cell % p) + 2 * s, 2LL * r * (cell / p)};
        }
        if (v < base_c) {
            int t = v - base_v, s = t % (r - 1) + 1, cell = t / (r - 1);
            return {2LL * r * (cell % (p + 1)), 2LL * r * (cell / (p + 1)) + 2 * s};
        }
        int t = v - base_c;
        return {2LL * r * (t % p) + r, 2LL * r * (t / p) + r};
    }

    /// The 4r boundary vertices of cell (i,j), counter-clockwise from its
    /// bottom-left corner.
    std::vector<int> cell_cycle(int i, int j) const {
        std::vector<int> c;
        c.push_back(gridv(i, j));
        for (int s = 1; s < r; ++s) c.push_back(hsub(i, j, s));
        c.push_back(gridv(i + 1, j));
        for (int s = 1; s < r; ++s) c.push_back(vsub(i + 1, j, s));
        c.push_back(gridv(i + 1, j + 1));
        for (int s = r - 1; s >= 1; --s) c.push_back(hsub(i, j + 1, s));
        c.push_back(gridv(i, j + 1));
        for (int s = r - 1; s >= 1; --s) c.push_back(vsub(i, j, s));
        return c;
    }
};

/// Incidence witness over triangles (A) and structure vertices (B), with a
/// straight-line rotation from the given B coordinates.
MapWitness incidence_witness(int num_b,
                             const std::vector<std::array<int, 3>>& triangles,
                             const std::vector<std::pair<long long, long long>>& bpos) {
    const int t = static_cast<int>(triangles.size());
    MapWitness w;
    w.h = Graph(t + num_b);
    std::vector<std::pair<int, int>> hedges;
    for (int a = 0; a < t; ++a) {
        for (int c : triangles[a]) {
            w.h.add_edge(a, t + c);
            hedges.emplace_back(a, t + c);
        }
    }
    // positions scaled by 3 so triangle centroids stay integral
    std::vector<std::pair<long long, long long>> pos(t + num_b);
    for (int a = 0; a < t; ++a) {
        long long x = 0, y = 0;
        for (int c : triangles[a]) {
            x += bpos[c].first;
            y += bpos[c].second;
        }
        pos[a] = {x, y};
    }
    for (int c = 0; c < num_b; ++c) pos[t + c] = {3 * bpos[c].first, 3 * bpos[c].second};

    struct Inc {
        int dart;
        long long dx, dy;
    };
    std::vector<std::vector<Inc>> inc(t + num_b);
    for (std::size_t e = 0; e < hedges.size(); ++e) {
        auto [u, v] = hedges[e];
        long long dx = pos[v].first - pos[u].first, dy = pos[v].second - pos[u].second;
        inc[u].push_back({2 * static_cast<int>(e), dx, dy});
        inc[v].push_back({2 * static_cast<int>(e) + 1, -dx, -dy});
    }
    std::vector<std::vector<int>> rot(t + num_b);
    for (int v = 0; v < t + num_b; ++v) {
        std::sort(inc[v].begin(), inc[v].end(), [](const Inc& a, const Inc& b) {
            return angle_less(a.dx, a.dy, b.dx, b.dy);
        });
        for (const Inc& i : inc[v]) rot[v].push_back(i.dart);
    }
    w.rs = RotationSystem(t + num_b, std::move(hedges), std::move(rot));
    w.a.resize(t);
    std::iota(w.a.begin(), w.a.end(), 0);
    w.b.resize(num_b);
    std::iota(w.b.begin(), w.b.end(), t);
    w.d = 0;
    for (int v : w.b) w.d = std::max(w.d, w.h.degree(v));
    return w;
}

}  // namespace

YzInstance yz_generator(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1)
        throw std::invalid_argument("yz_generator: parameters must be >= 1");
    YGeometry geo(p, q, r);
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<long long, long long>> bpos(geo.total);
    for (int v = 0; v < geo.total; ++v) bpos[v] = geo.coord(v);

    auto tid = [&](int i, int j, int k) { return (j * p + i) * 4 * r + k; };
    for (int j = 0; j < q; ++j) {
        for (int i = 0; i < p; ++i) {
            auto cyc = geo.cell_cycle(i, j);
            int c = geo.center(i, j);
            for (int k = 0; k < 4 * r; ++k) {
                triangles.push_back({c, cyc[k], cyc[(k + 1) % (4 * r)]});
            }
        }
    }
    YzInstance out;
    out.witness = incidence_witness(geo.total, triangles, bpos);
    out.z = half_square(out.witness.h, out.witness.a);
    for (int i = 0; i < p; ++i) {
        for (int s = 0; s < r; ++s) {
            std::vector<int> col;
            for (int j = 0; j < q; ++j) {
                col.push_back(tid(i, j, s));
                col.push_back(tid(i, j, 3 * r - 1 - s));
            }
            out.columns.push_back(std::move(col));
        }
    }
    for (int j = 0; j < q; ++j) {
        for (int s = 0; s < r; ++s) {
            std::vector<int> row;
            for (int i = 0; i < p; ++i) {
                row.push_back(tid(i, j, 4 * r - 1 - s));
                row.push_back(tid(i, j, r + s));
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

// ---- expander blow-up of a 4-regular graph --------------------------------

namespace {

struct SlotUf {
    std::vector<int> parent;
    explicit SlotUf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

MapBlowup map_blowup(const Graph& h, int q, int r) {
    const int m = h.vertex_count();
    for (int v = 0; v < m; ++v) {
        if (h.degree(v) != 4)
            throw std::invalid_argument("map_blowup: H must be 4-regular");
    }
    if (q < 8) throw std::invalid_argument("map_blowup: q must be at least 8");
    if (r < 2) throw std::invalid_argument("map_blowup: r must be at least 2");

    const int w = q + 1;
    auto is_corner = [&](int i, int j) {
        return (i == 0 || i == q) && (j == 0 || j == q);
    };
    auto slot = [&](int b, int i, int j) { return (b * w + j) * w + i; };
    auto side_slot = [&](int b, int side, int t) {
        // t in [0, q-1); sides: 0 bottom, 1 right, 2 top, 3 left
        switch (side) {
            case 0: return slot(b, t + 1, 0);
            case 1: return slot(b, q, t + 1);
            case 2: return slot(b, t + 1, q);
            default: return slot(b, 0, t + 1);
        }
    };

    std::vector<std::vector<int>> nb(m);
    for (int v = 0; v < m; ++v) {
        nb[v] = h.neighbors(v);
        std::sort(nb[v].begin(), nb[v].end());
    }
    SlotUf uf(m * w * w);
    for (auto [u, v] : h.edges()) {
        int su = static_cast<int>(std::lower_bound(nb[u].begin(), nb[u].end(), v) - nb[u].begin());
        int sv = static_cast<int>(std::lower_bound(nb[v].begin(), nb[v].end(), u) - nb[v].begin());
        for (int t = 0; t + 1 < q; ++t) {
            uf.unite(side_slot(u, su, t), side_slot(v, sv, q - 2 - t));
        }
    }
    // canonical base-vertex ids
    std::vector<int> canon(m * w * w, -1);
    int nb0 = 0;
    for (int b = 0; b < m; ++b) {
        for (int j = 0; j <= q; ++j) {
            for (int i = 0; i <= q; ++i) {
                if (is_corner(i, j)) continue;
                int root = uf.find(slot(b, i, j));
                if (canon[root] == -1) canon[root] = nb0++;
                canon[slot(b, i, j)] = canon[root];
            }
        }
    }
    auto cv = [&](int b, int i, int j) { return canon[uf.find(slot(b, i, j))]; };

    // base edges, deduplicated across glued sides
    std::map<std::pair<int, int>, int> edge_id;
    auto base_edge = [&](int x, int y) {
        auto key = std::make_pair(std::min(x, y), std::max(x, y));
        auto it = edge_id.find(key);
        if (it != edge_id.end()) return it->second;
        int id = static_cast<int>(edge_id.size());
        edge_id.emplace(key, id);
        return id;
    };
    for (int b = 0; b < m; ++b) {
        for (int j = 0; j <= q; ++j) {
            for (int i = 0; i <= q; ++i) {
                if (is_corner(i, j)) continue;
                if (i < q && !is_corner(i + 1, j)) base_edge(cv(b, i, j), cv(b, i + 1, j));
                if (j < q && !is_corner(i, j + 1)) base_edge(cv(b, i, j), cv(b, i, j + 1));
            }
        }
    }
    // subdivide every base edge r-1 times
    int next_vertex = nb0;
    std::vector<std::vector<int>> chain(edge_id.size());
    std::vector<std::pair<int, int>> ends(edge_id.size());
    for (const auto& [key, id] : edge_id) {
        ends[id] = key;
        for (int s = 0; s < r - 1; ++s) chain[id].push_back(next_vertex++);
    }
    auto side_path = [&](int x, int y) {
        // vertices strictly between x and y along the subdivided edge
        int id = edge_id.at({std::min(x, y), std::max(x, y)});
        std::vector<int> path = chain[id];
        if (ends[id].first != std::min(x, y))
            throw std::logic_error("map_blowup: edge bookkeeping broken");
        if (x > y) std::reverse(path.begin(), path.end());
        return path;
    };

    // star every non-corner cell and emit its 4r nations
    std::vector<std::array<int, 3>> triangles;
    MapBlowup out;
    out.nation_blocks.resize(m);
    for (int b = 0; b < m; ++b) {
        for (int cj = 0; cj < q; ++cj) {
            for (int ci = 0; ci < q; ++ci) {
                if ((ci == 0 || ci == q - 1) && (cj == 0 || cj == q - 1)) continue;
                int c00 = cv(b, ci, cj), c10 = cv(b, ci + 1, cj);
                int c11 = cv(b, ci + 1, cj + 1), c01 = cv(b, ci, cj + 1);
                std::vector<int> cyc;
                auto extend = [&](int x, int y) {
                    cyc.push_back(x);
                    auto inner = side_path(x, y);
                    cyc.insert(cyc.end(), inner.begin(), inner.end());
                };
                extend(c00, c10);
                extend(c10, c11);
                extend(c11, c01);
                extend(c01, c00);
                int center = next_vertex++;
                ++out.cells;
                for (int k = 0; k < 4 * r; ++k) {
                    out.nation_blocks[b].push_back(static_cast<int>(triangles.size()));
                    triangles.push_back({center, cyc[k], cyc[(k + 1) % (4 * r)]});
                }
            }
        }
    }

    const int t = static_cast<int>(triangles.size());
    MapWitness wit;
    wit.h = Graph(t + next_vertex);
    std::vector<std::vector<int>> neigh(t + next_vertex);
    for (int a = 0; a < t; ++a) {
        for (int c : triangles[a]) {
            wit.h.add_edge(a, t + c);
            neigh[a].push_back(t + c);
            neigh[t + c].push_back(a);
        }
    }
    for (auto& lst : neigh) std::sort(lst.begin(), lst.end());
    wit.rs = RotationSystem::from_neighbor_lists(t + next_vertex, neigh);
    wit.a.resize(t);
    std::iota(wit.a.begin(), wit.a.end(), 0);
    wit.b.resize(next_vertex);
    std::iota(wit.b.begin(), wit.b.end(), t);
    wit.d = 0;
    for (int v : wit.b) wit.d = std::max(wit.d, wit.h.degree(v));

    out.map = half_square(wit.h, wit.a);
    out.witness = std::move(wit);
    out.small_q = q < 100;
    return out;
}

// ---- JSON ----------------------------------------------------------------

void write_witness_json(std::ostream& os, const MapWitness& w) {
    nlohmann::ordered_json j;
    j["A"] = w.a;
    j["B"] = w.b;
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : w.h.edges()) j["edges"].push_back({u, v});
    // cyclic incident edge ids per vertex
    j["rotation"] = nlohmann::ordered_json::array();
    for (const auto& darts : w.rs.rotation()) {
        std::vector<int> ids;
        for (int d : darts) ids.push_back(d >> 1);
        j["rotation"].push_back(ids);
    }
    j["d"] = w.d;
    os << j.dump(2) << '\n';
}

MapWitness read_witness_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    MapWitness w;
    w.a = j.at("A").get<std::vector<int>>();
    w.b = j.at("B").get<std::vector<int>>();
    int n = static_cast<int>(w.a.size() + w.b.size());
    w.h = Graph(n);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        w.h.add_edge(u, v);
        edges.emplace_back(u, v);
    }
    auto rot_ids = j.at("rotation").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        for (int e : rot_ids.at(v)) {
            if (e < 0 || e >= static_cast<int>(edges.size()))
                throw std::invalid_argument("witness rotation references invalid edge");
            rot[v].push_back(2 * e + (edges[e].first == v ? 0 : 1));
        }
    }
    w.rs = RotationSystem(n, std::move(edges), std::move(rot));
    w.d = j.at("d").get<int>();
    if (auto err = validate_witness(w); !err.empty())
        throw std::invalid_argument("invalid witness: " + err);
    return w;
}

}  // namespace locross
