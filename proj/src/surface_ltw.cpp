#include "locross/surface_ltw.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace locross {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::pair<LayeredTreeDecomposition, SurfaceDecompositionTrace> planar_ltd(
    const RotationSystem& rs, int r) {
    Graph g = rs.simple_graph();
    const int n = g.vertex_count();
    if (r < 0 || r >= n) throw std::invalid_argument("planar_ltd: root out of range");
    if (!rs.connected()) throw std::invalid_argument("planar_ltd: graph must be connected");

    LayeredTreeDecomposition ltd;
    SurfaceDecompositionTrace trace;
    trace.bfs_root = r;
    ltd.layering = bfs_layering(g, r);

    std::vector<int> parent = bfs_tree(g, r);
    trace.vertical_paths.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> path;
        for (int u = v; u != -1; u = parent[u]) path.push_back(u);
        std::sort(path.begin(), path.end());
        trace.vertical_paths[v] = std::move(path);
    }

    if (n < 3) {
        ltd.td.tree = Graph(1);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        ltd.td.bags.push_back(std::move(all));
        ltd.layered_width = layered_width(ltd.td, ltd.layering, n);
        return {std::move(ltd), std::move(trace)};
    }

    RotationSystem tri = triangulate(rs);
    trace.genus = euler_genus(tri);
    std::vector<Face> faces = trace_faces(tri);
    const int nf = static_cast<int>(faces.size());
    std::vector<int> face_of(2 * tri.edge_count(), -1);
    for (int f = 0; f < nf; ++f) {
        for (int d : faces[f].darts) face_of[d] = f;
    }

    // mark one triangulation edge instance per BFS-tree edge
    std::vector<char> is_tree(tri.edge_count(), 0);
    {
        std::vector<std::pair<int, int>> tree_pairs;
        for (int v = 0; v < n; ++v) {
            if (parent[v] != -1)
                tree_pairs.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
        }
        std::sort(tree_pairs.begin(), tree_pairs.end());
        std::vector<char> taken(tree_pairs.size(), 0);
        for (int e = 0; e < tri.edge_count(); ++e) {
            auto [u, v] = tri.edge_list()[e];
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            auto it = std::lower_bound(tree_pairs.begin(), tree_pairs.end(), key);
            while (it != tree_pairs.end() && *it == key) {
                std::size_t idx = it - tree_pairs.begin();
                if (!taken[idx]) {
                    taken[idx] = 1;
                    is_tree[e] = 1;
                    break;
                }
                ++it;
            }
        }
    }

    // dual graph over faces, one edge per non-tree triangulation edge
    for (int e = 0; e < tri.edge_count(); ++e) {
        if (is_tree[e]) continue;
        trace.dual_edges.emplace_back(face_of[2 * e], face_of[2 * e + 1]);
        trace.dual_edge_primal.push_back(e);
    }
    const int nd = static_cast<int>(trace.dual_edges.size());
    trace.in_dual_tree.assign(nd, 0);

    std::vector<std::vector<std::pair<int, int>>> dual_adj(nf);  // (face, dual edge idx)
    for (int i = 0; i < nd; ++i) {
        auto [a, b] = trace.dual_edges[i];
        dual_adj[a].emplace_back(b, i);
        if (a != b) dual_adj[b].emplace_back(a, i);
    }
    int f0 = face_of[tri.rotation()[r][0]];
    std::vector<char> seen(nf, 0);
    seen[f0] = 1;
    std::queue<int> bfsq;
    bfsq.push(f0);
    std::vector<std::pair<int, int>> dual_tree_edges;
    while (!bfsq.empty()) {
        int f = bfsq.front();
        bfsq.pop();
        for (auto [h, i] : dual_adj[f]) {
            if (!seen[h]) {
                seen[h] = 1;
                trace.in_dual_tree[i] = 1;
                dual_tree_edges.emplace_back(f, h);
                bfsq.push(h);
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), char(1)) != nf)
        throw std::logic_error("planar_ltd: dual graph is disconnected");
    for (int i = 0; i < nd; ++i) {
        if (!trace.in_dual_tree[i]) trace.leftover.push_back(i);
    }
    if (static_cast<int>(trace.leftover.size()) != trace.genus)
        throw std::logic_error("planar_ltd: leftover dual edges do not match genus");

    std::vector<int> base;
    for (int i : trace.leftover) {
        auto [u, v] = tri.edge_list()[trace.dual_edge_primal[i]];
        base.insert(base.end(), trace.vertical_paths[u].begin(), trace.vertical_paths[u].end());
        base.insert(base.end(), trace.vertical_paths[v].begin(), trace.vertical_paths[v].end());
    }
    base = sorted_unique(std::move(base));

    ltd.td.tree = Graph(nf);
    for (auto [a, b] : dual_tree_edges) ltd.td.tree.add_edge(a, b);
    ltd.td.bags.resize(nf);
    for (int f = 0; f < nf; ++f) {
        std::vector<int> bag = base;
        for (int d : faces[f].darts) {
            int v = tri.dart_tail(d);
            bag.insert(bag.end(), trace.vertical_paths[v].begin(),
                       trace.vertical_paths[v].end());
        }
        ltd.td.bags[f] = sorted_unique(std::move(bag));
    }
    ltd.layered_width = layered_width(ltd.td, ltd.layering, n);
    return {std::move(ltd), std::move(trace)};
}

LayeredTreeDecomposition planar_ltd_any(const RotationSystem& rs, int r) {
    Graph g = rs.simple_graph();
    const int n = g.vertex_count();
    if (n == 0) return {};

    // component extraction
    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (comp_of[v] != -1) continue;
        auto verts = g.component_of(v);
        for (int u : verts) comp_of[u] = static_cast<int>(comps.size());
        comps.push_back(std::move(verts));
    }
    // process the root's component first so node 0 semantics stay simple
    if (comp_of[r] != 0) std::swap(comps[0], comps[comp_of[r]]);

    LayeredTreeDecomposition out;
    int node_base = -1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& verts = comps[c];
        std::vector<int> local_of(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> local_edges;
        std::vector<int> edge_map(rs.edge_count(), -1);
        for (int e = 0; e < rs.edge_count(); ++e) {
            auto [u, v] = rs.edge_list()[e];
            if (local_of[u] == -1 || local_of[v] == -1) continue;
            edge_map[e] = static_cast<int>(local_edges.size());
            local_edges.emplace_back(local_of[u], local_of[v]);
        }
        std::vector<std::vector<int>> local_rot(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (int d : rs.rotation()[verts[i]]) {
                int le = edge_map[d >> 1];
                local_rot[i].push_back(2 * le + (d & 1));
            }
        }
        RotationSystem sub(static_cast<int>(verts.size()), std::move(local_edges),
                           std::move(local_rot));
        int local_root = (c == 0) ? local_of[r] : 0;
        auto [ltd, trace] = planar_ltd(sub, local_root);
        (void)trace;

        // merge layering by depth
        for (std::size_t i = 0; i < ltd.layering.layers.size(); ++i) {
            if (out.layering.layers.size() <= i) out.layering.layers.emplace_back();
            for (int v : ltd.layering.layers[i]) out.layering.layers[i].push_back(verts[v]);
        }
        // splice the decomposition tree, bridged by an empty bag
        int per = ltd.td.tree.vertex_count();
        int offset;
        if (node_base == -1) {
            out.td.tree = Graph(per);
            offset = 0;
        } else {
            Graph bigger(out.td.tree.vertex_count() + 1 + per);
            for (auto [x, y] : out.td.tree.edges()) bigger.add_edge(x, y);
            int bridge = out.td.tree.vertex_count();
            bigger.add_edge(node_base, bridge);
            bigger.add_edge(bridge, bridge + 1);
            out.td.tree = std::move(bigger);
            out.td.bags.emplace_back();  // bridge bag
            offset = bridge + 1;
            for (auto [x, y] : ltd.td.tree.edges())
                out.td.tree.add_edge(offset + x, offset + y);
        }
        if (node_base == -1) {
            for (auto [x, y] : ltd.td.tree.edges()) out.td.tree.add_edge(x, y);
        }
        for (auto& bag : ltd.td.bags) {
            for (int& v : bag) v = verts[v];
            std::sort(bag.begin(), bag.end());
            out.td.bags.push_back(std::move(bag));
        }
        node_base = offset;
    }
    for (auto& layer : out.layering.layers) std::sort(layer.begin(), layer.end());
    out.layered_width = layered_width(out.td, out.layering, n);
    return out;
}

LayeredTreeDecomposition gk_planar_ltd(const Drawing& d, int root, LtdCertificate* cert) {
    PlanarizeResult pr = planarize(d);  // validates the drawing
    const int n = d.base.vertex_count();
    const int k = local_crossing_number_of_drawing(d);

    // genus of the skeleton embedding, summed over components
    const int g = euler_genus_components(d.skeleton);

    if (root < 0 || root >= std::max(1, n))
        throw std::invalid_argument("gk_planar_ltd: root out of range");
    LayeredTreeDecomposition skel_ltd = planar_ltd_any(d.skeleton, root);

    std::vector<std::array<int, 2>> tails_of(d.skeleton.vertex_count(), {-1, -1});
    for (const auto& c : pr.crossings) tails_of[c.vertex] = c.tails;

    LayeredTreeDecomposition out;
    out.td.tree = skel_ltd.td.tree;
    out.td.bags.reserve(skel_ltd.td.bags.size());
    for (const auto& bag : skel_ltd.td.bags) {
        std::vector<int> sub;
        for (int v : bag) {
            if (v < n) {
                sub.push_back(v);
            } else {
                sub.push_back(tails_of[v][0]);
                sub.push_back(tails_of[v][1]);
            }
        }
        out.td.bags.push_back(sorted_unique(std::move(sub)));
    }
    // regroup skeleton layers in blocks of k+1, keeping base vertices only
    const int block = k + 1;
    for (std::size_t i = 0; i < skel_ltd.layering.layers.size(); ++i) {
        std::size_t gi = i / block;
        if (out.layering.layers.size() <= gi) out.layering.layers.emplace_back();
        for (int v : skel_ltd.layering.layers[i]) {
            if (v < n) out.layering.layers[gi].push_back(v);
        }
    }
    while (!out.layering.layers.empty() && out.layering.layers.back().empty())
        out.layering.layers.pop_back();
    for (auto& layer : out.layering.layers) std::sort(layer.begin(), layer.end());
    out.layered_width = layered_width(out.td, out.layering, n);
    if (cert) {
        cert->g = g;
        cert->k = k;
        cert->bound = (g == 0 ? 6 : 4 * g + 6) * (k + 1);
        cert->achieved = out.layered_width;
    }
    return out;
}

namespace {

RotationSystem planar_embedding_of(const Graph& g) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
    const int n = g.vertex_count();
    BGraph bg(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        boost::add_edge(u, v, e, bg);
    }
    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(),
                                              boost::get(boost::vertex_index, bg)));
    if (!planar)
        throw std::invalid_argument("planar_embedding_of: graph is not planar");
    auto index = boost::get(boost::edge_index, bg);
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        for (const EdgeDesc& e : emb[v]) {
            int id = index[e];
            rot[v].push_back(2 * id + (g.edges()[id].first == v ? 0 : 1));
        }
    }
    return RotationSystem(n, g.edges(), std::move(rot));
}

}  // namespace

TdProvider planar_sqrt_td_provider() {
    return [](const Graph& g) -> TreeDecomposition {
        if (g.vertex_count() == 0) return {};
        RotationSystem rs = planar_embedding_of(g);
        LayeredTreeDecomposition ltd = planar_ltd_any(rs, 0);
        return flatten_layered(g, ltd);
    };
}

}  // namespace locross
