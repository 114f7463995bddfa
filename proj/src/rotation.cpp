#include "locross/rotation.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace locross {

RotationSystem::RotationSystem(int n, std::vector<std::pair<int, int>> edges,
                               std::vector<std::vector<int>> rotation)
    : n_(n), edges_(std::move(edges)), rot_(std::move(rotation)) {
    if (static_cast<int>(rot_.size()) != n_)
        throw std::invalid_argument("rotation system: rotation size differs from n");
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("rotation system: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("rotation system: loops not supported");
    }
    std::vector<int> seen(2 * edges_.size(), 0);
    for (int v = 0; v < n_; ++v) {
        for (int d : rot_[v]) {
            if (d < 0 || d >= 2 * static_cast<int>(edges_.size()))
                throw std::invalid_argument("rotation system: dart id out of range");
            if (dart_tail(d) != v)
                throw std::invalid_argument("rotation system: dart " + std::to_string(d) +
                                            " listed at wrong vertex " + std::to_string(v));
            ++seen[d];
        }
    }
    for (std::size_t d = 0; d < seen.size(); ++d) {
        if (seen[d] != 1)
            throw std::invalid_argument("rotation system: dart " + std::to_string(d) +
                                        " appears " + std::to_string(seen[d]) + " times");
    }
    build_positions();
}

void RotationSystem::build_positions() {
    pos_.assign(2 * edges_.size(), -1);
    for (int v = 0; v < n_; ++v) {
        for (std::size_t i = 0; i < rot_[v].size(); ++i) pos_[rot_[v][i]] = static_cast<int>(i);
    }
}

RotationSystem RotationSystem::from_neighbor_lists(
    int n, const std::vector<std::vector<int>>& cyclic_neighbors) {
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        for (int w : cyclic_neighbors[v]) {
            auto key = std::minmax(v, w);
            if (!edge_id.count({key.first, key.second})) {
                edge_id[{key.first, key.second}] = static_cast<int>(edges.size());
                edges.emplace_back(key.first, key.second);
            }
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        for (int w : cyclic_neighbors[v]) {
            auto key = std::minmax(v, w);
            int e = edge_id[{key.first, key.second}];
            rot[v].push_back(edges[e].first == v ? 2 * e : 2 * e + 1);
        }
    }
    return RotationSystem(n, std::move(edges), std::move(rot));
}

int RotationSystem::face_next(int d) const {
    int t = twin(d);
    int v = dart_tail(t);
    const auto& r = rot_[v];
    return r[(pos_[t] + 1) % r.size()];
}

Graph RotationSystem::simple_graph() const {
    Graph g(n_);
    for (auto [u, v] : edges_) {
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

bool RotationSystem::connected() const { return simple_graph().connected(); }

std::vector<Face> trace_faces(const RotationSystem& rs) {
    std::vector<bool> used(2 * rs.edge_count(), false);
    std::vector<Face> faces;
    for (int d0 = 0; d0 < 2 * rs.edge_count(); ++d0) {
        if (used[d0]) continue;
        Face f;
        int d = d0;
        do {
            used[d] = true;
            f.darts.push_back(d);
            d = rs.face_next(d);
        } while (d != d0);
        faces.push_back(std::move(f));
    }
    return faces;
}

int euler_genus(const RotationSystem& rs) {
    if (!rs.connected())
        throw std::invalid_argument("euler_genus: underlying graph is disconnected");
    int f = rs.edge_count() == 0 ? 1 : static_cast<int>(trace_faces(rs).size());
    return 2 - rs.vertex_count() + rs.edge_count() - f;
}

int euler_genus_components(const RotationSystem& rs) {
    Graph sg = rs.simple_graph();
    const int n = sg.vertex_count();
    if (n == 0) return 0;
    std::vector<int> comp_of(n, -1);
    int nc = 0;
    for (int v = 0; v < n; ++v) {
        if (comp_of[v] != -1) continue;
        for (int u : sg.component_of(v)) comp_of[u] = nc;
        ++nc;
    }
    std::vector<int> nv(nc, 0), ne(nc, 0), nf(nc, 0);
    for (int v = 0; v < n; ++v) ++nv[comp_of[v]];
    for (auto [u, v] : rs.edge_list()) {
        (void)v;
        ++ne[comp_of[u]];
    }
    for (const auto& f : trace_faces(rs)) ++nf[comp_of[rs.dart_tail(f.darts[0])]];
    int g = 0;
    for (int c = 0; c < nc; ++c) {
        if (ne[c] == 0) nf[c] = 1;
        g += 2 - nv[c] + ne[c] - nf[c];
    }
    return g;
}

namespace {

// Triangulation and face-insertion work directly on the face-successor
// permutation `next` over darts; the rotation is rebuilt afterwards via
// rotation-successor(d) = next(twin(d)).
struct NextRep {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> next;

    int tail(int d) const {
        auto [u, v] = edges[d >> 1];
        return (d & 1) ? v : u;
    }

    int new_edge(int a, int b) {
        edges.emplace_back(a, b);
        next.push_back(-1);
        next.push_back(-1);
        return static_cast<int>(edges.size()) - 1;
    }

    RotationSystem to_rotation_system() const {
        std::vector<std::vector<int>> darts_at(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            darts_at[edges[e].first].push_back(2 * static_cast<int>(e));
            darts_at[edges[e].second].push_back(2 * static_cast<int>(e) + 1);
        }
        std::vector<std::vector<int>> rot(n);
        std::vector<bool> placed(next.size(), false);
        for (int v = 0; v < n; ++v) {
            for (int d0 : darts_at[v]) {
                if (placed[d0]) continue;
                int d = d0;
                do {
                    rot[v].push_back(d);
                    placed[d] = true;
                    d = next[d ^ 1];  // rotation successor
                } while (d != d0);
            }
            if (rot[v].size() != darts_at[v].size())
                throw std::logic_error("rotation rebuild: split orbit at vertex " +
                                       std::to_string(v));
        }
        return RotationSystem(n, edges, std::move(rot));
    }
};

NextRep next_rep_of(const RotationSystem& rs) {
    NextRep r;
    r.n = rs.vertex_count();
    r.edges = rs.edge_list();
    r.next.resize(2 * rs.edge_count());
    for (int d = 0; d < 2 * rs.edge_count(); ++d) r.next[d] = rs.face_next(d);
    return r;
}

bool alternating_walk(const std::vector<int>& verts) {
    if (verts.size() != 4) return false;
    return verts[0] == verts[2] && verts[1] == verts[3];
}

// Clip the ear at walk position j: add edge verts[j-1]-verts[j+1], splitting
// off the triangle (verts[j-1], verts[j], verts[j+1]).
void clip_corner(NextRep& rep, std::vector<int>& darts, std::vector<int>& verts, int j) {
    const int len = static_cast<int>(darts.size());
    auto at = [&](int i) { return ((i % len) + len) % len; };
    int d_prev2 = darts[at(j - 2)];
    int d_prev = darts[at(j - 1)];
    int d_cur = darts[at(j)];
    int d_next = darts[at(j + 1)];
    int a = verts[at(j - 1)];
    int b = verts[at(j + 1)];
    int e = rep.new_edge(a, b);
    int p = 2 * e;      // a -> b, stays on the shrinking face
    int q = 2 * e + 1;  // b -> a, closes the clipped triangle
    rep.next[d_prev2] = p;
    rep.next[p] = d_next;
    rep.next[d_cur] = q;
    rep.next[q] = d_prev;
    // walk update: darts d_prev, d_cur replaced by p; vertex verts[j] dropped
    std::vector<int> nd, nv;
    for (int i = 0; i < len; ++i) {
        if (at(i) == at(j - 1)) {
            nd.push_back(p);
            nv.push_back(verts[at(j - 1)]);
        } else if (at(i) == at(j)) {
            continue;
        } else {
            nd.push_back(darts[i]);
            nv.push_back(verts[i]);
        }
    }
    darts = std::move(nd);
    verts = std::move(nv);
}

void triangulate_face(NextRep& rep, std::vector<int> darts) {
    std::vector<int> verts;
    for (int d : darts) verts.push_back(rep.tail(d));
    bool distinct = [&] {
        auto s = verts;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    }();
    while (darts.size() > 3) {
        const int len = static_cast<int>(darts.size());
        int chosen = -1;
        if (distinct) {
            // fan from the minimum-id vertex: always clip its successor corner
            int mpos = static_cast<int>(std::min_element(verts.begin(), verts.end()) -
                                        verts.begin());
            chosen = (mpos + 1) % len;
        } else {
            int fallback = -1;
            for (int j = 0; j < len && chosen == -1; ++j) {
                int a = verts[((j - 1) % len + len) % len];
                int b = verts[(j + 1) % len];
                if (a == b) continue;
                // avoid leaving behind an untriangulatable alternating 4-walk
                std::vector<int> rem;
                for (int i = 0; i < len; ++i) {
                    if (i != j) rem.push_back(verts[i]);
                }
                if (alternating_walk(rem)) {
                    if (fallback == -1) fallback = j;
                } else {
                    chosen = j;
                }
            }
            if (chosen == -1) chosen = fallback;
            if (chosen == -1)
                throw std::runtime_error(
                    "triangulate: face boundary walk alternates between two vertices");
        }
        clip_corner(rep, darts, verts, chosen);
    }
}

}  // namespace

RotationSystem triangulate(const RotationSystem& rs) {
    if (rs.vertex_count() < 3)
        throw std::invalid_argument("triangulate: need at least 3 vertices");
    if (!rs.connected()) throw std::invalid_argument("triangulate: graph is disconnected");
    NextRep rep = next_rep_of(rs);
    for (const Face& f : trace_faces(rs)) {
        if (f.darts.size() > 3) triangulate_face(rep, f.darts);
    }
    return rep.to_rotation_system();
}

RotationSystem grid_rotation(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<std::vector<int>> nbrs(a * b);
    auto id = [a](int x, int y) { return y * a + x; };
    for (int y = 0; y < b; ++y) {
        for (int x = 0; x < a; ++x) {
            auto& r = nbrs[id(x, y)];
            if (x + 1 < a) r.push_back(id(x + 1, y));  // east
            if (y + 1 < b) r.push_back(id(x, y + 1));  // north
            if (x > 0) r.push_back(id(x - 1, y));      // west
            if (y > 0) r.push_back(id(x, y - 1));      // south
        }
    }
    return RotationSystem::from_neighbor_lists(a * b, nbrs);
}

RotationSystem torus_rotation(int a, int b) {
    if (a < 3 || b < 3)
        throw std::invalid_argument("torus_rotation requires cycle lengths >= 3");
    std::vector<std::vector<int>> nbrs(a * b);
    auto id = [a, b](int x, int y) { return ((y % b + b) % b) * a + ((x % a + a) % a); };
    for (int y = 0; y < b; ++y) {
        for (int x = 0; x < a; ++x) {
            nbrs[id(x, y)] = {id(x + 1, y), id(x, y + 1), id(x - 1, y), id(x, y - 1)};
        }
    }
    return RotationSystem::from_neighbor_lists(a * b, nbrs);
}

RotationSystem random_planar_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_planar_triangulation requires n >= 3");
    std::mt19937_64 rng(seed);
    // planar K3
    RotationSystem base = RotationSystem::from_neighbor_lists(3, {{1, 2}, {2, 0}, {0, 1}});
    NextRep rep = next_rep_of(base);
    std::vector<std::array<int, 3>> faces;
    for (const Face& f : trace_faces(base)) faces.push_back({f.darts[0], f.darts[1], f.darts[2]});
    for (int u = 3; u < n; ++u) {
        ++rep.n;
        std::size_t face_idx = rng() % faces.size();
        auto face = faces[face_idx];
        int out[3], in[3], v[3];
        for (int i = 0; i < 3; ++i) v[i] = rep.tail(face[i]);
        for (int i = 0; i < 3; ++i) {
            int e = rep.new_edge(u, v[i]);
            out[i] = 2 * e;
            in[i] = 2 * e + 1;
        }
        for (int i = 0; i < 3; ++i) {
            int ni = (i + 1) % 3;
            rep.next[face[i]] = in[ni];
            rep.next[in[ni]] = out[i];
            rep.next[out[i]] = face[i];
        }
        faces[face_idx] = {face[0], in[1], out[0]};
        faces.push_back({face[1], in[2], out[1]});
        faces.push_back({face[2], in[0], out[2]});
    }
    return rep.to_rotation_system();
}

void write_rotation(std::ostream& os, const RotationSystem& rs) {
    os << rs.vertex_count() << ' ' << rs.edge_count() << '\n';
    for (auto [u, v] : rs.edge_list()) os << u << ' ' << v << '\n';
    for (int v = 0; v < rs.vertex_count(); ++v) {
        os << v << ':';
        for (int d : rs.rotation()[v]) os << ' ' << (d >> 1);
        os << '\n';
    }
}

RotationSystem read_rotation(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::runtime_error("rotation file: missing header");
    std::vector<std::pair<int, int>> edges(m);
    for (int e = 0; e < m; ++e) {
        if (!(is >> edges[e].first >> edges[e].second))
            throw std::runtime_error("rotation file: truncated edge list");
    }
    is >> std::ws;
    std::vector<std::vector<int>> rot(n);
    std::vector<int> used(m, 0);
    for (int line = 0; line < n; ++line) {
        std::string text;
        if (!std::getline(is, text)) throw std::runtime_error("rotation file: missing rotation line");
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("rotation file: malformed line '" + text + "'");
        int v = std::stoi(text.substr(0, colon));
        if (v < 0 || v >= n) throw std::runtime_error("rotation file: bad vertex id");
        std::istringstream rest(text.substr(colon + 1));
        int e;
        while (rest >> e) {
            if (e < 0 || e >= m) throw std::runtime_error("rotation file: bad edge id");
            int d;
            if (edges[e].first == v)
                d = 2 * e;
            else if (edges[e].second == v)
                d = 2 * e + 1;
            else
                throw std::runtime_error("rotation file: edge " + std::to_string(e) +
                                         " not incident to vertex " + std::to_string(v));
            rot[v].push_back(d);
            ++used[e];
        }
    }
    return RotationSystem(n, std::move(edges), std::move(rot));
}

}  // namespace locross
