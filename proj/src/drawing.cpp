#include "locross/drawing.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace locross {

namespace {

using i128 = __int128;

i128 cross2(i128 ax, i128 ay, i128 bx, i128 by) { return ax * by - ay * bx; }

i128 orient(const Point& a, const Point& b, const Point& c) {
    return cross2(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

bool in_box(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

struct Frac {
    i128 num = 0;
    i128 den = 1;  // > 0
};

bool frac_less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
bool frac_eq(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }

int sign(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

/// Angular order around the origin, counter-clockwise from the positive
/// x-axis. Vectors must be nonzero and pairwise non-parallel at one vertex.
bool angle_less(long long ax, long long ay, long long bx, long long by) {
    auto half = [](long long x, long long y) { return (y < 0 || (y == 0 && x < 0)) ? 1 : 0; };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return cross2(ax, ay, bx, by) > 0;
}

}  // namespace

std::string validate_drawing(const Drawing& d) {
    const int n = d.base.vertex_count();
    const int m = d.base.edge_count();
    if (static_cast<int>(d.routes.size()) != m) return "route count differs from edge count";
    if (d.skeleton.vertex_count() != n + static_cast<int>(d.crossings.size()))
        return "skeleton vertex count differs from base + crossings";

    std::vector<int> crossing_index(d.skeleton.vertex_count(), -1);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        int v = d.crossings[i].vertex;
        if (v < n || v >= d.skeleton.vertex_count())
            return "crossing vertex id out of range";
        if (crossing_index[v] != -1) return "duplicate crossing vertex";
        crossing_index[v] = static_cast<int>(i);
        if (d.crossings[i].edges[0] >= d.crossings[i].edges[1])
            return "crossing edge pair not ascending";
        for (int e : d.crossings[i].edges) {
            if (e < 0 || e >= m) return "crossing references invalid edge";
        }
    }
    Graph skel = d.skeleton.simple_graph();
    for (const auto& c : d.crossings) {
        if (skel.degree(c.vertex) != 4)
            return "crossing vertex " + std::to_string(c.vertex) + " not degree 4";
    }
    // routes: endpoints, interiors, skeleton adjacency, edge coverage
    std::map<std::pair<int, int>, int> seg_budget;
    for (auto [u, v] : d.skeleton.edge_list()) {
        ++seg_budget[{std::min(u, v), std::max(u, v)}];
    }
    std::vector<std::vector<int>> routes_of_crossing(d.crossings.size());
    int segments = 0;
    for (int e = 0; e < m; ++e) {
        const auto& r = d.routes[e];
        auto [u, v] = d.base.edges()[e];
        if (r.size() < 2 || r.front() != u || r.back() != v)
            return "route of edge " + std::to_string(e) + " has wrong endpoints";
        for (std::size_t i = 1; i + 1 < r.size(); ++i) {
            int x = r[i];
            if (x < n || crossing_index[x] == -1)
                return "route interior of edge " + std::to_string(e) + " not a crossing";
            routes_of_crossing[crossing_index[x]].push_back(e);
        }
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            auto key = std::make_pair(std::min(r[i], r[i + 1]), std::max(r[i], r[i + 1]));
            auto it = seg_budget.find(key);
            if (it == seg_budget.end() || it->second == 0)
                return "route of edge " + std::to_string(e) + " uses a missing skeleton edge";
            --it->second;
            ++segments;
        }
    }
    if (segments != d.skeleton.edge_count())
        return "skeleton has edges not used by any route";
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        auto lst = routes_of_crossing[i];
        std::sort(lst.begin(), lst.end());
        if (lst != std::vector<int>{d.crossings[i].edges[0], d.crossings[i].edges[1]})
            return "crossing " + std::to_string(d.crossings[i].vertex) +
                   " routes disagree with its tagged edges";
    }
    return {};
}

PlanarizeResult planarize(const Drawing& d) {
    if (auto err = validate_drawing(d); !err.empty())
        throw std::invalid_argument("planarize: invalid drawing: " + err);
    PlanarizeResult out;
    out.skeleton = d.skeleton.simple_graph();
    for (const auto& c : d.crossings) {
        CrossingInfo info;
        info.vertex = c.vertex;
        info.edges = c.edges;
        for (int i = 0; i < 2; ++i) info.tails[i] = d.base.edges()[c.edges[i]].first;
        out.crossings.push_back(info);
    }
    return out;
}

int local_crossing_number_of_drawing(const Drawing& d) {
    std::size_t best = 2;
    for (const auto& r : d.routes) best = std::max(best, r.size());
    return static_cast<int>(best) - 2;
}

Drawing straight_line_crossings(const std::vector<Point>& points, const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (static_cast<int>(points.size()) != n)
        throw std::invalid_argument("straight_line_crossings: point count differs from n");
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (points[a].x == points[b].x && points[a].y == points[b].y)
                throw std::invalid_argument("degenerate: vertices " + std::to_string(a) +
                                            " and " + std::to_string(b) + " coincide");
        }
    }
    // no vertex interior to an edge
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            if (orient(points[u], points[v], points[w]) == 0 &&
                in_box(points[u], points[v], points[w]))
                throw std::invalid_argument("degenerate: vertex " + std::to_string(w) +
                                            " lies on edge " + std::to_string(e));
        }
    }

    struct Hit {
        Frac t;     // parameter along this edge from its min endpoint
        int cid;    // crossing id
    };
    std::vector<std::vector<Hit>> hits(m);
    std::vector<std::array<int, 2>> crossing_edges;
    for (int e = 0; e < m; ++e) {
        auto [p1i, p2i] = g.edges()[e];
        const Point &p1 = points[p1i], &p2 = points[p2i];
        for (int f = e + 1; f < m; ++f) {
            auto [q1i, q2i] = g.edges()[f];
            const Point &q1 = points[q1i], &q2 = points[q2i];
            if (p1i == q1i || p1i == q2i || p2i == q1i || p2i == q2i) {
                // shared endpoint: overlapping collinear edges are degenerate
                int s = (p1i == q1i || p1i == q2i) ? p1i : p2i;
                int a = (s == p1i) ? p2i : p1i;
                int b = (s == q1i) ? q2i : q1i;
                if (orient(points[s], points[a], points[b]) == 0) {
                    i128 dot = i128(points[a].x - points[s].x) * (points[b].x - points[s].x) +
                               i128(points[a].y - points[s].y) * (points[b].y - points[s].y);
                    if (dot > 0)
                        throw std::invalid_argument("degenerate: edges " + std::to_string(e) +
                                                    " and " + std::to_string(f) + " overlap");
                }
                continue;
            }
            i128 o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
            i128 o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
            if (sign(o1) * sign(o2) >= 0 || sign(o3) * sign(o4) >= 0) continue;
            // proper crossing; parameters via the standard line intersection
            i128 denom = cross2(p2.x - p1.x, p2.y - p1.y, q2.x - q1.x, q2.y - q1.y);
            i128 tnum = cross2(q1.x - p1.x, q1.y - p1.y, q2.x - q1.x, q2.y - q1.y);
            i128 snum = cross2(q1.x - p1.x, q1.y - p1.y, p2.x - p1.x, p2.y - p1.y);
            if (denom < 0) {
                denom = -denom;
                tnum = -tnum;
                snum = -snum;
            }
            int cid = static_cast<int>(crossing_edges.size());
            crossing_edges.push_back({e, f});
            hits[e].push_back({Frac{tnum, denom}, cid});
            hits[f].push_back({Frac{snum, denom}, cid});
        }
    }
    for (int e = 0; e < m; ++e) {
        std::sort(hits[e].begin(), hits[e].end(),
                  [](const Hit& a, const Hit& b) { return frac_less(a.t, b.t); });
        for (std::size_t i = 0; i + 1 < hits[e].size(); ++i) {
            if (frac_eq(hits[e][i].t, hits[e][i + 1].t))
                throw std::invalid_argument("degenerate: concurrent crossings on edge " +
                                            std::to_string(e));
        }
    }

    Drawing d;
    d.base = g;
    d.routes.resize(m);
    const int nc = static_cast<int>(crossing_edges.size());
    for (int c = 0; c < nc; ++c) {
        d.crossings.push_back({n + c, crossing_edges[c]});
    }
    // skeleton: split every edge at its crossings in parameter order
    std::vector<std::pair<int, int>> skel_edges;
    struct Inc {
        int dart;
        long long dx, dy;
    };
    std::vector<std::vector<Inc>> inc(n + nc);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        long long dx = points[v].x - points[u].x;
        long long dy = points[v].y - points[u].y;
        std::vector<int>& route = d.routes[e];
        route.push_back(u);
        for (const Hit& h : hits[e]) route.push_back(n + h.cid);
        route.push_back(v);
        for (std::size_t i = 0; i + 1 < route.size(); ++i) {
            int a = route[i], b = route[i + 1];
            int id = static_cast<int>(skel_edges.size());
            skel_edges.emplace_back(a, b);
            inc[a].push_back({2 * id, dx, dy});
            inc[b].push_back({2 * id + 1, -dx, -dy});
        }
    }
    std::vector<std::vector<int>> rot(n + nc);
    for (int v = 0; v < n + nc; ++v) {
        std::sort(inc[v].begin(), inc[v].end(), [](const Inc& a, const Inc& b) {
            return angle_less(a.dx, a.dy, b.dx, b.dy);
        });
        for (const Inc& i : inc[v]) rot[v].push_back(i.dart);
    }
    d.skeleton = RotationSystem(n + nc, std::move(skel_edges), std::move(rot));
    return d;
}

Drawing grid_projection_drawing(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1)
        throw std::invalid_argument("grid_projection_drawing: dimensions must be >= 1");
    Graph g = grid3(p, q, r);
    // projection (x, y, z) -> (x + z/a, y + z/b), scaled by a*b to integers
    for (long long a = r + 1;; ++a) {
        long long b = a + 1;
        std::vector<Point> pts(g.vertex_count());
        for (int z = 0; z < r; ++z) {
            for (int y = 0; y < q; ++y) {
                for (int x = 0; x < p; ++x) {
                    pts[grid3_id(p, q, r, x, y, z)] = {a * b * x + b * z, a * b * y + a * z};
                }
            }
        }
        try {
            return straight_line_crossings(pts, g);
        } catch (const std::invalid_argument&) {
            if (a > r + 8) throw;  // give up after a few perturbations
        }
    }
}

// ---- JSON ----------------------------------------------------------------

void write_drawing_json(std::ostream& os, const Drawing& d) {
    nlohmann::ordered_json j;
    j["base"]["n"] = d.base.vertex_count();
    j["base"]["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : d.base.edges()) j["base"]["edges"].push_back({u, v});
    j["skeleton"]["n"] = d.skeleton.vertex_count();
    j["skeleton"]["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : d.skeleton.edge_list()) j["skeleton"]["edges"].push_back({u, v});
    j["skeleton"]["rotation"] = d.skeleton.rotation();
    j["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings)
        j["crossings"].push_back({{"vertex", c.vertex}, {"edges", c.edges}});
    j["routes"] = d.routes;
    os << j.dump(2) << '\n';
}

Drawing read_drawing_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    Drawing d;
    d.base = Graph(j.at("base").at("n").get<int>());
    for (const auto& e : j.at("base").at("edges"))
        d.base.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::pair<int, int>> skel_edges;
    for (const auto& e : j.at("skeleton").at("edges"))
        skel_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    d.skeleton = RotationSystem(
        j.at("skeleton").at("n").get<int>(), std::move(skel_edges),
        j.at("skeleton").at("rotation").get<std::vector<std::vector<int>>>());
    for (const auto& c : j.at("crossings")) {
        Crossing cr;
        cr.vertex = c.at("vertex").get<int>();
        cr.edges = {c.at("edges").at(0).get<int>(), c.at("edges").at(1).get<int>()};
        d.crossings.push_back(cr);
    }
    d.routes = j.at("routes").get<std::vector<std::vector<int>>>();
    return d;
}

}  // namespace locross
