#include "locross/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace locross {

LabeledBipartite load_balance(const std::vector<long long>& d, int q) {
    if (q < 1) throw std::invalid_argument("load_balance: q must be >= 1");
    for (long long x : d) {
        if (x < 1) throw std::invalid_argument("load_balance: degrees must be positive");
    }
    const int n = static_cast<int>(d.size());
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    std::vector<long long> target(q, sum / q);
    for (int j = 0; j < sum % q; ++j) ++target[j];

    LabeledBipartite out;
    out.n = n;
    out.q = q;
    int i = 0, j = 0;
    long long rl = n > 0 ? d[0] : 0, rt = target.empty() ? 0 : target[0];
    while (i < n) {
        while (rt == 0 && j + 1 < q) rt = target[++j];
        long long label = std::min(rl, rt);
        out.edges.push_back({i, j, label});
        rl -= label;
        rt -= label;
        if (rl == 0 && ++i < n) rl = d[i];
    }
    return out;
}

namespace {

struct Router {
    const Graph& q_graph;
    double tau;
    std::vector<long long> load;  // paths through each Q-vertex

    double cost(int w) const {
        return std::exp2(std::min(60.0, static_cast<double>(load[w]) / tau));
    }

    std::vector<int> route(int s, int t) const {
        const int q = q_graph.vertex_count();
        std::vector<double> dist(q, std::numeric_limits<double>::infinity());
        std::vector<int> prev(q, -1);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[s] = cost(s);
        pq.push({dist[s], s});
        while (!pq.empty()) {
            auto [dv, v] = pq.top();
            pq.pop();
            if (dv > dist[v]) continue;
            if (v == t) break;
            for (int w : q_graph.neighbors(v)) {
                double nd = dv + cost(w);
                if (nd < dist[w]) {
                    dist[w] = nd;
                    prev[w] = v;
                    pq.push({nd, w});
                }
            }
        }
        std::vector<int> path;
        for (int v = t; v != -1; v = prev[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        if (path.front() != s) throw std::logic_error("Router: no path in Q");
        return path;
    }
};

std::vector<int> q_segment(const std::vector<int>& host_route, int n) {
    std::vector<int> seg;
    for (std::size_t i = 1; i + 1 < host_route.size(); ++i) seg.push_back(host_route[i] - n);
    return seg;
}

}  // namespace

HostMapping build_host(const Graph& g, const Graph& q_graph, std::uint64_t seed) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int q = q_graph.vertex_count();
    if (q == 0) throw std::invalid_argument("build_host: Q is empty");
    if (!q_graph.connected()) throw std::invalid_argument("build_host: Q must be connected");
    for (int v = 0; v < q; ++v) {
        if (q_graph.degree(v) > 8)
            throw std::invalid_argument("build_host: Q degree cap (8) exceeded");
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            throw std::invalid_argument("build_host: G has an isolated vertex");
    }

    HostMapping hm;
    hm.quotient = q_graph;
    hm.n_g = n;
    hm.q = q;
    std::vector<long long> d(n);
    for (int v = 0; v < n; ++v) d[v] = g.degree(v);
    hm.bip = load_balance(d, q);

    std::set<std::pair<int, int>> present;
    for (const auto& e : hm.bip.edges) {
        hm.connectors.emplace_back(e.left, e.right);
        present.insert({e.left, e.right});
    }
    // pad to exactly n+q-1 connectors so the cyclomatic accounting is exact
    for (int i = 0; i < n && static_cast<int>(hm.connectors.size()) < n + q - 1; ++i) {
        for (int j = 0; j < q && static_cast<int>(hm.connectors.size()) < n + q - 1; ++j) {
            if (present.insert({i, j}).second) hm.connectors.emplace_back(i, j);
        }
    }
    if (static_cast<int>(hm.connectors.size()) != n + q - 1)
        throw std::logic_error("build_host: connector padding failed");

    hm.host = Graph(n + q);
    for (auto [u, v] : q_graph.edges()) hm.host.add_edge(n + u, n + v);
    for (auto [i, j] : hm.connectors) hm.host.add_edge(i, n + j);

    // hand each G-edge endpoint a labeled connector, label counts exactly
    std::vector<std::vector<std::pair<int, long long>>> slots(n);  // (connector, capacity)
    for (std::size_t c = 0; c < hm.bip.edges.size(); ++c) {
        const auto& e = hm.bip.edges[c];
        slots[e.left].emplace_back(static_cast<int>(c), e.label);
    }
    std::vector<std::size_t> cursor(n, 0);
    auto take = [&](int v) {
        auto& cur = cursor[v];
        while (cur < slots[v].size() && slots[v][cur].second == 0) ++cur;
        if (cur >= slots[v].size())
            throw std::logic_error("build_host: assignment ran out of labels");
        --slots[v][cur].second;
        return slots[v][cur].first;
    };
    hm.assignment.resize(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        hm.assignment[e] = {take(u), take(v)};
    }

    Router router{q_graph, std::max(1.0, static_cast<double>(m) / (4.0 * q)), {}};
    router.load.assign(q, 0);
    hm.routes.resize(m);
    auto do_route = [&](int e) {
        auto [u, v] = g.edges()[e];
        int ju = hm.connectors[hm.assignment[e].first].second;
        int jv = hm.connectors[hm.assignment[e].second].second;
        std::vector<int> seg = router.route(ju, jv);
        for (int w : seg) ++router.load[w];
        std::vector<int> host_route;
        host_route.push_back(u);
        for (int w : seg) host_route.push_back(n + w);
        host_route.push_back(v);
        hm.routes[e] = std::move(host_route);
    };
    for (int e = 0; e < m; ++e) do_route(e);

    std::mt19937_64 rng(seed);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (int sweep = 0; sweep < 3; ++sweep) {
        for (int i = m - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % (i + 1));
            std::swap(order[i], order[j]);
        }
        for (int e : order) {
            for (int w : q_segment(hm.routes[e], n)) --router.load[w];
            do_route(e);
        }
    }
    return hm;
}

std::string validate_host_mapping(const Graph& g, const HostMapping& hm) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int q = hm.q;
    if (hm.n_g != n) return "image count differs from |V(G)|";
    if (hm.host.vertex_count() != n + q) return "host vertex count wrong";
    if (hm.quotient.vertex_count() != q) return "quotient size disagrees with q";

    int connector_count = 0;
    for (auto [a, b] : hm.host.edges()) {
        bool qa = a >= n, qb = b >= n;
        if (qa && qb) {
            if (!hm.quotient.has_edge(a - n, b - n))
                return "Q-copy has an edge not in Q";
        } else if (qa != qb) {
            ++connector_count;
        } else {
            return "two images are adjacent in the host";
        }
    }
    if (connector_count != n + q - 1)
        return "connector count is not n+q-1";
    if (static_cast<int>(hm.connectors.size()) != connector_count)
        return "connector list disagrees with the host's connecting edges";
    if (hm.host.edge_count() - connector_count != hm.quotient.edge_count())
        return "Q-copy misses edges of Q";
    if (!hm.host.connected()) return "host disconnected";
    if (cyclomatic_number(hm.host) != cyclomatic_number(hm.quotient) + q - 1)
        return "cyclomatic accounting violated";

    for (std::size_t c = 0; c < hm.connectors.size(); ++c) {
        auto [i, j] = hm.connectors[c];
        if (!hm.host.has_edge(i, n + j)) return "connector missing from host";
        if (c < hm.bip.edges.size() &&
            (hm.bip.edges[c].left != i || hm.bip.edges[c].right != j))
            return "labeled connectors disagree with the bipartite structure";
    }
    // left sums, right balance
    std::vector<long long> left(n, 0), right(q, 0);
    for (const auto& e : hm.bip.edges) {
        if (e.label <= 0) return "non-positive label";
        left[e.left] += e.label;
        right[e.right] += e.label;
    }
    for (int v = 0; v < n; ++v) {
        if (left[v] != g.degree(v)) return "left sums differ from the degree sequence";
    }
    auto [mn, mx] = std::minmax_element(right.begin(), right.end());
    if (q > 0 && *mx - *mn > 1) return "right sums differ by more than 1";

    if (static_cast<int>(hm.routes.size()) != m || static_cast<int>(hm.assignment.size()) != m)
        return "route/assignment count differs from |E(G)|";
    std::vector<long long> used(hm.connectors.size(), 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        const auto& rt = hm.routes[e];
        if (rt.size() < 3 || rt.front() != u || rt.back() != v)
            return "route " + std::to_string(e) + " has wrong endpoints";
        for (std::size_t i = 1; i + 1 < rt.size(); ++i) {
            if (rt[i] < n) return "route " + std::to_string(e) + " passes through an image";
        }
        for (std::size_t i = 0; i + 1 < rt.size(); ++i) {
            if (!hm.host.has_edge(rt[i], rt[i + 1]))
                return "route " + std::to_string(e) + " uses a missing host edge";
        }
        auto [cu, cv] = hm.assignment[e];
        if (hm.connectors[cu].first != u || hm.connectors[cv].first != v)
            return "assignment of edge " + std::to_string(e) + " at wrong vertices";
        if (rt[1] != n + hm.connectors[cu].second ||
            rt[rt.size() - 2] != n + hm.connectors[cv].second)
            return "route " + std::to_string(e) + " ignores its assigned connectors";
        ++used[cu];
        ++used[cv];
    }
    for (std::size_t c = 0; c < hm.connectors.size(); ++c) {
        long long want = c < hm.bip.edges.size() ? hm.bip.edges[c].label : 0;
        if (used[c] != want)
            return "connector " + std::to_string(c) + " usage differs from its label";
    }
    return {};
}

int choose_q(int g, const Rational& c_struct) {
    if (g < 1) throw std::invalid_argument("choose_q: genus budget must be >= 1");
    // largest q with c_struct * q <= g
    long long q = (static_cast<long long>(g) * c_struct.den) / c_struct.num;
    return static_cast<int>(std::max(1LL, q));
}

SurfaceReport crossing_report(const HostMapping& hm) {
    SurfaceReport r;
    r.genus = cyclomatic_number(hm.host);
    std::vector<long long> load(hm.q, 0);
    for (const auto& rt : hm.routes) {
        for (int w : q_segment(rt, hm.n_g)) ++load[w];
    }
    r.max_congestion = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
    for (const auto& rt : hm.routes) {
        long long b = 0;
        for (int w : q_segment(rt, hm.n_g)) b += load[w] - 1;
        r.edge_bounds.push_back(b);
        r.max_crossings = std::max(r.max_crossings, b);
        r.max_route_len = std::max(r.max_route_len, static_cast<int>(rt.size()) - 1);
    }
    return r;
}

void write_report_json(std::ostream& os, const HostMapping& hm, const SurfaceReport& r,
                       int requested_genus) {
    nlohmann::ordered_json j;
    j["q"] = hm.q;
    j["requested_genus"] = requested_genus;
    j["genus"] = r.genus;
    j["max_route_len"] = r.max_route_len;
    j["max_congestion"] = r.max_congestion;
    j["max_crossings_per_edge"] = r.max_crossings;
    double log2q = hm.q > 1 ? std::ceil(std::log2(static_cast<double>(hm.q))) : 0.0;
    j["bound_m_log2q_sq_over_q"] =
        static_cast<double>(hm.routes.size()) * log2q * log2q / hm.q;
    os << j.dump(2) << '\n';
}

}  // namespace locross
