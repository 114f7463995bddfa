#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "locross/graph.hpp"

namespace locross {

/// Bipartite load-balancing structure: left vertices carry a degree
/// sequence, right sums are balanced within 1, labels are positive and
/// there are at most n+q-1 edges.
struct LabeledBipartite {
    int n = 0, q = 0;
    struct Edge {
        int left = 0, right = 0;
        long long label = 0;
    };
    std::vector<Edge> edges;
};

/// Greedy balancing: walk the degree sequence against
/// preassigned right targets floor/ceil(sum/q), emitting one edge per step
/// labeled with the largest amount both sides still accept.
LabeledBipartite load_balance(const std::vector<long long>& d, int q);

/// G embedded in a host H = images of V(G) + a copy of Q, with exactly
/// n+q-1 connecting edges so that cyclomatic(H) = cyclomatic(Q) + q - 1.
/// Every G-edge is assigned a connecting edge at each endpoint and routed
/// through the Q-copy with congestion-aware shortest paths.
struct HostMapping {
    Graph host;      // ids: 0..n-1 images of G, n..n+q-1 the Q-copy
    Graph quotient;  // Q
    int n_g = 0, q = 0;
    LabeledBipartite bip;
    /// all host edges between an image and the Q-copy, as (left, right
    /// local id); the first bip.edges.size() of them carry the labels
    std::vector<std::pair<int, int>> connectors;
    /// per G-edge: connector index used at min endpoint, at max endpoint
    std::vector<std::pair<int, int>> assignment;
    /// per G-edge: host vertex path from min endpoint to max endpoint
    std::vector<std::vector<int>> routes;
};

/// Empty string if all HostMapping invariants hold against g, else a
/// description. Includes the exact cyclomatic accounting.
std::string validate_host_mapping(const Graph& g, const HostMapping& hm);

HostMapping build_host(const Graph& g, const Graph& q_graph, std::uint64_t seed);

/// Largest q with c_struct * q <= g under the concrete accounting
/// cyclomatic(H) = cyclomatic(Q) + q - 1 (6-regular Q gives c_struct = 3);
/// at least 1.
int choose_q(int g, const Rational& c_struct = Rational(3, 1));

struct SurfaceReport {
    int genus = 0;                       // cyclomatic_number(host)
    std::vector<long long> edge_bounds;  // B(e) per G-edge
    long long max_crossings = 0;
    long long max_congestion = 0;  // max paths through one Q-vertex
    int max_route_len = 0;
};

/// Crossing upper bounds: B(e) sums (load - 1) over the route's interior
/// Q-vertices.
SurfaceReport crossing_report(const HostMapping& hm);

// ---- report JSON ---------------------------------------------------------

void write_report_json(std::ostream& os, const HostMapping& hm, const SurfaceReport& r,
                       int requested_genus);

}  // namespace locross
