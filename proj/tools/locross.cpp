#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "locross/decomposition.hpp"
#include "locross/drawing.hpp"
#include "locross/embedder.hpp"
#include "locross/graph.hpp"
#include "locross/mapgraph.hpp"
#include "locross/rotation.hpp"
#include "locross/surface_ltw.hpp"

namespace {

using namespace locross;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 3;

struct Violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot open output file " + out);
    os << text;
}

template <typename F>
std::string capture(F&& write) {
    std::ostringstream os;
    write(os);
    return os.str();
}

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

Drawing load_drawing(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open drawing file " + path);
    return read_drawing_json(is);
}

MapWitness load_witness(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open witness file " + path);
    return read_witness_json(is);
}

RotationSystem load_rotation(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open rotation file " + path);
    return read_rotation(is);
}

std::string ltd_with_certificate(const Graph& g, const LayeredTreeDecomposition& ltd,
                                 const LtdCertificate& cert) {
    if (auto err = validate_ltd(g, ltd); !err.empty())
        throw Violation("decomposition invalid: " + err);
    auto j = nlohmann::ordered_json::parse(
        capture([&](std::ostream& os) { write_decomposition_json(os, ltd); }));
    j["certificate"] = {{"g", cert.g},
                        {"k", cert.k},
                        {"bound", cert.bound},
                        {"achieved_layered_width", cert.achieved}};
    if (cert.achieved > cert.bound)
        throw Violation("layered width " + std::to_string(cert.achieved) +
                        " exceeds the bound " + std::to_string(cert.bound));
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layered decompositions of graphs with locally restricted crossings"};
    app.require_subcommand(1);

    std::string out, graph_path, drawing_path, witness_path, rotation_path, ltd_path,
        decomposition_path;
    std::uint64_t seed = 0;
    int root = 0, cap = 12, genus = 1;
    std::string eps = "1/2";

    // ---- gen -------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    int p = 2, q = 2, r = 2, nn = 4, kk = 4;

    auto* g_grid = gen->add_subcommand("grid3", "p x q x r grid edge list");
    g_grid->add_option("p", p)->required();
    g_grid->add_option("q", q)->required();
    g_grid->add_option("r", r)->required();

    auto* g_proj = gen->add_subcommand("projection-drawing", "projected grid drawing JSON");
    g_proj->add_option("p", p)->required();
    g_proj->add_option("q", q)->required();
    g_proj->add_option("r", r)->required();

    auto* g_zig = gen->add_subcommand("zigzag", "king graph with K_n branch sets");
    g_zig->add_option("n", nn)->required();

    auto* g_yz = gen->add_subcommand("yz", "Y/Z map witness JSON");
    g_yz->add_option("p", p)->required();
    g_yz->add_option("q", q)->required();
    g_yz->add_option("r", r)->required();

    auto* g_bgk = gen->add_subcommand("blowup-gk", "grid blow-up of a 4-regular graph");
    g_bgk->add_option("--graph", graph_path)->required();
    g_bgk->add_option("q", q)->required();
    g_bgk->add_option("r", r)->required();

    auto* g_bmap = gen->add_subcommand("blowup-map", "map blow-up of a 4-regular graph");
    g_bmap->add_option("--graph", graph_path)->required();
    g_bmap->add_option("q", q)->required();
    g_bmap->add_option("r", r)->required();

    auto* g_reg = gen->add_subcommand("regular", "random k-regular graph");
    g_reg->add_option("k", kk)->required();
    g_reg->add_option("n", nn)->required();

    // ---- decompose -------------------------------------------------------
    auto* dec = app.add_subcommand("decompose", "decomposition pipelines");
    dec->require_subcommand(1);
    auto* d_planar = dec->add_subcommand("planar-ltd", "surface decomposition of a rotation");
    d_planar->add_option("--rotation", rotation_path)->required();
    auto* d_gk = dec->add_subcommand("gk-ltd", "(g,k)-planar pipeline on a drawing");
    d_gk->add_option("--drawing", drawing_path)->required();
    auto* d_map = dec->add_subcommand("map-ltd", "map-graph pipeline on a witness");
    d_map->add_option("--witness", witness_path)->required();
    auto* d_flat = dec->add_subcommand("flatten", "layered -> plain tree decomposition");
    d_flat->add_option("--graph", graph_path)->required();
    d_flat->add_option("--ltd", ltd_path)->required();
    auto* d_pw = dec->add_subcommand("pathwidth", "balanced-separator path decomposition");
    d_pw->add_option("--graph", graph_path)->required();

    // ---- validate / separator / oracle ------------------------------------
    auto* val = app.add_subcommand("validate", "check a decomposition against a graph");
    val->add_option("--graph", graph_path)->required();
    val->add_option("--decomposition", decomposition_path)->required();
    val->add_flag("--layered", "expect the layered format");

    auto* sep = app.add_subcommand("separator", "brute-force minimum eps-separator");
    sep->add_option("--graph", graph_path)->required();

    auto* ora = app.add_subcommand("oracle", "exact brute-force oracles");
    ora->require_subcommand(1);
    auto* o_tw = ora->add_subcommand("tw", "exact treewidth");
    o_tw->add_option("--graph", graph_path)->required();
    auto* o_pw = ora->add_subcommand("pw", "exact pathwidth");
    o_pw->add_option("--graph", graph_path)->required();
    auto* o_sep = ora->add_subcommand("sep", "minimum eps-separator size");
    o_sep->add_option("--graph", graph_path)->required();

    auto* emb = app.add_subcommand("embed", "host construction and crossing report");
    emb->add_option("--graph", graph_path)->required();

    auto* rep = app.add_subcommand("report", "bound-vs-measured experiment suite");

    for (auto* cmd : {g_grid, g_proj, g_zig, g_yz, g_bgk, g_bmap, g_reg, d_planar, d_gk,
                      d_map, d_flat, d_pw, val, sep, o_tw, o_pw, o_sep, emb, rep}) {
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--root", root, "bfs root vertex");
        cmd->add_option("--cap", cap, "oracle size cap");
        cmd->add_option("--genus", genus, "genus budget");
        cmd->add_option("--eps", eps, "separator balance as a rational a/b");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (g_grid->parsed()) {
            emit(out, capture([&](std::ostream& os) { write_edge_list(os, grid3(p, q, r)); }));
        } else if (g_proj->parsed()) {
            emit(out, capture([&](std::ostream& os) {
                     write_drawing_json(os, grid_projection_drawing(p, q, r));
                 }));
        } else if (g_zig->parsed()) {
            auto [g, sets] = zigzag_branch_sets(nn);
            nlohmann::ordered_json j;
            j["graph"]["n"] = g.vertex_count();
            j["graph"]["edges"] = nlohmann::ordered_json::array();
            for (auto [u, v] : g.edges()) j["graph"]["edges"].push_back({u, v});
            j["branch_sets"] = sets.sets;
            emit(out, j.dump(2) + "\n");
        } else if (g_yz->parsed()) {
            auto yz = yz_generator(p, q, r);
            emit(out,
                 capture([&](std::ostream& os) { write_witness_json(os, yz.witness); }));
        } else if (g_bgk->parsed()) {
            auto bu = expander_blowup_gk(load_graph(graph_path), q, r);
            emit(out, capture([&](std::ostream& os) { write_edge_list(os, bu.graph); }));
        } else if (g_bmap->parsed()) {
            auto bu = map_blowup(load_graph(graph_path), q, r);
            if (bu.small_q)
                std::cerr << "warning: q below the asymptotic analysis threshold (100)\n";
            emit(out,
                 capture([&](std::ostream& os) { write_witness_json(os, bu.witness); }));
        } else if (g_reg->parsed()) {
            emit(out, capture([&](std::ostream& os) {
                     write_edge_list(os, random_regular(kk, nn, seed));
                 }));
        } else if (d_planar->parsed()) {
            RotationSystem rs = load_rotation(rotation_path);
            Graph g = rs.simple_graph();
            auto [ltd, trace] = planar_ltd(rs, root);
            LtdCertificate cert{trace.genus, 0, 2 * trace.genus + 3, ltd.layered_width};
            emit(out, ltd_with_certificate(g, ltd, cert));
        } else if (d_gk->parsed()) {
            Drawing d = load_drawing(drawing_path);
            LtdCertificate cert;
            LayeredTreeDecomposition ltd = gk_planar_ltd(d, root, &cert);
            emit(out, ltd_with_certificate(d.base, ltd, cert));
        } else if (d_map->parsed()) {
            MapWitness w = load_witness(witness_path);
            LtdCertificate cert;
            LayeredTreeDecomposition ltd = map_ltd(w, &cert);
            emit(out, ltd_with_certificate(half_square(w.h, w.a), ltd, cert));
        } else if (d_flat->parsed()) {
            Graph g = load_graph(graph_path);
            std::ifstream is(ltd_path);
            if (!is) throw std::invalid_argument("cannot open ltd file " + ltd_path);
            LayeredTreeDecomposition ltd = read_layered_decomposition_json(is);
            TreeDecomposition td = flatten_layered(g, ltd);
            if (auto err = validate_td(g, td); !err.empty())
                throw Violation("flattened decomposition invalid: " + err);
            emit(out, capture([&](std::ostream& os) { write_decomposition_json(os, td); }));
        } else if (d_pw->parsed()) {
            Graph g = load_graph(graph_path);
            PathDecomposition pd =
                pathwidth_decomposition(g, planar_sqrt_td_provider(), 2.0 * std::sqrt(3.0));
            if (auto err = validate_td(g, pd.as_tree()); !err.empty())
                throw Violation("path decomposition invalid: " + err);
            emit(out, capture([&](std::ostream& os) {
                     write_decomposition_json(os, pd.as_tree());
                 }));
        } else if (val->parsed()) {
            Graph g = load_graph(graph_path);
            std::ifstream is(decomposition_path);
            if (!is)
                throw std::invalid_argument("cannot open decomposition file " +
                                            decomposition_path);
            std::string err;
            if (val->count("--layered")) {
                err = validate_ltd(g, read_layered_decomposition_json(is));
            } else {
                err = validate_td(g, read_decomposition_json(is));
            }
            if (!err.empty()) throw Violation(err);
            emit(out, "ok\n");
        } else if (sep->parsed() || o_sep->parsed()) {
            Graph g = load_graph(graph_path);
            auto s = min_separator_bruteforce(g, Rational::parse(eps), cap);
            nlohmann::ordered_json j;
            j["size"] = s.size();
            j["separator"] = s;
            emit(out, j.dump(2) + "\n");
        } else if (o_tw->parsed()) {
            emit(out, std::to_string(exact_treewidth(load_graph(graph_path), cap)) + "\n");
        } else if (o_pw->parsed()) {
            emit(out, std::to_string(exact_pathwidth(load_graph(graph_path), cap)) + "\n");
        } else if (emb->parsed()) {
            Graph g = load_graph(graph_path);
            int qq = choose_q(genus);
            Graph quotient(qq);
            if (qq >= 7) {
                quotient = random_regular(6, qq, seed);
            } else {
                for (int i = 0; i + 1 < qq; ++i) quotient.add_edge(i, i + 1);
            }
            HostMapping hm = build_host(g, quotient, seed);
            if (auto err = validate_host_mapping(g, hm); !err.empty())
                throw Violation("host mapping invalid: " + err);
            SurfaceReport sr = crossing_report(hm);
            if (sr.genus > genus)
                throw Violation("host genus " + std::to_string(sr.genus) +
                                " exceeds the budget " + std::to_string(genus));
            emit(out, capture([&](std::ostream& os) {
                     write_report_json(os, hm, sr, genus);
                 }));
        } else if (rep->parsed()) {
            nlohmann::ordered_json suite = nlohmann::ordered_json::array();
            auto run_case = [&](const std::string& name, int bound, int achieved,
                               bool valid, double ms) {
                suite.push_back({{"instance", name},
                                 {"bound", bound},
                                 {"achieved", achieved},
                                 {"valid", valid},
                                 {"runtime_ms", ms}});
                if (!valid || achieved > bound)
                    throw Violation("experiment " + name + " violated its bound");
            };
            using clock = std::chrono::steady_clock;
            for (auto [pp, qq, rr] : {std::tuple{3, 3, 2}, {4, 4, 3}, {5, 5, 2}}) {
                auto t0 = clock::now();
                Drawing d = grid_projection_drawing(pp, qq, rr);
                LtdCertificate cert;
                LayeredTreeDecomposition ltd = gk_planar_ltd(d, 0, &cert);
                bool valid = validate_ltd(d.base, ltd).empty();
                double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                run_case("projection(" + std::to_string(pp) + "," + std::to_string(qq) + "," +
                             std::to_string(rr) + ") bound 6(k+1)",
                         cert.bound, cert.achieved, valid, ms);
            }
            for (auto [pp, qq, rr] : {std::tuple{2, 2, 2}, {3, 2, 1}}) {
                auto t0 = clock::now();
                auto yz = yz_generator(pp, qq, rr);
                LtdCertificate cert;
                LayeredTreeDecomposition ltd = map_ltd(yz.witness, &cert);
                bool valid = validate_ltd(yz.z, ltd).empty();
                double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                run_case("yz(" + std::to_string(pp) + "," + std::to_string(qq) + "," +
                             std::to_string(rr) + ") bound (2g+3)(2d+1)",
                         cert.bound, cert.achieved, valid, ms);
            }
            emit(out, suite.dump(2) + "\n");
        }
    } catch (const Violation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
