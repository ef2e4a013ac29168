// Command-line front end: classify plane graphs, audit discharging plans,
// locate reducible configurations, build recoloring sequences with budget
// certificates, run the brute-force oracle, and emit generator instances.
//
// Exit codes: 0 success, 2 precondition failure, 3 structure not found,
// 4 parse error, 5 output failed re-validation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "recolor/bounded_independence.hpp"
#include "recolor/charge_audit.hpp"
#include "recolor/config_finder.hpp"
#include "recolor/instances.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/recolor_planar.hpp"

using namespace recolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitStructureNotFound = 3;
constexpr int kExitParse = 4;
constexpr int kExitInvalidOutput = 5;

PlaneGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file " + path);
    return parse_rotation(in);
}

ListAssignment load_lists(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open list file " + path);
    return parse_lists(in, n);
}

Coloring load_coloring(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coloring file " + path);
    return parse_coloring(in, n);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string class_report_text(const ClassReport& r) {
    std::ostringstream os;
    os << "min_degree: " << r.min_degree << "\n";
    os << "in_G1: " << (r.in_g1 ? "true" : "false") << "\n";
    os << "in_G2: " << (r.in_g2 ? "true" : "false") << "\n";
    os << "in_G3: " << (r.in_g3 ? "true" : "false") << "\n";
    os << "in_Gcal: " << (r.in_gcal ? "true" : "false") << "\n";
    os << "has_4cycle: " << (r.has_4cycle ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph recoloring engine"};
    app.require_subcommand(1);

    std::string graph_file, lists_file, from_file, to_file, out_file = "out";
    std::string strategy = "gcal", family = "random-planar";
    long long cap = kDefaultOracleCap;
    uint64_t seed = 0;
    int n = 12, p = 2, k = 2, ell = 0, d = 3;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "rotation file");
        cmd->add_option("--lists", lists_file, "list assignment file");
        cmd->add_option("--from", from_file, "start coloring file");
        cmd->add_option("--to", to_file, "target coloring file");
        cmd->add_option("--out", out_file, "output path prefix");
        cmd->add_option("--strategy", strategy, "g1|g2|gcal|no4|degenerate|bounded");
        cmd->add_option("--seed", seed, "generator seed");
        cmd->add_option("--cap", cap, "oracle state cap");
        cmd->add_option("--p", p, "independence bound");
        cmd->add_option("--k", k, "colorability bound");
        cmd->add_option("--ell", ell, "number of colors");
        cmd->add_option("--d", d, "degeneracy bound");
        cmd->add_option("--n", n, "instance size");
        cmd->add_option("--family", family, "generator family");
    };
    for (const char* name : {"classify", "audit", "stats", "find-config", "recolor",
                             "oracle", "frozen", "gen"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);
    auto* cmd = app.get_subcommands().front();
    const std::string sub = cmd->get_name();

    try {
        if (sub == "classify") {
            auto g = load_graph(graph_file);
            std::cout << class_report_text(g.classify());
            return kExitOk;
        }
        if (sub == "audit") {
            auto g = load_graph(graph_file);
            auto rep = run_discharge(g, plan_for_strategy(strategy_from_name(strategy)));
            std::cout << rep.to_text();
            return kExitOk;
        }
        if (sub == "stats") {
            auto g = load_graph(graph_file);
            auto led = balanced_charges(g);
            auto st = diamond_stats(g);
            std::cout << "total_sixths: " << led.total() << "\n";
            for (Vertex v = 0; v < g.universe(); ++v) {
                if (!g.present(v)) continue;
                std::cout << "vertex " << v << " charge_sixths " << led.vertex_sixths[v]
                          << " w_t " << st.w_t[v] << " w_d " << st.w_d[v] << "\n";
            }
            for (const auto& f : g.faces())
                std::cout << "face " << f.id << " length " << f.length() << " charge_sixths "
                          << led.face_sixths[f.id] << "\n";
            return kExitOk;
        }
        if (sub == "find-config") {
            auto g = load_graph(graph_file);
            auto c = find_reduction(g, strategy_from_name(strategy));
            if (!c) {
                std::cout << "NotFound\n";
                return kExitStructureNotFound;
            }
            std::cout << c->to_text() << "\n";
            return kExitOk;
        }
        if (sub == "recolor") {
            auto g = load_graph(graph_file);
            auto L = load_lists(lists_file, g.universe());
            auto alpha = load_coloring(from_file, g.universe());
            auto beta = load_coloring(to_file, g.universe());
            RecolorResult res;
            Graph a = g.as_graph();
            if (strategy == "degenerate") {
                res = recolor_degenerate(a, L, alpha, beta, d);
            } else if (strategy == "bounded") {
                int colors = ell > 0 ? ell : (p * k) / 2 + 1;
                auto seq = recolor_bounded(a, p, k, colors, alpha, beta);
                res.seq = std::move(seq);
                res.cert.strategy = "bounded";
                res.cert.budget = 4;
                res.cert.counts = res.seq.counts(a.size());
                res.cert.max_count = res.seq.max_count(a.size());
                res.cert.total_steps = static_cast<long long>(res.seq.steps.size());
            } else {
                res = recolor::recolor(g, L, alpha, beta, strategy_from_name(strategy));
            }
            if (validate_sequence(a, g.present_set(), L, res.seq)) {
                std::cerr << "internal error: output sequence failed re-validation\n";
                return kExitInvalidOutput;
            }
            write_file(out_file + ".seq", emit_sequence(res.seq));
            write_file(out_file + ".cert", res.cert.to_text());
            std::cout << "steps: " << res.seq.steps.size()
                      << "\nmax_count: " << res.cert.max_count
                      << "\nbudget: " << res.cert.budget << "\n";
            return kExitOk;
        }
        if (sub == "oracle") {
            auto g = load_graph(graph_file);
            auto L = load_lists(lists_file, g.universe());
            Graph a = g.as_graph();
            if (!from_file.empty() && !to_file.empty()) {
                auto alpha = load_coloring(from_file, g.universe());
                auto beta = load_coloring(to_file, g.universe());
                auto dist = oracle_distance(a, L, alpha, beta, cap);
                std::cout << "distance: " << (dist ? std::to_string(*dist) : "inf") << "\n";
                return kExitOk;
            }
            auto st = build_recoloring_graph(a, L, cap);
            std::cout << st.to_text();
            return kExitOk;
        }
        if (sub == "frozen") {
            auto w = frozen_family(p, k);
            std::ostringstream os;
            os << "abstract " << w.graph.size() << "\n";
            for (Vertex v = 0; v < w.graph.size(); ++v) {
                os << v << ":";
                for (Vertex u : w.graph.adj[v]) os << " " << u;
                os << "\n";
            }
            write_file(out_file + ".graph", os.str());
            write_file(out_file + ".col", emit_coloring(w.coloring));
            std::cout << "vertices: " << w.graph.size() << "\ncolors: " << w.num_colors
                      << "\nfrozen: " << (w.frozen ? "true" : "false")
                      << "\nindependence: " << w.independence
                      << "\nk_colorable: " << (w.k_colorable ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (sub == "gen") {
            FamilySpec spec{family, n, seed, p, k};
            auto g = generate(spec);
            write_file(out_file + ".rot", emit_rotation(g));
            std::cout << "vertices: " << g.num_vertices() << "\nedges: " << g.num_edges()
                      << "\nfaces: " << g.faces().size() << "\n";
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const StructureNotFound& e) {
        std::cerr << "structure not found; falsifying subinstance follows\n" << e.snapshot;
        return kExitStructureNotFound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const CapExceeded& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
