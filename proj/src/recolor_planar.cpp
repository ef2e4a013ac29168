#include "recolor/recolor_planar.hpp"

#include <algorithm>
#include <sstream>

namespace recolor {

int strategy_budget(Strategy s) {
    switch (s) {
        case Strategy::g1: return 190;
        case Strategy::g2: return 13;
        case Strategy::gcal: return 242;
        case Strategy::no4: return 29;
    }
    return 0;
}

int strategy_list_floor(Strategy s) {
    switch (s) {
        case Strategy::g1: return 10;
        case Strategy::g2: return 9;
        case Strategy::gcal: return 7;
        case Strategy::no4: return 8;
    }
    return 0;
}

std::string BudgetCertificate::to_text() const {
    std::ostringstream os;
    os << "strategy " << strategy << "\n";
    os << "budget " << budget << "\n";
    os << "max_count " << max_count << "\n";
    os << "total_steps " << total_steps << "\n";
    for (size_t v = 0; v < counts.size(); ++v)
        if (counts[v] > 0) os << "count " << v << " " << counts[v] << "\n";
    for (const auto& w : warnings) os << "warning " << w << "\n";
    return os.str();
}

namespace {

/// Vertices of the witness to delete, in the re-add order of the matching
/// proof case (first listed is re-added first).
std::vector<Vertex> readd_order(const PlaneGraph& cur, const Configuration& cfg) {
    switch (cfg.kind) {
        case ConfigKind::LowDegree:
            return {cfg.role("v")};
        case ConfigKind::DiamondH:
            // both mid-edge cases re-add v1, v3, then the remaining pair
            return {cfg.role("v1"), cfg.role("v3"), cfg.role("v2"), cfg.role("v4")};
        case ConfigKind::H1:
            return {cfg.role("v"), cfg.role("u")};
        case ConfigKind::H2:
            return {cfg.role("v"), cfg.role("w"), cfg.role("u")};
        case ConfigKind::H3:
            return {cfg.role("w"), cfg.role("v"), cfg.role("x"), cfg.role("u")};
        case ConfigKind::H4:
            return {cfg.role("v"), cfg.role("u")};
        case ConfigKind::H5:
        case ConfigKind::H6: {
            std::vector<Vertex> order{cfg.role("v1")};
            for (const auto& p : cfg.paths)
                for (size_t i = 1; i < p.vertices.size(); ++i) order.push_back(p.vertices[i]);
            return order;
        }
        case ConfigKind::Shen: {
            // the proof's f = a corner 3-face with both wings of degree 4,
            // v4 = a degree-4 vertex of the other corner face
            Vertex v = cfg.role("v");
            Vertex A[2] = {cfg.role("a"), cfg.role("b")};
            Vertex B[2] = {cfg.role("c"), cfg.role("d")};
            auto deg4 = [&](Vertex x) { return cur.degree(x) == 4; };
            Vertex f2, f3, v4;
            if (deg4(A[0]) && deg4(A[1])) {
                f2 = A[0];
                f3 = A[1];
                v4 = deg4(B[0]) ? B[0] : B[1];
            } else {
                f2 = B[0];
                f3 = B[1];
                v4 = deg4(A[0]) ? A[0] : A[1];
            }
            return {f2, f3, v4, v};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

RecolorResult recolor(const PlaneGraph& g, const ListAssignment& L, const Coloring& alpha,
                      const Coloring& beta, Strategy s) {
    BudgetCertificate cert;
    cert.strategy = strategy_name(s);
    cert.budget = strategy_budget(s);

    const int floor = strategy_list_floor(s);
    for (Vertex v = 0; v < g.universe(); ++v)
        if (g.present(v) && L.size(v) < floor)
            throw std::invalid_argument("list floor violated at vertex " + std::to_string(v));
    Graph abs = g.as_graph();
    if (auto bad = validate(abs, g.present_set(), L, alpha))
        throw std::invalid_argument("alpha invalid: " + bad->describe());
    if (auto bad = validate(abs, g.present_set(), L, beta))
        throw std::invalid_argument("beta invalid: " + bad->describe());

    ClassReport cls = g.classify();
    bool in_class = false;
    switch (s) {
        case Strategy::g1: in_class = cls.in_g1; break;
        case Strategy::g2: in_class = cls.in_g2; break;
        case Strategy::gcal: in_class = cls.in_gcal; break;
        case Strategy::no4: in_class = !cls.has_4cycle; break;
    }
    if (!in_class)
        cert.warnings.push_back("instance outside the strategy's class; certifying actual counts only");

    // Peel phase: groups of deleted vertices in re-add order.
    std::vector<std::vector<Vertex>> groups;
    VertexSet present = g.present_set();
    PlaneGraph cur = g;
    while (present.count > 1) {
        auto cfg = find_reduction(cur, s);
        if (!cfg) throw StructureNotFound(cur.to_rotation_text());
        if (cfg->kind == ConfigKind::H5) *cfg = minimize_h5(cur, *cfg);
        if (cfg->kind == ConfigKind::H6) *cfg = minimize_h6(cur, *cfg);
        auto order = readd_order(cur, *cfg);
        for (Vertex v : order) present.erase(v);
        groups.push_back(std::move(order));
        cur = cur.restrict_unchecked(present);
    }

    // Base: one vertex.
    RecolorSequence seq;
    {
        Vertex v0 = present.members().front();
        seq.alpha.assign(g.universe(), -1);
        seq.beta.assign(g.universe(), -1);
        seq.alpha[v0] = alpha[v0];
        seq.beta[v0] = beta[v0];
        if (alpha[v0] != beta[v0]) seq.steps.push_back({v0, alpha[v0], beta[v0]});
    }

    // Unwind: re-add groups in reverse, each group front to back.
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        for (Vertex v : *it) {
            present.insert(v);
            seq = extend_vertex(abs, present, L, v, seq, alpha[v], beta[v]);
        }
    }

    cert.counts = seq.counts(g.universe());
    cert.max_count = seq.max_count(g.universe());
    cert.total_steps = static_cast<long long>(seq.steps.size());
    return {std::move(seq), std::move(cert)};
}

RecolorResult recolor_degenerate(const Graph& g, const ListAssignment& L, const Coloring& alpha,
                                 const Coloring& beta, int d) {
    BudgetCertificate cert;
    cert.strategy = "degenerate";
    cert.budget = d + 1;

    VertexSet present(g.size(), true);
    for (Vertex v = 0; v < g.size(); ++v)
        if (L.size(v) < 2 * d + 2)
            throw std::invalid_argument("degenerate strategy needs |L(v)| >= 2d+2");
    if (auto bad = validate(g, present, L, alpha))
        throw std::invalid_argument("alpha invalid: " + bad->describe());
    if (auto bad = validate(g, present, L, beta))
        throw std::invalid_argument("beta invalid: " + bad->describe());

    std::vector<Vertex> peel;
    while (present.count > 1) {
        Vertex best = -1;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (!present.contains(v)) continue;
            int dv = present_degree(g, present, v);
            if (dv <= d && (best < 0 || dv < present_degree(g, present, best))) best = v;
        }
        if (best < 0) throw std::invalid_argument("graph is not " + std::to_string(d) + "-degenerate");
        peel.push_back(best);
        present.erase(best);
    }

    RecolorSequence seq;
    {
        Vertex v0 = present.members().front();
        seq.alpha.assign(g.size(), -1);
        seq.beta.assign(g.size(), -1);
        seq.alpha[v0] = alpha[v0];
        seq.beta[v0] = beta[v0];
        if (alpha[v0] != beta[v0]) seq.steps.push_back({v0, alpha[v0], beta[v0]});
    }
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        present.insert(*it);
        seq = extend_vertex(g, present, L, *it, seq, alpha[*it], beta[*it]);
    }

    cert.counts = seq.counts(g.size());
    cert.max_count = seq.max_count(g.size());
    cert.total_steps = static_cast<long long>(seq.steps.size());
    return {std::move(seq), std::move(cert)};
}

}  // namespace recolor
