#include "recolor/config_finder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace recolor {

Strategy strategy_from_name(const std::string& name) {
    if (name == "g1") return Strategy::g1;
    if (name == "g2") return Strategy::g2;
    if (name == "gcal") return Strategy::gcal;
    if (name == "no4") return Strategy::no4;
    throw std::invalid_argument("unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::g1: return "g1";
        case Strategy::g2: return "g2";
        case Strategy::gcal: return "gcal";
        case Strategy::no4: return "no4";
    }
    return "?";
}

std::string config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::LowDegree: return "LowDegree";
        case ConfigKind::DiamondH: return "DiamondH";
        case ConfigKind::H1: return "H1";
        case ConfigKind::H2: return "H2";
        case ConfigKind::H3: return "H3";
        case ConfigKind::H4: return "H4";
        case ConfigKind::H5: return "H5";
        case ConfigKind::H6: return "H6";
        case ConfigKind::Shen: return "Shen";
    }
    return "?";
}

Vertex Configuration::role(const std::string& name) const {
    for (const auto& rv : vertices)
        if (rv.role == name) return rv.v;
    throw std::invalid_argument("configuration has no role " + name);
}

std::vector<Vertex> Configuration::vertex_set() const {
    std::set<Vertex> s;
    for (const auto& rv : vertices) s.insert(rv.v);
    for (const auto& p : paths)
        for (Vertex v : p.vertices) s.insert(v);
    return {s.begin(), s.end()};
}

std::string Configuration::to_text() const {
    std::ostringstream os;
    os << config_kind_name(kind);
    if (kind == ConfigKind::LowDegree) os << "(" << threshold << ")";
    os << ";";
    for (const auto& rv : vertices) os << " " << rv.role << "=" << rv.v << ";";
    for (size_t i = 0; i < paths.size(); ++i) {
        os << " P" << i + 1 << "=";
        for (size_t j = 0; j < paths[i].vertices.size(); ++j)
            os << (j ? "-" : "") << paths[i].vertices[j];
        if (paths[i].removed) os << "(removed " << *paths[i].removed << ")";
        os << ";";
    }
    return os.str();
}

namespace {

std::vector<Vertex> present_vertices(const PlaneGraph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.universe(); ++v)
        if (g.present(v)) out.push_back(v);
    return out;
}

std::optional<Configuration> low_degree(const PlaneGraph& g, int floor) {
    Vertex best = -1;
    for (Vertex v : present_vertices(g))
        if (g.degree(v) <= floor && (best < 0 || g.degree(v) < g.degree(best)))
            best = v;
    if (best < 0) return std::nullopt;
    Configuration c;
    c.kind = ConfigKind::LowDegree;
    c.threshold = floor;
    c.vertices = {{"v", best}};
    return c;
}

/// Mid-edge test: both sides of (u,v) are distinct 3-faces sharing exactly
/// this one edge. Returns the wing vertices on success.
std::optional<std::pair<Vertex, Vertex>> diamond_wings(const PlaneGraph& g, Vertex u, Vertex v) {
    int f1 = g.left_face_of(u, v), f2 = g.left_face_of(v, u);
    if (f1 == f2) return std::nullopt;
    const Face& a = g.face(f1);
    const Face& b = g.face(f2);
    if (a.length() != 3 || b.length() != 3) return std::nullopt;
    auto third = [&](const Face& f) {
        for (Vertex x : f.walk)
            if (x != u && x != v) return x;
        return Vertex{-1};
    };
    Vertex wa = third(a), wb = third(b);
    if (wa < 0 || wb < 0 || wa == wb) return std::nullopt;  // same vertex set: shares >1 edge
    return std::make_pair(wa, wb);
}

std::optional<Configuration> find_diamond_h(const PlaneGraph& g) {
    for (Vertex u : present_vertices(g)) {
        for (Vertex v : g.rotation(u)) {
            if (v < u) continue;
            auto wings = diamond_wings(g, u, v);
            if (!wings) continue;
            Vertex quad[4] = {u, v, wings->first, wings->second};
            int fives = 0, other = -1;
            for (Vertex x : quad)
                if (g.degree(x) == 5) ++fives; else other = x;
            if (fives == 4) other = -1;
            else if (fives != 3 || g.degree(other) > 6) continue;
            Vertex v1 = other >= 0 ? other : std::min({quad[0], quad[1], quad[2], quad[3]});
            bool v1_on_mid = (v1 == u || v1 == v);
            Configuration c;
            c.kind = ConfigKind::DiamondH;
            if (v1_on_mid) {
                Vertex v3 = (v1 == u) ? v : u;
                Vertex v2 = std::min(wings->first, wings->second);
                Vertex v4 = std::max(wings->first, wings->second);
                c.vertices = {{"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4},
                              {"mid_a", v1}, {"mid_b", v3}};
            } else {
                Vertex v3 = (v1 == wings->first) ? wings->second : wings->first;
                c.vertices = {{"v1", v1}, {"v2", std::min(u, v)}, {"v3", v3},
                              {"v4", std::max(u, v)}, {"mid_a", u}, {"mid_b", v}};
            }
            return c;
        }
    }
    return std::nullopt;
}

std::optional<Configuration> find_h1(const PlaneGraph& g) {
    for (Vertex u : present_vertices(g)) {
        if (g.degree(u) != 4) continue;
        for (Vertex v : g.rotation(u))
            if (v > u && g.degree(v) == 4) {
                Configuration c;
                c.kind = ConfigKind::H1;
                c.vertices = {{"u", u}, {"v", v}};
                return c;
            }
    }
    return std::nullopt;
}

std::vector<std::array<Vertex, 3>> triangles_with_degrees(const PlaneGraph& g, int d0, int d1, int d2) {
    // All 3-cliques whose sorted degree multiset equals {d0,d1,d2}; ascending id tuples.
    std::vector<std::array<Vertex, 3>> out;
    Graph a = g.as_graph();
    std::multiset<int> want{d0, d1, d2};
    for (Vertex u : present_vertices(g))
        for (Vertex v : a.adj[u]) {
            if (v < u) continue;
            for (Vertex w : a.adj[v]) {
                if (w < v || !a.has_edge(u, w)) continue;
                std::multiset<int> got{g.degree(u), g.degree(v), g.degree(w)};
                if (got == want) out.push_back({u, v, w});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Configuration> find_h2(const PlaneGraph& g) {
    auto tris = triangles_with_degrees(g, 4, 5, 5);
    if (tris.empty()) return std::nullopt;
    auto& t = tris.front();
    Vertex four = -1;
    std::vector<Vertex> fives;
    for (Vertex x : t) {
        if (g.degree(x) == 4) four = x;
        else fives.push_back(x);
    }
    Configuration c;
    c.kind = ConfigKind::H2;
    c.vertices = {{"u", four}, {"v", std::min(fives[0], fives[1])}, {"w", std::max(fives[0], fives[1])}};
    return c;
}

std::optional<Configuration> find_h3(const PlaneGraph& g) {
    Graph a = g.as_graph();
    for (auto& t : triangles_with_degrees(g, 4, 5, 6)) {
        Vertex u = -1, v = -1, w = -1;
        for (Vertex x : t) {
            if (g.degree(x) == 4) u = x;
            else if (g.degree(x) == 5) v = x;
            else w = x;
        }
        for (Vertex x : a.adj[w]) {
            if (x == u || x == v) continue;
            if (g.degree(x) == 4) {
                Configuration c;
                c.kind = ConfigKind::H3;
                c.vertices = {{"u", u}, {"v", v}, {"w", w}, {"x", x}};
                return c;
            }
        }
    }
    return std::nullopt;
}

std::optional<Configuration> find_h4(const PlaneGraph& g) {
    for (Vertex u : present_vertices(g)) {
        if (g.degree(u) != 3) continue;
        for (Vertex v : g.rotation(u))
            if (v > u && g.degree(v) == 3) {
                Configuration c;
                c.kind = ConfigKind::H4;
                c.vertices = {{"u", u}, {"v", v}};
                return c;
            }
    }
    return std::nullopt;
}

/// All x(p)3-paths from `start` whose second vertex is `second`, interiors of
/// degree 4, p <= max_p, lexicographically ascending.
void enumerate_paths(const Graph& a, const PlaneGraph& g, std::vector<Vertex>& cur,
                     int max_p, std::vector<std::vector<Vertex>>& out, int limit) {
    Vertex last = cur.back();
    if (g.degree(last) == 3 && cur.size() >= 2) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(out.size()) >= limit) return;
    // interiors so far: cur.size()-1 (excluding the initial vertex)
    for (Vertex y : a.adj[last]) {
        if (!g.present(y)) continue;
        if (std::find(cur.begin(), cur.end(), y) != cur.end()) continue;
        if (g.degree(y) == 3) {
            cur.push_back(y);
            out.push_back(cur);
            cur.pop_back();
            if (static_cast<int>(out.size()) >= limit) return;
        } else if (g.degree(y) == 4 && static_cast<int>(cur.size()) - 1 < max_p) {
            cur.push_back(y);
            enumerate_paths(a, g, cur, max_p, out, limit);
            cur.pop_back();
            if (static_cast<int>(out.size()) >= limit) return;
        }
    }
}

std::vector<std::vector<Vertex>> paths_via(const Graph& a, const PlaneGraph& g, Vertex v1,
                                           Vertex second, int max_p, int limit = 1 << 20) {
    std::vector<std::vector<Vertex>> out;
    if (!g.present(second)) return out;
    if (g.degree(second) == 3) {
        out.push_back({v1, second});
        return out;
    }
    if (g.degree(second) != 4) return out;
    std::vector<Vertex> cur{v1, second};
    enumerate_paths(a, g, cur, max_p, out, limit);
    return out;
}

std::optional<Configuration> find_h5(const PlaneGraph& g) {
    Graph a = g.as_graph();
    for (Vertex v1 : present_vertices(g)) {
        if (g.degree(v1) != 4) continue;
        std::vector<std::vector<Vertex>> firsts;
        for (Vertex s : a.adj[v1]) {
            auto ps = paths_via(a, g, v1, s, 3, 1);
            if (!ps.empty()) {
                firsts.push_back(ps.front());
                if (firsts.size() == 2) {
                    Configuration c;
                    c.kind = ConfigKind::H5;
                    c.vertices = {{"v1", v1}};
                    c.paths = {{firsts[0], std::nullopt}, {firsts[1], std::nullopt}};
                    return c;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Configuration> find_h6(const PlaneGraph& g) {
    Graph a = g.as_graph();
    for (Vertex v1 : present_vertices(g)) {
        if (g.degree(v1) != 5) continue;
        std::vector<std::pair<Vertex, std::vector<std::vector<Vertex>>>> options;
        for (Vertex s : a.adj[v1]) {
            auto ps = paths_via(a, g, v1, s, 4, 256);
            if (!ps.empty()) options.push_back({s, std::move(ps)});
        }
        if (static_cast<int>(options.size()) < 4) continue;
        // choose 4 neighbors and one path each; 5(4)3 paths demand the direct
        // edge to their 3-vertex among the chosen paths
        std::vector<int> chosen_opt, chosen_path;
        std::function<bool(int)> rec = [&](int k) -> bool {
            if (static_cast<int>(chosen_opt.size()) == 4) {
                for (size_t i = 0; i < 4; ++i) {
                    const auto& p = options[chosen_opt[i]].second[chosen_path[i]];
                    if (static_cast<int>(p.size()) == 6) {  // p == 4
                        Vertex w = p.back();
                        bool covered = false;
                        for (size_t j = 0; j < 4; ++j) {
                            const auto& q = options[chosen_opt[j]].second[chosen_path[j]];
                            if (q.size() == 2 && q[1] == w) { covered = true; break; }
                        }
                        if (!covered) return false;
                    }
                }
                return true;
            }
            if (k >= static_cast<int>(options.size())) return false;
            if (static_cast<int>(options.size()) - k < 4 - static_cast<int>(chosen_opt.size()))
                return false;
            for (int pi = 0; pi < static_cast<int>(options[k].second.size()); ++pi) {
                chosen_opt.push_back(k);
                chosen_path.push_back(pi);
                if (rec(k + 1)) return true;
                chosen_opt.pop_back();
                chosen_path.pop_back();
            }
            return rec(k + 1);
        };
        if (rec(0)) {
            Configuration c;
            c.kind = ConfigKind::H6;
            c.vertices = {{"v1", v1}};
            for (size_t i = 0; i < 4; ++i)
                c.paths.push_back({options[chosen_opt[i]].second[chosen_path[i]], std::nullopt});
            return c;
        }
    }
    return std::nullopt;
}

std::optional<Configuration> find_shen(const PlaneGraph& g) {
    for (Vertex v : present_vertices(g)) {
        if (g.degree(v) != 4) continue;
        // corner 3-faces at v with their wing pairs
        std::vector<std::array<Vertex, 2>> tri_wings;
        std::set<int> seen_faces;
        for (int i = 0; i < g.degree(v); ++i) {
            int fid = g.left_face(v, i);
            if (!seen_faces.insert(fid).second) continue;
            const Face& f = g.face(fid);
            if (f.length() != 3) continue;
            std::array<Vertex, 2> wings{-1, -1};
            int k = 0;
            for (Vertex x : f.walk)
                if (x != v) wings[k++] = x;
            if (wings[0] > wings[1]) std::swap(wings[0], wings[1]);
            tri_wings.push_back(wings);
        }
        std::sort(tri_wings.begin(), tri_wings.end());
        for (size_t i = 0; i < tri_wings.size(); ++i)
            for (size_t j = i + 1; j < tri_wings.size(); ++j) {
                auto& A = tri_wings[i];
                auto& B = tri_wings[j];
                std::set<Vertex> all{A[0], A[1], B[0], B[1]};
                if (all.size() != 4) continue;  // adjacent 3-faces share an edge at v
                int not4 = 0;
                for (Vertex x : all)
                    if (g.degree(x) != 4) ++not4;
                if (not4 > 1) continue;
                Configuration c;
                c.kind = ConfigKind::Shen;
                c.vertices = {{"v", v},
                              {"a", A[0]}, {"b", A[1]},
                              {"c", B[0]}, {"d", B[1]}};
                return c;
            }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Configuration> find_reduction(const PlaneGraph& g, Strategy s) {
    switch (s) {
        case Strategy::g1:
            if (auto c = low_degree(g, 4)) return c;
            return find_diamond_h(g);
        case Strategy::g2:
            if (auto c = low_degree(g, 3)) return c;
            if (auto c = find_h1(g)) return c;
            if (auto c = find_h2(g)) return c;
            return find_h3(g);
        case Strategy::gcal:
            if (auto c = low_degree(g, 2)) return c;
            if (auto c = find_h4(g)) return c;
            if (auto c = find_h5(g)) return c;
            return find_h6(g);
        case Strategy::no4:
            if (auto c = low_degree(g, 3)) return c;
            return find_shen(g);
    }
    return std::nullopt;
}

namespace {

/// Build an H5 witness from two distinct 4(p)3-paths out of the same 4-vertex.
Configuration h5_from_two_paths(const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
    Configuration c;
    c.kind = ConfigKind::H5;
    if (A[1] != B[1]) {
        c.vertices = {{"v1", A[0]}};
        c.paths = {{A, std::nullopt}, {B, std::nullopt}};
        return c;
    }
    size_t k = 0;
    while (k + 1 < A.size() && k + 1 < B.size() && A[k + 1] == B[k + 1]) ++k;
    // A[k] is the divergence point; both suffixes are valid 4(p)3-paths.
    std::vector<Vertex> A2(A.begin() + k, A.end());
    std::vector<Vertex> B2(B.begin() + k, B.end());
    c.vertices = {{"v1", A[k]}};
    c.paths = {{A2, std::nullopt}, {B2, std::nullopt}};
    return c;
}

}  // namespace

FacialPathResult find_facial_x_p_3_path(const PlaneGraph& g, Vertex v, Vertex u, int max_p) {
    FacialPathResult res;
    if (g.degree(v) < 5 || g.degree(u) != 4)
        throw std::invalid_argument("find_facial_x_p_3_path: need deg(v)>=5, deg(u)==4");
    std::set<int> fids{g.left_face_of(v, u), g.left_face_of(u, v)};
    std::vector<std::vector<Vertex>> found;
    for (int fid : fids) {
        const Face& f = g.face(fid);
        const int L = f.length();
        if (L > 6) continue;
        for (int i = 0; i < L; ++i) {
            if (f.walk[i] != u) continue;
            for (int dir : {+1, -1}) {
                std::vector<Vertex> path{u};
                for (int step = 1; step < L; ++step) {
                    Vertex y = f.walk[((i + dir * step) % L + L) % L];
                    if (std::find(path.begin(), path.end(), y) != path.end()) break;
                    if (g.degree(y) == 3) {
                        path.push_back(y);
                        if (static_cast<int>(path.size()) - 2 <= max_p) found.push_back(path);
                        break;
                    }
                    if (g.degree(y) != 4) break;
                    path.push_back(y);
                    if (static_cast<int>(path.size()) - 1 > max_p) break;
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) return res;
    if (found.size() == 1) {
        res.status = FacialPathResult::Found;
        res.path = found.front();
        return res;
    }
    res.status = FacialPathResult::TwoPaths;
    res.h5 = h5_from_two_paths(found[0], found[1]);
    return res;
}

namespace {

/// Does `path` qualify as a certificate path: interiors degree 4, and
/// terminal either a true 3-vertex or a 4-vertex adjacent to `later_pool`.
/// Records `removed` with the smallest qualifying later vertex.
bool qualify_path(const PlaneGraph& g, const Graph& a, std::vector<Vertex> path,
                  const std::set<Vertex>& later_pool, bool allow_virtual, WitnessPath& out) {
    if (path.size() < 2) return false;
    for (size_t i = 1; i + 1 < path.size(); ++i)
        if (g.degree(path[i]) != 4) return false;
    Vertex t = path.back();
    if (g.degree(t) == 3) {
        out = {std::move(path), std::nullopt};
        return true;
    }
    if (!allow_virtual || g.degree(t) != 4) return false;
    for (Vertex w : a.adj[t])
        if (later_pool.count(w)) {
            out = {std::move(path), w};
            return true;
        }
    return false;
}

/// Enumerate simple paths from v1 inside `pool` with <= max_p interior
/// 4-vertices; terminal may be any pool vertex of degree 3 or 4 (virtual
/// qualification is applied by the caller).
void pool_paths(const PlaneGraph& g, const Graph& a, const std::set<Vertex>& pool,
                std::vector<Vertex>& cur, int max_p, std::vector<std::vector<Vertex>>& out) {
    Vertex last = cur.back();
    for (Vertex y : a.adj[last]) {
        if (!pool.count(y)) continue;
        if (std::find(cur.begin(), cur.end(), y) != cur.end()) continue;
        int dy = g.degree(y);
        if (dy != 3 && dy != 4) continue;
        cur.push_back(y);
        // as a terminal, y leaves cur.size()-2 interiors
        if (static_cast<int>(cur.size()) - 2 <= max_p) out.push_back(cur);
        // extend through y only if it is a 4-vertex and stays within budget
        if (dy == 4 && static_cast<int>(cur.size()) - 1 <= max_p)
            pool_paths(g, a, pool, cur, max_p, out);
        cur.pop_back();
    }
}

bool disjoint_except_initial(const std::vector<WitnessPath>& qs) {
    std::set<Vertex> seen;
    for (const auto& q : qs)
        for (size_t i = 1; i < q.vertices.size(); ++i)
            if (!seen.insert(q.vertices[i]).second) return false;
    return true;
}

int order_of(const std::vector<WitnessPath>& qs) {
    std::set<Vertex> s;
    for (const auto& q : qs)
        for (Vertex v : q.vertices) s.insert(v);
    return static_cast<int>(s.size());
}

bool normal_form(const PlaneGraph& g, const Configuration& c) {
    if (!disjoint_except_initial(c.paths)) return false;
    for (size_t i = 0; i < c.paths.size(); ++i) {
        const auto& p = c.paths[i];
        Vertex t = p.vertices.back();
        if (p.removed) {
            if (i + 1 == c.paths.size()) return false;
            bool later = false;
            for (size_t j = i + 1; j < c.paths.size(); ++j)
                for (size_t k = 1; k < c.paths[j].vertices.size(); ++k)
                    if (c.paths[j].vertices[k] == *p.removed) later = true;
            if (!later || g.degree(t) != 4) return false;
        } else if (g.degree(t) != 3) {
            return false;
        }
    }
    return true;
}

Configuration minimize_paths(const PlaneGraph& g, const Configuration& witness, int npaths,
                             int init_degree, int c_kind_max_p) {
    if (!validate_configuration(g, witness))
        throw std::invalid_argument("minimize: invalid witness");
    if (normal_form(g, witness)) return witness;

    Graph a = g.as_graph();
    std::set<Vertex> pool;
    for (Vertex v : witness.vertex_set()) pool.insert(v);

    std::vector<Vertex> initials;
    {
        Vertex w1 = witness.role("v1");
        initials.push_back(w1);
        for (Vertex v : pool)
            if (v != w1 && g.degree(v) == init_degree) initials.push_back(v);
    }

    std::optional<Configuration> best;
    int best_order = 1 << 30;
    for (Vertex v1 : initials) {
        if (g.degree(v1) != init_degree) continue;
        std::vector<std::vector<Vertex>> raw;
        std::vector<Vertex> cur{v1};
        pool_paths(g, a, pool, cur, c_kind_max_p, raw);
        std::sort(raw.begin(), raw.end());
        // choose npaths with distinct second vertices, pairwise disjoint,
        // later-trim discipline
        std::vector<const std::vector<Vertex>*> chosen;
        auto try_orderings = [&]() {
            // the later-trim discipline is order sensitive: try permutations,
            // first qualifying order of this set wins
            std::vector<int> perm(chosen.size());
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            std::sort(perm.begin(), perm.end());
            do {
                std::vector<WitnessPath> fixed;
                bool ok = true;
                for (size_t i = 0; i < perm.size() && ok; ++i) {
                    std::set<Vertex> later;
                    for (size_t j = i + 1; j < perm.size(); ++j)
                        for (size_t k = 1; k < chosen[perm[j]]->size(); ++k)
                            later.insert((*chosen[perm[j]])[k]);
                    WitnessPath q;
                    if (!qualify_path(g, a, *chosen[perm[i]], later, i + 1 < perm.size(), q))
                        ok = false;
                    else
                        fixed.push_back(q);
                }
                if (!ok) continue;
                int ord = order_of(fixed);
                if (ord < best_order) {
                    best_order = ord;
                    Configuration c;
                    c.kind = witness.kind;
                    c.vertices = {{"v1", v1}};
                    c.paths = fixed;
                    best = c;
                }
                return;
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        std::function<void(size_t)> rec = [&](size_t from) {
            if (static_cast<int>(chosen.size()) == npaths) {
                try_orderings();
                return;
            }
            for (size_t i = from; i < raw.size(); ++i) {
                const auto& p = raw[i];
                bool ok = true;
                for (const auto* qp : chosen) {
                    const auto& q = *qp;
                    if (q[1] == p[1]) { ok = false; break; }
                    for (size_t k = 1; k < p.size() && ok; ++k)
                        for (size_t l = 1; l < q.size(); ++l)
                            if (p[k] == q[l]) { ok = false; break; }
                }
                if (!ok) continue;
                chosen.push_back(&p);
                rec(i + 1);
                chosen.pop_back();
            }
        };
        rec(0);
    }
    if (!best) throw std::logic_error("minimize: no normal-form certificate found");
    return *best;
}

}  // namespace

Configuration minimize_h5(const PlaneGraph& g, const Configuration& witness) {
    if (witness.kind != ConfigKind::H5) throw std::invalid_argument("minimize_h5: wrong kind");
    return minimize_paths(g, witness, 2, 4, 3);
}

Configuration minimize_h6(const PlaneGraph& g, const Configuration& witness) {
    if (witness.kind != ConfigKind::H6) throw std::invalid_argument("minimize_h6: wrong kind");
    return minimize_paths(g, witness, 4, 5, 3);
}

bool validate_configuration(const PlaneGraph& g, const Configuration& c) {
    Graph a = g.as_graph();
    auto deg = [&](Vertex v) { return g.present(v) ? g.degree(v) : -1; };
    switch (c.kind) {
        case ConfigKind::LowDegree:
            return deg(c.role("v")) >= 0 && deg(c.role("v")) <= c.threshold;
        case ConfigKind::DiamondH: {
            Vertex m1 = c.role("mid_a"), m2 = c.role("mid_b");
            auto wings = diamond_wings(g, m1, m2);
            if (!wings) return false;
            std::set<Vertex> quad{m1, m2, wings->first, wings->second};
            int fives = 0, other = -1;
            for (Vertex x : quad)
                if (deg(x) == 5) ++fives; else other = x;
            if (fives == 4) return true;
            return fives == 3 && other >= 0 && deg(other) <= 6 && c.role("v1") == other;
        }
        case ConfigKind::H1:
            return deg(c.role("u")) == 4 && deg(c.role("v")) == 4 &&
                   a.has_edge(c.role("u"), c.role("v"));
        case ConfigKind::H2: {
            Vertex u = c.role("u"), v = c.role("v"), w = c.role("w");
            return deg(u) == 4 && deg(v) == 5 && deg(w) == 5 && a.has_edge(u, v) &&
                   a.has_edge(v, w) && a.has_edge(u, w);
        }
        case ConfigKind::H3: {
            Vertex u = c.role("u"), v = c.role("v"), w = c.role("w"), x = c.role("x");
            return deg(u) == 4 && deg(v) == 5 && deg(w) == 6 && deg(x) == 4 && x != u &&
                   x != v && a.has_edge(u, v) && a.has_edge(v, w) && a.has_edge(u, w) &&
                   a.has_edge(w, x);
        }
        case ConfigKind::H4:
            return deg(c.role("u")) == 3 && deg(c.role("v")) == 3 &&
                   a.has_edge(c.role("u"), c.role("v"));
        case ConfigKind::H5:
        case ConfigKind::H6: {
            int want = c.kind == ConfigKind::H5 ? 2 : 4;
            int init_deg = c.kind == ConfigKind::H5 ? 4 : 5;
            int max_p = c.kind == ConfigKind::H5 ? 3 : 4;
            if (static_cast<int>(c.paths.size()) != want) return false;
            Vertex v1 = c.role("v1");
            if (deg(v1) != init_deg) return false;
            std::set<Vertex> seconds;
            bool has_p4 = false, has_direct = false;
            for (const auto& p : c.paths) {
                if (p.vertices.size() < 2 || p.vertices.front() != v1) return false;
                if (static_cast<int>(p.vertices.size()) - 2 > max_p) return false;
                if (!seconds.insert(p.vertices[1]).second) return false;
                for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
                    if (!a.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
                for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
                    if (deg(p.vertices[i]) != 4) return false;
                Vertex t = p.vertices.back();
                if (p.removed) {
                    if (deg(t) != 4 || !a.has_edge(t, *p.removed)) return false;
                } else if (deg(t) != 3) {
                    return false;
                }
                if (static_cast<int>(p.vertices.size()) == 6) has_p4 = true;
                if (p.vertices.size() == 2) has_direct = true;
            }
            if (c.kind == ConfigKind::H6 && has_p4 && !has_direct) return false;
            return true;
        }
        case ConfigKind::Shen: {
            Vertex v = c.role("v");
            Vertex A[2] = {c.role("a"), c.role("b")};
            Vertex B[2] = {c.role("c"), c.role("d")};
            if (deg(v) != 4) return false;
            std::set<Vertex> all{A[0], A[1], B[0], B[1]};
            if (all.size() != 4 || all.count(v)) return false;
            int not4 = 0;
            for (Vertex x : all)
                if (deg(x) != 4) ++not4;
            if (not4 > 1) return false;
            // both wing pairs must bound 3-faces at v
            auto is_corner_tri = [&](Vertex p, Vertex q) {
                for (int i = 0; i < g.degree(v); ++i) {
                    const Face& f = g.face(g.left_face(v, i));
                    if (f.length() != 3) continue;
                    std::set<Vertex> s(f.walk.begin(), f.walk.end());
                    if (s.count(v) && s.count(p) && s.count(q)) return true;
                }
                return false;
            };
            return is_corner_tri(A[0], A[1]) && is_corner_tri(B[0], B[1]);
        }
    }
    return false;
}

}  // namespace recolor
