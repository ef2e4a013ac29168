#include "recolor/instances.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

namespace recolor {

namespace {

using Rotation = std::vector<std::vector<Vertex>>;

int pos_of(const std::vector<Vertex>& rot, Vertex u) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == u) return i;
    throw std::logic_error("pos_of: missing neighbor");
}

void insert_before(std::vector<Vertex>& rot, Vertex before, Vertex x) {
    rot.insert(rot.begin() + pos_of(rot, before), x);
}

Rotation active_rotation(const PlaneGraph& g) {
    Rotation rot(g.universe());
    for (Vertex v = 0; v < g.universe(); ++v)
        if (g.present(v)) rot[v] = g.rotation(v);
    return rot;
}

}  // namespace

PlaneGraph icosahedron() {
    // Derived once from coordinates; neighbor order is clockwise.
    Rotation rot = {
        {4, 2, 1, 3, 6},  {7, 3, 0, 2, 5},  {5, 1, 0, 4, 8},  {9, 6, 0, 1, 7},
        {8, 2, 0, 6, 10}, {11, 7, 1, 2, 8}, {10, 4, 0, 3, 9}, {9, 3, 1, 5, 11},
        {11, 5, 2, 4, 10}, {10, 6, 3, 7, 11}, {11, 8, 4, 6, 9}, {9, 7, 5, 8, 10}};
    return PlaneGraph::build(rot);
}

PlaneGraph octahedron() {
    Rotation rot = {
        {1, 2, 4, 5}, {0, 5, 3, 2}, {0, 1, 3, 4}, {1, 5, 4, 2}, {0, 2, 3, 5}, {0, 4, 3, 1}};
    return PlaneGraph::build(rot);
}

PlaneGraph cube() {
    Rotation rot = {
        {1, 3, 4}, {0, 5, 2}, {1, 6, 3}, {0, 2, 7},
        {0, 7, 5}, {1, 4, 6}, {2, 5, 7}, {3, 6, 4}};
    return PlaneGraph::build(rot);
}

PlaneGraph dodecahedron() { return dual_graph(icosahedron()); }

PlaneGraph dual_graph(const PlaneGraph& g) {
    const auto& faces = g.faces();
    Rotation rot(faces.size());
    for (const Face& f : faces) {
        const int L = f.length();
        for (int i = 0; i < L; ++i) {
            Vertex a = f.walk[i], b = f.walk[(i + 1) % L];
            rot[f.id].push_back(g.left_face_of(b, a));
        }
    }
    return PlaneGraph::build(rot);
}

PlaneGraph truncate_graph(const PlaneGraph& g) {
    // new vertex per directed edge (v,u): the corner of v toward u
    std::map<std::pair<Vertex, Vertex>, Vertex> id;
    for (Vertex v = 0; v < g.universe(); ++v) {
        if (!g.present(v)) continue;
        for (Vertex u : g.rotation(v)) id[{v, u}] = static_cast<Vertex>(id.size());
    }
    Rotation rot(id.size());
    for (Vertex v = 0; v < g.universe(); ++v) {
        if (!g.present(v)) continue;
        const auto& r = g.rotation(v);
        const int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i) {
            Vertex me = id[{v, r[i]}];
            Vertex prev = id[{v, r[(i - 1 + d) % d]}];
            Vertex next = id[{v, r[(i + 1) % d]}];
            Vertex mate = id[{r[i], v}];
            rot[me] = {prev, mate, next};
        }
    }
    return PlaneGraph::build(rot);
}

PlaneGraph medial_graph(const PlaneGraph& g) {
    std::map<std::pair<Vertex, Vertex>, Vertex> id;
    auto eid = [&](Vertex a, Vertex b) { return id.at({std::min(a, b), std::max(a, b)}); };
    for (Vertex v = 0; v < g.universe(); ++v) {
        if (!g.present(v)) continue;
        for (Vertex u : g.rotation(v))
            if (v < u) id[{v, u}] = static_cast<Vertex>(id.size());
    }
    Rotation rot(id.size());
    for (Vertex v = 0; v < g.universe(); ++v) {
        if (!g.present(v)) continue;
        const auto& r = g.rotation(v);
        const int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i) {
            Vertex u = r[i];
            if (v > u) continue;
            Vertex me = eid(v, u);
            Vertex vn = eid(v, r[(i + 1) % d]);
            Vertex vp = eid(v, r[(i - 1 + d) % d]);
            int j = pos_of(g.rotation(u), v);
            const auto& ru = g.rotation(u);
            const int du = static_cast<int>(ru.size());
            Vertex un = eid(u, ru[(j + 1) % du]);
            Vertex up = eid(u, ru[(j - 1 + du) % du]);
            rot[me] = {vp, un, up, vn};
        }
    }
    return PlaneGraph::build(rot);
}

PlaneGraph leapfrog(const PlaneGraph& g) { return truncate_graph(dual_graph(g)); }

PlaneGraph wheel_fill(const PlaneGraph& g, const std::vector<int>& face_lengths) {
    Rotation rot = active_rotation(g);
    std::set<int> want(face_lengths.begin(), face_lengths.end());
    Vertex next = g.universe();
    for (const Face& f : g.faces()) {
        if (!want.count(f.length())) continue;
        std::set<Vertex> distinct(f.walk.begin(), f.walk.end());
        if (static_cast<int>(distinct.size()) != f.length())
            throw std::invalid_argument("wheel_fill: face walk repeats a vertex");
        Vertex c = next++;
        rot.push_back(std::vector<Vertex>(f.walk.rbegin(), f.walk.rend()));
        const int L = f.length();
        for (int i = 0; i < L; ++i)
            insert_before(rot[f.walk[i]], f.walk[(i + 1) % L], c);
    }
    return PlaneGraph::build(rot);
}

PlaneGraph inscribe_triangles(const PlaneGraph& g, int count, uint64_t seed) {
    std::vector<int> hexes;
    for (const Face& f : g.faces())
        if (f.length() == 6) hexes.push_back(f.id);
    std::mt19937_64 rng(seed);
    std::shuffle(hexes.begin(), hexes.end(), rng);
    if (count > static_cast<int>(hexes.size()))
        throw std::invalid_argument("inscribe_triangles: not enough hexagonal faces");
    hexes.resize(count);

    Rotation rot = active_rotation(g);
    Vertex next = g.universe();
    for (int fid : hexes) {
        const Face& f = g.face(fid);
        const auto& w = f.walk;
        Vertex t0 = next++, t1 = next++, t2 = next++;
        rot.push_back({w[0], t2, t1});  // t0
        rot.push_back({w[2], t0, t2});  // t1
        rot.push_back({w[4], t1, t0});  // t2
        insert_before(rot[w[0]], w[1], t0);
        insert_before(rot[w[2]], w[3], t1);
        insert_before(rot[w[4]], w[5], t2);
    }
    return PlaneGraph::build(rot);
}

PlaneGraph grid(int w, int h) {
    if (w < 2 || h < 2) throw std::invalid_argument("grid: need w,h >= 2");
    auto at = [&](int x, int y) { return y * w + x; };
    Rotation rot(static_cast<size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            std::vector<Vertex> r;  // clockwise: up, right, down, left
            if (y > 0) r.push_back(at(x, y - 1));
            if (x + 1 < w) r.push_back(at(x + 1, y));
            if (y + 1 < h) r.push_back(at(x, y + 1));
            if (x > 0) r.push_back(at(x - 1, y));
            rot[at(x, y)] = r;
        }
    return PlaneGraph::build(rot);
}

PlaneGraph fan(int n) {
    if (n < 2) throw std::invalid_argument("fan: need n >= 2 path vertices");
    // apex 0, path 1..n
    Rotation rot(n + 1);
    for (int i = 1; i <= n; ++i) rot[0].push_back(i);
    for (int i = 1; i <= n; ++i) {
        std::vector<Vertex> r;
        if (i + 1 <= n) r.push_back(i + 1);
        r.push_back(0);
        if (i - 1 >= 1) r.push_back(i - 1);
        rot[i] = r;
    }
    return PlaneGraph::build(rot);
}

PlaneGraph stacked_diamond_chain(int length) {
    if (length < 1) throw std::invalid_argument("stacked_diamond_chain: need length >= 1");
    // spine c_0..c_len, wings p_i (above) and q_i (below) per diamond i
    auto spine = [&](int i) { return i; };
    auto wing_p = [&](int i) { return length + 1 + 2 * (i - 1); };
    auto wing_q = [&](int i) { return length + 1 + 2 * (i - 1) + 1; };
    Rotation rot(3 * length + 1);
    for (int i = 0; i <= length; ++i) {
        std::vector<Vertex> r;
        if (i > 0) {  // left diamond i
            r.push_back(wing_p(i));
            r.push_back(spine(i - 1));
            r.push_back(wing_q(i));
        }
        if (i < length) {  // right diamond i+1
            r.push_back(wing_q(i + 1));
            r.push_back(spine(i + 1));
            r.push_back(wing_p(i + 1));
        }
        rot[spine(i)] = r;
    }
    for (int i = 1; i <= length; ++i) {
        rot[wing_p(i)] = {spine(i), spine(i - 1)};
        rot[wing_q(i)] = {spine(i - 1), spine(i)};
    }
    return PlaneGraph::build(rot);
}

PlaneGraph triangulated_polygon(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("triangulated_polygon: need n >= 3");
    // random ear splits of the index interval [0, n-1]
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> chords;
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 2) continue;
        int m = a + 1 + static_cast<int>(rng() % (b - a - 1));
        if (m - a >= 2) chords.push_back({a, m});
        if (b - m >= 2) chords.push_back({m, b});
        stack.push_back({a, m});
        stack.push_back({m, b});
    }
    // neighbor order around vertex i: ascending cyclic distance works out to a
    // planar rotation when sorted by the other endpoint along the polygon
    std::vector<std::set<int>> nb(n);
    for (int i = 0; i < n; ++i) {
        nb[i].insert((i + 1) % n);
        nb[i].insert((i - 1 + n) % n);
    }
    for (auto [a, b] : chords) {
        nb[a].insert(b);
        nb[b].insert(a);
    }
    Rotation rot(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> r(nb[i].begin(), nb[i].end());
        // clockwise order around the convex polygon: sort by cyclic offset
        std::sort(r.begin(), r.end(), [&](Vertex x, Vertex y) {
            return (x - i + n) % n < (y - i + n) % n;
        });
        rot[i] = r;
    }
    return PlaneGraph::build(rot);
}

namespace {

/// Split a face of the triangulation by a new vertex joined to the three
/// corners of a (triangular) face.
void split_face(Rotation& rot, const std::array<Vertex, 3>& tri, Vertex c) {
    rot.push_back({tri[2], tri[1], tri[0]});
    insert_before(rot[tri[0]], tri[1], c);
    insert_before(rot[tri[1]], tri[2], c);
    insert_before(rot[tri[2]], tri[0], c);
}

}  // namespace

PlaneGraph random_planar(int n, uint64_t seed, int deletions) {
    if (n < 3) throw std::invalid_argument("random_planar: need n >= 3");
    std::mt19937_64 rng(seed);
    Rotation rot = {{1, 2}, {2, 0}, {0, 1}};
    // incremental subdivision: track the triangle list directly so the
    // embedding is rebuilt only once at the end
    std::vector<std::array<Vertex, 3>> tris = {{0, 1, 2}, {0, 2, 1}};
    for (Vertex next = 3; next < n; ++next) {
        size_t pick = rng() % tris.size();
        auto tri = tris[pick];
        split_face(rot, tri, next);
        tris[pick] = {tri[0], tri[1], next};
        tris.push_back({tri[1], tri[2], next});
        tris.push_back({tri[2], tri[0], next});
    }
    PlaneGraph g = PlaneGraph::build(rot);
    for (int d = 0; d < deletions; ++d) {
        // delete a random edge that keeps the graph connected and min degree 2
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v = 0; v < g.universe(); ++v)
            for (Vertex u : g.rotation(v))
                if (v < u && g.degree(v) > 2 && g.degree(u) > 2) edges.push_back({v, u});
        std::shuffle(edges.begin(), edges.end(), rng);
        bool removed = false;
        for (auto [v, u] : edges) {
            Rotation r = active_rotation(g);
            r[v].erase(r[v].begin() + pos_of(r[v], u));
            r[u].erase(r[u].begin() + pos_of(r[u], v));
            try {
                PlaneGraph h = PlaneGraph::build(r);
                g = std::move(h);
                removed = true;
                break;
            } catch (const std::invalid_argument&) {
                continue;  // would disconnect
            }
        }
        if (!removed) break;
    }
    return g;
}

PlaneGraph frozen_embed(int p, int k) {
    if (p == 3 && k == 2) {
        // K_{3,3} minus a perfect matching = C6; alternate the sides
        Rotation rot = {{5, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 0}};
        return PlaneGraph::build(rot);
    }
    if (p == 2 && k == 3) {
        // the 9-edge three-part block admits this plane embedding
        Rotation rot = {{3, 4, 5}, {3, 5, 2}, {5, 4, 1}, {0, 1, 4}, {2, 0, 3}, {1, 0, 2}};
        return PlaneGraph::build(rot);
    }
    throw std::invalid_argument(
        "frozen_embed: only (p,k) in {(3,2),(2,3)} admit a connected plane embedding here");
}

bool in_strategy_class(const PlaneGraph& g, Strategy s) {
    ClassReport cls = g.classify();
    switch (s) {
        case Strategy::g1: return cls.in_g1;
        case Strategy::g2: return cls.in_g2;
        case Strategy::gcal: return cls.in_gcal;
        case Strategy::no4: return !cls.has_4cycle;
    }
    return false;
}

int delta_floored_instance_count(Strategy s) { return s == Strategy::gcal ? 3 : 2; }

PlaneGraph delta_floored_instance(Strategy s, int index) {
    PlaneGraph base = index == 0 ? dodecahedron() : truncate_graph(icosahedron());
    switch (s) {
        case Strategy::g1:
            // wheel-filled double medial: min degree 5, every 3-face meets
            // exactly two 3-faces, their outer edges lie on 4-faces
            return wheel_fill(medial_graph(medial_graph(base)), {5, 6});
        case Strategy::g2:
            // double medial: 4-regular, 3-faces pairwise non-adjacent
            return medial_graph(medial_graph(base));
        case Strategy::gcal:
            if (index == 0) return dodecahedron();  // no 3-faces at all
            return inscribe_triangles(truncate_graph(icosahedron()),
                                      index == 1 ? 5 : 12, 17);
        case Strategy::no4:
            // medial fullerenes: 4-regular, girth-5 base kills 4-cycles
            return medial_graph(base);
    }
    throw std::logic_error("unreachable");
}

PlaneGraph in_class_instance(Strategy s, int n, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    if (s == Strategy::no4) {
        // subdividing every edge doubles all cycle lengths: no 4-cycles;
        // a base triangulation on b vertices subdivides to at most 4b-6
        PlaneGraph g = random_planar(std::max(3, (n + 6) / 4), seed, static_cast<int>(rng() % 4));
        Rotation rot = active_rotation(g);
        Vertex next = g.universe();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex v = 0; v < g.universe(); ++v)
            for (Vertex u : g.rotation(v))
                if (v < u) edges.push_back({v, u});
        for (auto [v, u] : edges) {
            Vertex m = next++;
            rot.push_back({v, u});
            rot[v][pos_of(rot[v], u)] = m;
            rot[u][pos_of(rot[u], v)] = m;
        }
        return PlaneGraph::build(rot);
    }
    PlaneGraph g = random_planar(n, seed, 0);
    // thin 3-face adjacencies by deleting edges until the class holds;
    // deletions only merge faces, so the violation count never grows
    for (int guard = 0; guard < 10 * n; ++guard) {
        if (in_strategy_class(g, s)) return g;
        std::vector<std::pair<Vertex, Vertex>> cands;
        for (const Face& f : g.faces()) {
            if (f.length() != 3) continue;
            bool bad = false;
            int adj3 = g.adjacent_3face_count(f);
            switch (s) {
                case Strategy::g1: bad = adj3 > 2; break;
                case Strategy::g2: bad = adj3 > 1; break;
                case Strategy::gcal: {
                    for (int i = 0; i < 3 && !bad; ++i) {
                        int other = g.left_face_of(f.walk[(i + 1) % 3], f.walk[i]);
                        if (other != f.id && g.face(other).length() < 5) bad = true;
                    }
                    break;
                }
                default: break;
            }
            if (!bad) continue;
            for (int i = 0; i < 3; ++i) {
                Vertex a = f.walk[i], b = f.walk[(i + 1) % 3];
                if (g.degree(a) > 2 && g.degree(b) > 2) cands.push_back({a, b});
            }
        }
        if (cands.empty()) {
            // 5-face overload in gcal: drop an edge of an offending 3-face
            for (const Face& f : g.faces())
                if (f.length() == 3)
                    for (int i = 0; i < 3; ++i) {
                        Vertex a = f.walk[i], b = f.walk[(i + 1) % 3];
                        if (g.degree(a) > 2 && g.degree(b) > 2) cands.push_back({a, b});
                    }
        }
        if (cands.empty()) break;
        std::shuffle(cands.begin(), cands.end(), rng);
        bool removed = false;
        for (auto [a, b] : cands) {
            Rotation r = active_rotation(g);
            r[a].erase(r[a].begin() + pos_of(r[a], b));
            r[b].erase(r[b].begin() + pos_of(r[b], a));
            try {
                g = PlaneGraph::build(r);
                removed = true;
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        if (!removed) break;
    }
    if (!in_strategy_class(g, s))
        throw std::runtime_error("in_class_instance: thinning did not reach the class");
    return g;
}

PlaneGraph generate(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "icosahedron") return icosahedron();
    if (f == "octahedron") return octahedron();
    if (f == "cube") return cube();
    if (f == "dodecahedron") return dodecahedron();
    if (f == "grid") return grid(std::max(2, spec.n), std::max(2, spec.n));
    if (f == "fan") return fan(std::max(2, spec.n));
    if (f == "stacked-diamond") return stacked_diamond_chain(std::max(1, spec.n));
    if (f == "triangulated-polygon") return triangulated_polygon(std::max(3, spec.n), spec.seed);
    if (f == "random-planar") return random_planar(std::max(3, spec.n), spec.seed,
                                                   std::max(0, spec.n / 4));
    if (f == "frozen-embed") return frozen_embed(spec.p, spec.k);
    throw std::invalid_argument("unknown family: " + f);
}

Coloring random_proper_coloring(const Graph& g, const ListAssignment& L, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!L.at(v).empty()) order.push_back(v);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        Coloring col(g.size(), -1);
        bool ok = true;
        for (Vertex v : order) {
            std::vector<int> opts;
            for (int c : L.at(v)) {
                bool free = true;
                for (Vertex u : g.adj[v])
                    if (col[u] == c) { free = false; break; }
                if (free) opts.push_back(c);
            }
            if (opts.empty()) { ok = false; break; }
            col[v] = opts[rng() % opts.size()];
        }
        if (ok) return col;
    }
    throw std::runtime_error("random_proper_coloring: no coloring found");
}

}  // namespace recolor
