#include "recolor/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace recolor {

namespace {

int rotation_index(const std::vector<Vertex>& rot, Vertex u) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == u) return i;
    return -1;
}

}  // namespace

PlaneGraph PlaneGraph::build(const std::vector<std::vector<Vertex>>& rotation) {
    const int n = static_cast<int>(rotation.size());
    if (n == 0) throw std::invalid_argument("empty rotation");
    PlaneGraph g;
    g.rotation_ = rotation;
    g.present_ = VertexSet(n, true);
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> seen;
        for (Vertex u : rotation[v]) {
            if (u < 0 || u >= n) throw std::invalid_argument("neighbor id out of range");
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw std::invalid_argument("repeated neighbor at vertex " + std::to_string(v));
            if (rotation_index(rotation[u], v) < 0)
                throw std::invalid_argument("asymmetric rotation: " + std::to_string(v) + " lists " +
                                            std::to_string(u) + " but not conversely");
        }
    }
    g.derive_faces();
    if (!is_connected(g.as_graph(), g.present_))
        throw std::invalid_argument("disconnected embedding");
    long long V = g.num_vertices(), E = g.num_edges(), F = static_cast<long long>(g.faces_.size());
    if (V - E + F != 2)
        throw std::invalid_argument("Euler identity violated; rotation is not a plane embedding");
    return g;
}

PlaneGraph PlaneGraph::delete_vertices(const std::vector<Vertex>& S) const {
    VertexSet keep = present_;
    for (Vertex v : S) {
        if (!keep.contains(v)) throw std::invalid_argument("deleting absent vertex");
        keep.erase(v);
    }
    if (keep.count == 0) throw std::invalid_argument("deletion empties the graph");
    PlaneGraph g = restrict_unchecked(keep);
    if (!is_connected(g.as_graph(), g.present_))
        throw std::invalid_argument("deletion disconnects the graph");
    return g;
}

PlaneGraph PlaneGraph::restrict_unchecked(const VertexSet& keep) const {
    PlaneGraph g;
    g.rotation_.assign(universe(), {});
    g.present_ = VertexSet(universe(), false);
    for (Vertex v = 0; v < universe(); ++v) {
        if (!present(v) || !keep.contains(v)) continue;
        g.present_.insert(v);
        for (Vertex u : rotation_[v])
            if (keep.contains(u) && present(u)) g.rotation_[v].push_back(u);
    }
    g.derive_faces();
    return g;
}

void PlaneGraph::derive_faces() {
    faces_.clear();
    left_face_.assign(universe(), {});
    for (Vertex v = 0; v < universe(); ++v)
        left_face_[v].assign(rotation_[v].size(), -1);

    for (Vertex v = 0; v < universe(); ++v) {
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
            if (left_face_[v][i] >= 0) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            Vertex a = v;
            int ai = i;
            do {
                left_face_[a][ai] = f.id;
                f.walk.push_back(a);
                Vertex b = rotation_[a][ai];
                int j = rotation_index(rotation_[b], a);
                ai = (j + 1) % static_cast<int>(rotation_[b].size());
                a = b;
            } while (!(a == v && ai == i));
            faces_.push_back(std::move(f));
        }
    }
    // An isolated present vertex bounds a single empty walk; with that
    // convention Euler's identity holds down to one vertex.
    for (Vertex v = 0; v < universe(); ++v) {
        if (present(v) && rotation_[v].empty()) {
            Face f;
            f.id = static_cast<int>(faces_.size());
            faces_.push_back(std::move(f));
        }
    }
}

long long PlaneGraph::num_edges() const {
    long long s = 0;
    for (Vertex v = 0; v < universe(); ++v) s += degree(v);
    return s / 2;
}

int PlaneGraph::left_face_of(Vertex u, Vertex v) const {
    int i = rotation_index(rotation_[u], v);
    if (i < 0) throw std::invalid_argument("not an edge");
    return left_face_[u][i];
}

int PlaneGraph::min_degree() const {
    int md = -1;
    for (Vertex v = 0; v < universe(); ++v)
        if (present(v) && (md < 0 || degree(v) < md)) md = degree(v);
    return md;
}

std::vector<int> adjacent_3faces(const PlaneGraph& g, const Face& f) {
    std::set<int> ids;
    const int L = f.length();
    for (int i = 0; i < L; ++i) {
        Vertex a = f.walk[i], b = f.walk[(i + 1) % L];
        int other = g.left_face_of(b, a);
        if (other != f.id && g.face(other).length() == 3) ids.insert(other);
    }
    return {ids.begin(), ids.end()};
}

int PlaneGraph::adjacent_3face_count(const Face& f) const {
    return static_cast<int>(adjacent_3faces(*this, f).size());
}

ClassReport PlaneGraph::classify() const {
    ClassReport r;
    r.min_degree = min_degree();
    r.in_g1 = r.in_g2 = r.in_g3 = r.in_gcal = true;
    std::vector<int> tri_count_on_5face(faces_.size(), 0);
    for (const Face& f : faces_) {
        if (f.length() != 3) continue;
        int adj3 = 0;
        for (int i = 0; i < 3; ++i) {
            Vertex a = f.walk[i], b = f.walk[(i + 1) % 3];
            int other = left_face_of(b, a);
            if (other == f.id) continue;
            int len = face(other).length();
            if (len < 6) r.in_g3 = false;
            if (len < 5) r.in_gcal = false;
        }
        adj3 = adjacent_3face_count(f);
        if (adj3 > 2) r.in_g1 = false;
        if (adj3 > 1) r.in_g2 = false;
    }
    for (const Face& f : faces_) {
        if (f.length() != 5) continue;
        if (static_cast<int>(adjacent_3faces(*this, f).size()) > 3) r.in_gcal = false;
    }
    // 4-cycle as a subgraph: some vertex pair with two common neighbors.
    Graph g = as_graph();
    for (Vertex u = 0; u < universe() && !r.has_4cycle; ++u) {
        if (!present(u)) continue;
        for (Vertex w = u + 1; w < universe() && !r.has_4cycle; ++w) {
            if (!present(w)) continue;
            int common = 0;
            for (Vertex x : g.adj[u])
                if (g.has_edge(w, x) && ++common >= 2) { r.has_4cycle = true; break; }
        }
    }
    return r;
}

Graph PlaneGraph::as_graph() const {
    Graph g(universe());
    for (Vertex v = 0; v < universe(); ++v) {
        g.adj[v] = rotation_[v];
        std::sort(g.adj[v].begin(), g.adj[v].end());
    }
    return g;
}

std::string PlaneGraph::to_rotation_text() const {
    std::ostringstream os;
    os << "plane " << universe() << "\n";
    for (Vertex v = 0; v < universe(); ++v) {
        if (!present(v)) continue;
        os << v << ":";
        for (Vertex u : rotation_[v]) os << " " << u;
        os << "\n";
    }
    return os.str();
}

}  // namespace recolor
