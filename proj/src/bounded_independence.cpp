#include "recolor/bounded_independence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "recolor/oracle.hpp"

namespace recolor {

namespace {

int mis_rec(const std::vector<uint64_t>& adj, uint64_t candidates) {
    if (candidates == 0) return 0;
    // pick the candidate with the most candidate-neighbors
    int pick = -1, pick_deg = -1;
    for (uint64_t m = candidates; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int d = __builtin_popcountll(adj[v] & candidates);
        if (d > pick_deg) { pick_deg = d; pick = v; }
    }
    if (pick_deg <= 1) {
        // candidates induce a matching plus isolated vertices
        int verts = __builtin_popcountll(candidates);
        int edges = 0;
        for (uint64_t m = candidates; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            edges += __builtin_popcountll(adj[v] & candidates);
        }
        return verts - edges / 2;
    }
    int without = mis_rec(adj, candidates & ~(1ULL << pick));
    int with_v = 1 + mis_rec(adj, candidates & ~((1ULL << pick) | adj[pick]));
    return std::max(without, with_v);
}

bool color_rec(const Graph& g, const std::vector<Vertex>& order, size_t k, int num_colors,
               Coloring& col) {
    if (k == order.size()) return true;
    Vertex v = order[k];
    for (int c = 0; c < num_colors; ++c) {
        bool ok = true;
        for (Vertex u : g.adj[v])
            if (col[u] == c) { ok = false; break; }
        if (!ok) continue;
        col[v] = c;
        if (color_rec(g, order, k + 1, num_colors, col)) return true;
        col[v] = -1;
    }
    return false;
}

}  // namespace

int independence_number(const Graph& g, int cap) {
    if (g.size() > cap) throw std::invalid_argument("independence_number: size cap exceeded");
    if (g.size() == 0) return 0;
    std::vector<uint64_t> adj(g.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex u : g.adj[v]) adj[v] |= 1ULL << u;
    uint64_t all = g.size() == 64 ? ~0ULL : (1ULL << g.size()) - 1;
    return mis_rec(adj, all);
}

Coloring chromatic_coloring(const Graph& g, int cap) {
    if (g.size() > cap) throw std::invalid_argument("chromatic_coloring: size cap exceeded");
    // decreasing-degree order helps the backtracking
    std::vector<Vertex> order(g.size());
    for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (int k = 1; k <= std::max(1, g.size()); ++k) {
        Coloring col(g.size(), -1);
        if (color_rec(g, order, 0, k, col)) return col;
    }
    throw std::logic_error("chromatic_coloring: unreachable");
}

namespace {

/// k=2 block: complete bipartite minus a perfect matching, both sides of
/// size p; the coloring pairs matched vertices.
void add_block_g2(Graph& g, Coloring& col, int p, int& base_vertex, int& base_color) {
    for (int i = 0; i < p; ++i) {
        col[base_vertex + i] = base_color + i;          // side A
        col[base_vertex + p + i] = base_color + i;      // side B
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) g.add_edge(base_vertex + i, base_vertex + p + j);
    base_vertex += 2 * p;
    base_color += p;
}

/// k=3 block on 3p (p even) or 3p-1 (p odd) vertices in independent parts
/// I1, I2, I3; edges are all cross-part pairs with distinct colors.
void add_block_g3(Graph& g, Coloring& col, int p, int& base_vertex, int& base_color) {
    int half = (3 * p) / 2;
    std::vector<int> c1, c2, c3;
    for (int i = 1; i <= p; ++i) c1.push_back(i);
    for (int i = 1; i <= p; i += 2) c2.push_back(i);
    for (int i = 2; i <= p; i += 2) c3.push_back(i);
    {
        int next = p + 1;
        while (static_cast<int>(c2.size()) < p) c2.push_back(next++);
        int size3 = (p % 2 == 0) ? p : p - 1;
        next = p + 1;
        while (static_cast<int>(c3.size()) < size3) c3.push_back(next++);
    }
    std::vector<std::vector<int>> parts{c1, c2, c3};
    std::vector<std::vector<int>> ids;
    int v = base_vertex;
    for (auto& part : parts) {
        ids.push_back({});
        for (int c : part) {
            col[v] = base_color + (c - 1);
            ids.back().push_back(v);
            ++v;
        }
    }
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b)
            for (int x : ids[a])
                for (int y : ids[b])
                    if (col[x] != col[y]) g.add_edge(x, y);
    base_vertex = v;
    base_color += half;
}

}  // namespace

FrozenWitness frozen_family(int p, int k) {
    if (p < 2 || k < 2) throw std::invalid_argument("frozen_family: need p >= 2, k >= 2");
    int x = (k % 2 == 0) ? k / 2 : (k - 3) / 2;
    int y = (k % 2 == 0) ? 0 : 1;
    int n = x * 2 * p + y * ((p % 2 == 0) ? 3 * p : 3 * p - 1);
    FrozenWitness w;
    w.p = p;
    w.k = k;
    w.num_colors = (p * k) / 2;
    w.graph = Graph(n);
    w.coloring.assign(n, -1);
    int bv = 0, bc = 0;
    std::vector<std::pair<int, int>> blocks;  // [start, end) vertex ranges
    for (int i = 0; i < x; ++i) {
        int s = bv;
        add_block_g2(w.graph, w.coloring, p, bv, bc);
        blocks.push_back({s, bv});
    }
    for (int i = 0; i < y; ++i) {
        int s = bv;
        add_block_g3(w.graph, w.coloring, p, bv, bc);
        blocks.push_back({s, bv});
    }
    // complete join between distinct blocks
    for (size_t a = 0; a < blocks.size(); ++a)
        for (size_t b = a + 1; b < blocks.size(); ++b)
            for (int u = blocks[a].first; u < blocks[a].second; ++u)
                for (int v = blocks[b].first; v < blocks[b].second; ++v)
                    w.graph.add_edge(u, v);

    w.frozen = is_frozen(w.graph, w.coloring, w.num_colors);
    w.independence = independence_number(w.graph);
    Coloring chi = chromatic_coloring(w.graph);
    int used = *std::max_element(chi.begin(), chi.end()) + 1;
    w.k_colorable = used <= k;
    return w;
}

std::pair<Coloring, RecolorSequence> align_class(const Graph& g, const Coloring& c1,
                                                 const Coloring& target, int num_colors) {
    VertexSet all(g.size(), true);
    std::vector<int> class_size(num_colors, 0);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (c1[v] < 0 || c1[v] >= num_colors)
            throw std::invalid_argument("align_class: color outside palette");
        ++class_size[c1[v]];
    }
    int small = -1;
    for (int c = 0; c < num_colors; ++c)
        if (class_size[c] <= 1) { small = c; break; }
    if (small < 0) throw std::invalid_argument("align_class: no color class of size <= 1");

    int target_color;
    if (class_size[small] == 1) {
        Vertex v = -1;
        for (Vertex u = 0; u < g.size(); ++u)
            if (c1[u] == small) v = u;
        target_color = target[v];
    } else {
        Vertex v = 0;  // any nonempty target class; smallest vertex id
        target_color = target[v];
    }

    RecolorSequence seq;
    seq.alpha = c1;
    Coloring cur = c1;
    for (Vertex v = 0; v < g.size(); ++v)
        if (target[v] == target_color && cur[v] != small) {
            seq.steps.push_back({v, cur[v], small});
            cur[v] = small;
        }
    seq.beta = cur;
    return {cur, seq};
}

RecolorSequence recolor_bounded(const Graph& g, int p, int k, int ell, const Coloring& c1,
                                const Coloring& c2) {
    if (independence_number(g) > p)
        throw std::invalid_argument("recolor_bounded: independence number exceeds p");
    Coloring gamma = chromatic_coloring(g);
    int chi = g.size() ? *std::max_element(gamma.begin(), gamma.end()) + 1 : 0;
    if (chi > k) throw std::invalid_argument("recolor_bounded: graph is not k-colorable");
    if (ell < (p * k) / 2 + 1)
        throw std::invalid_argument("recolor_bounded: ell below floor(p*k/2)+1");
    VertexSet all(g.size(), true);
    ListAssignment L = ListAssignment::uniform(g.size(), ell);
    if (validate(g, all, L, c1) || validate(g, all, L, c2))
        throw std::invalid_argument("recolor_bounded: endpoints must be proper ell-colorings");

    RecolorSequence out;
    out.alpha = c1;
    out.beta = c2;
    if (c1 == c2) return out;

    // Align a graph coloring with gamma one class at a time: pick a color
    // class of size <= 1 among the remaining vertices, recolor the gamma
    // class through it, remove it, recurse. Each vertex moves at most once.
    auto to_gamma_partition = [&](const Coloring& start) {
        Coloring cur = start;
        std::vector<RecolorStep> steps;
        VertexSet remaining(g.size(), true);
        std::set<int> palette;
        for (int c = 0; c < ell; ++c) palette.insert(c);
        while (remaining.count > 0) {
            std::map<int, std::vector<Vertex>> by_color;
            for (Vertex v = 0; v < g.size(); ++v)
                if (remaining.contains(v)) by_color[cur[v]].push_back(v);
            int small = -1;
            for (int c : palette) {
                auto it = by_color.find(c);
                if (it == by_color.end() || it->second.size() <= 1) { small = c; break; }
            }
            if (small < 0) throw std::logic_error("recolor_bounded: small class must exist");
            // gamma class to align: the singleton's class, else the class of
            // the smallest remaining vertex
            Vertex pivot;
            auto it = by_color.find(small);
            if (it != by_color.end() && it->second.size() == 1)
                pivot = it->second.front();
            else
                pivot = remaining.members().front();
            int gclass = gamma[pivot];
            for (Vertex v = 0; v < g.size(); ++v) {
                if (!remaining.contains(v) || gamma[v] != gclass) continue;
                if (cur[v] != small) {
                    steps.push_back({v, cur[v], small});
                    cur[v] = small;
                }
            }
            for (Vertex v = 0; v < g.size(); ++v)
                if (remaining.contains(v) && gamma[v] == gclass) remaining.erase(v);
            palette.erase(small);
        }
        return std::make_pair(cur, steps);
    };

    auto [cstar, steps1] = to_gamma_partition(c1);
    auto [cstar2, steps2] = to_gamma_partition(c2);
    RecolorSequence mid = rename_classes(g, all, ell, cstar, cstar2);

    out.steps = steps1;
    out.steps.insert(out.steps.end(), mid.steps.begin(), mid.steps.end());
    for (auto rit = steps2.rbegin(); rit != steps2.rend(); ++rit)
        out.steps.push_back({rit->v, rit->to, rit->from});
    return out;
}

}  // namespace recolor
