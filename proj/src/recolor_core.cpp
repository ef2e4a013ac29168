#include "recolor/recolor_core.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace recolor {

ListAssignment ListAssignment::uniform(int n, int num_colors) {
    ListAssignment L;
    L.lists.assign(n, {});
    for (auto& l : L.lists)
        for (int c = 0; c < num_colors; ++c) l.push_back(c);
    return L;
}

bool ListAssignment::allows(Vertex v, int c) const {
    const auto& l = lists[v];
    return std::binary_search(l.begin(), l.end(), c);
}

std::vector<int> RecolorSequence::counts(int n) const {
    std::vector<int> c(n, 0);
    for (const auto& s : steps) ++c[s.v];
    return c;
}

int RecolorSequence::max_count(int n) const {
    auto c = counts(n);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

std::string Violation::describe() const {
    switch (kind) {
        case EdgeConflict: return "monochromatic edge " + std::to_string(u) + "-" + std::to_string(v);
        case ListViolation: return "vertex " + std::to_string(u) + " colored outside its list";
        case NotColored: return "vertex " + std::to_string(u) + " has no color";
        case BadStep: return "step at vertex " + std::to_string(u) + " malformed";
    }
    return "unknown";
}

std::optional<Violation> validate(const Graph& g, const VertexSet& present,
                                  const ListAssignment& L, const Coloring& coloring) {
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!present.contains(v)) continue;
        if (coloring[v] < 0) return Violation{Violation::NotColored, v, -1};
        if (!L.allows(v, coloring[v])) return Violation{Violation::ListViolation, v, -1};
        for (Vertex u : g.adj[v])
            if (u > v && present.contains(u) && coloring[u] == coloring[v])
                return Violation{Violation::EdgeConflict, v, u};
    }
    return std::nullopt;
}

std::optional<Violation> validate_sequence(const Graph& g, const VertexSet& present,
                                           const ListAssignment& L,
                                           const RecolorSequence& seq) {
    Coloring cur = seq.alpha;
    if (auto v = validate(g, present, L, cur)) return v;
    for (const auto& s : seq.steps) {
        if (!present.contains(s.v) || cur[s.v] != s.from || s.from == s.to)
            return Violation{Violation::BadStep, s.v, -1};
        if (!L.allows(s.v, s.to)) return Violation{Violation::ListViolation, s.v, -1};
        for (Vertex u : g.adj[s.v])
            if (present.contains(u) && cur[u] == s.to)
                return Violation{Violation::EdgeConflict, s.v, u};
        cur[s.v] = s.to;
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (present.contains(v) && cur[v] != seq.beta[v])
            return Violation{Violation::BadStep, v, -1};
    return std::nullopt;
}

int keylemma_bound(int t, int list_size, int degree) {
    int d = list_size - degree - 1;
    if (d <= 0) throw std::invalid_argument("list too small for extension");
    return (t + d - 1) / d + 1;
}

std::vector<int> chain_budgets(int c1, int p) {
    std::vector<int> out;
    int prev = c1;
    for (int i = 0; i < p + 1; ++i) {
        int c = (484 + prev + 2) / 3 + 1;
        out.push_back(c);
        prev = c;
    }
    return out;
}

RecolorSequence extend_vertex(const Graph& g, const VertexSet& present,
                              const ListAssignment& L, Vertex v,
                              const RecolorSequence& sigma, int alpha_v, int beta_v) {
    if (!present.contains(v)) throw std::invalid_argument("extend_vertex: v not present");
    const int deg = present_degree(g, present, v);
    if (L.size(v) < deg + 2)
        throw std::invalid_argument("extend_vertex: |L(v)| < deg(v)+2");
    if (!L.allows(v, alpha_v) || !L.allows(v, beta_v))
        throw std::invalid_argument("extend_vertex: endpoint color outside list");

    std::vector<char> is_nb(g.size(), 0);
    for (Vertex u : g.adj[v])
        if (present.contains(u)) is_nb[u] = 1;

    // Indices of neighbor steps, and for each color the queue of positions
    // where that color is about to appear on a neighbor.
    std::map<int, std::vector<int>> color_positions;  // color -> neighbor-step indices, ascending
    {
        int pos = 0;
        for (const auto& s : sigma.steps) {
            if (is_nb[s.v]) {
                color_positions[s.to].push_back(pos);
                ++pos;
            }
        }
    }
    std::map<int, int> cursor;  // color -> index into color_positions[color]

    Coloring cur = sigma.alpha;
    cur[v] = alpha_v;

    RecolorSequence out;
    out.alpha = cur;

    constexpr int kNever = INT32_MAX;
    auto next_collision = [&](int color, int from_pos) {
        auto it = color_positions.find(color);
        if (it == color_positions.end()) return kNever;
        const auto& ps = it->second;
        int lo = cursor.count(color) ? cursor[color] : 0;
        while (lo < static_cast<int>(ps.size()) && ps[lo] < from_pos) ++lo;
        cursor[color] = lo;
        return lo < static_cast<int>(ps.size()) ? ps[lo] : kNever;
    };

    int vcol = alpha_v;
    int nb_pos = 0;
    for (const auto& s : sigma.steps) {
        if (is_nb[s.v] && s.to == vcol) {
            // Recolor v first: among list colors unused by current neighbors,
            // take the one whose next appearance in the remaining neighbor
            // stream is farthest (ties: smallest color).
            std::set<int> blocked;
            for (Vertex u : g.adj[v])
                if (present.contains(u)) blocked.insert(cur[u]);
            int best_color = -1, best_dist = -1;
            for (int c : L.at(v)) {
                if (c == vcol || blocked.count(c)) continue;
                int dist = next_collision(c, nb_pos);
                if (dist > best_dist) { best_dist = dist; best_color = c; }
            }
            if (best_color < 0) throw std::logic_error("extension invariant broken: no color available");
            out.steps.push_back({v, vcol, best_color});
            vcol = best_color;
            cur[v] = vcol;
        }
        out.steps.push_back(s);
        cur[s.v] = s.to;
        if (is_nb[s.v]) ++nb_pos;
    }
    if (vcol != beta_v) {
        out.steps.push_back({v, vcol, beta_v});
        vcol = beta_v;
    }
    out.beta = sigma.beta;
    out.beta[v] = beta_v;
    return out;
}

RecolorSequence chain_extend(const Graph& g, VertexSet present, const ListAssignment& L,
                             std::span<const Vertex> path_tail, RecolorSequence seq,
                             const Coloring& alpha, const Coloring& beta) {
    for (Vertex v : path_tail) {
        present.insert(v);
        seq = extend_vertex(g, present, L, v, seq, alpha[v], beta[v]);
    }
    return seq;
}

RecolorSequence rename_classes(const Graph& g, const VertexSet& present, int k_prime,
                               const Coloring& c_from, const Coloring& c_to) {
    // Collect the common partition: class representative -> members.
    std::map<int, std::vector<Vertex>> by_from;
    for (Vertex v = 0; v < g.size(); ++v)
        if (present.contains(v)) by_from[c_from[v]].push_back(v);
    std::map<int, int> from_to;  // from-color -> to-color, per class
    for (auto& [fc, members] : by_from) {
        int tc = c_to[members.front()];
        for (Vertex v : members)
            if (c_to[v] != tc)
                throw std::invalid_argument("rename_classes: colorings induce different partitions");
        from_to[fc] = tc;
    }
    {   // the to-coloring must not merge two classes
        std::set<int> seen;
        for (auto& [fc, tc] : from_to)
            if (!seen.insert(tc).second)
                throw std::invalid_argument("rename_classes: colorings induce different partitions");
    }
    int m = static_cast<int>(from_to.size());
    if (k_prime <= m) throw std::invalid_argument("rename_classes: no spare color");
    for (auto& [fc, tc] : from_to)
        if (fc >= k_prime || tc >= k_prime)
            throw std::invalid_argument("rename_classes: color outside palette");

    RecolorSequence out;
    out.alpha = c_from;
    out.beta = c_to;
    Coloring cur = c_from;
    std::set<int> occupied;  // colors currently held by some class
    for (auto& [fc, tc] : from_to) occupied.insert(fc);

    auto move_class = [&](int fc, int to_color) {
        int col = cur[by_from[fc].front()];
        for (Vertex v : by_from[fc]) {
            out.steps.push_back({v, cur[v], to_color});
            cur[v] = to_color;
        }
        occupied.erase(col);
        occupied.insert(to_color);
    };

    // Moving classes form a functional graph on colors with in/out degree <= 1:
    // disjoint chains and cycles.
    std::map<int, int> moving;
    std::set<int> is_target;
    for (auto& [fc, tc] : from_to)
        if (fc != tc) { moving[fc] = tc; is_target.insert(tc); }

    std::set<int> done;
    // Chains first: head = moving class whose from-color nothing targets.
    for (auto& [h, _] : moving) {
        if (done.count(h) || is_target.count(h)) continue;
        std::vector<int> chain;
        int c = h;
        while (moving.count(c)) { chain.push_back(c); c = moving[c]; }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) move_class(*it, moving[*it]);
        for (int x : chain) done.insert(x);
    }
    // Remaining moving classes lie on cycles.
    for (auto& [f0, _] : moving) {
        if (done.count(f0)) continue;
        std::vector<int> cycle;
        int c = f0;
        do { cycle.push_back(c); c = moving[c]; } while (c != f0);
        int spare = -1;
        for (int s = 0; s < k_prime; ++s)
            if (!occupied.count(s)) { spare = s; break; }
        if (spare < 0) throw std::invalid_argument("rename_classes: no spare color");
        move_class(f0, spare);
        for (auto it = cycle.rbegin(); it != cycle.rend() && *it != f0; ++it)
            move_class(*it, moving[*it]);
        move_class(f0, moving[f0]);  // class parked on spare ends on its target
        for (int x : cycle) done.insert(x);
    }
    return out;
}

}  // namespace recolor
