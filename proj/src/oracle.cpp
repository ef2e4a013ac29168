#include "recolor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace recolor {

namespace {

/// Dense state table keyed by the packed list-position vector.
struct StateTable {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> keys;

    static std::string key_of(const std::vector<uint8_t>& pos) {
        return std::string(pos.begin(), pos.end());
    }
    int intern(const std::vector<uint8_t>& pos) {
        auto [it, fresh] = index.try_emplace(key_of(pos), static_cast<int>(keys.size()));
        if (fresh) keys.push_back(it->first);
        return it->second;
    }
    int lookup(const std::vector<uint8_t>& pos) const {
        auto it = index.find(key_of(pos));
        return it == index.end() ? -1 : it->second;
    }
    long long size() const { return static_cast<long long>(keys.size()); }
};

struct Enumerator {
    const Graph& g;
    const ListAssignment& L;
    std::vector<Vertex> order;  // present vertices

    Enumerator(const Graph& g_, const ListAssignment& L_) : g(g_), L(L_) {
        for (Vertex v = 0; v < g.size(); ++v)
            if (!L.at(v).empty()) order.push_back(v);
    }

    template <typename F>
    void enumerate(F&& sink) const {
        std::vector<uint8_t> pos(g.size(), 0);
        std::vector<int> color(g.size(), -1);
        rec(0, pos, color, sink);
    }

  private:
    template <typename F>
    void rec(size_t k, std::vector<uint8_t>& pos, std::vector<int>& color, F&& sink) const {
        if (k == order.size()) {
            sink(pos);
            return;
        }
        Vertex v = order[k];
        const auto& lst = L.at(v);
        for (size_t i = 0; i < lst.size(); ++i) {
            int c = lst[i];
            bool ok = true;
            for (Vertex u : g.adj[v])
                if (color[u] == c) { ok = false; break; }
            if (!ok) continue;
            pos[v] = static_cast<uint8_t>(i);
            color[v] = c;
            rec(k + 1, pos, color, sink);
            color[v] = -1;
        }
    }
};

Coloring decode(const Graph& g, const ListAssignment& L, const std::string& key) {
    Coloring c(g.size(), -1);
    for (Vertex v = 0; v < g.size(); ++v)
        if (!L.at(v).empty()) c[v] = L.at(v)[static_cast<uint8_t>(key[v])];
    return c;
}

std::vector<uint8_t> encode(const Graph& g, const ListAssignment& L, const Coloring& c) {
    std::vector<uint8_t> pos(g.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (L.at(v).empty()) continue;
        const auto& lst = L.at(v);
        auto it = std::lower_bound(lst.begin(), lst.end(), c[v]);
        if (it == lst.end() || *it != c[v])
            throw std::invalid_argument("coloring is not on the list assignment");
        pos[v] = static_cast<uint8_t>(it - lst.begin());
    }
    return pos;
}

/// Single-vertex moves from a state, as packed positions.
template <typename F>
void for_neighbors_of_state(const Graph& g, const ListAssignment& L, const std::string& key,
                            F&& sink) {
    std::vector<uint8_t> pos(key.begin(), key.end());
    Coloring col = decode(g, L, key);
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto& lst = L.at(v);
        if (lst.empty()) continue;
        for (size_t i = 0; i < lst.size(); ++i) {
            if (static_cast<uint8_t>(i) == pos[v]) continue;
            int c = lst[i];
            bool ok = true;
            for (Vertex u : g.adj[v])
                if (col[u] == c) { ok = false; break; }
            if (!ok) continue;
            uint8_t save = pos[v];
            pos[v] = static_cast<uint8_t>(i);
            sink(pos);
            pos[v] = save;
        }
    }
}

}  // namespace

long long count_colorings(const Graph& g, const ListAssignment& L, long long cap) {
    long long n = 0;
    Enumerator en(g, L);
    struct Stop {};
    try {
        en.enumerate([&](const std::vector<uint8_t>&) {
            if (++n > cap) throw Stop{};
        });
    } catch (const Stop&) {
        throw CapExceeded{};
    }
    return n;
}

RecoloringGraphStats build_recoloring_graph(const Graph& g, const ListAssignment& L,
                                            long long cap) {
    StateTable table;
    {
        Enumerator en(g, L);
        struct Stop {};
        try {
            en.enumerate([&](const std::vector<uint8_t>& pos) {
                table.intern(pos);
                if (table.size() > cap) throw Stop{};
            });
        } catch (const Stop&) {
            throw CapExceeded{};
        }
    }
    const long long S = table.size();
    RecoloringGraphStats st;
    st.num_colorings = S;

    // adjacency in CSR form
    std::vector<std::vector<int>> adj(S);
    for (int s = 0; s < S; ++s)
        for_neighbors_of_state(g, L, table.keys[s], [&](const std::vector<uint8_t>& npos) {
            int t = table.lookup(npos);
            if (t >= 0 && t != s) adj[s].push_back(t);
        });

    // components
    std::vector<int> comp(S, -1);
    int ncomp = 0;
    for (int s = 0; s < S; ++s) {
        if (comp[s] >= 0) continue;
        std::deque<int> q{s};
        comp[s] = ncomp;
        long long size = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            ++size;
            for (int y : adj[x])
                if (comp[y] < 0) { comp[y] = ncomp; q.push_back(y); }
        }
        st.component_sizes.push_back(size);
        ++ncomp;
    }
    st.connected = (ncomp <= 1);
    for (int s = 0; s < S; ++s)
        if (adj[s].empty() && S > 1)
            st.frozen_colorings.push_back(decode(g, L, table.keys[s]));

    if (st.connected && S > 0) {
        auto bfs_ecc = [&](int src) {
            std::vector<int> dist(S, -1);
            std::deque<int> q{src};
            dist[src] = 0;
            long long ecc = 0;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                ecc = std::max<long long>(ecc, dist[x]);
                for (int y : adj[x])
                    if (dist[y] < 0) { dist[y] = dist[x] + 1; q.push_back(y); }
            }
            return ecc;
        };
        long long diam = 0;
        if (S <= 20000) {
            for (int s = 0; s < S; ++s) diam = std::max(diam, bfs_ecc(s));
            st.diameter_exact = true;
        } else {
            // double sweep from a sample of sources: a lower bound
            for (int s = 0; s < S; s += std::max<long long>(1, S / 64))
                diam = std::max(diam, bfs_ecc(s));
            st.diameter_exact = false;
        }
        st.diameter = diam;
    }
    return st;
}

std::optional<long long> oracle_distance(const Graph& g, const ListAssignment& L,
                                         const Coloring& alpha, const Coloring& beta,
                                         long long cap) {
    VertexSet all(g.size(), true);
    if (validate(g, all, L, alpha) || validate(g, all, L, beta))
        throw std::invalid_argument("oracle_distance: endpoints must be valid L-colorings");
    auto a = encode(g, L, alpha);
    auto b = encode(g, L, beta);
    if (a == b) return 0;
    std::string target = StateTable::key_of(b);
    StateTable table;
    std::deque<std::pair<int, long long>> q;
    q.push_back({table.intern(a), 0});
    while (!q.empty()) {
        auto [s, d] = q.front();
        q.pop_front();
        std::string key = table.keys[s];
        bool found = false;
        long long result = 0;
        for_neighbors_of_state(g, L, key, [&](const std::vector<uint8_t>& npos) {
            if (found) return;
            std::string nk = StateTable::key_of(npos);
            if (nk == target) { found = true; result = d + 1; return; }
            if (table.index.count(nk)) return;
            if (table.size() >= cap) throw CapExceeded{};
            int t = table.intern(npos);
            q.push_back({t, d + 1});
        });
        if (found) return result;
    }
    return std::nullopt;  // different components
}

bool is_frozen(const Graph& g, const Coloring& coloring, int num_colors) {
    VertexSet all(g.size(), true);
    ListAssignment L = ListAssignment::uniform(g.size(), num_colors);
    if (auto bad = validate(g, all, L, coloring))
        throw std::invalid_argument("is_frozen: improper coloring: " + bad->describe());
    for (Vertex v = 0; v < g.size(); ++v) {
        std::vector<char> seen(num_colors, 0);
        seen[coloring[v]] = 1;
        for (Vertex u : g.adj[v]) seen[coloring[u]] = 1;
        for (int c = 0; c < num_colors; ++c)
            if (!seen[c]) return false;
    }
    return true;
}

std::string RecoloringGraphStats::to_text() const {
    std::ostringstream os;
    os << "colorings: " << num_colorings << "\n";
    os << "connected: " << (connected ? "true" : "false") << "\n";
    if (diameter)
        os << "diameter: " << *diameter << (diameter_exact ? "" : " (sampled)") << "\n";
    else
        os << "diameter: inf\n";
    os << "components: " << component_sizes.size() << "\n";
    os << "frozen: " << frozen_colorings.size() << "\n";
    return os.str();
}

}  // namespace recolor
