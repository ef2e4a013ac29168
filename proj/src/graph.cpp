#include "recolor/graph.hpp"

#include <algorithm>

namespace recolor {

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

long long Graph::num_edges() const {
    long long deg_sum = 0;
    for (const auto& nb : adj) deg_sum += static_cast<long long>(nb.size());
    return deg_sum / 2;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count);
    for (Vertex v = 0; v < static_cast<int>(in.size()); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

int present_degree(const Graph& g, const VertexSet& present, Vertex v) {
    int d = 0;
    for (Vertex u : g.adj[v])
        if (present.contains(u)) ++d;
    return d;
}

bool is_connected(const Graph& g, const VertexSet& present) {
    if (present.count == 0) return false;
    Vertex start = -1;
    for (Vertex v = 0; v < g.size(); ++v)
        if (present.contains(v)) { start = v; break; }
    std::vector<char> seen(g.size(), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex u : g.adj[v])
            if (present.contains(u) && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    return reached == present.count;
}

}  // namespace recolor
