#pragma once

#include <stdexcept>
#include <vector>

namespace recolor {

using Vertex = int;

/// Simple undirected graph over a fixed id space 0..size()-1. Algorithms
/// that peel vertices keep the id space and track membership with a
/// VertexSet mask, so colorings indexed by vertex id stay valid across
/// subgraph steps.
struct Graph {
    std::vector<std::vector<Vertex>> adj;  // sorted neighbor lists

    Graph() = default;
    explicit Graph(int n) : adj(n) {}

    int size() const { return static_cast<int>(adj.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    long long num_edges() const;
};

/// Membership mask over a graph's id space.
struct VertexSet {
    std::vector<char> in;
    int count = 0;

    VertexSet() = default;
    explicit VertexSet(int n, bool full = true)
        : in(n, full ? 1 : 0), count(full ? n : 0) {}

    bool contains(Vertex v) const { return in[v] != 0; }
    void insert(Vertex v) {
        if (!in[v]) { in[v] = 1; ++count; }
    }
    void erase(Vertex v) {
        if (in[v]) { in[v] = 0; --count; }
    }
    int size() const { return count; }
    std::vector<Vertex> members() const;
};

/// Degree of v inside the induced subgraph given by `present`.
int present_degree(const Graph& g, const VertexSet& present, Vertex v);

bool is_connected(const Graph& g, const VertexSet& present);

}  // namespace recolor
