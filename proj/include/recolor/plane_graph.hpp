#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// One facial walk. `walk[i] -> walk[i+1]` are the directed edge traversals;
/// the walk is cyclic, so a k-face stores exactly k vertices (with repeats
/// where a cut edge or cut vertex is visited twice). A face of length 0 is
/// the single face of a one-vertex graph.
struct Face {
    int id = -1;
    std::vector<Vertex> walk;
    int length() const { return static_cast<int>(walk.size()); }
};

struct ClassReport {
    int min_degree = 0;
    bool in_g1 = false;   // every 3-face has at most two adjacent 3-faces
    bool in_g2 = false;   // every 3-face has at most one adjacent 3-face
    bool in_g3 = false;   // faces adjacent to any 3-face are 6+-faces
    bool in_gcal = false; // adjacent faces 5+, and <=3 3-faces touch any 5-face
    bool has_4cycle = false;
};

/// Plane embedding as a rotation system over a fixed vertex id space.
/// Deleted vertices stay in the id space with empty rotations and
/// present() == false; faces are derived for the present subgraph only.
class PlaneGraph {
  public:
    /// Trace faces and validate the embedding. Rejects asymmetric rotations,
    /// repeated neighbors, self-loops, empty and disconnected inputs.
    static PlaneGraph build(const std::vector<std::vector<Vertex>>& rotation);

    /// Embedding restriction: drop S, keep surviving cyclic orders, re-derive
    /// faces. Rejects an empty or disconnected result.
    PlaneGraph delete_vertices(const std::vector<Vertex>& S) const;

    /// Same restriction without the connectivity requirement; the recursive
    /// algorithms peel witness sets that may disconnect the graph.
    PlaneGraph restrict_unchecked(const VertexSet& keep) const;

    int universe() const { return static_cast<int>(rotation_.size()); }
    int num_vertices() const { return present_.count; }
    long long num_edges() const;
    bool present(Vertex v) const { return present_.contains(v); }
    const VertexSet& present_set() const { return present_; }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }

    /// Face with the directed edge (u -> rotation(u)[i]) on its left.
    int left_face(Vertex u, int i) const { return left_face_[u][i]; }
    int left_face_of(Vertex u, Vertex v) const;

    int min_degree() const;
    int adjacent_3face_count(const Face& f) const;
    ClassReport classify() const;

    /// Abstract adjacency view (same id space, sorted neighbor lists).
    Graph as_graph() const;

    std::string to_rotation_text() const;

  private:
    PlaneGraph() = default;
    void derive_faces();

    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<int>> left_face_;  // parallel to rotation_
    VertexSet present_;
    std::vector<Face> faces_;
};

/// Distinct face ids (other than f itself) of 3-faces sharing an edge with f.
std::vector<int> adjacent_3faces(const PlaneGraph& g, const Face& f);

}  // namespace recolor
