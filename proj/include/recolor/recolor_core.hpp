#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// Per-vertex color; -1 marks a vertex outside the current subgraph.
using Coloring = std::vector<int>;

/// Per-vertex finite color sets, sorted ascending.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment uniform(int n, int num_colors);
    const std::vector<int>& at(Vertex v) const { return lists[v]; }
    int size(Vertex v) const { return static_cast<int>(lists[v].size()); }
    bool allows(Vertex v, int c) const;
};

struct RecolorStep {
    Vertex v;
    int from;
    int to;
    bool operator==(const RecolorStep&) const = default;
};

struct RecolorSequence {
    Coloring alpha;
    Coloring beta;
    std::vector<RecolorStep> steps;

    std::vector<int> counts(int n) const;
    int max_count(int n) const;
};

struct Violation {
    enum Kind { EdgeConflict, ListViolation, NotColored, BadStep } kind;
    Vertex u = -1;
    Vertex v = -1;
    std::string describe() const;
};

/// ok (nullopt) iff `coloring` is proper on the present subgraph and every
/// present vertex holds a color from its list.
std::optional<Violation> validate(const Graph& g, const VertexSet& present,
                                  const ListAssignment& L, const Coloring& coloring);

/// Replays the sequence from its alpha endpoint, checking every intermediate
/// coloring; nullopt iff the whole sequence is valid and lands on beta.
std::optional<Violation> validate_sequence(const Graph& g, const VertexSet& present,
                                           const ListAssignment& L,
                                           const RecolorSequence& seq);

/// ceil(t / (list_size - degree - 1)) + 1, the extension budget of the
/// one-vertex extension lemma.
int keylemma_bound(int t, int list_size, int degree);

/// Budgets c_2..c_{p+2} of the chain-extension recurrence
/// c_i = ceil((484 + c_{i-1}) / 3) + 1.
std::vector<int> chain_budgets(int c1, int p);

/// Extend a sequence on G* - v to one on G*. `present` includes v. The
/// returned sequence restricted to G* - v reproduces `sigma` step for step,
/// and v is recolored at most keylemma_bound(t, |L(v)|, deg(v)) times where
/// t counts the recolorings of v's present neighbors in `sigma`.
RecolorSequence extend_vertex(const Graph& g, const VertexSet& present,
                              const ListAssignment& L, Vertex v,
                              const RecolorSequence& sigma, int alpha_v, int beta_v);

/// Re-add the tail vertices of an x(p)3-path one at a time, front to back.
/// `present` excludes all of `path_tail`; alpha/beta supply endpoint colors.
RecolorSequence chain_extend(const Graph& g, VertexSet present, const ListAssignment& L,
                             std::span<const Vertex> path_tail, RecolorSequence seq,
                             const Coloring& alpha, const Coloring& beta);

/// Renaming procedure: c_from and c_to induce the same partition into color
/// classes; k_prime exceeds the number of nonempty classes. Recolors every
/// vertex at most twice (park one class of each color cycle, then rotate).
RecolorSequence rename_classes(const Graph& g, const VertexSet& present, int k_prime,
                               const Coloring& c_from, const Coloring& c_to);

}  // namespace recolor
