#pragma once

#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/recolor_core.hpp"

namespace recolor {

inline constexpr int kExactSolverCap = 30;

/// Exact maximum independent set size, branch and bound.
int independence_number(const Graph& g, int cap = kExactSolverCap);

/// An exact chi(G)-coloring, iterative deepening over k.
Coloring chromatic_coloring(const Graph& g, int cap = kExactSolverCap);

struct FrozenWitness {
    Graph graph;
    Coloring coloring;   // uses exactly floor(p*k/2) colors
    int num_colors = 0;
    int p = 0;
    int k = 0;
    bool frozen = false;       // verified, not assumed
    int independence = 0;      // exact
    bool k_colorable = false;  // exact
};

/// The frozen-coloring families: a bipartite-minus-matching block for k=2,
/// the three-part block for k=3, and complete joins of those blocks for
/// k >= 4 (k = 2x + 3y with y in {0,1}).
FrozenWitness frozen_family(int p, int k);

/// One alignment step: c1 has a color class with at most one vertex; the
/// output shares a class with `target` and recolors each touched vertex once.
std::pair<Coloring, RecolorSequence> align_class(const Graph& g, const Coloring& c1,
                                                 const Coloring& target, int num_colors);

/// Bounded-independence recoloring: at most 4 recolorings per vertex when
/// independence <= p, G is k-colorable, and ell >= floor(p*k/2)+1.
RecolorSequence recolor_bounded(const Graph& g, int p, int k, int ell, const Coloring& c1,
                                const Coloring& c2);

}  // namespace recolor
