#pragma once

#include <string>
#include <vector>

#include "recolor/config_finder.hpp"
#include "recolor/plane_graph.hpp"
#include "recolor/recolor_core.hpp"

namespace recolor {

struct BudgetCertificate {
    std::string strategy;
    int budget = 0;
    std::vector<int> counts;
    int max_count = 0;
    long long total_steps = 0;
    std::vector<std::string> warnings;

    std::string to_text() const;
};

struct RecolorResult {
    RecolorSequence seq;
    BudgetCertificate cert;
};

/// Raised when a peeled subinstance admits no reduction: a falsifying
/// certificate for the structural theorem on that (possibly out-of-class)
/// subgraph. Carries the subinstance in rotation text form.
struct StructureNotFound : std::runtime_error {
    explicit StructureNotFound(std::string snap)
        : std::runtime_error("no reduction found on a subinstance"), snapshot(std::move(snap)) {}
    std::string snapshot;
};

int strategy_budget(Strategy s);
int strategy_list_floor(Strategy s);

/// Recursive peel-and-extend along the strategy's reductions. Preconditions:
/// alpha/beta valid, lists at the strategy floor. Class membership is only a
/// warning; the recursion proceeds as long as reductions exist.
RecolorResult recolor(const PlaneGraph& g, const ListAssignment& L, const Coloring& alpha,
                      const Coloring& beta, Strategy s);

/// Degeneracy baseline: peel a vertex of degree <= d, recurse, extend.
/// Needs |L(v)| >= 2d+2 everywhere; per-vertex budget d+1.
RecolorResult recolor_degenerate(const Graph& g, const ListAssignment& L, const Coloring& alpha,
                                 const Coloring& beta, int d);

}  // namespace recolor
