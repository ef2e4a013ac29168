#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/recolor_core.hpp"

namespace recolor {

struct CapExceeded : std::runtime_error {
    CapExceeded() : std::runtime_error("coloring count exceeds the oracle cap") {}
};

struct RecoloringGraphStats {
    long long num_colorings = 0;
    bool connected = false;
    std::optional<long long> diameter;  // nullopt when disconnected
    bool diameter_exact = true;
    std::vector<long long> component_sizes;
    std::vector<Coloring> frozen_colorings;  // isolated vertices

    std::string to_text() const;
};

inline constexpr long long kDefaultOracleCap = 1'000'000;

/// Explicit construction of the recoloring graph on all L-colorings; BFS
/// all-pairs diameter when the state count stays small, sampled otherwise.
RecoloringGraphStats build_recoloring_graph(const Graph& g, const ListAssignment& L,
                                            long long cap = kDefaultOracleCap);

/// Exact BFS distance between two L-colorings; nullopt when they lie in
/// different components.
std::optional<long long> oracle_distance(const Graph& g, const ListAssignment& L,
                                         const Coloring& alpha, const Coloring& beta,
                                         long long cap = kDefaultOracleCap);

/// True iff every closed neighborhood sees all of colors 0..num_colors-1.
bool is_frozen(const Graph& g, const Coloring& coloring, int num_colors);

/// Count proper L-colorings, aborting past the cap.
long long count_colorings(const Graph& g, const ListAssignment& L, long long cap);

}  // namespace recolor
