#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recolor/config_finder.hpp"
#include "recolor/plane_graph.hpp"
#include "recolor/recolor_core.hpp"

namespace recolor {

// Fixed polyhedral seeds.
PlaneGraph icosahedron();
PlaneGraph octahedron();
PlaneGraph cube();
PlaneGraph dodecahedron();

// Rotation-system transforms; all preserve planarity by construction.
PlaneGraph dual_graph(const PlaneGraph& g);
PlaneGraph truncate_graph(const PlaneGraph& g);
PlaneGraph medial_graph(const PlaneGraph& g);
/// leapfrog = truncate(dual(.)), the standard fullerene refinement.
PlaneGraph leapfrog(const PlaneGraph& g);
/// Add a wheel center inside each face whose length is listed.
PlaneGraph wheel_fill(const PlaneGraph& g, const std::vector<int>& face_lengths);
/// Inscribe a triangle with three spokes to alternating corners of each
/// selected hexagonal face; creates 3-faces whose neighbors are 5-faces.
PlaneGraph inscribe_triangles(const PlaneGraph& g, int count, uint64_t seed);

// Parameterized families.
PlaneGraph grid(int w, int h);
PlaneGraph fan(int n);
PlaneGraph stacked_diamond_chain(int length);
PlaneGraph triangulated_polygon(int n, uint64_t seed);
PlaneGraph random_planar(int n, uint64_t seed, int deletions = 0);

/// Frozen-family plane embeddings for the parameter pairs that admit a
/// connected plane graph; others are infeasible.
PlaneGraph frozen_embed(int p, int k);

/// In-class instances with degree floors, used by the structural audits:
///  g1: wheel-filled double-medial fullerenes (min degree 5, class G1)
///  g2: double-medial fullerenes (4-regular, class G2)
///  gcal: fullerenes with inscribed triangles (min degree 3, class G-cal)
///  no4: medial fullerenes (4-regular, no 4-cycles)
PlaneGraph delta_floored_instance(Strategy s, int index);
int delta_floored_instance_count(Strategy s);

/// Random in-class instance for budget tests: a random triangulation thinned
/// by edge deletions until the class predicate holds.
PlaneGraph in_class_instance(Strategy s, int n, uint64_t seed);

/// Evaluate class membership for a strategy on a built graph.
bool in_strategy_class(const PlaneGraph& g, Strategy s);

struct FamilySpec {
    std::string family;
    int n = 0;
    uint64_t seed = 0;
    int p = 0, k = 0;
};

PlaneGraph generate(const FamilySpec& spec);

/// Deterministic proper coloring: greedy over a seed-shuffled vertex order,
/// restarting with new orders until it lands (lists at deg+1 always land).
Coloring random_proper_coloring(const Graph& g, const ListAssignment& L, uint64_t seed);

}  // namespace recolor
