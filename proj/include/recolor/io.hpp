#pragma once

#include <iosfwd>
#include <string>

#include "recolor/plane_graph.hpp"
#include "recolor/recolor_core.hpp"

namespace recolor {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rotation file: header "plane <n>", then lines "v: u1 u2 ..." in clockwise
// neighbor order, vertices 0-based. Vertices may appear in any order;
// missing lines mean empty rotations (rejected by build).
PlaneGraph parse_rotation(std::istream& in);
std::string emit_rotation(const PlaneGraph& g);

// List file: lines "v: c1 c2 ...".
ListAssignment parse_lists(std::istream& in, int n);
std::string emit_lists(const ListAssignment& L);

// Coloring file: lines "v c".
Coloring parse_coloring(std::istream& in, int n);
std::string emit_coloring(const Coloring& c);

// Sequence file: header "seq <n> <steps> <alpha_sum> <beta_sum>" followed by
// one "v old new" line per step. The sums are FNV-1a checksums of the
// endpoint colorings.
RecolorSequence parse_sequence(std::istream& in);
std::string emit_sequence(const RecolorSequence& seq);

uint64_t coloring_checksum(const Coloring& c);

}  // namespace recolor
