#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/plane_graph.hpp"

namespace recolor {

enum class Strategy { g1, g2, gcal, no4 };

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

enum class ConfigKind { LowDegree, DiamondH, H1, H2, H3, H4, H5, H6, Shen };

std::string config_kind_name(ConfigKind k);

struct RoleVertex {
    std::string role;
    Vertex v;
};

/// A path of a configuration witness. `vertices` starts at the shared initial
/// vertex. `removed`, when set, is the graph vertex whose deletion makes the
/// trimmed terminal play the 3-endpoint role; it always lies on a path that
/// is re-added later.
struct WitnessPath {
    std::vector<Vertex> vertices;
    std::optional<Vertex> removed;
    int interior() const { return static_cast<int>(vertices.size()) - 2; }
};

struct Configuration {
    ConfigKind kind;
    int threshold = -1;                // LowDegree only
    std::vector<RoleVertex> vertices;  // role-labelled witness
    std::vector<WitnessPath> paths;    // H5: 2 paths, H6: 4 paths

    Vertex role(const std::string& name) const;
    std::vector<Vertex> vertex_set() const;
    std::string to_text() const;
};

/// Degree-floor check first (g1: <=4, g2: <=3, gcal: <=2, no4: <=3), then the
/// strategy's configuration set in theorem-statement order. Deterministic:
/// scans ascend by vertex id, smallest witness tuple wins.
std::optional<Configuration> find_reduction(const PlaneGraph& g, Strategy s);

struct FacialPathResult {
    enum Status { Found, NotFound, TwoPaths } status = NotFound;
    std::vector<Vertex> path;       // Found: u ... w, w the 3-vertex
    std::optional<Configuration> h5;  // TwoPaths: embedded witness
};

/// The 4(p)3-paths starting at u along facial walks of the 6^- faces incident
/// to the edge (v,u), where deg(v) >= 5 and deg(u) == 4. A second distinct
/// path yields an H5 witness instead of an error.
FacialPathResult find_facial_x_p_3_path(const PlaneGraph& g, Vertex v, Vertex u, int max_p);

/// Minimum-order trimmed witnesses in re-add normal form: paths pairwise
/// share only the initial vertex, every trimmed terminal's removed vertex
/// lies on a later path, final path ends at a true 3-vertex.
Configuration minimize_h5(const PlaneGraph& g, const Configuration& witness);
Configuration minimize_h6(const PlaneGraph& g, const Configuration& witness);

/// Re-check a witness against its kind's degree/incidence invariants.
bool validate_configuration(const PlaneGraph& g, const Configuration& c);

}  // namespace recolor
