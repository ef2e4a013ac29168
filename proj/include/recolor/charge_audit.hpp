#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/config_finder.hpp"
#include "recolor/plane_graph.hpp"

namespace recolor {

/// Exact charges in units of one sixth; all rule amounts (1/6, 1/3, 1/2, 2/3)
/// are integers in this unit, so zero tests are exact.
struct ChargeLedger {
    std::vector<long long> vertex_sixths;  // indexed by vertex id; absent = 0
    std::vector<long long> face_sixths;    // indexed by face id
    long long total() const;
};

/// Balanced charging: 6*(d(v)-4) per vertex and 6*(d(f)-4) per face;
/// the total is -48 sixths on every connected plane graph.
ChargeLedger balanced_charges(const PlaneGraph& g);

struct DiamondStats {
    std::vector<int> w_t;  // 3-faces incident, one per corner of v
    std::vector<int> w_d;  // special diamonds whose mid-edge meets v
    int w(Vertex v) const { return w_t[v] + w_d[v]; }
};

DiamondStats diamond_stats(const PlaneGraph& g);

enum class DischargePlan { T1, T2, T4 };

DischargePlan plan_for_strategy(Strategy s);
std::string plan_name(DischargePlan p);

struct ElementRef {
    enum Kind { VertexKind, FaceKind } kind;
    int id;
    bool operator==(const ElementRef&) const = default;
};

struct Transfer {
    std::string rule;
    ElementRef from;
    ElementRef to;
    long long sixths;
    std::vector<Vertex> route;  // long-distance discharging path, incl. endpoints
};

struct DischargeReport {
    DischargePlan plan;
    bool hypothesis_ok = true;
    std::vector<std::string> warnings;
    ChargeLedger final_ledger;
    std::vector<Transfer> transfers;
    /// Elements whose final charge is negative.
    std::vector<ElementRef> deficits;
    /// Deficits not accounted for by a configuration found on this instance;
    /// nonempty means the instance falsifies the plan's structural theorem.
    std::vector<ElementRef> negative_elements;
    /// The configuration that accounts for the deficits, when one exists.
    std::optional<Configuration> explained_by;
    /// Embedded H5 witnesses met during long-distance routing (second path).
    std::vector<Configuration> h5_witnesses;

    std::string to_text() const;
};

/// Apply the plan's rules to the balanced charges. Outside the plan's
/// hypothesis the run still completes, flagged in the report.
DischargeReport run_discharge(const PlaneGraph& g, DischargePlan plan);

}  // namespace recolor
