#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toric/cycles.hpp"
#include "toric/graph.hpp"

namespace toric {

// Replayable evidence for a failed check: which condition, which edge and
// cycle indices (cycles index into enumerate_cycles order).
struct Witness {
    std::string condition;
    std::vector<std::size_t> edges;
    std::vector<std::size_t> cycles;

    bool operator==(const Witness&) const = default;
};

struct CheckResult {
    bool ok = true;
    std::vector<Witness> witnesses;

    explicit operator bool() const { return ok; }
};

struct StructureReport {
    bool every_edge_meets_degree2 = false;
    bool cycles_share_single_vertex = false;
    bool no_two_cycles_share_path = false;
    bool main_theorem_hypothesis = false;
    // connecting paths run between cycle vertex sets, stay off every cycle
    // vertex in their interior, and use no cycle edge
    std::string connecting_path_rule = "internally-cycle-disjoint";
    std::vector<Witness> witnesses;
};

// each edge has at least one endpoint of degree exactly 2
CheckResult every_edge_meets_degree_two(const WeightedOrientedGraph& D);

// no two distinct simple cycles have a common edge
CheckResult no_two_cycles_share_path(const WeightedOrientedGraph& D, const Caps& caps = {});

// all cycles pass through one common vertex and pairwise meet only there
CheckResult cycles_share_single_vertex(const WeightedOrientedGraph& D, const Caps& caps = {});

// Full report. main_theorem_hypothesis holds iff: no two cycles share an
// edge; every cycle edge meets a degree-2 vertex; and for each pair of
// cycles joined to a third by connecting paths with a common edge e, either
// e meets a degree-2 vertex or the third cycle is vertex-disjoint from all
// other cycles and every connecting path from it contains e.
StructureReport main_theorem_hypothesis(const WeightedOrientedGraph& D, const Caps& caps = {});

} // namespace toric
