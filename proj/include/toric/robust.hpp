#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/checks.hpp"
#include "toric/errors.hpp"
#include "toric/graph.hpp"
#include "toric/matrix.hpp"
#include "toric/move.hpp"

namespace toric {

struct RobustnessReport {
    std::string status = "ok"; // "inconclusive" when a cap stopped the run
    std::string cap_hit;
    std::size_t graver_size = 0;
    std::size_t indispensable_size = 0;
    bool strongly_robust = false;
    bool minimal_generating = false;
    std::vector<Move> dispensable_witnesses;
    std::optional<StructureReport> hypothesis_results;
    Caps caps_used;
};

// verdict: Graver basis equals the indispensable set; cross-checked against
// the minimal-generation route, and any disagreement between the two routes
// raises EquivalenceViolation
RobustnessReport strongly_robust(const ToricMatrix& A, const Caps& caps = {});

// same verdict on the incidence matrix, structural hypothesis attached
RobustnessReport strongly_robust(const WeightedOrientedGraph& D, const Caps& caps = {});

} // namespace toric
