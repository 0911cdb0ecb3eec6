#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "toric/errors.hpp"
#include "toric/graph.hpp"
#include "toric/robust.hpp"

namespace toric {

// Families: "cycle", "bouquet", "theta" (alias "cycle-with-chord-path"),
// "bouquet-tail". Unknown names raise std::invalid_argument.
struct SearchSpec {
    std::string family;
    std::size_t max_edges = 13;
    long max_weight = 3;
    std::uint64_t budget = 2000;
    std::uint64_t seed = 0;
};

struct SearchResult {
    bool found = false;
    std::uint64_t instances_tried = 0;
    std::optional<WeightedOrientedGraph> instance;
    std::optional<RobustnessReport> report;
};

// Walks the family smallest-first: total edges ascending, then shape, then
// orientation (alternating before cyclic), then weight draw (all ones, then
// five seeded draws in [1, max_weight]). Each instance is screened by
// comparing its Graver basis with its indispensable set; only a strict gap
// triggers the full robustness report, and only a conclusive
// strongly_robust = false counts as found. Capped instances are skipped.
// Deterministic for a fixed spec.
SearchResult search_counterexample(const SearchSpec& spec, const Caps& caps = {});

} // namespace toric
