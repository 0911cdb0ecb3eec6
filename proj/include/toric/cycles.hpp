#pragma once

#include <cstddef>
#include <vector>

#include "toric/errors.hpp"
#include "toric/graph.hpp"

namespace toric {

// Simple cycle of the underlying undirected graph. edge_indices[k] joins
// vertex_sequence[k] and vertex_sequence[k+1 mod length]; canonical form
// starts at the smallest vertex and runs toward its smaller neighbor.
struct Cycle {
    std::vector<std::size_t> edge_indices;
    std::vector<std::size_t> vertex_sequence;

    std::size_t length() const { return edge_indices.size(); }

    bool operator==(const Cycle&) const = default;
};

// every simple cycle exactly once, sorted by (length, vertex_sequence);
// throws CycleCapExceeded past caps.cycles
std::vector<Cycle> enumerate_cycles(const WeightedOrientedGraph& D, const Caps& caps = {});

// incidence restricted to the cycle, rows and columns ordered along it
ToricMatrix cycle_matrix(const WeightedOrientedGraph& D, const Cycle& C);

// det of the cycle's own incidence matrix is zero; false for every odd cycle
bool is_balanced(const WeightedOrientedGraph& D, const Cycle& C);

} // namespace toric
