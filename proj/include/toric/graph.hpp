#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/move.hpp"

namespace toric {

struct Edge {
    std::size_t tail = 0;
    std::size_t head = 0;

    bool operator==(const Edge&) const = default;
};

// Directed simple graph with a positive integer weight per vertex. Vertices
// are 0-based in memory, 1-based in the text format.
struct WeightedOrientedGraph {
    std::size_t vertex_count = 0;
    std::vector<Int> weights;
    std::vector<Edge> edges;

    bool operator==(const WeightedOrientedGraph&) const = default;
};

// throws std::invalid_argument on loops, repeated unordered pairs,
// weights < 1, or index/size mismatches
void validate(const WeightedOrientedGraph& D);

// column j: 1 at the tail row of edge j, w_head at the head row, the
// exponent vector of x_tail * x_head^{w_head}
ToricMatrix incidence_matrix(const WeightedOrientedGraph& D);

// edges incident to v, inward or outward
std::size_t vertex_degree(const WeightedOrientedGraph& D, std::size_t v);

// text format: `wog <n>`, `weights w_1 ... w_n`, `edge <tail> <head>` lines
// with 1-based vertices, `#` comments
WeightedOrientedGraph parse_wog(std::istream& in);
std::string emit_wog(const WeightedOrientedGraph& D);

} // namespace toric
