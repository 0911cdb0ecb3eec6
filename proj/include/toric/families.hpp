#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

enum class CycleOrientation { alternating, cyclic };

// Descriptor for the deterministic instance constructors.
//
// kind:
//   "cycle"        one cycle; cycle_lengths = {len}
//   "bouquet"      cycles sharing vertex 0; cycle_lengths lists them
//   "star"         cycles joined to vertex 0 by disjoint paths;
//                  path_edges[i] >= 1 edges lead to cycle i
//   "flower"       bouquet at vertex 0 plus extra cycles attached to it by
//                  paths; the last path_edges.size() entries of cycle_lengths
//                  are the attached cycles
//   "theta"        two vertices joined by three internally disjoint paths of
//                  path_edges = {a, b, c} edges (alias "cycle-with-chord-path")
//   "bouquet-tail" cycle_lengths = {l1, l2, l3}: two cycles sharing vertex 0
//                  plus a third joined by a path of path_edges = {p} edges to
//                  the first cycle's vertex next to 0
//
// weights: empty means all ones, otherwise one weight per vertex.
struct FamilySpec {
    std::string kind;
    std::vector<std::size_t> cycle_lengths;
    std::vector<std::size_t> path_edges;
    CycleOrientation orientation = CycleOrientation::alternating;
    std::vector<Int> weights;
};

WeightedOrientedGraph make_family(const FamilySpec& spec);

} // namespace toric
