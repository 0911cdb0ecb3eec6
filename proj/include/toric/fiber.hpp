#pragma once

#include <vector>

#include "toric/errors.hpp"
#include "toric/matrix.hpp"
#include "toric/move.hpp"

namespace toric {

// all nonnegative integer solutions of A*x = degree
struct Fiber {
    Move degree;
    std::vector<Move> points; // lexicographically ascending
};

// FiberCapExceeded when the fiber holds more than caps.fiber points;
// FiberWorkExceeded when the search tree outgrows caps.fiber_nodes
Fiber fiber(const ToricMatrix& A, const Move& b, const Caps& caps = {});

// does the binomial of v lie in the ideal generated by the binomials of B?
// decided by walking the fiber of deg(v+) with moves drawn from +-B
bool in_ideal(const ToricMatrix& A, const Move& v, const std::vector<Move>& B,
              const Caps& caps = {});

struct MinimalGenerating {
    bool ok = true;
    std::vector<Move> redundant;

    explicit operator bool() const { return ok; }
};

// true iff no member lies in the ideal generated by the other members
MinimalGenerating is_minimal_generating(const ToricMatrix& A, const GraverSet& G,
                                        const Caps& caps = {});

// Graver elements g whose fiber at deg(g+) holds exactly the two points g+
// and g-, disconnected once the moves of that same degree are set aside
GraverSet indispensable(const ToricMatrix& A, const Caps& caps = {});
GraverSet indispensable(const ToricMatrix& A, const GraverSet& G, const Caps& caps = {});

// every minimal binomial generating set, enumerated degree by degree as
// spanning choices across fiber components under lower-degree moves
std::vector<std::vector<Move>> minimal_markov_bases(const ToricMatrix& A,
                                                    const Caps& caps = {});

// intersection of all minimal generating sets, by enumerating them outright
GraverSet indispensable_oracle(const ToricMatrix& A, const Caps& caps = {});

} // namespace toric
