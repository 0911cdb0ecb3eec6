#pragma once

#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/matrix.hpp"
#include "toric/move.hpp"

namespace toric {

// conformal normal form: repeatedly subtract the largest multiple of a
// reducer (either sign) that fits under v in the conformal order
Move conformal_reduce(Move v, const std::vector<Move>& reducers);

// all conformally minimal nonzero kernel vectors, by completion: seed with
// the kernel basis, close under pairwise sums modulo conformal reduction,
// then prune non-minimal elements
GraverSet graver_basis(const ToricMatrix& A, const Caps& caps = {});

// conformally minimal kernel vectors within the infinity-norm box, by
// exhaustive enumeration: assign the free columns of a row echelon form of A
// over the box, back-substitute the pivot columns exactly, keep the integer
// solutions that stay inside the box
GraverSet brute_force_graver(const ToricMatrix& A, long box, const Caps& caps = {});

struct Certificate {
    bool ok = true;
    std::string reason;
    Move witness;

    explicit operator bool() const { return ok; }
};

// (a) members lie in ker(A); (b) every kernel basis vector reduces to zero
// by G; (c) every pairwise sum over both signs reduces to zero; (d) members
// pairwise conformally incomparable. A set passing all four is exactly the
// Graver basis.
Certificate certificate_check(const ToricMatrix& A, const GraverSet& G);

// support-minimal kernel vectors: one primitive vector per column subset S
// with |S| = rank(A|_S) + 1 whose kernel vector covers all of S
GraverSet circuits(const ToricMatrix& A, const Caps& caps = {});

} // namespace toric
