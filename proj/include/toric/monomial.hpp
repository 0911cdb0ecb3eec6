#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/graph.hpp"
#include "toric/matrix.hpp"
#include "toric/move.hpp"

namespace toric {

// Monomial ideal given by the exponent vectors of its minimal generators.
struct MonomialIdealPresentation {
    std::size_t variable_count = 0;
    std::vector<Move> generators; // nonnegative, nonzero, pairwise non-dividing

    bool operator==(const MonomialIdealPresentation&) const = default;
};

void validate(const MonomialIdealPresentation& M);

// u <= v entrywise on nonnegative vectors
bool monomial_divides(const Move& u, const Move& v);

// divisibility-minimal sublist, deduplicated, sorted lexicographically;
// input must be nonempty with nonzero nonnegative vectors
MonomialIdealPresentation minimalize(std::size_t variable_count, std::vector<Move> generators);
MonomialIdealPresentation minimalize(std::vector<Move> generators);

// columns are the generator exponent vectors
ToricMatrix toric_matrix(const MonomialIdealPresentation& M);

// x_tail * x_head^{w_head} for each edge, in edge order; its toric_matrix
// equals incidence_matrix(D)
MonomialIdealPresentation edge_ideal(const WeightedOrientedGraph& D);

// generator i shares variable `variable` with generator `partner` only
struct SharedVariableCertificate {
    std::size_t generator = 0;
    std::size_t variable = 0;
    std::size_t partner = 0;

    bool operator==(const SharedVariableCertificate&) const = default;
};

struct MonomialHypothesis {
    bool ok = false;
    std::vector<SharedVariableCertificate> certificates; // one per generator when ok
    std::vector<std::size_t> failing_generators;         // nonempty when not ok
};

// every generator has support of size exactly 2 and some variable of it
// occurs in exactly one other generator and nowhere else
MonomialHypothesis theorem_hypothesis(const MonomialIdealPresentation& M);

// text format: `monomials <n_vars>` then one generator per line as
// space-separated exponents, `#` comments
MonomialIdealPresentation parse_monomials(std::istream& in);
std::string emit_monomials(const MonomialIdealPresentation& M);

} // namespace toric
