#include "toric/robust.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "toric/fiber.hpp"
#include "toric/graver.hpp"

namespace toric {

RobustnessReport strongly_robust(const ToricMatrix& A, const Caps& caps) {
    RobustnessReport report;
    report.caps_used = caps;
    try {
        GraverSet G = graver_basis(A, caps);
        GraverSet I = indispensable(A, G, caps);
        MinimalGenerating mg = is_minimal_generating(A, G, caps);
        bool robust = G.moves == I.moves;
        if (robust != mg.ok)
            throw EquivalenceViolation(
                "indispensable route and minimal-generation route disagree");
        std::vector<Move> dispensable;
        std::set_difference(G.moves.begin(), G.moves.end(), I.moves.begin(), I.moves.end(),
                            std::back_inserter(dispensable));
        if (dispensable != mg.redundant)
            throw EquivalenceViolation("dispensable set and redundant set disagree");
        report.graver_size = G.moves.size();
        report.indispensable_size = I.moves.size();
        report.strongly_robust = robust;
        report.minimal_generating = mg.ok;
        report.dispensable_witnesses = std::move(dispensable);
    } catch (const CapExceeded& e) {
        report = RobustnessReport{};
        report.caps_used = caps;
        report.status = "inconclusive";
        report.cap_hit = e.what();
    }
    return report;
}

RobustnessReport strongly_robust(const WeightedOrientedGraph& D, const Caps& caps) {
    StructureReport hypothesis;
    try {
        hypothesis = main_theorem_hypothesis(D, caps);
    } catch (const CapExceeded& e) {
        RobustnessReport report;
        report.caps_used = caps;
        report.status = "inconclusive";
        report.cap_hit = e.what();
        return report;
    }
    RobustnessReport report = strongly_robust(incidence_matrix(D), caps);
    report.hypothesis_results = std::move(hypothesis);
    return report;
}

} // namespace toric
