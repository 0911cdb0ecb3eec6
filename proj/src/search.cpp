#include "toric/search.hpp"

#include <stdexcept>
#include <utility>

#include "toric/families.hpp"
#include "toric/fiber.hpp"
#include "toric/graver.hpp"
#include "toric/rng.hpp"

namespace toric {

namespace {

void bouquet_partitions(std::size_t remaining, std::size_t min_part,
                        std::vector<std::size_t>& parts,
                        std::vector<FamilySpec>& out) {
    if (remaining == 0) {
        if (parts.size() >= 2) {
            FamilySpec s;
            s.kind = "bouquet";
            s.cycle_lengths = parts;
            out.push_back(std::move(s));
        }
        return;
    }
    for (std::size_t part = min_part; part <= remaining; ++part) {
        parts.push_back(part);
        bouquet_partitions(remaining - part, part, parts, out);
        parts.pop_back();
    }
}

// all shapes of the family with exactly `total` edges, ascending
std::vector<FamilySpec> shapes(const std::string& kind, std::size_t total) {
    std::vector<FamilySpec> out;
    if (kind == "cycle") {
        if (total >= 3) {
            FamilySpec s;
            s.kind = "cycle";
            s.cycle_lengths = {total};
            out.push_back(std::move(s));
        }
    } else if (kind == "bouquet") {
        std::vector<std::size_t> parts;
        bouquet_partitions(total, 3, parts, out);
    } else if (kind == "theta") {
        // at most one path of a single edge, or the two hub vertices would
        // carry a repeated edge
        for (std::size_t a = 1; 3 * a <= total; ++a)
            for (std::size_t b = std::max<std::size_t>(a, 2); a + 2 * b <= total; ++b) {
                FamilySpec s;
                s.kind = "theta";
                s.path_edges = {a, b, total - a - b};
                out.push_back(std::move(s));
            }
    } else if (kind == "bouquet-tail") {
        for (std::size_t l1 = 3; l1 + 7 <= total; ++l1)
            for (std::size_t l2 = 3; l1 + 2 * l2 + 1 <= total; ++l2)
                for (std::size_t l3 = l2; l1 + l2 + l3 + 1 <= total; ++l3) {
                    FamilySpec s;
                    s.kind = "bouquet-tail";
                    s.cycle_lengths = {l1, l2, l3};
                    s.path_edges = {total - l1 - l2 - l3};
                    out.push_back(std::move(s));
                }
    }
    return out;
}

} // namespace

SearchResult search_counterexample(const SearchSpec& spec, const Caps& caps) {
    std::string kind = spec.family == "cycle-with-chord-path" ? "theta" : spec.family;
    if (kind != "cycle" && kind != "bouquet" && kind != "theta" && kind != "bouquet-tail")
        throw std::invalid_argument("search_counterexample: unknown family '" + spec.family + "'");
    if (spec.max_weight < 1)
        throw std::invalid_argument("search_counterexample: max_weight must be >= 1");

    SearchResult result;
    Rng rng(spec.seed);
    const int draws = spec.max_weight > 1 ? 5 : 0;
    for (std::size_t total = 3; total <= spec.max_edges; ++total) {
        for (FamilySpec shape : shapes(kind, total)) {
            for (CycleOrientation orient : {CycleOrientation::alternating, CycleOrientation::cyclic}) {
                shape.orientation = orient;
                shape.weights.clear();
                WeightedOrientedGraph base = make_family(shape);
                for (int draw = 0; draw <= draws; ++draw) {
                    if (result.instances_tried == spec.budget) return result;
                    ++result.instances_tried;
                    WeightedOrientedGraph D = base;
                    if (draw > 0)
                        for (auto& w : D.weights)
                            w = Int(static_cast<long>(rng.range(1, spec.max_weight)));
                    try {
                        ToricMatrix A = incidence_matrix(D);
                        GraverSet G = graver_basis(A, caps);
                        GraverSet I = indispensable(A, G, caps);
                        if (I.moves == G.moves) continue;
                        RobustnessReport full = strongly_robust(D, caps);
                        if (full.status == "ok" && !full.strongly_robust) {
                            result.found = true;
                            result.instance = std::move(D);
                            result.report = std::move(full);
                            return result;
                        }
                    } catch (const CapExceeded&) {
                    }
                }
            }
        }
    }
    return result;
}

} // namespace toric
