#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toric/robust.hpp"

#include <algorithm>
#include <vector>

#include "testutil.hpp"
#include "toric/families.hpp"
#include "toric/fiber.hpp"
#include "toric/graver.hpp"

using namespace toric;
using namespace toric::testutil;

namespace {

FamilySpec family(const char* kind, std::vector<std::size_t> lengths,
                  std::vector<std::size_t> paths = {}, std::vector<Int> weights = {}) {
    FamilySpec spec;
    spec.kind = kind;
    spec.cycle_lengths = std::move(lengths);
    spec.path_edges = std::move(paths);
    spec.weights = std::move(weights);
    return spec;
}

} // namespace

TEST_CASE("alternating weighted square is strongly robust") {
    RobustnessReport r = strongly_robust(make_family(family("cycle", {4}, {}, {1, 3, 1, 5})));
    CHECK(r.status == "ok");
    CHECK(r.strongly_robust);
    CHECK(r.minimal_generating);
    CHECK(r.graver_size == 1);
    CHECK(r.indispensable_size == 1);
    CHECK(r.dispensable_witnesses.empty());
    REQUIRE(r.hypothesis_results.has_value());
    CHECK(r.hypothesis_results->main_theorem_hypothesis);
    CHECK(r.hypothesis_results->every_edge_meets_degree2);
}

TEST_CASE("two triangles sharing a vertex are strongly robust") {
    RobustnessReport r = strongly_robust(make_family(family("bouquet", {3, 3})));
    CHECK(r.status == "ok");
    CHECK(r.strongly_robust);
    CHECK(r.graver_size == 1);
    REQUIRE(r.hypothesis_results.has_value());
    CHECK(r.hypothesis_results->main_theorem_hypothesis);
    CHECK(r.hypothesis_results->cycles_share_single_vertex);
}

TEST_CASE("a dispensable instance is reported with witnesses") {
    ToricMatrix A = mx(1, 3, {1, 1, 2});
    RobustnessReport r = strongly_robust(A);
    CHECK(r.status == "ok");
    CHECK_FALSE(r.strongly_robust);
    CHECK_FALSE(r.minimal_generating);
    CHECK(r.graver_size == 4);
    CHECK(r.indispensable_size == 1);
    REQUIRE(r.dispensable_witnesses.size() == 3);
    CHECK_FALSE(r.hypothesis_results.has_value());
    std::vector<Move> expected = {mv({0, 2, -1}), mv({1, 1, -1}), mv({2, 0, -1})};
    std::sort(expected.begin(), expected.end());
    CHECK(r.dispensable_witnesses == expected);
}

TEST_CASE("report invariants hold on random graphs") {
    Rng rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        WeightedOrientedGraph D = random_graph(rng, 6, 8, 3);
        RobustnessReport r = strongly_robust(D);
        CAPTURE(emit_wog(D));
        REQUIRE(r.status == "ok");
        CHECK(r.indispensable_size <= r.graver_size);
        CHECK(r.strongly_robust == r.dispensable_witnesses.empty());
        CHECK(r.strongly_robust == r.minimal_generating);
        CHECK(r.graver_size - r.indispensable_size == r.dispensable_witnesses.size());
        REQUIRE(r.hypothesis_results.has_value());
        GraverSet G = graver_basis(incidence_matrix(D));
        CHECK(G.moves.size() == r.graver_size);
        for (const Move& w : r.dispensable_witnesses) {
            bool in_graver = std::find(G.moves.begin(), G.moves.end(), w) != G.moves.end();
            CHECK(in_graver);
        }
        // hypothesis is sufficient, never necessary
        if (r.hypothesis_results->main_theorem_hypothesis) CHECK(r.strongly_robust);
    }
}

TEST_CASE("relabeling edges never changes the verdict") {
    Rng rng(2718);
    for (int iter = 0; iter < 15; ++iter) {
        ToricMatrix A = incidence_matrix(random_graph(rng, 5, 7, 3));
        std::vector<std::size_t> perm(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) perm[j] = j;
        for (std::size_t j = A.cols; j > 1; --j)
            std::swap(perm[j - 1], perm[rng.below(j)]);
        ToricMatrix P(A.rows, A.cols);
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < A.cols; ++j) P.at(i, perm[j]) = A.at(i, j);
        RobustnessReport a = strongly_robust(A);
        RobustnessReport b = strongly_robust(P);
        CHECK(a.strongly_robust == b.strongly_robust);
        CHECK(a.graver_size == b.graver_size);
        CHECK(a.indispensable_size == b.indispensable_size);
        std::vector<Move> mapped;
        for (const Move& w : a.dispensable_witnesses) {
            Move p(w.size());
            for (std::size_t j = 0; j < w.size(); ++j) p[perm[j]] = w[j];
            mapped.push_back(canonical(std::move(p)));
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == b.dispensable_witnesses);
    }
}

TEST_CASE("hypothesis families come out strongly robust") {
    Rng rng(1004);
    std::vector<FamilySpec> shapes = {
        family("bouquet", {3, 3}),         family("bouquet", {4, 4}),
        family("bouquet", {4, 4, 4}),      family("star", {4, 4}, {1, 2}),
        family("star", {3, 4, 5}, {1, 1, 1}), family("flower", {4, 4}, {1}),
        family("flower", {3, 3, 4}, {1}),  family("cycle", {6}),
    };
    for (const FamilySpec& shape : shapes) {
        for (int variant = 0; variant < 3; ++variant) {
            FamilySpec spec = shape;
            WeightedOrientedGraph unweighted = make_family(spec);
            if (variant > 0)
                for (std::size_t v = 0; v < unweighted.vertex_count; ++v)
                    spec.weights.emplace_back(rng.range(1, 3));
            WeightedOrientedGraph D = make_family(spec);
            RobustnessReport r = strongly_robust(D);
            CAPTURE(spec.kind);
            CAPTURE(emit_wog(D));
            REQUIRE(r.status == "ok");
            REQUIRE(r.hypothesis_results.has_value());
            CHECK(r.hypothesis_results->main_theorem_hypothesis);
            CHECK(r.strongly_robust);
        }
    }
}

TEST_CASE("caps produce an inconclusive report instead of a verdict") {
    ToricMatrix A = mx(1, 3, {1, 1, 2});
    Caps caps;
    caps.fiber = 1;
    RobustnessReport r = strongly_robust(A, caps);
    CHECK(r.status == "inconclusive");
    CHECK_FALSE(r.cap_hit.empty());
    CHECK(r.graver_size == 0);
    CHECK(r.dispensable_witnesses.empty());
    CHECK(r.caps_used.fiber == 1);

    Caps work;
    work.graver_working_set = 1;
    RobustnessReport g = strongly_robust(A, work);
    CHECK(g.status == "inconclusive");

    // graph route: cycle cap hits during the structural checks
    WeightedOrientedGraph D = make_family(family("bouquet", {3, 3}));
    Caps cycles;
    cycles.cycles = 1;
    RobustnessReport h = strongly_robust(D, cycles);
    CHECK(h.status == "inconclusive");
    CHECK_FALSE(h.hypothesis_results.has_value());
}
