#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "toric/checks.hpp"
#include "toric/errors.hpp"
#include "toric/matrix.hpp"
#include "toric/monomial.hpp"
#include "toric/rng.hpp"
#include "testutil.hpp"

using namespace toric;
using testutil::mv;
using testutil::mx;
using testutil::random_graph;

namespace {

MonomialIdealPresentation three_cycle_ideal() {
    // x1 x2^2, x2 x3, x3^2 x1
    return {3, {mv({1, 2, 0}), mv({0, 1, 1}), mv({1, 0, 2})}};
}

} // namespace

TEST_CASE("validation enforces minimality and positivity") {
    CHECK_NOTHROW(validate(three_cycle_ideal()));
    CHECK_THROWS_AS(validate(MonomialIdealPresentation{0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(MonomialIdealPresentation{2, {mv({0, 0})}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(MonomialIdealPresentation{2, {mv({1, -1})}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(MonomialIdealPresentation{2, {mv({1, 0}), mv({1, 1})}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(MonomialIdealPresentation{2, {mv({1, 1}), mv({1, 1})}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(MonomialIdealPresentation{2, {mv({1})}}), std::invalid_argument);
}

TEST_CASE("minimalize drops divided generators and deduplicates") {
    auto M = minimalize(2, {mv({1, 1}), mv({2, 1})});
    CHECK(M.generators == std::vector<Move>{mv({1, 1})});

    M = minimalize(3, {mv({1, 3, 0}), mv({1, 3, 0}), mv({1, 0, 1})});
    CHECK(M.generators == std::vector<Move>{mv({1, 0, 1}), mv({1, 3, 0})});

    auto already = three_cycle_ideal();
    M = minimalize(3, already.generators);
    auto sorted = already.generators;
    std::sort(sorted.begin(), sorted.end());
    CHECK(M.generators == sorted);

    CHECK_THROWS_AS(minimalize(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(minimalize(2, {mv({0, 0})}), std::invalid_argument);

    M = minimalize({mv({1, 1}), mv({2, 1})});
    CHECK(M.variable_count == 2);
}

TEST_CASE("minimalize output always validates") {
    Rng rng(401);
    for (int t = 0; t < 100; ++t) {
        std::size_t nvars = 1 + rng.below(4);
        std::vector<Move> gens;
        std::size_t count = 1 + rng.below(6);
        for (std::size_t g = 0; g < count; ++g) {
            Move v(nvars, Int(0));
            while (is_zero(v))
                for (std::size_t i = 0; i < nvars; ++i) v[i] = Int(rng.range(0, 3));
            gens.push_back(std::move(v));
        }
        auto M = minimalize(nvars, gens);
        CHECK_NOTHROW(validate(M));
        // every dropped generator is divided by a kept one
        for (const Move& g : gens) {
            bool covered = false;
            for (const Move& h : M.generators) covered = covered || monomial_divides(h, g);
            CHECK(covered);
        }
    }
}

TEST_CASE("toric matrix columns are the exponent vectors") {
    CHECK(toric_matrix(three_cycle_ideal()) == mx(3, 3, {1, 0, 1,
                                                         2, 1, 0,
                                                         0, 1, 2}));
    MonomialIdealPresentation single{2, {mv({3, 1})}};
    CHECK(toric_matrix(single) == mx(2, 1, {3, 1}));
}

TEST_CASE("edge ideal matches the incidence matrix") {
    WeightedOrientedGraph D;
    D.vertex_count = 4;
    D.weights = mv({1, 3, 1, 5});
    D.edges = {{0, 1}, {2, 1}, {2, 3}, {0, 3}};
    CHECK(toric_matrix(edge_ideal(D)) == incidence_matrix(D));

    Rng rng(402);
    for (int t = 0; t < 100; ++t) {
        auto G = random_graph(rng, 8, 12, 5);
        CHECK(toric_matrix(edge_ideal(G)) == incidence_matrix(G));
    }
}

TEST_CASE("hypothesis holds when every generator owns a twice-shared variable") {
    auto H = theorem_hypothesis(three_cycle_ideal());
    CHECK(H.ok);
    CHECK(H.failing_generators.empty());
    REQUIRE(H.certificates.size() == 3);
    for (const auto& c : H.certificates) {
        CHECK(c.generator != c.partner);
        // replay: the certified variable appears in exactly the two generators
        const auto& gens = three_cycle_ideal().generators;
        std::size_t holders = 0;
        for (const Move& g : gens) holders += sgn(g[c.variable]) != 0;
        CHECK(holders == 2);
        CHECK(sgn(gens[c.generator][c.variable]) != 0);
        CHECK(sgn(gens[c.partner][c.variable]) != 0);
    }
}

TEST_CASE("hypothesis fails on the star ideal and on wide supports") {
    MonomialIdealPresentation star{4, {mv({1, 1, 0, 0}), mv({1, 0, 1, 0}), mv({1, 0, 0, 1})}};
    auto H = theorem_hypothesis(star);
    CHECK(!H.ok);
    CHECK(H.failing_generators == std::vector<std::size_t>{0, 1, 2});
    CHECK(H.certificates.empty());

    MonomialIdealPresentation wide{3, {mv({1, 1, 1})}};
    CHECK(!theorem_hypothesis(wide).ok);

    MonomialIdealPresentation lonely{2, {mv({1, 1})}};
    CHECK(!theorem_hypothesis(lonely).ok);
}

TEST_CASE("monomial hypothesis equals the degree-2 edge check on edge ideals") {
    Rng rng(403);
    for (int t = 0; t < 200; ++t) {
        auto D = random_graph(rng, 8, 12, 4);
        CHECK(theorem_hypothesis(edge_ideal(D)).ok == every_edge_meets_degree_two(D).ok);
    }

    // path with two leaves: both checks pass
    WeightedOrientedGraph path;
    path.vertex_count = 4;
    path.weights = mv({1, 2, 1, 2});
    path.edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(every_edge_meets_degree_two(path).ok);
    CHECK(theorem_hypothesis(edge_ideal(path)).ok);

    // single edge: both fail
    WeightedOrientedGraph single;
    single.vertex_count = 2;
    single.weights = mv({1, 2});
    single.edges = {{0, 1}};
    CHECK(!every_edge_meets_degree_two(single).ok);
    CHECK(!theorem_hypothesis(edge_ideal(single)).ok);
}

TEST_CASE("kernel vectors never strand a variable of a supported generator") {
    Rng rng(404);
    for (int t = 0; t < 120; ++t) {
        std::size_t nvars = 2 + rng.below(3);
        std::vector<Move> gens;
        std::size_t count = 2 + rng.below(4);
        for (std::size_t g = 0; g < count; ++g) {
            Move v(nvars, Int(0));
            std::size_t a = rng.below(nvars), b = rng.below(nvars);
            while (b == a) b = rng.below(nvars);
            v[a] = Int(rng.range(1, 3));
            v[b] = Int(rng.range(1, 3));
            gens.push_back(std::move(v));
        }
        MonomialIdealPresentation M;
        try {
            M = minimalize(nvars, gens);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (M.generators.size() < 2) continue;
        auto A = toric_matrix(M);
        for (const Move& v : kernel_basis(A)) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (sgn(v[i]) == 0) continue;
                for (std::size_t l = 0; l < nvars; ++l) {
                    if (sgn(M.generators[i][l]) == 0) continue;
                    bool elsewhere = false;
                    for (std::size_t k = 0; k < v.size() && !elsewhere; ++k)
                        elsewhere = k != i && sgn(v[k]) != 0 && sgn(M.generators[k][l]) != 0;
                    CHECK(elsewhere);
                }
            }
        }
    }
}

TEST_CASE("monomial text round trip") {
    auto M = three_cycle_ideal();
    std::string text = emit_monomials(M);
    CHECK(text == "monomials 3\n1 2 0\n0 1 1\n1 0 2\n");
    std::istringstream in(text);
    CHECK(parse_monomials(in) == M);

    std::istringstream commented("# ideal\nmonomials 2\n1 2 # gen\n3 1\n");
    auto N = parse_monomials(commented);
    CHECK(N.generators == std::vector<Move>{mv({1, 2}), mv({3, 1})});

    std::istringstream empty_list("monomials 3\n");
    CHECK(parse_monomials(empty_list).generators.empty());
}

TEST_CASE("monomial parser rejects malformed input") {
    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_monomials(in), ParseError);
    };
    fails("");
    fails("monomials\n");
    fails("monomials 0\n");
    fails("monomials 2\n1\n");
    fails("monomials 2\n1 2 3\n");
    fails("monomials 2\n1 -2\n");
    fails("monomials 2\n1 x\n");

    std::istringstream dividing("monomials 2\n1 1\n2 1\n");
    CHECK_THROWS_AS(parse_monomials(dividing), std::invalid_argument);
    std::istringstream zero("monomials 2\n0 0\n");
    CHECK_THROWS_AS(parse_monomials(zero), std::invalid_argument);
}
