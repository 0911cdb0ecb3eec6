#include "toric/monomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "toric/lineio.hpp"

namespace toric {

bool monomial_divides(const Move& u, const Move& v) {
    if (u.size() != v.size()) throw std::invalid_argument("monomial_divides: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

namespace {

void check_exponent_vector(const Move& g, std::size_t variable_count) {
    if (g.size() != variable_count)
        throw std::invalid_argument("monomial generator has wrong length");
    bool nonzero = false;
    for (const Int& e : g) {
        if (sgn(e) < 0) throw std::invalid_argument("monomial generator has negative exponent");
        if (sgn(e) != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("monomial generator is zero");
}

} // namespace

void validate(const MonomialIdealPresentation& M) {
    if (M.variable_count == 0) throw std::invalid_argument("monomial ideal needs at least one variable");
    for (const Move& g : M.generators) check_exponent_vector(g, M.variable_count);
    for (std::size_t i = 0; i < M.generators.size(); ++i)
        for (std::size_t j = 0; j < M.generators.size(); ++j)
            if (i != j && monomial_divides(M.generators[i], M.generators[j]))
                throw std::invalid_argument("monomial generators are not minimal");
}

MonomialIdealPresentation minimalize(std::size_t variable_count, std::vector<Move> generators) {
    if (variable_count == 0) throw std::invalid_argument("monomial ideal needs at least one variable");
    if (generators.empty()) throw std::invalid_argument("minimalize: empty generator list");
    for (const Move& g : generators) check_exponent_vector(g, variable_count);
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    MonomialIdealPresentation M{variable_count, {}};
    for (const Move& g : generators) {
        bool divided = false;
        for (const Move& h : generators)
            if (h != g && monomial_divides(h, g)) { divided = true; break; }
        if (!divided) M.generators.push_back(g);
    }
    return M;
}

MonomialIdealPresentation minimalize(std::vector<Move> generators) {
    if (generators.empty()) throw std::invalid_argument("minimalize: empty generator list");
    std::size_t variable_count = generators[0].size();
    return minimalize(variable_count, std::move(generators));
}

ToricMatrix toric_matrix(const MonomialIdealPresentation& M) {
    validate(M);
    ToricMatrix A;
    A.rows = M.variable_count;
    A.cols = M.generators.size();
    A.entries.assign(A.rows * A.cols, Int(0));
    for (std::size_t j = 0; j < A.cols; ++j)
        for (std::size_t i = 0; i < A.rows; ++i)
            A.at(i, j) = M.generators[j][i];
    return A;
}

MonomialIdealPresentation edge_ideal(const WeightedOrientedGraph& D) {
    validate(D);
    MonomialIdealPresentation M{D.vertex_count, {}};
    for (const Edge& e : D.edges) {
        Move g(D.vertex_count, Int(0));
        g[e.tail] = 1;
        g[e.head] = D.weights[e.head];
        M.generators.push_back(std::move(g));
    }
    validate(M);
    return M;
}

MonomialHypothesis theorem_hypothesis(const MonomialIdealPresentation& M) {
    validate(M);
    std::vector<std::vector<std::size_t>> occurs(M.variable_count);
    for (std::size_t j = 0; j < M.generators.size(); ++j)
        for (std::size_t l = 0; l < M.variable_count; ++l)
            if (sgn(M.generators[j][l]) != 0) occurs[l].push_back(j);
    MonomialHypothesis H;
    H.ok = true;
    for (std::size_t j = 0; j < M.generators.size(); ++j) {
        std::vector<std::size_t> supp;
        for (std::size_t l = 0; l < M.variable_count; ++l)
            if (sgn(M.generators[j][l]) != 0) supp.push_back(l);
        bool found = false;
        if (supp.size() == 2) {
            for (std::size_t l : supp) {
                if (occurs[l].size() == 2) {
                    std::size_t partner = occurs[l][0] == j ? occurs[l][1] : occurs[l][0];
                    H.certificates.push_back({j, l, partner});
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            H.ok = false;
            H.failing_generators.push_back(j);
        }
    }
    if (!H.ok) H.certificates.clear();
    return H;
}

MonomialIdealPresentation parse_monomials(std::istream& in) {
    auto lines = tokenized_lines(in);
    if (lines.empty()) throw ParseError("missing monomials header");
    const TokenLine& head = lines[0];
    if (head.tokens.size() != 2 || head.tokens[0] != "monomials")
        throw ParseError("line " + std::to_string(head.line_no) + ": expected `monomials <n_vars>`");
    MonomialIdealPresentation M;
    M.variable_count = parse_count(head.tokens[1], head.line_no, 1, 1000000);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const TokenLine& row = lines[k];
        if (row.tokens.size() != M.variable_count)
            throw ParseError("line " + std::to_string(row.line_no) + ": expected " +
                             std::to_string(M.variable_count) + " exponents");
        Move g;
        for (const std::string& tok : row.tokens) {
            Int e = parse_int(tok, row.line_no);
            if (sgn(e) < 0)
                throw ParseError("line " + std::to_string(row.line_no) + ": negative exponent");
            g.push_back(std::move(e));
        }
        M.generators.push_back(std::move(g));
    }
    validate(M);
    return M;
}

std::string emit_monomials(const MonomialIdealPresentation& M) {
    validate(M);
    std::ostringstream out;
    out << "monomials " << M.variable_count << "\n";
    for (const Move& g : M.generators) {
        for (std::size_t l = 0; l < g.size(); ++l) {
            if (l) out << ' ';
            out << g[l];
        }
        out << "\n";
    }
    return out.str();
}

} // namespace toric
