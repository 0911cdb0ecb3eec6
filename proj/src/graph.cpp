#include "toric/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "toric/errors.hpp"
#include "toric/lineio.hpp"

namespace toric {

void validate(const WeightedOrientedGraph& D) {
    if (D.vertex_count == 0) throw std::invalid_argument("graph: needs at least one vertex");
    if (D.weights.size() != D.vertex_count)
        throw std::invalid_argument("graph: weight count does not match vertex count");
    for (const Int& w : D.weights)
        if (w < 1) throw std::invalid_argument("graph: weights must be >= 1");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Edge& e : D.edges) {
        if (e.tail >= D.vertex_count || e.head >= D.vertex_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e.tail == e.head) throw std::invalid_argument("graph: loops not allowed");
        auto pair = std::minmax(e.tail, e.head);
        if (!seen.insert({pair.first, pair.second}).second)
            throw std::invalid_argument("graph: repeated edge between vertices " +
                                        std::to_string(pair.first + 1) + " and " +
                                        std::to_string(pair.second + 1));
    }
}

ToricMatrix incidence_matrix(const WeightedOrientedGraph& D) {
    validate(D);
    ToricMatrix A(D.vertex_count, D.edges.size());
    for (std::size_t j = 0; j < D.edges.size(); ++j) {
        A.at(D.edges[j].tail, j) = 1;
        A.at(D.edges[j].head, j) = D.weights[D.edges[j].head];
    }
    return A;
}

std::size_t vertex_degree(const WeightedOrientedGraph& D, std::size_t v) {
    if (v >= D.vertex_count) throw std::invalid_argument("vertex_degree: vertex out of range");
    std::size_t d = 0;
    for (const Edge& e : D.edges)
        if (e.tail == v || e.head == v) ++d;
    return d;
}

WeightedOrientedGraph parse_wog(std::istream& in) {
    auto lines = tokenized_lines(in);
    if (lines.empty()) throw ParseError("graph: empty input");
    const TokenLine& h = lines[0];
    if (h.tokens.size() != 2 || h.tokens[0] != "wog")
        throw ParseError("line " + std::to_string(h.line_no) + ": expected 'wog <n_vertices>'");
    long n = parse_count(h.tokens[1], h.line_no, 1, 1000000);

    WeightedOrientedGraph D;
    D.vertex_count = n;
    if (lines.size() < 2 || lines[1].tokens[0] != "weights")
        throw ParseError("graph: expected 'weights ...' after the header");
    const TokenLine& wl = lines[1];
    if (wl.tokens.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("line " + std::to_string(wl.line_no) + ": expected " + std::to_string(n) +
                         " weights");
    for (long i = 0; i < n; ++i) D.weights.push_back(parse_int(wl.tokens[i + 1], wl.line_no));

    for (std::size_t k = 2; k < lines.size(); ++k) {
        const TokenLine& el = lines[k];
        if (el.tokens.size() != 3 || el.tokens[0] != "edge")
            throw ParseError("line " + std::to_string(el.line_no) + ": expected 'edge <tail> <head>'");
        long t = parse_count(el.tokens[1], el.line_no, 1, n);
        long hd = parse_count(el.tokens[2], el.line_no, 1, n);
        D.edges.push_back({static_cast<std::size_t>(t - 1), static_cast<std::size_t>(hd - 1)});
    }
    validate(D);
    return D;
}

std::string emit_wog(const WeightedOrientedGraph& D) {
    std::ostringstream out;
    out << "wog " << D.vertex_count << "\n";
    out << "weights";
    for (const Int& w : D.weights) out << " " << w.get_str();
    out << "\n";
    for (const Edge& e : D.edges) out << "edge " << e.tail + 1 << " " << e.head + 1 << "\n";
    return out.str();
}

} // namespace toric
