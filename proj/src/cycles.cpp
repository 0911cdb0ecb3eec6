#include "toric/cycles.hpp"

#include <algorithm>

namespace toric {

namespace {

struct CycleSearch {
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj; // (neighbor, edge)
    std::uint64_t cap;
    std::vector<Cycle>& out;
    std::vector<char> on_path;
    std::vector<std::size_t> path;
    std::vector<std::size_t> path_edges;
    std::size_t root = 0;

    void extend(std::size_t u) {
        for (auto [nbr, eidx] : adj[u]) {
            if (nbr == root && path.size() >= 3) {
                // reflection dedup: keep the run whose second vertex is the smaller
                if (path[1] > path.back()) continue;
                Cycle c;
                c.vertex_sequence = path;
                c.edge_indices = path_edges;
                c.edge_indices.push_back(eidx);
                if (out.size() >= cap) throw CycleCapExceeded(cap);
                out.push_back(std::move(c));
            } else if (nbr > root && !on_path[nbr]) {
                on_path[nbr] = 1;
                path.push_back(nbr);
                path_edges.push_back(eidx);
                extend(nbr);
                path_edges.pop_back();
                path.pop_back();
                on_path[nbr] = 0;
            }
        }
    }
};

} // namespace

std::vector<Cycle> enumerate_cycles(const WeightedOrientedGraph& D, const Caps& caps) {
    validate(D);
    std::size_t n = D.vertex_count;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t j = 0; j < D.edges.size(); ++j) {
        adj[D.edges[j].tail].push_back({D.edges[j].head, j});
        adj[D.edges[j].head].push_back({D.edges[j].tail, j});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<Cycle> cycles;
    CycleSearch search{adj, caps.cycles, cycles, std::vector<char>(n, 0), {}, {}, 0};
    for (std::size_t r = 0; r < n; ++r) {
        search.root = r;
        search.on_path[r] = 1;
        search.path = {r};
        search.extend(r);
        search.on_path[r] = 0;
    }
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertex_sequence < b.vertex_sequence;
    });
    return cycles;
}

ToricMatrix cycle_matrix(const WeightedOrientedGraph& D, const Cycle& C) {
    std::size_t len = C.length();
    ToricMatrix A(len, len);
    for (std::size_t l = 0; l < len; ++l) {
        const Edge& e = D.edges[C.edge_indices[l]];
        for (std::size_t k = 0; k < len; ++k) {
            std::size_t v = C.vertex_sequence[k];
            if (e.tail == v) A.at(k, l) = 1;
            if (e.head == v) A.at(k, l) = D.weights[e.head];
        }
    }
    return A;
}

bool is_balanced(const WeightedOrientedGraph& D, const Cycle& C) {
    return sgn(det(cycle_matrix(D, C))) == 0;
}

} // namespace toric
