#include "toric/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

std::vector<std::size_t> degrees(const WeightedOrientedGraph& D) {
    std::vector<std::size_t> deg(D.vertex_count, 0);
    for (const Edge& e : D.edges) {
        ++deg[e.tail];
        ++deg[e.head];
    }
    return deg;
}

std::vector<std::set<std::size_t>> cycle_vertex_sets(const std::vector<Cycle>& cycles) {
    std::vector<std::set<std::size_t>> sets;
    sets.reserve(cycles.size());
    for (const Cycle& c : cycles) sets.emplace_back(c.vertex_sequence.begin(), c.vertex_sequence.end());
    return sets;
}

// Enumerates connecting paths between two cycles' vertex sets as sorted edge
// index lists. Interior vertices avoid every cycle; no cycle edges are used.
struct PathFinder {
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj;
    const std::vector<char>& on_cycle_vertex;
    const std::vector<char>& on_cycle_edge;
    std::uint64_t cap;
    std::uint64_t steps = 0;

    std::vector<char> target;
    std::vector<char> used;
    std::vector<std::size_t> edges;
    std::vector<std::vector<std::size_t>>* out = nullptr;

    void dfs(std::size_t u) {
        if (++steps > cap) throw PathCapExceeded(cap);
        for (auto [nbr, eidx] : adj[u]) {
            if (on_cycle_edge[eidx] || used[nbr]) continue;
            if (target[nbr]) {
                edges.push_back(eidx);
                std::vector<std::size_t> path = edges;
                std::sort(path.begin(), path.end());
                out->push_back(std::move(path));
                edges.pop_back();
            } else if (!on_cycle_vertex[nbr]) {
                used[nbr] = 1;
                edges.push_back(eidx);
                dfs(nbr);
                edges.pop_back();
                used[nbr] = 0;
            }
        }
    }

    std::vector<std::vector<std::size_t>> between(const std::set<std::size_t>& from,
                                                  const std::set<std::size_t>& to,
                                                  std::size_t n) {
        std::vector<std::vector<std::size_t>> paths;
        out = &paths;
        target.assign(n, 0);
        for (std::size_t v : to) target[v] = 1;
        for (std::size_t s : from) {
            used.assign(n, 0);
            used[s] = 1;
            edges.clear();
            dfs(s);
        }
        std::sort(paths.begin(), paths.end());
        paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
        return paths;
    }
};

} // namespace

CheckResult every_edge_meets_degree_two(const WeightedOrientedGraph& D) {
    validate(D);
    auto deg = degrees(D);
    CheckResult r;
    for (std::size_t j = 0; j < D.edges.size(); ++j) {
        if (deg[D.edges[j].tail] != 2 && deg[D.edges[j].head] != 2) {
            r.ok = false;
            r.witnesses.push_back({"edge-misses-degree-2-vertex", {j}, {}});
        }
    }
    return r;
}

CheckResult no_two_cycles_share_path(const WeightedOrientedGraph& D, const Caps& caps) {
    auto cycles = enumerate_cycles(D, caps);
    std::map<std::size_t, std::vector<std::size_t>> edge_owners;
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (std::size_t e : cycles[c].edge_indices) edge_owners[e].push_back(c);
    CheckResult r;
    for (const auto& [e, owners] : edge_owners) {
        if (owners.size() < 2) continue;
        r.ok = false;
        r.witnesses.push_back({"cycles-share-edge", {e}, {owners[0], owners[1]}});
    }
    return r;
}

CheckResult cycles_share_single_vertex(const WeightedOrientedGraph& D, const Caps& caps) {
    auto cycles = enumerate_cycles(D, caps);
    CheckResult r;
    if (cycles.size() <= 1) return r;
    auto sets = cycle_vertex_sets(cycles);
    // the hub, if any, is forced by the first pair
    std::vector<std::size_t> common;
    std::set_intersection(sets[0].begin(), sets[0].end(), sets[1].begin(), sets[1].end(),
                          std::back_inserter(common));
    if (common.size() != 1) {
        r.ok = false;
        r.witnesses.push_back({"cycles-not-single-vertex-bouquet", {}, {0, 1}});
        return r;
    }
    std::size_t hub = common[0];
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            std::vector<std::size_t> meet;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                  std::back_inserter(meet));
            if (meet.size() != 1 || meet[0] != hub) {
                r.ok = false;
                r.witnesses.push_back({"cycles-not-single-vertex-bouquet", {}, {a, b}});
            }
        }
    }
    return r;
}

StructureReport main_theorem_hypothesis(const WeightedOrientedGraph& D, const Caps& caps) {
    validate(D);
    StructureReport report;

    CheckResult edges_ok = every_edge_meets_degree_two(D);
    report.every_edge_meets_degree2 = edges_ok.ok;
    for (auto& w : edges_ok.witnesses) report.witnesses.push_back(std::move(w));

    CheckResult no_share = no_two_cycles_share_path(D, caps);
    report.no_two_cycles_share_path = no_share.ok;
    for (auto& w : no_share.witnesses) report.witnesses.push_back(std::move(w));

    CheckResult bouquet = cycles_share_single_vertex(D, caps);
    report.cycles_share_single_vertex = bouquet.ok;
    for (auto& w : bouquet.witnesses) report.witnesses.push_back(std::move(w));

    auto cycles = enumerate_cycles(D, caps);
    auto deg = degrees(D);
    auto meets_deg2 = [&](std::size_t e) {
        return deg[D.edges[e].tail] == 2 || deg[D.edges[e].head] == 2;
    };

    bool cycle_edges_ok = true;
    std::set<std::size_t> flagged;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (std::size_t e : cycles[c].edge_indices) {
            if (meets_deg2(e) || !flagged.insert(e).second) continue;
            cycle_edges_ok = false;
            report.witnesses.push_back({"cycle-edge-misses-degree-2-vertex", {e}, {c}});
        }
    }

    std::size_t n = D.vertex_count;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t j = 0; j < D.edges.size(); ++j) {
        adj[D.edges[j].tail].push_back({D.edges[j].head, j});
        adj[D.edges[j].head].push_back({D.edges[j].tail, j});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    std::vector<char> on_cycle_vertex(n, 0), on_cycle_edge(D.edges.size(), 0);
    for (const Cycle& c : cycles) {
        for (std::size_t v : c.vertex_sequence) on_cycle_vertex[v] = 1;
        for (std::size_t e : c.edge_indices) on_cycle_edge[e] = 1;
    }
    auto sets = cycle_vertex_sets(cycles);

    PathFinder finder{adj, on_cycle_vertex, on_cycle_edge, caps.paths};
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> path_cache;
    auto paths_between = [&](std::size_t a, std::size_t b) -> const std::vector<std::vector<std::size_t>>& {
        auto key = std::minmax(a, b);
        auto it = path_cache.find(key);
        if (it == path_cache.end())
            it = path_cache.emplace(key, finder.between(sets[key.first], sets[key.second], n)).first;
        return it->second;
    };
    auto vertex_disjoint = [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> meet;
        std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                              std::back_inserter(meet));
        return meet.empty();
    };
    // condition (ii) for cycle k and shared edge e: k touches no other cycle
    // and every connecting path from k contains e
    auto isolated_through_edge = [&](std::size_t k, std::size_t e) {
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (c == k) continue;
            if (!vertex_disjoint(c, k)) return false;
            for (const auto& p : paths_between(c, k))
                if (!std::binary_search(p.begin(), p.end(), e)) return false;
        }
        return true;
    };

    bool triples_ok = true;
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (i == k) continue;
            const auto& Pi = paths_between(i, k);
            if (Pi.empty()) continue;
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                if (j == k) continue;
                const auto& Pj = paths_between(j, k);
                if (Pj.empty()) continue;
                std::set<std::size_t> shared;
                for (const auto& p : Pi)
                    for (const auto& q : Pj)
                        std::set_intersection(p.begin(), p.end(), q.begin(), q.end(),
                                              std::inserter(shared, shared.end()));
                for (std::size_t e : shared) {
                    if (meets_deg2(e) || isolated_through_edge(k, e)) continue;
                    triples_ok = false;
                    report.witnesses.push_back({"shared-path-edge-fails-conditions", {e}, {i, j, k}});
                }
            }
        }
    }

    report.main_theorem_hypothesis = no_share.ok && cycle_edges_ok && triples_ok;
    return report;
}

} // namespace toric
