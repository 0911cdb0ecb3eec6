#include "toric/families.hpp"

#include <stdexcept>

namespace toric {

namespace {

struct Builder {
    WeightedOrientedGraph D;
    CycleOrientation orientation;

    std::size_t fresh() { return D.vertex_count++; }

    void add_edge(std::size_t u, std::size_t v, std::size_t step) {
        bool forward = orientation == CycleOrientation::cyclic || step % 2 == 0;
        if (forward)
            D.edges.push_back({u, v});
        else
            D.edges.push_back({v, u});
    }

    // cycle through `anchor` and length-1 fresh vertices, edges in cycle order
    void add_cycle(std::size_t anchor, std::size_t length) {
        if (length < 3) throw std::invalid_argument("make_family: cycle length below 3");
        std::vector<std::size_t> seq{anchor};
        for (std::size_t k = 1; k < length; ++k) seq.push_back(fresh());
        for (std::size_t k = 0; k < length; ++k)
            add_edge(seq[k], seq[(k + 1) % length], k);
    }

    // path of `edges` fresh edges starting at `from`; returns the far end
    std::size_t add_path(std::size_t from, std::size_t edges) {
        std::size_t cur = from;
        for (std::size_t k = 0; k < edges; ++k) {
            std::size_t nxt = fresh();
            add_edge(cur, nxt, k);
            cur = nxt;
        }
        return cur;
    }
};

} // namespace

WeightedOrientedGraph make_family(const FamilySpec& spec) {
    Builder b;
    b.orientation = spec.orientation;
    const auto& lens = spec.cycle_lengths;
    const auto& paths = spec.path_edges;

    if (spec.kind == "cycle") {
        if (lens.size() != 1 || !paths.empty())
            throw std::invalid_argument("make_family: cycle takes one length and no paths");
        b.add_cycle(b.fresh(), lens[0]);
    } else if (spec.kind == "bouquet") {
        if (lens.empty() || !paths.empty())
            throw std::invalid_argument("make_family: bouquet takes cycle lengths and no paths");
        std::size_t hub = b.fresh();
        for (std::size_t len : lens) b.add_cycle(hub, len);
    } else if (spec.kind == "star") {
        if (lens.empty() || paths.size() != lens.size())
            throw std::invalid_argument("make_family: star needs one path per cycle");
        std::size_t center = b.fresh();
        for (std::size_t i = 0; i < lens.size(); ++i) {
            if (paths[i] < 1) throw std::invalid_argument("make_family: star path needs an edge");
            b.add_cycle(b.add_path(center, paths[i]), lens[i]);
        }
    } else if (spec.kind == "flower") {
        if (paths.empty() || lens.size() <= paths.size())
            throw std::invalid_argument("make_family: flower needs bouquet cycles plus attached ones");
        std::size_t hub = b.fresh();
        std::size_t bouquet = lens.size() - paths.size();
        for (std::size_t i = 0; i < bouquet; ++i) b.add_cycle(hub, lens[i]);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (paths[i] < 1) throw std::invalid_argument("make_family: flower path needs an edge");
            b.add_cycle(b.add_path(hub, paths[i]), lens[bouquet + i]);
        }
    } else if (spec.kind == "theta" || spec.kind == "cycle-with-chord-path") {
        if (!lens.empty() || paths.size() != 3)
            throw std::invalid_argument("make_family: theta takes three path lengths");
        std::size_t ones = 0;
        for (std::size_t p : paths) {
            if (p < 1) throw std::invalid_argument("make_family: theta path needs an edge");
            if (p == 1) ++ones;
        }
        if (ones > 1) throw std::invalid_argument("make_family: theta with two direct edges repeats a pair");
        std::size_t u = b.fresh();
        std::size_t w = b.fresh();
        for (std::size_t p : paths) {
            std::size_t cur = u;
            for (std::size_t k = 0; k + 1 < p; ++k) {
                std::size_t nxt = b.fresh();
                b.add_edge(cur, nxt, k);
                cur = nxt;
            }
            b.add_edge(cur, w, p - 1);
        }
    } else if (spec.kind == "bouquet-tail") {
        if (lens.size() != 3 || paths.size() != 1)
            throw std::invalid_argument("make_family: bouquet-tail takes three cycles and one path");
        std::size_t hub = b.fresh();
        b.add_cycle(hub, lens[0]);
        b.add_cycle(hub, lens[1]);
        std::size_t beside_hub = 1; // first fresh vertex of the first cycle
        b.add_cycle(paths[0] == 0 ? beside_hub : b.add_path(beside_hub, paths[0]), lens[2]);
    } else {
        throw std::invalid_argument("make_family: unknown kind `" + spec.kind + "`");
    }

    if (spec.weights.empty())
        b.D.weights.assign(b.D.vertex_count, Int(1));
    else if (spec.weights.size() == b.D.vertex_count)
        b.D.weights = spec.weights;
    else
        throw std::invalid_argument("make_family: weight count does not match vertex count");
    validate(b.D);
    return b.D;
}

} // namespace toric
