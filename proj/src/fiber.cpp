#include "toric/fiber.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "toric/graver.hpp"

namespace toric {

namespace {

bool leq(const Move& a, const Move& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

struct Dsu {
    std::vector<std::size_t> parent;

    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t locate(const std::vector<Move>& points, const Move& w) {
    auto it = std::lower_bound(points.begin(), points.end(), w);
    if (it == points.end() || *it != w) throw std::logic_error("fiber walk left the fiber");
    return static_cast<std::size_t>(it - points.begin());
}

// connected components under +-moves, each listed by ascending point index
// and ordered by smallest member
std::vector<std::vector<std::size_t>> fiber_components(const std::vector<Move>& points,
                                                       const std::vector<Move>& moves) {
    std::vector<std::pair<Move, Move>> parts;
    parts.reserve(moves.size());
    for (const Move& g : moves) parts.emplace_back(plus(g), minus(g));
    Dsu dsu(points.size());
    for (std::size_t p = 0; p < points.size(); ++p)
        for (const auto& [gp, gm] : parts)
            for (int dir = 0; dir < 2; ++dir) {
                const Move& from = dir == 0 ? gp : gm;
                const Move& to = dir == 0 ? gm : gp;
                if (!leq(from, points[p])) continue;
                Move w = points[p];
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += to[i] - from[i];
                dsu.unite(p, locate(points, w));
            }
    std::map<std::size_t, std::size_t> root_to_comp;
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t p = 0; p < points.size(); ++p) {
        auto [it, fresh] = root_to_comp.try_emplace(dsu.find(p), comps.size());
        if (fresh) comps.emplace_back();
        comps[it->second].push_back(p);
    }
    return comps;
}

std::vector<Move> degree_of_each(const ToricMatrix& A, const GraverSet& G) {
    std::vector<Move> degrees;
    degrees.reserve(G.moves.size());
    for (const Move& g : G.moves) degrees.push_back(A * plus(g));
    return degrees;
}

// labeled tree on t >= 2 nodes from its Pruefer sequence; t-1 edges (p, q), p < q
std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(
    const std::vector<std::size_t>& seq, std::size_t t) {
    std::vector<std::size_t> degree(t, 1);
    for (std::size_t s : seq) ++degree[s];
    std::vector<bool> used(t, false);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(t - 1);
    for (std::size_t s : seq) {
        std::size_t leaf = t;
        for (std::size_t l = 0; l < t && leaf == t; ++l)
            if (!used[l] && degree[l] == 1) leaf = l;
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        used[leaf] = true;
        --degree[leaf];
        --degree[s];
    }
    std::size_t a = t, b = t;
    for (std::size_t l = 0; l < t; ++l)
        if (!used[l] && degree[l] == 1) (a == t ? a : b) = l;
    edges.emplace_back(a, b);
    return edges;
}

} // namespace

Fiber fiber(const ToricMatrix& A, const Move& b, const Caps& caps) {
    validate(A);
    if (b.size() != A.rows) throw std::invalid_argument("fiber: degree length mismatch");
    for (const Int& x : b)
        if (sgn(x) < 0) throw std::invalid_argument("fiber: degree must be nonnegative");
    const std::size_t n = A.rows;
    const std::size_t m = A.cols;

    // covered[j][i]: some column at or after j can still lower row i
    std::vector<std::vector<bool>> covered(m + 1, std::vector<bool>(n, false));
    for (std::size_t j = m; j-- > 0;)
        for (std::size_t i = 0; i < n; ++i)
            covered[j][i] = covered[j + 1][i] || sgn(A.at(i, j)) > 0;

    Fiber result;
    result.degree = b;
    Move x(m, Int(0));
    Move residual = b;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (++nodes > caps.fiber_nodes) throw FiberWorkExceeded(caps.fiber_nodes);
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(residual[i]) > 0 && !covered[j][i]) return;
        if (j == m) {
            result.points.push_back(x);
            if (result.points.size() > caps.fiber) throw FiberCapExceeded(caps.fiber);
            return;
        }
        Int ub = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(A.at(i, j)) <= 0) continue;
            Int q = residual[i] / A.at(i, j);
            if (ub < 0 || q < ub) ub = q;
        }
        x[j] = 0;
        self(self, j + 1);
        for (Int val = 1; val <= ub; ++val) {
            for (std::size_t i = 0; i < n; ++i) residual[i] -= A.at(i, j);
            x[j] = val;
            self(self, j + 1);
        }
        for (std::size_t i = 0; i < n; ++i) residual[i] += ub * A.at(i, j);
        x[j] = 0;
    };
    rec(rec, 0);
    return result;
}

bool in_ideal(const ToricMatrix& A, const Move& v, const std::vector<Move>& B, const Caps& caps) {
    validate(A);
    if (v.size() != A.cols) throw std::invalid_argument("in_ideal: length mismatch");
    if (!is_zero(A * v)) throw std::invalid_argument("in_ideal: vector not in the kernel");
    std::vector<std::pair<Move, Move>> parts;
    parts.reserve(B.size());
    for (const Move& g : B) {
        if (g.size() != A.cols) throw std::invalid_argument("in_ideal: length mismatch");
        if (!is_zero(A * g)) throw std::invalid_argument("in_ideal: move not in the kernel");
        parts.emplace_back(plus(g), minus(g));
    }
    Move source = plus(v);
    Move target = minus(v);
    if (source == target) return true;
    std::set<Move> visited{source};
    std::deque<Move> queue{std::move(source)};
    while (!queue.empty()) {
        Move w = std::move(queue.front());
        queue.pop_front();
        for (const auto& [gp, gm] : parts)
            for (int dir = 0; dir < 2; ++dir) {
                const Move& from = dir == 0 ? gp : gm;
                const Move& to = dir == 0 ? gm : gp;
                if (!leq(from, w)) continue;
                Move next = w;
                for (std::size_t i = 0; i < next.size(); ++i) next[i] += to[i] - from[i];
                if (next == target) return true;
                if (visited.insert(next).second) {
                    if (visited.size() > caps.fiber) throw FiberCapExceeded(caps.fiber);
                    queue.push_back(std::move(next));
                }
            }
    }
    return false;
}

MinimalGenerating is_minimal_generating(const ToricMatrix& A, const GraverSet& G,
                                        const Caps& caps) {
    MinimalGenerating result;
    for (std::size_t k = 0; k < G.moves.size(); ++k) {
        std::vector<Move> rest;
        rest.reserve(G.moves.size() - 1);
        for (std::size_t l = 0; l < G.moves.size(); ++l)
            if (l != k) rest.push_back(G.moves[l]);
        if (in_ideal(A, G.moves[k], rest, caps)) {
            result.ok = false;
            result.redundant.push_back(G.moves[k]);
        }
    }
    return result;
}

GraverSet indispensable(const ToricMatrix& A, const GraverSet& G, const Caps& caps) {
    std::vector<Move> degrees = degree_of_each(A, G);
    std::map<Move, std::vector<std::size_t>> by_degree;
    for (std::size_t k = 0; k < G.moves.size(); ++k) by_degree[degrees[k]].push_back(k);
    std::vector<Move> keep;
    for (const auto& [b, members] : by_degree) {
        // only the two-point shape can pass, so enumeration may stop at three
        Fiber F;
        if (caps.fiber > 2) {
            Caps tight = caps;
            tight.fiber = 2;
            try {
                F = fiber(A, b, tight);
            } catch (const FiberCapExceeded&) {
                continue;
            }
        } else {
            F = fiber(A, b, caps);
        }
        if (F.points.size() != 2) continue;
        std::vector<Move> lower;
        for (std::size_t l = 0; l < G.moves.size(); ++l)
            if (degrees[l] != b) lower.push_back(G.moves[l]);
        if (fiber_components(F.points, lower).size() != 2) continue;
        for (std::size_t k : members) keep.push_back(G.moves[k]);
    }
    return make_graver_set(std::move(keep), G.matrix_fingerprint);
}

GraverSet indispensable(const ToricMatrix& A, const Caps& caps) {
    return indispensable(A, graver_basis(A, caps), caps);
}

std::vector<std::vector<Move>> minimal_markov_bases(const ToricMatrix& A, const Caps& caps) {
    GraverSet G = graver_basis(A, caps);
    std::vector<Move> degrees = degree_of_each(A, G);
    std::map<Move, std::vector<std::size_t>> by_degree;
    for (std::size_t k = 0; k < G.moves.size(); ++k) by_degree[degrees[k]].push_back(k);

    struct Block {
        std::vector<Move> points;
        std::vector<std::vector<std::size_t>> comps;
    };
    std::vector<Block> blocks;
    mpz_class total = 1;
    for (const auto& [b, members] : by_degree) {
        Fiber F = fiber(A, b, caps);
        std::vector<Move> lower;
        for (std::size_t l = 0; l < G.moves.size(); ++l)
            if (degrees[l] != b) lower.push_back(G.moves[l]);
        auto comps = fiber_components(F.points, lower);
        if (comps.size() < 2) continue;
        // spanning choices at one degree: sum over labeled trees of the
        // product of endpoint component sizes = (prod sizes)*(sum sizes)^(t-2)
        mpz_class count = 1;
        mpz_class sum = 0;
        for (const auto& c : comps) {
            count *= static_cast<unsigned long>(c.size());
            sum += static_cast<unsigned long>(c.size());
        }
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), sum.get_mpz_t(),
                   static_cast<unsigned long>(comps.size() - 2));
        total *= count * pw;
        if (total > static_cast<unsigned long>(caps.spanning_trees))
            throw BudgetExceeded(caps.spanning_trees);
        blocks.push_back(Block{std::move(F.points), std::move(comps)});
    }

    std::vector<std::vector<Move>> bases{{}};
    for (const Block& block : blocks) {
        const auto& comps = block.comps;
        const std::size_t t = comps.size();
        std::vector<std::vector<Move>> selections;
        std::vector<std::size_t> seq(t - 2, 0);
        bool trees_done = false;
        while (!trees_done) {
            auto edges = prufer_decode(seq, t);
            std::vector<std::size_t> choice(edges.size(), 0);
            bool choices_done = false;
            while (!choices_done) {
                std::vector<Move> selection;
                selection.reserve(edges.size());
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    const auto& cp = comps[edges[e].first];
                    const auto& cq = comps[edges[e].second];
                    const Move& u = block.points[cp[choice[e] / cq.size()]];
                    const Move& v = block.points[cq[choice[e] % cq.size()]];
                    Move g(u.size());
                    for (std::size_t i = 0; i < u.size(); ++i) g[i] = u[i] - v[i];
                    selection.push_back(canonical(std::move(g)));
                }
                std::sort(selection.begin(), selection.end());
                selections.push_back(std::move(selection));
                std::size_t e = 0;
                while (e < edges.size()) {
                    std::size_t radix =
                        comps[edges[e].first].size() * comps[edges[e].second].size();
                    if (++choice[e] < radix) break;
                    choice[e] = 0;
                    ++e;
                }
                choices_done = e == edges.size();
            }
            std::size_t i = 0;
            while (i < seq.size()) {
                if (++seq[i] < t) break;
                seq[i] = 0;
                ++i;
            }
            trees_done = i == seq.size();
        }
        std::vector<std::vector<Move>> next;
        next.reserve(bases.size() * selections.size());
        for (const auto& base : bases)
            for (const auto& selection : selections) {
                std::vector<Move> merged = base;
                merged.insert(merged.end(), selection.begin(), selection.end());
                next.push_back(std::move(merged));
            }
        bases = std::move(next);
    }
    return bases;
}

GraverSet indispensable_oracle(const ToricMatrix& A, const Caps& caps) {
    std::vector<std::vector<Move>> bases = minimal_markov_bases(A, caps);
    std::vector<Move> intersection = bases.front();
    std::sort(intersection.begin(), intersection.end());
    for (std::size_t k = 1; k < bases.size() && !intersection.empty(); ++k) {
        std::sort(bases[k].begin(), bases[k].end());
        std::vector<Move> kept;
        std::set_intersection(intersection.begin(), intersection.end(), bases[k].begin(),
                              bases[k].end(), std::back_inserter(kept));
        intersection = std::move(kept);
    }
    return make_graver_set(std::move(intersection), fingerprint(A));
}

} // namespace toric
