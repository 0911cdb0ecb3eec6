#include "toric/graver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace toric {

namespace {

Move added(const Move& a, const Move& b) {
    Move r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Move subtracted(const Move& a, const Move& b) {
    Move r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Int l1_norm(const Move& v) {
    Int s = 0;
    for (const Int& x : v) s += abs(x);
    return s;
}

// largest t >= 0 with t*g conformal below v (t*(-g) when neg); floor division
// keeps the sign test and the magnitude test in one shot
Int largest_multiple(const Move& v, const Move& g, bool neg) {
    Int t;
    bool have = false;
    Int d, q;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (sgn(g[i]) == 0) continue;
        d = neg ? Int(-g[i]) : g[i];
        mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), d.get_mpz_t());
        if (q <= 0) return 0;
        if (!have || q < t) {
            t = q;
            have = true;
        }
    }
    return have ? t : Int(0);
}

void apply_reduction(Move& v, const Int& t, const Move& g, bool neg) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (neg)
            v[i] += t * g[i];
        else
            v[i] -= t * g[i];
    }
}

bool reduce_once(Move& v, const Move& g) {
    Int t = largest_multiple(v, g, false);
    if (t > 0) {
        apply_reduction(v, t, g, false);
        return true;
    }
    t = largest_multiple(v, g, true);
    if (t > 0) {
        apply_reduction(v, t, g, true);
        return true;
    }
    return false;
}

std::vector<Move> prune_non_minimal(const std::vector<Move>& G) {
    std::vector<Move> minimal;
    for (std::size_t k = 0; k < G.size(); ++k) {
        bool dominated = false;
        for (std::size_t l = 0; l < G.size() && !dominated; ++l) {
            if (l == k) continue;
            dominated = conformal_leq(G[l], G[k]) || conformal_leq(negated(G[l]), G[k]);
        }
        if (!dominated) minimal.push_back(G[k]);
    }
    return minimal;
}

} // namespace

Move conformal_reduce(Move v, const std::vector<Move>& reducers) {
    for (const Move& g : reducers)
        if (g.size() != v.size()) throw std::invalid_argument("conformal_reduce: length mismatch");
    bool changed = true;
    while (changed && !is_zero(v)) {
        changed = false;
        for (const Move& g : reducers)
            if (reduce_once(v, g)) changed = true;
    }
    return v;
}

GraverSet graver_basis(const ToricMatrix& A, const Caps& caps) {
    validate(A);
    std::vector<Move> G;
    std::deque<std::pair<std::size_t, std::size_t>> pending;
    auto insert = [&](Move r) {
        G.push_back(std::move(r));
        if (G.size() > caps.graver_working_set) throw BudgetExceeded(caps.graver_working_set);
        for (std::size_t i = 0; i + 1 < G.size(); ++i) pending.emplace_back(i, G.size() - 1);
    };
    for (const Move& b : kernel_basis(A)) {
        Move r = conformal_reduce(b, G);
        if (!is_zero(r)) insert(std::move(r));
    }
    while (!pending.empty()) {
        auto [i, j] = pending.front();
        pending.pop_front();
        for (int variant = 0; variant < 2; ++variant) {
            Move s = variant == 0 ? added(G[i], G[j]) : subtracted(G[i], G[j]);
            Move r = conformal_reduce(std::move(s), G);
            if (!is_zero(r)) insert(std::move(r));
        }
    }
    return make_graver_set(prune_non_minimal(G), fingerprint(A));
}

GraverSet brute_force_graver(const ToricMatrix& A, long box, const Caps& caps) {
    validate(A);
    if (box < 1) throw std::invalid_argument("brute_force_graver: box must be >= 1");
    const std::size_t n = A.rows;
    const std::size_t m = A.cols;

    // fraction-free row echelon (Bareiss), pivots leftmost
    std::vector<Move> R(n, Move(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) R[i][j] = A.at(i, j);
    std::vector<std::size_t> pivot_col;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t j = 0; j < m && row < n; ++j) {
        std::size_t p = row;
        while (p < n && sgn(R[p][j]) == 0) ++p;
        if (p == n) continue;
        std::swap(R[p], R[row]);
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t l = j + 1; l < m; ++l)
                R[i][l] = (R[i][l] * R[row][j] - R[i][j] * R[row][l]) / prev;
            R[i][j] = 0;
        }
        prev = R[row][j];
        pivot_col.push_back(j);
        ++row;
    }
    std::vector<bool> is_pivot(m, false);
    for (std::size_t j : pivot_col) is_pivot[j] = true;
    std::vector<std::size_t> free_col;
    for (std::size_t j = 0; j < m; ++j)
        if (!is_pivot[j]) free_col.push_back(j);

    // each candidate point fixes the free columns; the pivot columns follow
    // by exact back substitution or the candidate dies
    std::uint64_t points = 0;
    std::vector<long> x(free_col.size(), -box);
    std::vector<Move> kernel_vectors;
    Move v(m);
    Int rhs;
    for (;;) {
        if (++points > caps.brute_force) throw BudgetExceeded(caps.brute_force);
        for (std::size_t k = 0; k < free_col.size(); ++k) v[free_col[k]] = x[k];
        bool good = true;
        for (std::size_t k = pivot_col.size(); k-- > 0;) {
            std::size_t j = pivot_col[k];
            rhs = 0;
            for (std::size_t l = j + 1; l < m; ++l) rhs -= R[k][l] * v[l];
            if (!mpz_divisible_p(rhs.get_mpz_t(), R[k][j].get_mpz_t())) {
                good = false;
                break;
            }
            v[j] = rhs / R[k][j];
            if (abs(v[j]) > box) {
                good = false;
                break;
            }
        }
        if (good && !is_zero(v)) kernel_vectors.push_back(v);
        std::size_t k = 0;
        while (k < x.size() && x[k] == box) x[k++] = -box;
        if (k == x.size()) break;
        ++x[k];
    }

    std::vector<std::pair<Int, Move>> ranked;
    ranked.reserve(kernel_vectors.size());
    for (Move& v : kernel_vectors) ranked.emplace_back(l1_norm(v), std::move(v));
    std::sort(ranked.begin(), ranked.end());

    // a dominating minimal vector has strictly smaller 1-norm, so testing
    // against the already accepted ones suffices
    std::vector<Move> minimal;
    for (const auto& [norm, v] : ranked) {
        bool dominated = false;
        for (const Move& u : minimal) {
            if (conformal_leq(u, v) && u != v) {
                dominated = true;
                break;
            }
            Move nu = negated(u);
            if (conformal_leq(nu, v) && nu != v) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(v);
    }
    return make_graver_set(std::move(minimal), fingerprint(A));
}

Certificate certificate_check(const ToricMatrix& A, const GraverSet& G) {
    Certificate cert;
    auto fail = [&](const char* reason, Move witness) {
        cert.ok = false;
        cert.reason = reason;
        cert.witness = std::move(witness);
        return cert;
    };
    for (const Move& g : G.moves) {
        if (g.size() != A.cols) return fail("member-wrong-length", g);
        if (is_zero(g)) return fail("member-zero", g);
        if (!is_zero(A * g)) return fail("member-not-in-kernel", g);
    }
    for (std::size_t i = 0; i < G.moves.size(); ++i)
        for (std::size_t j = 0; j < G.moves.size(); ++j) {
            if (i == j) continue;
            if (conformal_leq(G.moves[i], G.moves[j]) ||
                conformal_leq(negated(G.moves[i]), G.moves[j]))
                return fail("member-not-minimal", G.moves[j]);
        }
    for (const Move& b : kernel_basis(A))
        if (!is_zero(conformal_reduce(b, G.moves))) return fail("basis-vector-not-reducible", b);
    for (std::size_t i = 0; i < G.moves.size(); ++i)
        for (std::size_t j = i; j < G.moves.size(); ++j)
            for (int variant = 0; variant < 2; ++variant) {
                Move s = variant == 0 ? added(G.moves[i], G.moves[j])
                                      : subtracted(G.moves[i], G.moves[j]);
                if (!is_zero(conformal_reduce(s, G.moves)))
                    return fail("pair-sum-not-reducible", s);
            }
    return cert;
}

GraverSet circuits(const ToricMatrix& A, const Caps& caps) {
    validate(A);
    const std::size_t m = A.cols;
    const std::size_t r = rank(A);
    std::vector<Move> found;
    std::uint64_t examined = 0;
    for (std::size_t size = 2; size <= std::min(m, r + 1); ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t j = 0; j < size; ++j) pick[j] = j;
        for (;;) {
            if (++examined > caps.subsets) throw BudgetExceeded(caps.subsets);
            ToricMatrix sub(A.rows, size);
            for (std::size_t j = 0; j < size; ++j)
                for (std::size_t i = 0; i < A.rows; ++i) sub.at(i, j) = A.at(i, pick[j]);
            if (rank(sub) + 1 == size) {
                std::vector<Move> kb = kernel_basis(sub);
                bool full_support = kb.size() == 1;
                for (std::size_t j = 0; full_support && j < size; ++j)
                    full_support = sgn(kb[0][j]) != 0;
                if (full_support) {
                    Move v(m, Int(0));
                    for (std::size_t j = 0; j < size; ++j) v[pick[j]] = kb[0][j];
                    found.push_back(std::move(v));
                }
            }
            std::size_t j = size;
            while (j > 0 && pick[j - 1] == m - size + (j - 1)) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t l = j; l < size; ++l) pick[l] = pick[l - 1] + 1;
        }
    }
    return make_graver_set(std::move(found), fingerprint(A));
}

} // namespace toric
