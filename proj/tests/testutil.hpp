#pragma once

#include <cstdint>
#include <vector>

#include "toric/graph.hpp"
#include "toric/matrix.hpp"
#include "toric/move.hpp"
#include "toric/rng.hpp"

namespace toric::testutil {

inline Move mv(std::initializer_list<long> xs) {
    Move v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline ToricMatrix mx(std::size_t n, std::size_t m, std::initializer_list<long> xs) {
    ToricMatrix A(n, m);
    std::size_t i = 0;
    for (long x : xs) A.entries[i++] = x;
    return A;
}

// All kernel vectors of A with ||v||inf <= box, zero excluded. Runs on plain
// machine ints, independent of the library's elimination code. Requires
// matrix entries and box small enough that no partial sum leaves int64.
inline std::vector<Move> box_kernel(const ToricMatrix& A, long box) {
    std::size_t n = A.rows, m = A.cols;
    std::vector<std::vector<long>> a(n, std::vector<long>(m));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) a[r][c] = A.at(r, c).get_si();

    std::vector<Move> found;
    std::vector<long> v(m, -box);
    std::vector<long> sums(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) sums[r] += a[r][c] * v[c];
    for (;;) {
        bool zero_sum = true;
        for (std::size_t r = 0; r < n; ++r) zero_sum = zero_sum && sums[r] == 0;
        bool zero_vec = true;
        for (std::size_t c = 0; c < m; ++c) zero_vec = zero_vec && v[c] == 0;
        if (zero_sum && !zero_vec) {
            Move w;
            for (long x : v) w.emplace_back(x);
            found.push_back(std::move(w));
        }
        std::size_t c = 0;
        while (c < m && v[c] == box) {
            for (std::size_t r = 0; r < n; ++r) sums[r] -= a[r][c] * 2 * box;
            v[c] = -box;
            ++c;
        }
        if (c == m) break;
        ++v[c];
        for (std::size_t r = 0; r < n; ++r) sums[r] += a[r][c];
    }
    return found;
}

// Rational Gaussian elimination; shared by the rank and membership oracles.
inline std::size_t reduce_rational(std::vector<std::vector<mpq_class>>& M) {
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            mpq_class f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rational_rank(const ToricMatrix& A) {
    std::vector<std::vector<mpq_class>> M(A.rows, std::vector<mpq_class>(A.cols));
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < A.cols; ++c) M[r][c] = mpq_class(A.at(r, c));
    return reduce_rational(M);
}

// Does v lie in the integer span of the given vectors? Solves over Q and
// checks the (unique, if the vectors are independent) solution is integral.
inline bool in_integer_span(const std::vector<Move>& basis, const Move& v) {
    std::size_t m = v.size(), k = basis.size();
    if (k == 0) return is_zero(v);
    // columns = basis vectors, augmented with v
    std::vector<std::vector<mpq_class>> M(m, std::vector<mpq_class>(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) M[i][j] = mpq_class(basis[j][i]);
        M[i][k] = mpq_class(v[i]);
    }
    reduce_rational(M);
    // each pivot row gives one coordinate; an inconsistent row has pivot in the last column
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t c = 0;
        while (c <= k && M[i][c] == 0) ++c;
        if (c == k) return false; // 0 = nonzero
        if (c == k + 1) continue; // zero row
        mpq_class coeff = M[i][k] / M[i][c];
        if (coeff.get_den() != 1) return false;
    }
    return true;
}

// Simple graph on 2..max_n vertices with 1..max_m edges, random orientations
// and weights in 1..max_w.
inline WeightedOrientedGraph random_graph(Rng& rng, std::size_t max_n, std::size_t max_m, long max_w) {
    WeightedOrientedGraph D;
    D.vertex_count = 2 + rng.below(max_n - 1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < D.vertex_count; ++a)
        for (std::size_t b = a + 1; b < D.vertex_count; ++b) pairs.push_back({a, b});
    std::size_t m = 1 + rng.below(std::min<std::uint64_t>(max_m, pairs.size()));
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = i + rng.below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
        if (rng.below(2))
            D.edges.push_back({pairs[i].first, pairs[i].second});
        else
            D.edges.push_back({pairs[i].second, pairs[i].first});
    }
    for (std::size_t v = 0; v < D.vertex_count; ++v) D.weights.emplace_back(rng.range(1, max_w));
    return D;
}

inline ToricMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m, long max_entry) {
    for (;;) {
        ToricMatrix A(n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) A.at(r, c) = Int(rng.range(0, max_entry));
        bool ok = true;
        for (std::size_t c = 0; c < m && ok; ++c) {
            bool nonzero = false;
            for (std::size_t r = 0; r < n; ++r) nonzero = nonzero || sgn(A.at(r, c)) != 0;
            ok = nonzero;
        }
        if (ok) return A;
    }
}

} // namespace toric::testutil
