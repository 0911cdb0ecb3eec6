#include "toric/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/lineio.hpp"

namespace toric {

void validate(const ToricMatrix& A) {
    if (A.entries.size() != A.rows * A.cols)
        throw std::invalid_argument("matrix: entry count does not match dimensions");
    for (const Int& x : A.entries)
        if (sgn(x) < 0) throw std::invalid_argument("matrix: negative entry");
    for (std::size_t c = 0; c < A.cols; ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < A.rows && !nonzero; ++r) nonzero = sgn(A.at(r, c)) != 0;
        if (!nonzero) throw std::invalid_argument("matrix: column " + std::to_string(c + 1) + " is zero");
    }
}

std::uint64_t fingerprint(const ToricMatrix& A) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    mix(std::to_string(A.rows));
    mix(std::to_string(A.cols));
    for (const Int& x : A.entries) mix(x.get_str());
    return h;
}

Move operator*(const ToricMatrix& A, const Move& v) {
    if (v.size() != A.cols) throw std::invalid_argument("matrix*vector: length mismatch");
    Move r(A.rows, 0);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) r[i] += A.at(i, j) * v[j];
    return r;
}

Int det(const ToricMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det: matrix not square");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    std::vector<Int> M = A.entries;
    auto at = [&M, n](std::size_t r, std::size_t c) -> Int& { return M[r * n + c]; };
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(at(k, k)) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(at(piv, k)) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        // Bareiss step: every entry stays a minor of A, division is exact
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign < 0 ? Int(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

std::size_t rank(const ToricMatrix& A) {
    std::size_t n = A.rows, m = A.cols;
    std::vector<Int> M = A.entries;
    auto at = [&M, m](std::size_t r, std::size_t c) -> Int& { return M[r * m + c]; };
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && sgn(at(piv, c)) == 0) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m; ++j) std::swap(at(r, j), at(piv, j));
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m; ++j)
                at(i, j) = (at(i, j) * at(r, c) - at(i, c) * at(r, j)) / prev;
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

std::size_t null_dim(const ToricMatrix& A) { return A.cols - rank(A); }

std::vector<Move> kernel_basis(const ToricMatrix& A) {
    std::size_t n = A.rows, m = A.cols;
    std::size_t w = n + m;
    // rows of B = [A^T | I]; all row operations are unimodular, so the rows
    // whose A^T part vanishes form a saturated basis of ker_Z(A)
    std::vector<Int> B(m * w, 0);
    auto at = [&B, w](std::size_t r, std::size_t c) -> Int& { return B[r * w + c]; };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) at(i, j) = A.at(j, i);
        at(i, n + i) = 1;
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && sgn(at(piv, col)) == 0) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t j = 0; j < w; ++j) std::swap(at(row, j), at(piv, j));
        for (std::size_t i = row + 1; i < m; ++i) {
            if (sgn(at(i, col)) == 0) continue;
            Int a = at(row, col), b = at(i, col), g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int ag = a / g, bg = b / g;
            for (std::size_t j = col; j < w; ++j) {
                Int x = at(row, j), y = at(i, j);
                at(row, j) = s * x + t * y;
                at(i, j) = ag * y - bg * x;
            }
        }
        ++row;
    }
    std::vector<Move> basis;
    for (std::size_t i = row; i < m; ++i) {
        Move v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = at(i, n + j);
        canonicalize(v);
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

ToricMatrix parse_matrix(std::istream& in) {
    auto lines = tokenized_lines(in);
    if (lines.empty()) throw ParseError("matrix: empty input");
    const TokenLine& h = lines[0];
    if (h.tokens.size() != 3 || h.tokens[0] != "matrix")
        throw ParseError("line " + std::to_string(h.line_no) + ": expected 'matrix <n> <m>'");
    long n = parse_count(h.tokens[1], h.line_no, 1, 100000);
    long m = parse_count(h.tokens[2], h.line_no, 1, 100000);
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("matrix: expected " + std::to_string(n) + " rows, got " +
                         std::to_string(lines.size() - 1));
    ToricMatrix A(n, m);
    for (long r = 0; r < n; ++r) {
        const TokenLine& line = lines[r + 1];
        if (line.tokens.size() != static_cast<std::size_t>(m))
            throw ParseError("line " + std::to_string(line.line_no) + ": expected " +
                             std::to_string(m) + " entries");
        for (long c = 0; c < m; ++c) A.at(r, c) = parse_int(line.tokens[c], line.line_no);
    }
    validate(A);
    return A;
}

std::string emit_matrix(const ToricMatrix& A) {
    std::ostringstream out;
    out << "matrix " << A.rows << " " << A.cols << "\n";
    for (std::size_t r = 0; r < A.rows; ++r) {
        for (std::size_t c = 0; c < A.cols; ++c) {
            if (c) out << " ";
            out << A.at(r, c).get_str();
        }
        out << "\n";
    }
    return out.str();
}

} // namespace toric
