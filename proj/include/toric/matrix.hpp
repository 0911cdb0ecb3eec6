#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/move.hpp"

namespace toric {

// Dense nonnegative integer matrix whose columns are generator exponent vectors.
struct ToricMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries; // row-major

    ToricMatrix() = default;
    ToricMatrix(std::size_t n, std::size_t m) : rows(n), cols(m), entries(n * m, 0) {}

    Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bool operator==(const ToricMatrix&) const = default;
};

// throws std::invalid_argument on a negative entry or a zero column
void validate(const ToricMatrix& A);

std::uint64_t fingerprint(const ToricMatrix& A);

// A*v; v may be any integer vector of length cols
Move operator*(const ToricMatrix& A, const Move& v);

// exact determinant, fraction-free elimination; non-square input is an error
Int det(const ToricMatrix& A);

std::size_t rank(const ToricMatrix& A);
std::size_t null_dim(const ToricMatrix& A);

// Basis of the full integer kernel ker_Z(A): unimodular row reduction of
// [A^T | I], so every integer kernel vector is an integer combination of the
// result (saturated, not just a finite-index sublattice).
std::vector<Move> kernel_basis(const ToricMatrix& A);

// text format: `matrix <n> <m>` then n rows of m integers, `#` comments
ToricMatrix parse_matrix(std::istream& in);
std::string emit_matrix(const ToricMatrix& A);

} // namespace toric
