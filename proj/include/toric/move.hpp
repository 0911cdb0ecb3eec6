#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;

// Element of ker_Z(A): signed exponent vector of the binomial e^{v+} - e^{v-}.
using Move = std::vector<Int>;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

bool is_zero(const Move& v);

// positive and negative parts, v = plus(v) - minus(v), both nonnegative
Move plus(const Move& v);
Move minus(const Move& v);

Move negated(const Move& v);

// u <= v entrywise on both parts: u+ <= v+ and u- <= v-
bool conformal_leq(const Move& u, const Move& v);

// keep entries at the given 0-based indices, zero elsewhere; length unchanged
Move restrict(const Move& v, const std::vector<std::size_t>& indices);

// flip sign so the first nonzero entry is positive
void canonicalize(Move& v);
Move canonical(Move v);

// e1, e2, ..., em
std::vector<std::string> edge_names(std::size_t m);

// `e1*e3^2 - e2^3`; an empty side renders as `1`, the zero move as `0`
std::string render_binomial(const Move& v, const std::vector<std::string>& names);

// inverse of render_binomial on canonical text
Move parse_binomial(const std::string& text, const std::vector<std::string>& names);

// canonically signed, lexicographically sorted, duplicate-free
struct GraverSet {
    std::vector<Move> moves;
    std::uint64_t matrix_fingerprint = 0;
};

// canonicalizes signs, drops zero vectors, sorts, dedups
GraverSet make_graver_set(std::vector<Move> moves, std::uint64_t matrix_fingerprint);

} // namespace toric
