#include "toric/move.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

bool is_zero(const Move& v) {
    for (const Int& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Move plus(const Move& v) {
    Move r(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) > 0) r[i] = v[i];
    return r;
}

Move minus(const Move& v) {
    Move r(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) < 0) r[i] = -v[i];
    return r;
}

Move negated(const Move& v) {
    Move r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

bool conformal_leq(const Move& u, const Move& v) {
    if (u.size() != v.size()) throw std::invalid_argument("conformal_leq: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i) {
        int su = sgn(u[i]);
        if (su == 0) continue;
        // same sign and |u_i| <= |v_i|, else u_i sticks out of v
        if (su > 0) {
            if (v[i] < u[i]) return false;
        } else {
            if (v[i] > u[i]) return false;
        }
    }
    return true;
}

Move restrict(const Move& v, const std::vector<std::size_t>& indices) {
    Move r(v.size(), 0);
    for (std::size_t i : indices) {
        if (i >= v.size()) throw std::invalid_argument("restrict: index out of range");
        r[i] = v[i];
    }
    return r;
}

void canonicalize(Move& v) {
    for (const Int& x : v) {
        int s = sgn(x);
        if (s > 0) return;
        if (s < 0) {
            for (Int& y : v) y = -y;
            return;
        }
    }
}

Move canonical(Move v) {
    canonicalize(v);
    return v;
}

std::vector<std::string> edge_names(std::size_t m) {
    std::vector<std::string> names(m);
    for (std::size_t i = 0; i < m; ++i) names[i] = "e" + std::to_string(i + 1);
    return names;
}

namespace {

std::string render_side(const Move& part, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (sgn(part[i]) == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (part[i] != 1) out += "^" + part[i].get_str();
    }
    return out.empty() ? "1" : out;
}

} // namespace

std::string render_binomial(const Move& v, const std::vector<std::string>& names) {
    if (names.size() != v.size()) throw std::invalid_argument("render_binomial: names length mismatch");
    if (is_zero(v)) return "0";
    return render_side(plus(v), names) + " - " + render_side(minus(v), names);
}

namespace {

void parse_side(const std::string& text, const std::map<std::string, std::size_t>& index,
                Move& out, int side_sign) {
    if (text == "1") return;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t star = text.find('*', pos);
        std::string factor = text.substr(pos, star == std::string::npos ? star : star - pos);
        if (factor.empty()) throw ParseError("binomial: empty factor in '" + text + "'");
        std::string name = factor;
        Int expo = 1;
        std::size_t caret = factor.find('^');
        if (caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string digits = factor.substr(caret + 1);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("binomial: bad exponent in '" + factor + "'");
            expo = Int(digits);
            if (expo < 1) throw ParseError("binomial: exponent must be positive in '" + factor + "'");
        }
        auto it = index.find(name);
        if (it == index.end()) throw ParseError("binomial: unknown name '" + name + "'");
        if (sgn(out[it->second]) != 0)
            throw ParseError("binomial: name '" + name + "' appears twice");
        out[it->second] = side_sign > 0 ? expo : Int(-expo);
        if (star == std::string::npos) break;
        pos = star + 1;
    }
}

} // namespace

Move parse_binomial(const std::string& text, const std::vector<std::string>& names) {
    Move v(names.size(), 0);
    if (text == "0") return v;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
    std::size_t sep = text.find(" - ");
    if (sep == std::string::npos) throw ParseError("binomial: missing ' - ' in '" + text + "'");
    if (text.find(" - ", sep + 3) != std::string::npos)
        throw ParseError("binomial: more than one ' - ' in '" + text + "'");
    parse_side(text.substr(0, sep), index, v, +1);
    parse_side(text.substr(sep + 3), index, v, -1);
    return v;
}

GraverSet make_graver_set(std::vector<Move> moves, std::uint64_t matrix_fingerprint) {
    for (Move& v : moves) canonicalize(v);
    std::erase_if(moves, [](const Move& v) { return is_zero(v); });
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    GraverSet g;
    g.moves = std::move(moves);
    g.matrix_fingerprint = matrix_fingerprint;
    return g;
}

} // namespace toric
