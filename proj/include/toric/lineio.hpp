#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/move.hpp"

namespace toric {

struct TokenLine {
    std::size_t line_no = 0; // 1-based, as in the source text
    std::vector<std::string> tokens;
};

// whitespace-split lines with `#` comments stripped and blank lines dropped
inline std::vector<TokenLine> tokenized_lines(std::istream& in) {
    std::vector<TokenLine> out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        TokenLine line;
        line.line_no = line_no;
        std::string tok;
        while (words >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

inline Int parse_int(const std::string& tok, std::size_t line_no) {
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw ParseError("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    }
}

inline long parse_count(const std::string& tok, std::size_t line_no, long lo, long hi) {
    Int z = parse_int(tok, line_no);
    if (!z.fits_slong_p() || z.get_si() < lo || z.get_si() > hi)
        throw ParseError("line " + std::to_string(line_no) + ": value out of range: '" + tok + "'");
    return z.get_si();
}

} // namespace toric
