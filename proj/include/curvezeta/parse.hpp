/*
   Copyright 2026 The curvezeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CURVEZETA_PARSE_HPP
#define CURVEZETA_PARSE_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "bipoly.hpp"

namespace curvezeta {

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(size_t off, const std::string& msg)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

/// Parse "y^2 - x^3 - x - 1" style expressions: signed sums of products of
/// integer constants and x^i / y^j factors, '*' and '^1' optional,
/// whitespace insignificant. Coefficients are reduced mod p; terms that
/// reduce to zero are dropped (reported via dropped_terms).
inline BPoly parse_poly(const std::string& text, const Fq& Fp, unsigned* dropped_terms = nullptr) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> uint64_t {
        size_t start = pos;
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
            if (v > (1ULL << 62)) throw ParseError(start, "integer too large");
            ++pos;
        }
        if (pos == start) throw ParseError(pos, "expected integer");
        return v;
    };

    BPoly f;
    unsigned dropped = 0;
    skip_ws();
    if (pos == text.size()) throw ParseError(pos, "empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        // sign
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError(pos, "expected '+' or '-' between terms");
        }
        first = false;
        // term: product of factors
        uint64_t coeff = 1;
        unsigned ex = 0, ey = 0;
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                if (!any_factor) throw ParseError(pos, "unexpected '*'");
                ++pos;
                skip_ws();
            }
            if (pos >= text.size()) break;
            char ch = text[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                uint64_t v = parse_uint();
                coeff = (static_cast<__uint128_t>(coeff) * (v % Fp.p())) % Fp.p();
                any_factor = true;
            } else if (ch == 'x' || ch == 'y') {
                ++pos;
                unsigned e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                        throw ParseError(pos, "expected exponent after '^'");
                    uint64_t v = parse_uint();
                    if (v > 10000) throw ParseError(pos, "exponent too large");
                    e = static_cast<unsigned>(v);
                }
                (ch == 'x' ? ex : ey) += e;
                any_factor = true;
            } else {
                break;  // end of term
            }
        }
        if (!any_factor) throw ParseError(pos, "expected term");
        long long c = sign * static_cast<long long>(coeff % Fp.p());
        long long m = static_cast<long long>(Fp.p());
        uint64_t red = static_cast<uint64_t>(((c % m) + m) % m);
        if (red == 0)
            ++dropped;
        else
            bp_addto(Fp, f, ex, ey, Fp.from_int(red));
        skip_ws();
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
            throw ParseError(pos, "unexpected character");
    }
    if (dropped_terms) *dropped_terms = dropped;
    if (f.is_zero()) throw ParseError(0, "polynomial is zero mod p");
    return f;
}

/// Lines of "i j c" exponent/coefficient triples; blank lines and lines
/// starting with '#' are skipped.
inline BPoly parse_poly_triples(const std::string& text, const Fq& Fp) {
    BPoly f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t ws = line.find_first_not_of(" \t\r");
        if (ws == std::string::npos || line[ws] == '#') continue;
        std::istringstream ls(line);
        long long i, j, c;
        if (!(ls >> i >> j >> c) || i < 0 || j < 0)
            throw ParseError(0, "bad triple line: " + line);
        long long m = static_cast<long long>(Fp.p());
        uint64_t red = static_cast<uint64_t>(((c % m) + m) % m);
        if (red)
            bp_addto(Fp, f, static_cast<unsigned>(i), static_cast<unsigned>(j), Fp.from_int(red));
    }
    if (f.is_zero()) throw ParseError(0, "polynomial is zero mod p");
    return f;
}

// expression or triples, auto-detected
inline BPoly parse_poly_any(const std::string& text, const Fq& Fp, unsigned* dropped = nullptr) {
    bool triples = true;
    std::istringstream in(text);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        size_t ws = line.find_first_not_of(" \t\r");
        if (ws == std::string::npos || line[ws] == '#') continue;
        any = true;
        std::istringstream ls(line);
        long long i, j, c;
        std::string rest;
        if (!(ls >> i >> j >> c) || (ls >> rest)) {
            triples = false;
            break;
        }
    }
    if (!any) throw ParseError(0, "empty polynomial input");
    return triples ? parse_poly_triples(text, Fp) : parse_poly(text, Fp, dropped);
}

inline std::string render_poly(const Fq& Fp, const BPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
        auto& [e, c] = *it;
        if (!s.empty()) s += " + ";
        bool coef = (c[0] != 1) || (e.first == 0 && e.second == 0);
        if (coef) s += std::to_string(c[0]);
        if (e.first > 0) {
            if (coef) s += "*";
            s += "x";
            if (e.first > 1) s += "^" + std::to_string(e.first);
        }
        if (e.second > 0) {
            if (coef || e.first > 0) s += "*";
            s += "y";
            if (e.second > 1) s += "^" + std::to_string(e.second);
        }
    }
    return s;
}

}  // namespace curvezeta

#endif
