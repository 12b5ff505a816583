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

#ifndef CURVEZETA_UNIPOLY_HPP
#define CURVEZETA_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace curvezeta {

/// Univariate polynomial over Fq. Coefficient i of x^i is c[i]; no trailing
/// zeros are stored, so the zero polynomial has empty c and degree -1.
struct UPoly {
    std::vector<Fq::Elt> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

inline UPoly up_normalize(const Fq& K, UPoly f) {
    while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
    return f;
}

inline UPoly up_zero() { return UPoly{}; }

inline UPoly up_const(const Fq& K, const Fq::Elt& a) {
    UPoly f;
    if (!K.is_zero(a)) f.c = {a};
    return f;
}

inline UPoly up_x(const Fq& K) { return UPoly{{K.zero(), K.one()}}; }

// from small integer coefficients, c0 first
inline UPoly up_from_ints(const Fq& K, const std::vector<long long>& cs) {
    UPoly f;
    for (auto v : cs) {
        long long m = static_cast<long long>(K.p());
        long long r = ((v % m) + m) % m;
        f.c.push_back(K.from_int(static_cast<uint64_t>(r)));
    }
    return up_normalize(K, f);
}

inline Fq::Elt up_coeff(const Fq& K, const UPoly& f, size_t i) {
    return i < f.c.size() ? f.c[i] : K.zero();
}

inline bool up_eq(const Fq& K, const UPoly& f, const UPoly& g) {
    if (f.c.size() != g.c.size()) return false;
    for (size_t i = 0; i < f.c.size(); ++i)
        if (!K.eq(f.c[i], g.c[i])) return false;
    return true;
}

inline UPoly up_add(const Fq& K, const UPoly& f, const UPoly& g) {
    UPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), K.zero());
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = K.add(up_coeff(K, f, i), up_coeff(K, g, i));
    return up_normalize(K, r);
}

inline UPoly up_sub(const Fq& K, const UPoly& f, const UPoly& g) {
    UPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), K.zero());
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = K.sub(up_coeff(K, f, i), up_coeff(K, g, i));
    return up_normalize(K, r);
}

inline UPoly up_neg(const Fq& K, const UPoly& f) {
    UPoly r = f;
    for (auto& a : r.c) a = K.neg(a);
    return r;
}

inline UPoly up_mul(const Fq& K, const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return up_zero();
    UPoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, K.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (K.is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(f.c[i], g.c[j]));
    }
    return up_normalize(K, r);
}

inline UPoly up_scale(const Fq& K, const Fq::Elt& a, const UPoly& f) {
    if (K.is_zero(a)) return up_zero();
    UPoly r = f;
    for (auto& x : r.c) x = K.mul(a, x);
    return up_normalize(K, r);
}

// quotient and remainder; divisor must be nonzero
inline std::pair<UPoly, UPoly> up_divrem(const Fq& K, UPoly f, const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("up_divrem: division by zero polynomial");
    UPoly q;
    if (f.deg() < g.deg()) return {up_zero(), f};
    q.c.assign(f.c.size() - g.c.size() + 1, K.zero());
    Fq::Elt lcinv = K.inv(g.c.back());
    for (size_t k = f.c.size(); k-- >= g.c.size();) {
        Fq::Elt coef = K.mul(f.c[k], lcinv);
        size_t pos = k - (g.c.size() - 1);
        q.c[pos] = coef;
        if (!K.is_zero(coef))
            for (size_t j = 0; j < g.c.size(); ++j)
                f.c[pos + j] = K.sub(f.c[pos + j], K.mul(coef, g.c[j]));
        if (k == 0) break;
    }
    return {up_normalize(K, q), up_normalize(K, f)};
}

inline UPoly up_mod(const Fq& K, const UPoly& f, const UPoly& g) {
    return up_divrem(K, f, g).second;
}

inline UPoly up_monic(const Fq& K, const UPoly& f) {
    if (f.is_zero()) return f;
    return up_scale(K, K.inv(f.c.back()), f);
}

/// Monic gcd; gcd(0, g) is the monic normalization of g, gcd(0, 0) errors.
inline UPoly up_gcd(const Fq& K, UPoly f, UPoly g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("up_gcd: gcd(0, 0)");
    while (!g.is_zero()) {
        UPoly r = up_mod(K, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return up_monic(K, f);
}

inline Fq::Elt up_eval(const Fq& K, const UPoly& f, const Fq::Elt& x) {
    Fq::Elt r = K.zero();
    for (size_t i = f.c.size(); i-- > 0;) r = K.add(K.mul(r, x), f.c[i]);
    return r;
}

inline UPoly up_derivative(const Fq& K, const UPoly& f) {
    UPoly r;
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c.push_back(K.scalar_mul(i % K.p(), f.c[i]));
    return up_normalize(K, r);
}

inline UPoly up_pow(const Fq& K, UPoly f, uint64_t e) {
    UPoly r = up_const(K, K.one());
    while (e) {
        if (e & 1) r = up_mul(K, r, f);
        f = up_mul(K, f, f);
        e >>= 1;
    }
    return r;
}

inline UPoly up_powmod(const Fq& K, UPoly b, bigint e, const UPoly& m) {
    UPoly r = up_const(K, K.one());
    b = up_mod(K, b, m);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = up_mod(K, up_mul(K, r, b), m);
        b = up_mod(K, up_mul(K, b, b), m);
        e >>= 1;
    }
    return r;
}

// exact division; throws if remainder is nonzero
inline UPoly up_divexact(const Fq& K, const UPoly& f, const UPoly& g) {
    auto [q, r] = up_divrem(K, f, g);
    if (!r.is_zero()) throw std::logic_error("up_divexact: inexact division");
    return q;
}

// f(x + a)
inline UPoly up_shift(const Fq& K, const UPoly& f, const Fq::Elt& a) {
    UPoly r;
    for (size_t i = f.c.size(); i-- > 0;) {
        // r = r*(x+a) + c[i]
        UPoly xa{{a, K.one()}};
        r = up_add(K, up_mul(K, r, xa), up_const(K, f.c[i]));
    }
    return r;
}

inline std::string up_to_string(const Fq& K, const UPoly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (K.is_zero(f.c[i])) continue;
        if (!s.empty()) s += " + ";
        s += K.to_string(f.c[i]);
        if (i >= 1) s += "*" + var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace curvezeta

#endif
