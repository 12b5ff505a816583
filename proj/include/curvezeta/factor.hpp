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

#ifndef CURVEZETA_FACTOR_HPP
#define CURVEZETA_FACTOR_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace curvezeta {

// Fixed seed: equal-degree splitting needs randomness but results must be
// reproducible across runs.
inline constexpr uint64_t kFactorSeed = 0x5EEDC0DEULL;

struct Factorization {
    Fq::Elt unit;                                   // leading coefficient
    std::vector<std::pair<UPoly, unsigned>> parts;  // monic irreducible, multiplicity
};

inline bool is_irreducible(const Fq& K, const UPoly& f) {
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    bigint q = K.cardinality();
    UPoly x = up_x(K);
    // x^{q^n} == x (mod f)
    UPoly h = x;
    for (int i = 0; i < n; ++i) h = up_powmod(K, h, q, f);
    if (!up_eq(K, h, up_mod(K, x, f))) return false;
    // no factor of degree n/l for prime l | n
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        UPoly hl = x;
        for (int i = 0; i < n / l; ++i) hl = up_powmod(K, hl, q, f);
        UPoly g = up_gcd(K, up_sub(K, hl, x), f);
        if (g.deg() != 0) return false;
    }
    return true;
}

/// Deterministically-first extension field: enumerate monic degree-m moduli in
/// increasing order of their coefficient sequence read as base-p digits and
/// take the first irreducible one.
inline Fq ext_field(uint64_t p, unsigned m) {
    if (m == 0) throw std::invalid_argument("ext_field: m must be >= 1");
    Fq base(p);
    bigint total = 1;
    for (unsigned i = 0; i < m; ++i) total *= p;
    for (bigint v = 0; v < total; ++v) {
        std::vector<uint64_t> mod(m + 1, 0);
        bigint t = v;
        for (unsigned i = 0; i < m; ++i) {
            mod[i] = static_cast<uint64_t>(t % p);
            t /= p;
        }
        mod[m] = 1;
        if (m == 1) {
            return Fq(p, mod);  // any monic linear works; first is t
        }
        UPoly f;
        for (auto c : mod) f.c.push_back(base.from_int(c));
        f = up_normalize(base, f);
        if (is_irreducible(base, f)) return Fq(p, mod);
    }
    throw std::logic_error("ext_field: no irreducible found");  // unreachable
}

namespace detail {

// equal-degree factorization of a squarefree product of degree-k irreducibles
inline void edf(const Fq& K, const UPoly& g, int k, std::mt19937_64& rng,
                std::vector<UPoly>& out) {
    if (g.deg() == k) {
        out.push_back(up_monic(K, g));
        return;
    }
    bigint qk = 1;
    for (int i = 0; i < k; ++i) qk *= K.cardinality();
    UPoly d;
    for (;;) {
        UPoly a;
        a.c.resize(g.deg(), K.zero());
        for (auto& c : a.c) {
            Fq::Elt e = K.zero();
            for (unsigned i = 0; i < K.degree(); ++i) e[i] = rng() % K.p();
            c = e;
        }
        a = up_normalize(K, a);
        if (a.deg() < 1) continue;
        UPoly b;
        if (K.p() == 2) {
            // trace map over F_2
            unsigned mk = K.degree() * static_cast<unsigned>(k);
            b = up_mod(K, a, g);
            UPoly t = b;
            for (unsigned i = 1; i < mk; ++i) {
                t = up_powmod(K, t, 2, g);
                b = up_add(K, b, t);
            }
        } else {
            b = up_sub(K, up_powmod(K, a, (qk - 1) / 2, g), up_const(K, K.one()));
        }
        if (b.is_zero()) continue;
        d = up_gcd(K, b, g);
        if (d.deg() > 0 && d.deg() < g.deg()) break;
    }
    edf(K, d, k, rng, out);
    edf(K, up_divexact(K, g, d), k, rng, out);
}

// distinct-degree factorization of a squarefree monic polynomial
inline std::vector<std::pair<UPoly, int>> ddf(const Fq& K, UPoly f) {
    std::vector<std::pair<UPoly, int>> out;  // (product of irreducibles, degree)
    bigint q = K.cardinality();
    UPoly x = up_x(K);
    UPoly h = up_mod(K, x, f);
    int k = 0;
    while (f.deg() > 0 && 2 * (k + 1) <= f.deg()) {
        ++k;
        h = up_powmod(K, h, q, f);
        UPoly g = up_gcd(K, up_sub(K, h, up_mod(K, x, f)), f);
        if (g.deg() > 0) {
            out.emplace_back(g, k);
            f = up_divexact(K, f, g);
            h = up_mod(K, h, f);
        }
    }
    if (f.deg() > 0) out.emplace_back(up_monic(K, f), f.deg());
    return out;
}

// p-th root of a polynomial of the form g(x^p)
inline UPoly pth_root(const Fq& K, const UPoly& f) {
    UPoly h;
    bigint e = 1;  // p^(m-1): c^(p^(m-1)) is the p-th root of c in F_{p^m}
    for (unsigned i = 1; i < K.degree(); ++i) e *= K.p();
    for (size_t i = 0; i < f.c.size(); i += K.p())
        h.c.push_back(K.pow(f.c[i], e));
    return up_normalize(K, h);
}

}  // namespace detail

/// Complete factorization into monic irreducibles times the leading unit.
inline Factorization factor(const Fq& K, const UPoly& f_in) {
    if (f_in.is_zero()) throw std::domain_error("factor: zero polynomial");
    std::mt19937_64 rng(kFactorSeed);
    Factorization res;
    res.unit = f_in.c.back();
    UPoly f = up_monic(K, f_in);
    unsigned mult_scale = 1;
    while (f.deg() > 0) {
        UPoly fp = up_derivative(K, f);
        if (fp.is_zero()) {
            f = detail::pth_root(K, f);
            mult_scale *= static_cast<unsigned>(K.p());
            continue;
        }
        UPoly w = up_divexact(K, f, up_gcd(K, f, fp));  // squarefree, nonconstant
        for (auto& [prod, k] : detail::ddf(K, w)) {
            std::vector<UPoly> irr;
            detail::edf(K, prod, k, rng, irr);
            for (auto& h : irr) {
                unsigned e = 0;
                for (;;) {
                    auto [q, r] = up_divrem(K, f, h);
                    if (!r.is_zero()) break;
                    f = q;
                    ++e;
                }
                res.parts.emplace_back(h, e * mult_scale);
            }
        }
    }
    // canonical order: by degree, then lexicographic coefficient vectors
    std::sort(res.parts.begin(), res.parts.end(), [](const auto& a, const auto& b) {
        if (a.first.c.size() != b.first.c.size()) return a.first.c.size() < b.first.c.size();
        return a.first.c < b.first.c;
    });
    return res;
}

/// Distinct roots of f in K, sorted lexicographically.
inline std::vector<Fq::Elt> distinct_roots(const Fq& K, const UPoly& f) {
    std::vector<Fq::Elt> roots;
    for (auto& [h, e] : factor(K, f).parts)
        if (h.deg() == 1) roots.push_back(K.neg(h.c[0]));
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Number of distinct roots of f (over F_{p^m}) in F_{p^r}; requires m | r.
/// Each distinct irreducible factor h with m*deg(h) | r contributes deg(h).
inline long long distinct_point_count(const Fq& K, const UPoly& f, unsigned r) {
    if (f.is_zero()) throw std::domain_error("distinct_point_count: zero polynomial");
    unsigned m = K.degree();
    if (r == 0 || r % m != 0) throw std::domain_error("distinct_point_count: m does not divide r");
    long long count = 0;
    for (auto& [h, e] : factor(K, f).parts)
        if (r % (m * static_cast<unsigned>(h.deg())) == 0) count += h.deg();
    return count;
}

/// Image of sub's generator inside big, where sub = F_p[t]/h embeds in big
/// (requires deg(sub) | deg(big)). The lexicographically smallest root of h
/// in big is chosen so embeddings are reproducible.
inline Fq::Elt embed_gen(const Fq& sub, const Fq& big) {
    if (sub.p() != big.p() || big.degree() % sub.degree() != 0)
        throw std::invalid_argument("embed_gen: no embedding");
    if (sub.degree() == 1) return big.from_int(sub.gen()[0]);
    UPoly h;
    for (auto c : sub.modulus()) h.c.push_back(big.from_int(c));
    h = up_normalize(big, h);
    auto roots = distinct_roots(big, h);
    if (roots.empty()) throw std::logic_error("embed_gen: modulus has no root in big field");
    return roots.front();
}

/// Map an element of sub into big along the embedding sending sub's generator
/// to gen_img.
inline Fq::Elt embed_elt(const Fq& sub, const Fq& big, const Fq::Elt& gen_img,
                         const Fq::Elt& a) {
    Fq::Elt r = big.zero();
    Fq::Elt pw = big.one();
    for (unsigned i = 0; i < sub.degree(); ++i) {
        r = big.add(r, big.scalar_mul(a[i], pw));
        pw = big.mul(pw, gen_img);
    }
    return r;
}

}  // namespace curvezeta

#endif
