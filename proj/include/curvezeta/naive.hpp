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

#ifndef CURVEZETA_NAIVE_HPP
#define CURVEZETA_NAIVE_HPP

#include "bipoly.hpp"

namespace curvezeta {

inline constexpr uint64_t kDefaultNaiveBudget = 100000000ULL;  // candidate pairs

// all elements of K in lexicographic coefficient order
inline std::vector<Fq::Elt> all_elements(const Fq& K) {
    std::vector<Fq::Elt> out;
    Fq::Elt cur = K.zero();
    for (;;) {
        out.push_back(cur);
        unsigned i = 0;
        while (i < K.degree()) {
            if (++cur[i] < K.p()) break;
            cur[i] = 0;
            ++i;
        }
        if (i == K.degree()) break;
    }
    return out;
}

inline void check_budget(uint64_t p, unsigned r, uint64_t budget) {
    bigint cand = 1;
    for (unsigned i = 0; i < 2 * r; ++i) cand *= p;
    if (cand > budget) throw std::domain_error("naive enumeration budget exceeded");
}

inline Fq ext_of_degree(uint64_t p, unsigned r);

/// Exact |X(F_{p^r})| of the projective plane model by direct enumeration:
/// affine pairs plus the points at infinity read off the degree-d
/// homogeneous part.
inline long long naive_count(const Fq& Fp, const BPoly& Fbar, unsigned r,
                             uint64_t budget = kDefaultNaiveBudget);

/// |(X ∩ T^2)(F_{p^r})| by enumeration of nonzero pairs.
inline long long naive_torus_count(const Fq& Fp, const BPoly& Fbar, unsigned r,
                                   uint64_t budget = kDefaultNaiveBudget);

namespace detail {
inline long long naive_affine(const Fq& L, const Fq& Fp, const BPoly& Fbar, bool torus_only) {
    BPoly F;
    for (auto& [e, c] : Fbar.t) bp_set(L, F, e.first, e.second, L.from_int(c[0]));
    long long n = 0;
    for (auto& x : all_elements(L)) {
        if (torus_only && L.is_zero(x)) continue;
        UPoly fy = bp_subst_x(L, F, x);
        for (auto& y : all_elements(L)) {
            if (torus_only && L.is_zero(y)) continue;
            if (L.is_zero(up_eval(L, fy, y))) ++n;
        }
    }
    return n;
}
}  // namespace detail

inline Fq ext_of_degree(uint64_t p, unsigned r) {
    return r == 1 ? Fq(p) : ext_field(p, r);
}

inline long long naive_count(const Fq& Fp, const BPoly& Fbar, unsigned r, uint64_t budget) {
    check_budget(Fp.p(), r, budget);
    Fq L = ext_of_degree(Fp.p(), r);
    long long n = detail::naive_affine(L, Fp, Fbar, false);
    // points at infinity: zeros of F_d(t, 1) in L, plus (1:0:0) when the
    // x^d coefficient vanishes
    unsigned d = static_cast<unsigned>(bp_total_degree(Fbar));
    UPoly fd;
    for (auto& [e, c] : Fbar.t) {
        if (e.first + e.second != d) continue;
        if (fd.c.size() <= e.first) fd.c.resize(e.first + 1, L.zero());
        fd.c[e.first] = L.from_int(c[0]);
    }
    fd = up_normalize(L, fd);
    if (fd.deg() >= 1)
        for (auto& t : all_elements(L))
            if (L.is_zero(up_eval(L, fd, t))) ++n;
    if (Fp.is_zero(bp_coeff(Fp, Fbar, d, 0))) ++n;  // (1:0:0)
    return n;
}

inline long long naive_torus_count(const Fq& Fp, const BPoly& Fbar, unsigned r, uint64_t budget) {
    check_budget(Fp.p(), r, budget);
    Fq L = ext_of_degree(Fp.p(), r);
    return detail::naive_affine(L, Fp, Fbar, true);
}

}  // namespace curvezeta

#endif
