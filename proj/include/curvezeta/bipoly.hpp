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

#ifndef CURVEZETA_BIPOLY_HPP
#define CURVEZETA_BIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "unipoly.hpp"

namespace curvezeta {

/// Sparse bivariate polynomial over Fq, keyed by (i, j) = (x-exponent,
/// y-exponent). No zero coefficients are stored.
struct BPoly {
    std::map<std::pair<unsigned, unsigned>, Fq::Elt> t;

    bool is_zero() const { return t.empty(); }
};

inline void bp_set(const Fq& K, BPoly& f, unsigned i, unsigned j, const Fq::Elt& c) {
    if (K.is_zero(c))
        f.t.erase({i, j});
    else
        f.t[{i, j}] = c;
}

inline void bp_addto(const Fq& K, BPoly& f, unsigned i, unsigned j, const Fq::Elt& c) {
    auto it = f.t.find({i, j});
    Fq::Elt v = (it == f.t.end()) ? c : K.add(it->second, c);
    bp_set(K, f, i, j, v);
}

inline Fq::Elt bp_coeff(const Fq& K, const BPoly& f, unsigned i, unsigned j) {
    auto it = f.t.find({i, j});
    return it == f.t.end() ? K.zero() : it->second;
}

// from integer triples (i, j, c)
inline BPoly bp_from_terms(const Fq& K,
                           const std::vector<std::tuple<unsigned, unsigned, long long>>& terms) {
    BPoly f;
    long long m = static_cast<long long>(K.p());
    for (auto& [i, j, c] : terms) {
        long long r = ((c % m) + m) % m;
        bp_addto(K, f, i, j, K.from_int(static_cast<uint64_t>(r)));
    }
    return f;
}

inline int bp_total_degree(const BPoly& f) {
    int d = -1;
    for (auto& [e, c] : f.t) d = std::max(d, static_cast<int>(e.first + e.second));
    return d;
}

inline int bp_deg_x(const BPoly& f) {
    int d = -1;
    for (auto& [e, c] : f.t) d = std::max(d, static_cast<int>(e.first));
    return d;
}

inline int bp_deg_y(const BPoly& f) {
    int d = -1;
    for (auto& [e, c] : f.t) d = std::max(d, static_cast<int>(e.second));
    return d;
}

inline bool bp_eq(const Fq& K, const BPoly& f, const BPoly& g) {
    return f.t == g.t;
}

inline BPoly bp_add(const Fq& K, const BPoly& f, const BPoly& g) {
    BPoly r = f;
    for (auto& [e, c] : g.t) bp_addto(K, r, e.first, e.second, c);
    return r;
}

inline BPoly bp_sub(const Fq& K, const BPoly& f, const BPoly& g) {
    BPoly r = f;
    for (auto& [e, c] : g.t) bp_addto(K, r, e.first, e.second, K.neg(c));
    return r;
}

inline BPoly bp_mul(const Fq& K, const BPoly& f, const BPoly& g) {
    BPoly r;
    for (auto& [e1, c1] : f.t)
        for (auto& [e2, c2] : g.t)
            bp_addto(K, r, e1.first + e2.first, e1.second + e2.second, K.mul(c1, c2));
    return r;
}

inline BPoly bp_scale(const Fq& K, const Fq::Elt& a, const BPoly& f) {
    BPoly r;
    for (auto& [e, c] : f.t) bp_set(K, r, e.first, e.second, K.mul(a, c));
    return r;
}

inline BPoly bp_deriv_x(const Fq& K, const BPoly& f) {
    BPoly r;
    for (auto& [e, c] : f.t)
        if (e.first > 0) bp_addto(K, r, e.first - 1, e.second, K.scalar_mul(e.first % K.p(), c));
    return r;
}

inline BPoly bp_deriv_y(const Fq& K, const BPoly& f) {
    BPoly r;
    for (auto& [e, c] : f.t)
        if (e.second > 0) bp_addto(K, r, e.first, e.second - 1, K.scalar_mul(e.second % K.p(), c));
    return r;
}

// coefficients of y^j as univariate polynomials in x, j = 0..deg_y
inline std::vector<UPoly> bp_y_coeffs(const Fq& K, const BPoly& f) {
    int dy = bp_deg_y(f);
    std::vector<UPoly> out(static_cast<size_t>(dy + 1));
    for (auto& [e, c] : f.t) {
        UPoly& u = out[e.second];
        if (u.c.size() <= e.first) u.c.resize(e.first + 1, K.zero());
        u.c[e.first] = c;
    }
    for (auto& u : out) u = up_normalize(K, u);
    return out;
}

inline Fq::Elt bp_eval(const Fq& K, const BPoly& f, const Fq::Elt& x, const Fq::Elt& y) {
    Fq::Elt r = K.zero();
    for (auto& [e, c] : f.t) {
        Fq::Elt term = K.mul(c, K.mul(K.pow(x, e.first), K.pow(y, e.second)));
        r = K.add(r, term);
    }
    return r;
}

// substitute x = a, leaving a univariate polynomial in y
inline UPoly bp_subst_x(const Fq& K, const BPoly& f, const Fq::Elt& a) {
    UPoly r;
    for (auto& [e, c] : f.t) {
        Fq::Elt v = K.mul(c, K.pow(a, e.first));
        if (r.c.size() <= e.second) r.c.resize(e.second + 1, K.zero());
        r.c[e.second] = K.add(r.c[e.second], v);
    }
    return up_normalize(K, r);
}

// substitute y = a, leaving a univariate polynomial in x
inline UPoly bp_subst_y(const Fq& K, const BPoly& f, const Fq::Elt& a) {
    UPoly r;
    for (auto& [e, c] : f.t) {
        Fq::Elt v = K.mul(c, K.pow(a, e.second));
        if (r.c.size() <= e.first) r.c.resize(e.first + 1, K.zero());
        r.c[e.first] = K.add(r.c[e.first], v);
    }
    return up_normalize(K, r);
}

// homogeneous part of total degree k
inline BPoly bp_homogeneous_part(const BPoly& f, unsigned k) {
    BPoly r;
    for (auto& [e, c] : f.t)
        if (e.first + e.second == k) r.t[e] = c;
    return r;
}

// f(x + a, y + b)
inline BPoly bp_translate(const Fq& K, const BPoly& f, const Fq::Elt& a, const Fq::Elt& b) {
    int dx = bp_deg_x(f), dy = bp_deg_y(f);
    // binomial tables (x+a)^i, (y+b)^j as coefficient rows
    std::vector<std::vector<Fq::Elt>> xa(dx + 1), yb(dy + 1);
    UPoly px = up_const(K, K.one());
    UPoly bx{{a, K.one()}};
    for (int i = 0; i <= dx; ++i) {
        xa[i] = px.c;
        px = up_mul(K, px, bx);
    }
    UPoly py = up_const(K, K.one());
    UPoly by{{b, K.one()}};
    for (int j = 0; j <= dy; ++j) {
        yb[j] = py.c;
        py = up_mul(K, py, by);
    }
    BPoly r;
    for (auto& [e, c] : f.t)
        for (size_t i = 0; i < xa[e.first].size(); ++i)
            for (size_t j = 0; j < yb[e.second].size(); ++j)
                bp_addto(K, r, static_cast<unsigned>(i), static_cast<unsigned>(j),
                         K.mul(c, K.mul(xa[e.first][i], yb[e.second][j])));
    return r;
}

// map coefficients into a bigger field along embed_elt
inline BPoly bp_map_field(const Fq& sub, const Fq& big, const Fq::Elt& gen_img, const BPoly& f) {
    BPoly r;
    for (auto& [e, c] : f.t) bp_set(big, r, e.first, e.second, embed_elt(sub, big, gen_img, c));
    return r;
}

/// Resultant of F and G with respect to y: determinant of the Sylvester
/// matrix over Fq[x], computed fraction-free (Bareiss). If deg_y G = 0 the
/// resultant is G(x)^{deg_y F} (and symmetrically); both y-degrees zero is
/// an error.
inline UPoly resultant_y(const Fq& K, const BPoly& F, const BPoly& G) {
    int n = bp_deg_y(F), m = bp_deg_y(G);
    if (n < 0 || m < 0) throw std::domain_error("resultant_y: zero polynomial");
    if (n == 0 && m == 0) throw std::domain_error("resultant_y: both y-degrees zero");
    if (m == 0) return up_pow(K, bp_y_coeffs(K, G)[0], static_cast<uint64_t>(n));
    if (n == 0) return up_pow(K, bp_y_coeffs(K, F)[0], static_cast<uint64_t>(m));
    auto a = bp_y_coeffs(K, F);  // a[n]..a[0], y-coefficients
    auto b = bp_y_coeffs(K, G);
    int N = n + m;
    std::vector<std::vector<UPoly>> M(N, std::vector<UPoly>(N, up_zero()));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[r][r + k] = a[n - k];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[m + r][r + k] = b[m - k];
    // Bareiss fraction-free elimination; divisions are exact
    UPoly prev = up_const(K, K.one());
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return up_zero();
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < N; ++r)
            for (int c2 = k + 1; c2 < N; ++c2) {
                UPoly num = up_sub(K, up_mul(K, M[r][c2], M[k][k]),
                                   up_mul(K, M[r][k], M[k][c2]));
                M[r][c2] = up_divexact(K, num, prev);
            }
        for (int r = k + 1; r < N; ++r) M[r][k] = up_zero();
        prev = M[k][k];
    }
    UPoly det = M[N - 1][N - 1];
    if (sign < 0) det = up_neg(K, det);
    return det;
}

}  // namespace curvezeta

#endif
