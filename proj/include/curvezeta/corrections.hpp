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

#ifndef CURVEZETA_CORRECTIONS_HPP
#define CURVEZETA_CORRECTIONS_HPP

#include <optional>
#include <vector>

#include "bipoly.hpp"
#include "polytope.hpp"

namespace curvezeta {

/// A closed point of A^1 over F_p, given by its monic irreducible polynomial.
struct ClosedPointA1 {
    UPoly h;
};

// chart of P^2 in which a closed point of the plane model is finite
enum class Chart {
    Affine,     // (x, y)
    InfinityY,  // (u, z) = (x/y, 1/y), curve Fh(u, 1, z)
    InfinityX,  // (v, z) = (y/x, 1/x), curve Fh(1, v, z)
};

/// A closed point of the plane model X, with coordinates in an explicit
/// residue field (one Frobenius-orbit representative; degree = orbit size).
struct ClosedPointCurve {
    unsigned degree = 1;  // over F_p
    Chart chart = Chart::Affine;
    Fq field = Fq(2);  // residue field F_{p^degree}
    Fq::Elt x0, y0;
    bool singular = false;
};

/// Outcome of resolving one closed point: the delta invariant over its
/// residue field and the residue degrees (over that field) of the branches.
struct ResolutionReport {
    uint64_t delta = 0;
    std::vector<unsigned> branches;
};

/// A place of the nonsingular model lying over a closed point of X.
struct PlaceRecord {
    unsigned degree;       // over F_p
    unsigned point_index;  // index of the closed point of X it lies over
};

// curve equation in the chart where a point is finite, over F_p
inline BPoly chart_equation(const Fq& Fp, const BPoly& Fbar, Chart chart) {
    if (chart == Chart::Affine) return Fbar;
    unsigned d = static_cast<unsigned>(bp_total_degree(Fbar));
    BPoly C;
    for (auto& [e, c] : Fbar.t) {
        unsigned i = e.first, j = e.second, k = d - i - j;
        if (chart == Chart::InfinityY)
            bp_addto(Fp, C, i, k, c);  // Fh(u, 1, z)
        else
            bp_addto(Fp, C, j, k, c);  // Fh(1, v, z)
    }
    return C;
}

/// The finite part Y_0 of the branch locus: distinct monic irreducible
/// factors of a_n(x) * gcd(res_y(F, dF/dy), res_y(F, dF/dx)), with the
/// convention gcd(0, b) = monic(b) so an inseparable y-direction
/// (dF/dy identically zero) degenerates gracefully.
inline std::vector<ClosedPointA1> compute_Y(const Fq& Fp, const BPoly& Fbar) {
    int n = bp_deg_y(Fbar);
    if (n < 1) throw std::domain_error("compute_Y: deg_y F = 0, not a curve over F_p(x)");
    UPoly an = bp_y_coeffs(Fp, Fbar)[static_cast<size_t>(n)];
    BPoly Fy = bp_deriv_y(Fp, Fbar);
    BPoly Fx = bp_deriv_x(Fp, Fbar);
    UPoly R1 = Fy.is_zero() ? up_zero() : resultant_y(Fp, Fbar, Fy);
    UPoly R2 = Fx.is_zero() ? up_zero() : resultant_y(Fp, Fbar, Fx);
    UPoly g;
    if (R1.is_zero() && R2.is_zero())
        throw std::domain_error("compute_Y: both resultants vanish (input not reduced?)");
    else if (R1.is_zero())
        g = up_monic(Fp, R2);
    else if (R2.is_zero())
        g = up_monic(Fp, R1);
    else
        g = up_gcd(Fp, R1, R2);
    UPoly prod = up_mul(Fp, an, g);
    std::vector<ClosedPointA1> out;
    if (prod.deg() < 1) return out;
    for (auto& [h, e] : factor(Fp, prod).parts) out.push_back({h});
    return out;
}

namespace detail {

// smallest root in K of a polynomial with F_p coefficients
inline Fq::Elt first_root_of_fp_poly(const Fq& K, const UPoly& w_over_fp) {
    UPoly w;
    for (auto& c : w_over_fp.c) w.c.push_back(K.from_int(c[0]));
    w = up_normalize(K, w);
    auto roots = distinct_roots(K, w);
    if (roots.empty()) throw std::logic_error("expected a root in the residue field");
    return roots.front();
}

inline BPoly bp_lift_to(const Fq& K, const BPoly& f_over_fp) {
    BPoly r;
    for (auto& [e, c] : f_over_fp.t) bp_set(K, r, e.first, e.second, K.from_int(c[0]));
    return r;
}

inline bool jacobian_singular(const Fq& K, const BPoly& C_over_K, const Fq::Elt& x0,
                              const Fq::Elt& y0) {
    Fq::Elt v = bp_eval(K, C_over_K, x0, y0);
    if (!K.is_zero(v)) throw std::logic_error("jacobian_singular: point not on curve");
    return K.is_zero(bp_eval(K, bp_deriv_x(K, C_over_K), x0, y0)) &&
           K.is_zero(bp_eval(K, bp_deriv_y(K, C_over_K), x0, y0));
}

inline unsigned multiplicity_at_origin(const BPoly& f) {
    unsigned m = UINT32_MAX;
    for (auto& [e, c] : f.t) m = std::min(m, e.first + e.second);
    return m;
}

// strict transform in the chart (u, v) -> (u, u*w): divide f(u, u*w) by u^m
inline BPoly blowup_chart1(const Fq& K, const BPoly& f, unsigned m) {
    BPoly r;
    for (auto& [e, c] : f.t) bp_addto(K, r, e.first + e.second - m, e.second, c);
    return r;
}

// strict transform in the chart (u, v) -> (u'*v, v): divide by v^m
inline BPoly blowup_chart2(const Fq& K, const BPoly& f, unsigned m) {
    BPoly r;
    for (auto& [e, c] : f.t) bp_addto(K, r, e.first, e.first + e.second - m, c);
    return r;
}

inline void resolve_rec(const Fq& K, const BPoly& f, unsigned rel_deg, unsigned depth,
                        ResolutionReport& out) {
    if (depth > 200) throw std::domain_error("resolve: non-reduced local equation (no termination)");
    if (f.is_zero()) throw std::domain_error("resolve: zero local equation");
    unsigned m = multiplicity_at_origin(f);
    if (m == 0) throw std::logic_error("resolve: strict transform does not pass through point");
    if (m == 1) {
        out.branches.push_back(rel_deg);
        return;
    }
    out.delta += static_cast<uint64_t>(rel_deg) * m * (m - 1) / 2;
    // tangent directions: roots of l1(w) = sum_j c_{m-j, j} w^j
    UPoly l1;
    l1.c.assign(m + 1, K.zero());
    for (auto& [e, c] : f.t)
        if (e.first + e.second == m) l1.c[e.second] = c;
    bool vertical = K.is_zero(l1.c[m]);  // direction u = 0 escapes chart 1
    l1 = up_normalize(K, l1);
    BPoly f1 = blowup_chart1(K, f, m);
    if (l1.deg() >= 1) {
        for (auto& [hf, e] : factor(K, l1).parts) {
            if (hf.deg() == 1) {
                Fq::Elt alpha = K.neg(hf.c[0]);
                resolve_rec(K, bp_translate(K, f1, K.zero(), alpha), rel_deg, depth + 1, out);
            } else {
                unsigned ext = static_cast<unsigned>(hf.deg());
                Fq Kbig = ext_field(K.p(), K.degree() * ext);
                Fq::Elt gi = embed_gen(K, Kbig);
                UPoly hf_big;
                for (auto& c : hf.c) hf_big.c.push_back(embed_elt(K, Kbig, gi, c));
                hf_big = up_normalize(Kbig, hf_big);
                Fq::Elt alpha = distinct_roots(Kbig, hf_big).front();
                BPoly f1_big = bp_map_field(K, Kbig, gi, f1);
                resolve_rec(Kbig, bp_translate(Kbig, f1_big, Kbig.zero(), alpha), rel_deg * ext,
                            depth + 1, out);
            }
        }
    }
    if (vertical) resolve_rec(K, blowup_chart2(K, f, m), rel_deg, depth + 1, out);
}

}  // namespace detail

/// Resolve the plane curve at a closed point by iterated point blow-ups over
/// its residue field: delta = sum of m(m-1)/2 over infinitely near points
/// (orbits weighted by residue degree), branches = residue degrees of the
/// smooth termini of the blow-up tree.
inline ResolutionReport resolve_point(const Fq& Fp, const BPoly& Fbar, const ClosedPointCurve& P) {
    BPoly C = chart_equation(Fp, Fbar, P.chart);
    BPoly CL = detail::bp_lift_to(P.field, C);
    BPoly germ = bp_translate(P.field, CL, P.x0, P.y0);
    if (!P.field.is_zero(bp_coeff(P.field, germ, 0, 0)))
        throw std::domain_error("resolve_point: point not on the curve");
    ResolutionReport out;
    detail::resolve_rec(P.field, germ, 1, 0, out);
    return out;
}

struct ZScheme {
    std::vector<ClosedPointCurve> points;
    std::vector<long long> counts;  // |Z(F_{p^r})|, r = 1..D
};

/// Enumerate the closed points of Z (fibers over Y_0 plus the points of X at
/// infinity) and count |Z(F_{p^r})| for r = 1..D.
inline ZScheme count_points_on_Z(const Fq& Fp, const BPoly& Fbar,
                                 const std::vector<ClosedPointA1>& Y0, unsigned D) {
    ZScheme Z;
    unsigned d = static_cast<unsigned>(bp_total_degree(Fbar));
    BPoly Caff = Fbar;
    BPoly CY = chart_equation(Fp, Fbar, Chart::InfinityY);
    BPoly CX = chart_equation(Fp, Fbar, Chart::InfinityX);

    // affine fibers over Y_0
    for (auto& cp : Y0) {
        unsigned k0 = static_cast<unsigned>(cp.h.deg());
        Fq Kh = (k0 == 1) ? Fq(Fp.p()) : Fq(Fp.p(), [&] {
            std::vector<uint64_t> mod;
            for (auto& c : cp.h.c) mod.push_back(c[0]);
            return mod;
        }());
        Fq::Elt x0 = (k0 == 1) ? Kh.from_int(Fp.neg(cp.h.c[0])[0]) : Kh.gen();
        // F(x0, y) as a univariate in y over Kh
        UPoly fy;
        for (auto& [e, c] : Fbar.t) {
            Fq::Elt v = Kh.mul(Kh.from_int(c[0]), Kh.pow(x0, e.first));
            if (fy.c.size() <= e.second) fy.c.resize(e.second + 1, Kh.zero());
            fy.c[e.second] = Kh.add(fy.c[e.second], v);
        }
        fy = up_normalize(Kh, fy);
        if (fy.is_zero())
            throw std::domain_error("count_points_on_Z: F vanishes on a vertical line");
        if (fy.deg() < 1) continue;  // empty fiber
        for (auto& [u, e] : factor(Kh, fy).parts) {
            unsigned ey = static_cast<unsigned>(u.deg());
            unsigned k = ey * k0;
            ClosedPointCurve P;
            P.degree = k;
            P.chart = Chart::Affine;
            if (ey == 1) {
                P.field = Kh;
                P.x0 = x0;
                P.y0 = Kh.neg(u.c[0]);
            } else {
                Fq L = ext_field(Fp.p(), k);
                Fq::Elt gi = embed_gen(Kh, L);
                P.field = L;
                P.x0 = embed_elt(Kh, L, gi, x0);
                UPoly uL;
                for (auto& c : u.c) uL.c.push_back(embed_elt(Kh, L, gi, c));
                uL = up_normalize(L, uL);
                auto roots = distinct_roots(L, uL);
                if (roots.empty())
                    throw std::logic_error("count_points_on_Z: factor has no root in F_{p^k}");
                P.y0 = roots.front();
            }
            P.singular = detail::jacobian_singular(P.field, detail::bp_lift_to(P.field, Caff),
                                                   P.x0, P.y0);
            Z.points.push_back(std::move(P));
        }
    }

    // points at infinity: roots of F_d(t, 1), plus (1:0:0) when the x^d
    // coefficient vanishes
    UPoly fd;
    for (auto& [e, c] : Fbar.t) {
        if (e.first + e.second != d) continue;
        if (fd.c.size() <= e.first) fd.c.resize(e.first + 1, Fp.zero());
        fd.c[e.first] = c;
    }
    fd = up_normalize(Fp, fd);
    if (fd.is_zero()) throw std::logic_error("count_points_on_Z: empty top homogeneous part");
    if (fd.deg() >= 1) {
        for (auto& [w, e] : factor(Fp, fd).parts) {
            unsigned k = static_cast<unsigned>(w.deg());
            ClosedPointCurve P;
            P.degree = k;
            P.chart = Chart::InfinityY;
            P.field = (k == 1) ? Fq(Fp.p()) : ext_field(Fp.p(), k);
            P.x0 = (k == 1) ? P.field.from_int(Fp.neg(w.c[0])[0])
                            : detail::first_root_of_fp_poly(P.field, w);
            P.y0 = P.field.zero();
            P.singular = detail::jacobian_singular(P.field, detail::bp_lift_to(P.field, CY),
                                                   P.x0, P.y0);
            Z.points.push_back(std::move(P));
        }
    }
    if (Fp.is_zero(bp_coeff(Fp, Fbar, d, 0))) {
        ClosedPointCurve P;
        P.degree = 1;
        P.chart = Chart::InfinityX;
        P.field = Fq(Fp.p());
        P.x0 = P.field.zero();
        P.y0 = P.field.zero();
        P.singular = detail::jacobian_singular(P.field, detail::bp_lift_to(P.field, CX),
                                               P.x0, P.y0);
        Z.points.push_back(std::move(P));
    }

    Z.counts.assign(D, 0);
    for (auto& P : Z.points)
        for (unsigned r = 1; r <= D; ++r)
            if (r % P.degree == 0) Z.counts[r - 1] += P.degree;
    return Z;
}

/// Places of the nonsingular model over the closed points of Z, and the
/// counts |Z~(F_{p^r})| for r = 1..D. Nonsingular points short-circuit to a
/// single place of the same degree.
inline std::pair<std::vector<PlaceRecord>, std::vector<long long>> count_points_above_Z(
    const Fq& Fp, const BPoly& Fbar, const ZScheme& Z, unsigned D) {
    std::vector<PlaceRecord> places;
    for (size_t i = 0; i < Z.points.size(); ++i) {
        const auto& P = Z.points[i];
        if (!P.singular) {
            places.push_back({P.degree, static_cast<unsigned>(i)});
            continue;
        }
        ResolutionReport rep = resolve_point(Fp, Fbar, P);
        for (unsigned b : rep.branches)
            places.push_back({P.degree * b, static_cast<unsigned>(i)});
    }
    std::vector<long long> counts(D, 0);
    for (auto& pl : places)
        for (unsigned r = 1; r <= D; ++r)
            if (r % pl.degree == 0) counts[r - 1] += pl.degree;
    return {places, counts};
}

/// One-pass singular analysis of the plane model, shared by the corrections
/// and the genus computation.
struct SingularAnalysis {
    unsigned d;  // total degree of F
    std::vector<ClosedPointA1> Y0;
    ZScheme Z;
    std::vector<ResolutionReport> reports;  // parallel to Z.points; empty for smooth points
    long long genus;

    std::vector<long long> corrections(unsigned D) const {
        std::vector<long long> out(D, 0);
        for (size_t i = 0; i < Z.points.size(); ++i) {
            const auto& P = Z.points[i];
            if (!P.singular) continue;  // identical contribution to Z and Z~
            for (unsigned r = 1; r <= D; ++r) {
                long long above = 0;
                for (unsigned b : reports[i].branches) {
                    unsigned k = P.degree * b;
                    if (r % k == 0) above += k;
                }
                long long below = (r % P.degree == 0) ? P.degree : 0;
                out[r - 1] += above - below;
            }
        }
        return out;
    }
};

inline SingularAnalysis analyze_curve(const Fq& Fp, const BPoly& Fbar) {
    int d = bp_total_degree(Fbar);
    if (d < 2) throw std::domain_error("analyze_curve: degree must be >= 2");
    SingularAnalysis A;
    A.d = static_cast<unsigned>(d);
    A.Y0 = compute_Y(Fp, Fbar);
    A.Z = count_points_on_Z(Fp, Fbar, A.Y0, 0);
    A.reports.resize(A.Z.points.size());
    long long delta_total = 0;
    for (size_t i = 0; i < A.Z.points.size(); ++i) {
        const auto& P = A.Z.points[i];
        if (!P.singular) continue;
        A.reports[i] = resolve_point(Fp, Fbar, P);
        delta_total += static_cast<long long>(P.degree) * static_cast<long long>(A.reports[i].delta);
    }
    A.genus = static_cast<long long>(A.d - 1) * (A.d - 2) / 2 - delta_total;
    if (A.genus < 0)
        throw std::logic_error("analyze_curve: negative genus (resolution bug or bad input)");
    return A;
}

/// |X~(F_{p^r})| - |X(F_{p^r})| for r = 1..D.
inline std::vector<long long> corrections(const Fq& Fp, const BPoly& Fbar, unsigned D) {
    return analyze_curve(Fp, Fbar).corrections(D);
}

/// Geometric genus via the delta-invariant formula
/// g = (d-1)(d-2)/2 - sum deg(P) * delta_P.
inline long long geometric_genus(const Fq& Fp, const BPoly& Fbar) {
    return analyze_curve(Fp, Fbar).genus;
}

}  // namespace curvezeta

#endif
