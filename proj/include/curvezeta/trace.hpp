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

#ifndef CURVEZETA_TRACE_HPP
#define CURVEZETA_TRACE_HPP

#include <chrono>
#include <future>
#include <thread>
#include <vector>

#include "polytope.hpp"

namespace curvezeta {

/// Z/p^lambda with least nonnegative representatives in uint64_t.
struct ModRing {
    uint64_t p;
    unsigned lambda;
    uint64_t pl;  // p^lambda

    ModRing(uint64_t p_, unsigned lambda_) : p(p_), lambda(lambda_) {
        if (lambda == 0) throw std::invalid_argument("ModRing: lambda must be >= 1");
        pl = 1;
        for (unsigned i = 0; i < lambda; ++i) {
            if (pl > UINT64_MAX / p / p) throw std::overflow_error("ModRing: p^lambda too large");
            pl *= p;
        }
    }

    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % pl; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + pl - b) % pl; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % pl);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1 % pl;
        a %= pl;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t from_signed(long long v) const {
        long long m = static_cast<long long>(pl);
        return static_cast<uint64_t>(((v % m) + m) % m);
    }
};

/// Precision data for the trace formula (a = 1 specialization).
struct TraceParams {
    unsigned lambda;
    unsigned tau;
    unsigned S;                    // = lambda + tau - 1
    std::vector<long long> alpha;  // alpha_0..alpha_S
};

/// alpha_s = (-1)^s sum_{t=0}^{tau-1} C(-lambda, t) C(lambda, s-t), with
/// C(-lambda, t) = (-1)^t C(lambda+t-1, t). Exact integers.
inline std::vector<long long> alpha_coefficients(unsigned lambda, unsigned tau) {
    if (lambda == 0 || tau == 0) throw std::invalid_argument("alpha_coefficients: need lambda, tau >= 1");
    unsigned S = lambda + tau - 1;
    auto binom = [](unsigned n, unsigned k) -> long long {
        if (k > n) return 0;
        long long r = 1;
        for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    std::vector<long long> a(S + 1, 0);
    for (unsigned s = 0; s <= S; ++s) {
        long long sum = 0;
        for (unsigned t = 0; t < tau && t <= s; ++t) {
            long long c1 = (t % 2 ? -1 : 1) * binom(lambda + t - 1, t);
            sum += c1 * binom(lambda, s - t);
        }
        a[s] = (s % 2 ? -sum : sum);
    }
    return a;
}

// smallest integer >= p^{D/2}
inline bigint ceil_sqrt_pow(uint64_t p, unsigned D) {
    bigint pd = 1;
    for (unsigned i = 0; i < D; ++i) pd *= p;
    if (D % 2 == 0) return boost::multiprecision::sqrt(pd);
    bigint r = boost::multiprecision::sqrt(pd);
    if (r * r < pd) ++r;
    return r;
}

/// lambda is the smallest exponent with p^lambda > 4g * ceil(p^{D/2})
/// (never 0, so a g = 0 input still gets lambda = 1); tau = ceil(lambda/(p-1)).
inline TraceParams precision_params(uint64_t g, uint64_t p, unsigned D) {
    if (D == 0) throw std::invalid_argument("precision_params: D must be >= 1");
    bigint bound = bigint(4) * g * ceil_sqrt_pow(p, D);
    unsigned lambda = 1;
    bigint pl = p;
    while (pl <= bound) {
        pl *= p;
        ++lambda;
    }
    TraceParams tp;
    tp.lambda = lambda;
    tp.tau = (lambda + static_cast<unsigned>(p) - 2) / (static_cast<unsigned>(p) - 1);
    tp.S = tp.lambda + tp.tau - 1;
    tp.alpha = alpha_coefficients(tp.lambda, tp.tau);
    return tp;
}

/// Sparse bivariate polynomial over Z/p^lambda.
struct BPolyMod {
    std::map<std::pair<unsigned, unsigned>, uint64_t> t;
};

/// Canonical lift: each F_p coefficient to its least nonnegative
/// representative mod p^lambda; the support (hence the Newton polygon) is
/// unchanged.
inline BPolyMod lift_polynomial(const Fq& Fp, const BPoly& Fbar, const ModRing& R) {
    if (Fp.degree() != 1) throw std::invalid_argument("lift_polynomial: base field must be F_p");
    BPolyMod F;
    for (auto& [e, c] : Fbar.t) F.t[e] = c[0] % R.pl;
    return F;
}

namespace detail {

// dense grid of coefficients, value at (i, j) = a[i*ny + j]
struct Grid {
    unsigned nx = 1, ny = 1;  // extents: exponents 0..nx-1, 0..ny-1
    std::vector<uint64_t> a;

    uint64_t at(int64_t i, int64_t j) const {
        if (i < 0 || j < 0 || i >= static_cast<int64_t>(nx) || j >= static_cast<int64_t>(ny))
            return 0;
        return a[static_cast<size_t>(i) * ny + static_cast<size_t>(j)];
    }
};

inline Grid grid_from_sparse(const BPolyMod& f) {
    Grid g;
    for (auto& [e, c] : f.t) {
        g.nx = std::max(g.nx, e.first + 1);
        g.ny = std::max(g.ny, e.second + 1);
    }
    g.a.assign(static_cast<size_t>(g.nx) * g.ny, 0);
    for (auto& [e, c] : f.t) g.a[static_cast<size_t>(e.first) * g.ny + e.second] = c;
    return g;
}

inline Grid grid_one() {
    Grid g;
    g.a = {1};
    return g;
}

// sparse*dense product; the sparse factor stays small (F^{p-1})
inline Grid grid_mul(const Grid& big, const BPolyMod& small, const ModRing& R) {
    unsigned sx = 0, sy = 0;
    for (auto& [e, c] : small.t) {
        sx = std::max(sx, e.first);
        sy = std::max(sy, e.second);
    }
    Grid r;
    r.nx = big.nx + sx;
    r.ny = big.ny + sy;
    r.a.assign(static_cast<size_t>(r.nx) * r.ny, 0);
    // Products are < pl^2 and term counts stay far below 2^63 / pl^2 at the
    // precisions this engine accepts, so plain accumulation is exact when
    // pl^2 * |small| fits; otherwise reduce on the fly.
    bool safe = (R.pl < (1ULL << 21)) && small.t.size() < (1ULL << 20);
    for (unsigned i = 0; i < big.nx; ++i)
        for (unsigned j = 0; j < big.ny; ++j) {
            uint64_t c = big.a[static_cast<size_t>(i) * big.ny + j];
            if (!c) continue;
            for (auto& [e, d] : small.t) {
                size_t idx = static_cast<size_t>(i + e.first) * r.ny + (j + e.second);
                if (safe)
                    r.a[idx] += c * d;
                else
                    r.a[idx] = R.add(r.a[idx], R.mul(c, d));
            }
        }
    if (safe)
        for (auto& v : r.a) v %= R.pl;
    return r;
}

inline BPolyMod pow_pminus1(const BPolyMod& F, const ModRing& R) {
    // F^{p-1} by repeated squaring on grids
    uint64_t e = R.p - 1;
    Grid acc = grid_one();
    Grid base = grid_from_sparse(F);
    BPolyMod base_sparse = F;
    while (e) {
        if (e & 1) acc = grid_mul(acc, base_sparse, R);
        e >>= 1;
        if (e) {
            Grid sq = grid_mul(base, base_sparse, R);
            base = sq;
            base_sparse.t.clear();
            for (unsigned i = 0; i < base.nx; ++i)
                for (unsigned j = 0; j < base.ny; ++j) {
                    uint64_t c = base.a[static_cast<size_t>(i) * base.ny + j];
                    if (c) base_sparse.t[{i, j}] = c;
                }
        }
    }
    BPolyMod out;
    for (unsigned i = 0; i < acc.nx; ++i)
        for (unsigned j = 0; j < acc.ny; ++j) {
            uint64_t c = acc.a[static_cast<size_t>(i) * acc.ny + j];
            if (c) out.t[{i, j}] = c;
        }
    return out;
}

// dense square matrix over Z/p^lambda
struct Mat {
    size_t n = 0;
    std::vector<uint64_t> a;

    uint64_t& at(size_t i, size_t j) { return a[i * n + j]; }
    uint64_t at(size_t i, size_t j) const { return a[i * n + j]; }
};

inline Mat mat_mul(const Mat& A, const Mat& B, const ModRing& R) {
    Mat C;
    C.n = A.n;
    C.a.assign(A.n * A.n, 0);
    // safe accumulation window: pl^2 * n < 2^64
    bool safe = A.n > 0 && (static_cast<__uint128_t>(R.pl) * R.pl * A.n) < (static_cast<__uint128_t>(1) << 63);
    for (size_t i = 0; i < A.n; ++i)
        for (size_t k = 0; k < A.n; ++k) {
            uint64_t v = A.at(i, k);
            if (!v) continue;
            const uint64_t* brow = &B.a[k * A.n];
            uint64_t* crow = &C.a[i * A.n];
            if (safe)
                for (size_t j = 0; j < A.n; ++j) crow[j] += v * brow[j];
            else
                for (size_t j = 0; j < A.n; ++j) crow[j] = R.add(crow[j], R.mul(v, brow[j]));
        }
    if (safe)
        for (auto& v : C.a) v %= R.pl;
    return C;
}

inline uint64_t mat_trace(const Mat& A, const ModRing& R) {
    uint64_t t = 0;
    for (size_t i = 0; i < A.n; ++i) t = R.add(t, A.at(i, i));
    return t;
}

}  // namespace detail

/// Matrix of A_{F^s} on P_{s Delta} in the lattice basis order:
/// entry (v, u) = [F^{(p-1)s}]_{pv - u}.
struct TraceMatrix {
    unsigned s;
    LatticeBasis basis;
    detail::Mat m;
};

inline TraceMatrix build_Ms(const BPolyMod& F_pow_s, const ModRing& R, unsigned s,
                            const NewtonPolygon& delta) {
    TraceMatrix M;
    M.s = s;
    M.basis = lattice_points(delta, s);
    size_t n = M.basis.points.size();
    M.m.n = n;
    M.m.a.assign(n * n, 0);
    detail::Grid g = detail::grid_from_sparse(F_pow_s);
    for (size_t vi = 0; vi < n; ++vi)
        for (size_t ui = 0; ui < n; ++ui) {
            auto& v = M.basis.points[vi];
            auto& u = M.basis.points[ui];
            M.m.at(vi, ui) = g.at(static_cast<int64_t>(R.p) * v.first - u.first,
                                  static_cast<int64_t>(R.p) * v.second - u.second);
        }
    return M;
}

// convenience overload used by tests: builds F^{(p-1)s} itself
inline TraceMatrix build_Ms(const BPolyMod& F, const ModRing& R, unsigned s) {
    NewtonPolygon delta;
    {
        std::vector<LatticePt> pts;
        for (auto& [e, c] : F.t) pts.push_back({e.first, e.second});
        delta = convex_hull(pts);
    }
    if (s == 0) {
        BPolyMod one;
        one.t[{0, 0}] = 1 % R.pl;
        return build_Ms(one, R, 0, delta);
    }
    BPolyMod g = detail::pow_pminus1(F, R);
    detail::Grid acc = detail::grid_one();
    for (unsigned i = 0; i < s; ++i) acc = detail::grid_mul(acc, g, R);
    BPolyMod Fs;
    for (unsigned i = 0; i < acc.nx; ++i)
        for (unsigned j = 0; j < acc.ny; ++j) {
            uint64_t c = acc.a[static_cast<size_t>(i) * acc.ny + j];
            if (c) Fs.t[{i, j}] = c;
        }
    return build_Ms(Fs, R, s, delta);
}

/// Point counts mod p^lambda indexed by r = 1..D.
struct CountVectorMod {
    unsigned lambda;
    std::vector<uint64_t> counts;
};

/// Trace-formula torus counts for an explicit lift F over Z/p^lambda with
/// Newton polygon contained in delta. phase_powers/phase_traces, when given,
/// receive the wall-clock seconds of the power-expansion and matrix-trace
/// phases.
inline CountVectorMod torus_counts_lifted(uint64_t p, const BPolyMod& F,
                                          const NewtonPolygon& delta, const TraceParams& params,
                                          unsigned D, double* phase_powers = nullptr,
                                          double* phase_traces = nullptr) {
    if (F.t.empty()) throw std::domain_error("torus_counts: zero polynomial");
    ModRing R(p, params.lambda);
    CountVectorMod out;
    out.lambda = params.lambda;
    out.counts.assign(D, 0);
    if (D == 0) return out;

    auto t0 = std::chrono::steady_clock::now();
    // A1: expand F^{(p-1)s} for s = 1..S incrementally from G = F^{p-1}
    BPolyMod G = detail::pow_pminus1(F, R);
    std::vector<BPolyMod> powers(params.S + 1);
    {
        detail::Grid acc = detail::grid_one();
        for (unsigned s = 1; s <= params.S; ++s) {
            acc = detail::grid_mul(acc, G, R);
            for (unsigned i = 0; i < acc.nx; ++i)
                for (unsigned j = 0; j < acc.ny; ++j) {
                    uint64_t c = acc.a[static_cast<size_t>(i) * acc.ny + j];
                    if (c) powers[s].t[{i, j}] = c;
                }
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    if (phase_powers) *phase_powers = std::chrono::duration<double>(t1 - t0).count();

    // A2: per-s matrices and traces; the s-tasks are independent
    std::vector<std::vector<uint64_t>> traces(params.S + 1, std::vector<uint64_t>(D + 1, 0));
    for (unsigned r = 1; r <= D; ++r) traces[0][r] = 1 % R.pl;  // M_0 = [1]
    auto work = [&](unsigned s) {
        TraceMatrix M = build_Ms(powers[s], R, s, delta);
        detail::Mat A = M.m;
        traces[s][1] = detail::mat_trace(A, R);
        for (unsigned r = 2; r <= D; ++r) {
            A = detail::mat_mul(A, M.m, R);
            traces[s][r] = detail::mat_trace(A, R);
        }
    };
    {
        std::vector<std::future<void>> jobs;
        for (unsigned s = 1; s <= params.S; ++s)
            jobs.push_back(std::async(std::launch::async, work, s));
        for (auto& j : jobs) j.get();
    }
    auto t2 = std::chrono::steady_clock::now();
    if (phase_traces) *phase_traces = std::chrono::duration<double>(t2 - t1).count();

    for (unsigned r = 1; r <= D; ++r) {
        uint64_t sum = 0;
        for (unsigned s = 0; s <= params.S; ++s)
            sum = R.add(sum, R.mul(R.from_signed(params.alpha[s]), traces[s][r]));
        uint64_t qr1 = R.sub(R.pow(R.p % R.pl, r), 1 % R.pl);  // p^r - 1 mod p^lambda
        out.counts[r - 1] = R.mul(R.mul(qr1, qr1), sum);
    }
    return out;
}

/// |(X ∩ T^2)(F_{p^r})| mod p^lambda for r = 1..D via the trace formula,
/// using the canonical lift of Fbar.
inline CountVectorMod torus_counts(const Fq& Fp, const BPoly& Fbar, const TraceParams& params,
                                   unsigned D, double* phase_powers = nullptr,
                                   double* phase_traces = nullptr) {
    if (Fbar.is_zero()) throw std::domain_error("torus_counts: zero polynomial");
    ModRing R(Fp.p(), params.lambda);
    NewtonPolygon delta = newton_polygon(Fbar);
    BPolyMod F = lift_polynomial(Fp, Fbar, R);
    return torus_counts_lifted(Fp.p(), F, delta, params, D, phase_powers, phase_traces);
}

/// Exact |X(F_{p^r})| - |(X ∩ T^2)(F_{p^r})| for r = 1..D: the three charts
/// (t:1:0), (0:t:1), (1:0:t) partition X \ T^2 and each is counted by
/// factoring one univariate polynomial.
inline std::vector<long long> off_torus_counts(const Fq& Fp, const BPoly& Fbar, unsigned D) {
    if (Fbar.is_zero()) throw std::domain_error("off_torus_counts: zero polynomial");
    int d = bp_total_degree(Fbar);
    // homogenize: Fh(X,Y,Z) = sum c_ij X^i Y^j Z^{d-i-j}
    // f0 = Fh(t,1,0), f1 = Fh(0,t,1), f2 = Fh(1,0,t)
    UPoly f0, f1, f2;
    auto bump = [&](UPoly& f, unsigned k, const Fq::Elt& c) {
        if (f.c.size() <= k) f.c.resize(k + 1, Fp.zero());
        f.c[k] = Fp.add(f.c[k], c);
    };
    for (auto& [e, c] : Fbar.t) {
        unsigned i = e.first, j = e.second;
        unsigned k = static_cast<unsigned>(d) - i - j;  // Z-exponent
        if (k == 0) bump(f0, i, c);                     // (t,1,0): X^i
        if (i == 0) bump(f1, j, c);                     // (0,t,1): Y^j
        if (j == 0) bump(f2, k, c);                     // (1,0,t): Z^k
    }
    f0 = up_normalize(Fp, f0);
    f1 = up_normalize(Fp, f1);
    f2 = up_normalize(Fp, f2);
    if (f0.is_zero() || f1.is_zero() || f2.is_zero())
        throw std::domain_error("off_torus_counts: a coordinate line is a component of the curve");
    std::vector<long long> out(D, 0);
    for (unsigned r = 1; r <= D; ++r)
        for (const UPoly* f : {&f0, &f1, &f2})
            if (f->deg() > 0) out[r - 1] += distinct_point_count(Fp, *f, r);
    return out;
}

/// |X(F_{p^r})| mod p^lambda for r = 1..D: torus counts plus exact
/// off-torus counts.
inline CountVectorMod count_plane_model(const Fq& Fp, const BPoly& Fbar, const TraceParams& params,
                                        unsigned D, double* phase_powers = nullptr,
                                        double* phase_traces = nullptr) {
    CountVectorMod c = torus_counts(Fp, Fbar, params, D, phase_powers, phase_traces);
    if (D == 0) return c;
    ModRing R(Fp.p(), params.lambda);
    auto off = off_torus_counts(Fp, Fbar, D);
    for (unsigned r = 1; r <= D; ++r)
        c.counts[r - 1] = R.add(c.counts[r - 1], R.from_signed(off[r - 1]));
    return c;
}

}  // namespace curvezeta

#endif
