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

#ifndef CURVEZETA_ZETA_HPP
#define CURVEZETA_ZETA_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "corrections.hpp"
#include "trace.hpp"

namespace curvezeta {

using bigrat = boost::multiprecision::cpp_rational;

/// Z(X~, T) = P(T) / ((1 - T)(1 - qT)) with P of degree 2g.
struct ZetaFunction {
    uint64_t q;
    long long g;
    std::vector<bigint> numerator;  // a_0..a_{2g}
};

struct PhaseTimings {
    double powers = 0;       // expanding F^{(p-1)s}
    double traces = 0;       // matrix powers and traces
    double corrections = 0;  // everything around the singular points
};

inline bigint pow_int(uint64_t q, unsigned r) {
    bigint v = 1;
    for (unsigned i = 0; i < r; ++i) v *= q;
    return v;
}

/// The unique integer N == c (mod p^lambda) inside the Hasse-Weil interval
/// |N - (q^r + 1)| <= 2g q^{r/2}. Comparisons are exact integer square
/// comparisons; requires p^lambda > 4g q^{r/2}.
inline bigint recover_count(uint64_t c, uint64_t p, unsigned lambda, long long g, uint64_t q,
                            unsigned r) {
    bigint pl = 1;
    for (unsigned i = 0; i < lambda; ++i) pl *= p;
    bigint center = pow_int(q, r) + 1;
    bigint bound_sq = bigint(4) * g * g * pow_int(q, r);  // (2g q^{r/2})^2
    if (pl * pl <= bigint(16) * g * g * pow_int(q, r))
        throw std::domain_error("recover_count: modulus too small for the Hasse-Weil interval");
    // representative of c mod pl nearest to center
    bigint delta = ((center - c) % pl + pl) % pl;  // center - N0 mod pl
    bigint N = center - delta;
    if (2 * delta > pl) N += pl;
    bigint found = -1;
    for (const bigint& cand : {bigint(N - pl), N, bigint(N + pl)}) {
        bigint diff = cand - center;
        if (diff * diff <= bound_sq) {
            if (found >= 0) throw std::domain_error("recover_count: ambiguous interval");
            found = cand;
        }
    }
    if (found < 0) throw std::domain_error("recover_count: no representative in Hasse-Weil interval");
    return found;
}

/// Newton-identity power sums of the reciprocal roots of P; exact integers.
inline bigint predicted_count(const ZetaFunction& Z, unsigned r) {
    if (r == 0) throw std::invalid_argument("predicted_count: r >= 1");
    size_t twog = Z.numerator.size() - 1;
    // e_k = (-1)^k a_k
    std::vector<bigint> e(twog + 1);
    for (size_t k = 0; k <= twog; ++k) e[k] = (k % 2 ? -Z.numerator[k] : Z.numerator[k]);
    std::vector<bigint> s(r + 1, 0);  // power sums
    for (unsigned k = 1; k <= r; ++k) {
        bigint acc = 0;
        for (unsigned i = 1; i < k && i <= twog; ++i)
            acc += (i % 2 ? bigint(1) : bigint(-1)) * e[i] * s[k - i];
        if (k <= twog) acc += (k % 2 ? bigint(1) : bigint(-1)) * e[k] * k;
        s[k] = acc;
    }
    return pow_int(Z.q, r) + 1 - s[r];
}

/// a_0..a_g from the truncated power series of
/// (1 - T)(1 - qT) exp(sum N_r T^r / r), completed by the functional
/// equation a_{g+i} = q^i a_{g-i}. Exact rational arithmetic with an
/// integrality assertion.
inline std::vector<bigint> zeta_numerator(const std::vector<bigint>& counts, uint64_t q,
                                          long long g) {
    if (counts.size() != static_cast<size_t>(g))
        throw std::invalid_argument("zeta_numerator: need exactly g counts");
    size_t n = static_cast<size_t>(g);
    // exp of sum N_r T^r / r, truncated at T^g
    std::vector<bigrat> expo(n + 1, 0);
    expo[0] = 1;
    std::vector<bigrat> arg(n + 1, 0);
    for (size_t r = 1; r <= n; ++r) arg[r] = bigrat(counts[r - 1], bigint(r));
    // exp via E' = arg' * E
    for (size_t k = 1; k <= n; ++k) {
        bigrat acc = 0;
        for (size_t r = 1; r <= k; ++r) acc += bigrat(r) * arg[r] * expo[k - r];
        expo[k] = acc / bigint(k);
    }
    // multiply by (1 - T)(1 - qT) = 1 - (q+1) T + q T^2
    std::vector<bigrat> num(n + 1, 0);
    for (size_t k = 0; k <= n; ++k) {
        bigrat v = expo[k];
        if (k >= 1) v -= bigrat(q + 1) * expo[k - 1];
        if (k >= 2) v += bigrat(q) * expo[k - 2];
        num[k] = v;
    }
    std::vector<bigint> a(2 * n + 1);
    for (size_t k = 0; k <= n; ++k) {
        if (boost::multiprecision::denominator(num[k]) != 1)
            throw std::logic_error("zeta_numerator: non-integral series coefficient");
        a[k] = boost::multiprecision::numerator(num[k]);
    }
    for (size_t i = 1; i <= n; ++i) a[n + i] = pow_int(q, static_cast<unsigned>(i)) * a[n - i];
    return a;
}

/// Structural checks every output must satisfy; throws on violation.
inline void assert_zeta_invariants(const ZetaFunction& Z) {
    size_t twog = Z.numerator.size() - 1;
    if (twog != static_cast<size_t>(2 * Z.g)) throw std::logic_error("zeta: degree != 2g");
    if (Z.numerator[0] != 1) throw std::logic_error("zeta: a_0 != 1");
    if (Z.numerator[twog] != pow_int(Z.q, static_cast<unsigned>(Z.g)))
        throw std::logic_error("zeta: a_2g != q^g");
    for (size_t i = 0; i <= static_cast<size_t>(Z.g); ++i)
        if (Z.numerator[twog - i] !=
            pow_int(Z.q, static_cast<unsigned>(Z.g - static_cast<long long>(i))) * Z.numerator[i])
            throw std::logic_error("zeta: functional equation violated");
    bigint p1 = 0;
    for (auto& a : Z.numerator) p1 += a;
    if (p1 < 1) throw std::logic_error("zeta: P(1) < 1");
    for (unsigned r = 1; r <= static_cast<unsigned>(Z.g) + 2; ++r) {
        bigint diff = predicted_count(Z, r) - pow_int(Z.q, r) - 1;
        if (diff * diff > bigint(4) * Z.g * Z.g * pow_int(Z.q, r))
            throw std::logic_error("zeta: Weil bound violated");
    }
}

struct ZetaResult {
    ZetaFunction zeta;
    std::vector<bigint> counts;  // N_1..N_g
    PhaseTimings timings;
    TraceParams params{1, 1, 1, {1, -1}};
};

/// The main pipeline: genus, precision, plane-model counts mod p^lambda,
/// corrections, exact recovery, numerator assembly.
inline ZetaResult compute_zeta(const Fq& Fp, const BPoly& Fbar) {
    ZetaResult R;
    auto t0 = std::chrono::steady_clock::now();
    SingularAnalysis A = analyze_curve(Fp, Fbar);
    long long g = A.genus;
    auto t1 = std::chrono::steady_clock::now();
    R.timings.corrections = std::chrono::duration<double>(t1 - t0).count();
    R.zeta.q = Fp.p();
    R.zeta.g = g;
    if (g == 0) {
        R.zeta.numerator = {1};
        assert_zeta_invariants(R.zeta);
        return R;
    }
    unsigned D = static_cast<unsigned>(g);
    R.params = precision_params(static_cast<uint64_t>(g), Fp.p(), D);
    ModRing ring(Fp.p(), R.params.lambda);
    CountVectorMod plane =
        count_plane_model(Fp, Fbar, R.params, D, &R.timings.powers, &R.timings.traces);
    auto t2 = std::chrono::steady_clock::now();
    std::vector<long long> corr = A.corrections(D);
    for (unsigned r = 1; r <= D; ++r) {
        uint64_t c = ring.add(plane.counts[r - 1], ring.from_signed(corr[r - 1]));
        R.counts.push_back(recover_count(c, Fp.p(), R.params.lambda, g, Fp.p(), r));
    }
    R.zeta.numerator = zeta_numerator(R.counts, Fp.p(), g);
    assert_zeta_invariants(R.zeta);
    auto t3 = std::chrono::steady_clock::now();
    R.timings.corrections += std::chrono::duration<double>(t3 - t2).count();
    return R;
}

}  // namespace curvezeta

#endif
