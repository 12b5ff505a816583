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

#ifndef CURVEZETA_VALIDATE_HPP
#define CURVEZETA_VALIDATE_HPP

#include "naive.hpp"
#include "zeta.hpp"

namespace curvezeta {

struct ValidationCheck {
    std::string name;
    bool ran = false;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool all_passed() const {
        for (auto& c : checks)
            if (c.ran && !c.passed) return false;
        return true;
    }
};

/// Self-tests of a computed zeta function:
/// (1) recompute the pipeline count at r = g+1 with fresh precision and
///     compare against the count the zeta function predicts;
/// (2) naive plane-model enumeration plus corrections at r in {1, 2},
///     where the enumeration budget allows.
inline ValidationReport validate(const Fq& Fp, const BPoly& Fbar, const ZetaFunction& Z,
                                 uint64_t naive_budget = kDefaultNaiveBudget) {
    ValidationReport rep;
    long long g = Z.g;
    unsigned r1 = static_cast<unsigned>(g) + 1;  // g = 0 compares at r = 1

    ValidationCheck c1;
    c1.name = "trace-formula recount at r = g+1";
    c1.ran = true;
    try {
        TraceParams params = precision_params(static_cast<uint64_t>(g), Fp.p(), r1);
        ModRing ring(Fp.p(), params.lambda);
        CountVectorMod plane = count_plane_model(Fp, Fbar, params, r1);
        std::vector<long long> corr = corrections(Fp, Fbar, r1);
        uint64_t c = ring.add(plane.counts[r1 - 1], ring.from_signed(corr[r1 - 1]));
        bigint recomputed = recover_count(c, Fp.p(), params.lambda, g, Z.q, r1);
        bigint predicted = predicted_count(Z, r1);
        c1.passed = (recomputed == predicted);
        c1.detail = "r=" + std::to_string(r1) + " recomputed=" + recomputed.str() +
                    " predicted=" + predicted.str();
    } catch (const std::exception& e) {
        c1.passed = false;
        c1.detail = e.what();
    }
    rep.checks.push_back(std::move(c1));

    std::vector<long long> corr2;
    for (unsigned r = 1; r <= 2; ++r) {
        ValidationCheck c2;
        c2.name = "naive enumeration at r = " + std::to_string(r);
        try {
            check_budget(Fp.p(), r, naive_budget);
        } catch (const std::exception&) {
            c2.ran = false;
            c2.detail = "skipped: budget exceeded";
            rep.checks.push_back(std::move(c2));
            continue;
        }
        c2.ran = true;
        try {
            if (corr2.empty()) corr2 = corrections(Fp, Fbar, 2);
            bigint naive = bigint(naive_count(Fp, Fbar, r, naive_budget)) + corr2[r - 1];
            bigint predicted = predicted_count(Z, r);
            c2.passed = (naive == predicted);
            c2.detail = "naive+corrections=" + naive.str() + " predicted=" + predicted.str();
        } catch (const std::exception& e) {
            c2.passed = false;
            c2.detail = e.what();
        }
        rep.checks.push_back(std::move(c2));
    }
    return rep;
}

}  // namespace curvezeta

#endif
