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

#ifndef CURVEZETA_DRIVER_HPP
#define CURVEZETA_DRIVER_HPP

#include <fstream>
#include <iostream>
#include <optional>

#include <json.hpp>

#include "parse.hpp"
#include "validate.hpp"

namespace curvezeta {

enum class Command { Zeta, Count, Verify };

// exit codes of `run`
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitValidationFailed = 4;

struct JobSpec {
    Command command = Command::Zeta;
    uint64_t p = 0;
    std::string poly;  // expression, triples, or @file
    unsigned max_r = 1;
    unsigned lambda_override = 0;  // 0 = derive from genus
    bool json = false;
    bool no_verify = false;
    uint64_t naive_budget = kDefaultNaiveBudget;
};

inline std::string read_poly_source(const std::string& poly) {
    if (!poly.empty() && poly[0] == '@') {
        std::ifstream in(poly.substr(1));
        if (!in) throw std::runtime_error("cannot open polynomial file: " + poly.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return poly;
}

inline nlohmann::json validation_to_json(const ValidationReport& rep) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& c : rep.checks) {
        out.push_back({{"name", c.name},
                       {"ran", c.ran},
                       {"passed", c.ran ? nlohmann::json(c.passed) : nlohmann::json(nullptr)},
                       {"detail", c.detail}});
    }
    return out;
}

/// Execute one job, writing the result document to `out` and diagnostics to
/// `err`. Returns the process exit code.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    std::optional<Fq> field;
    BPoly F;
    try {
        if (!is_prime_u64(job.p)) throw ParseError(0, "p is not prime");
        field.emplace(job.p);
        unsigned dropped = 0;
        F = parse_poly_any(read_poly_source(job.poly), *field, &dropped);
        if (dropped) err << "warning: " << dropped << " term(s) reduced to zero mod p\n";
    } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitParseError;
    }

    try {
        nlohmann::json doc;
        doc["p"] = job.p;
        doc["poly"] = render_poly((*field), F);

        if (job.command == Command::Count) {
            long long g = job.lambda_override ? 0 : geometric_genus((*field), F);
            TraceParams params = job.lambda_override
                                     ? TraceParams{job.lambda_override,
                                                   (job.lambda_override + static_cast<unsigned>(job.p) - 2) /
                                                       (static_cast<unsigned>(job.p) - 1),
                                                   0,
                                                   {}}
                                     : precision_params(static_cast<uint64_t>(g), job.p,
                                                        std::max(job.max_r, 1u));
            if (job.lambda_override) {
                params.S = params.lambda + params.tau - 1;
                params.alpha = alpha_coefficients(params.lambda, params.tau);
            }
            CountVectorMod counts = count_plane_model((*field), F, params, job.max_r);
            doc["lambda"] = params.lambda;
            doc["modulus"] = ModRing(job.p, params.lambda).pl;
            doc["plane_counts_mod"] = counts.counts;
            if (job.json)
                out << doc.dump(2) << "\n";
            else {
                out << "plane model counts mod " << job.p << "^" << params.lambda << ":";
                for (auto c : counts.counts) out << " " << c;
                out << "\n";
            }
            return kExitOk;
        }

        ZetaResult R = compute_zeta((*field), F);
        doc["genus"] = R.zeta.g;
        {
            nlohmann::json counts = nlohmann::json::array();
            for (auto& n : R.counts) counts.push_back(n.str());
            doc["counts"] = counts;
            nlohmann::json num = nlohmann::json::array();
            for (auto& a : R.zeta.numerator) num.push_back(a.str());
            doc["numerator"] = num;
        }
        doc["timings"] = {{"powers", R.timings.powers},
                          {"traces", R.timings.traces},
                          {"corrections", R.timings.corrections}};

        bool verify = (job.command == Command::Verify) || !job.no_verify;
        ValidationReport rep;
        if (verify) {
            rep = validate((*field), F, R.zeta, job.naive_budget);
            doc["validation"] = validation_to_json(rep);
        }

        if (job.json) {
            out << doc.dump(2) << "\n";
        } else {
            out << "p = " << job.p << ", genus = " << R.zeta.g << "\n";
            out << "numerator P(T): [";
            for (size_t i = 0; i < R.zeta.numerator.size(); ++i)
                out << (i ? ", " : "") << R.zeta.numerator[i].str();
            out << "]\n";
            if (!R.counts.empty()) {
                out << "counts N_r: [";
                for (size_t i = 0; i < R.counts.size(); ++i)
                    out << (i ? ", " : "") << R.counts[i].str();
                out << "]\n";
            }
            out << "timings: powers=" << R.timings.powers << "s traces=" << R.timings.traces
                << "s corrections=" << R.timings.corrections << "s\n";
            for (auto& c : rep.checks)
                out << "check [" << c.name << "]: "
                    << (!c.ran ? "skipped" : (c.passed ? "pass" : "FAIL")) << " " << c.detail
                    << "\n";
        }
        if (verify && !rep.all_passed()) return kExitValidationFailed;
        return kExitOk;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::domain_error& e) {
        err << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace curvezeta

#endif
