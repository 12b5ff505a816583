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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <curvezeta/driver.hpp>
#include <curvezeta/naive.hpp>

using namespace curvezeta;

namespace {

nlohmann::json run_json(JobSpec job, int expect_code) {
    job.json = true;
    std::ostringstream out, err;
    int code = run(job, out, err);
    REQUIRE_MESSAGE(code == expect_code, "stderr: ", err.str());
    return nlohmann::json::parse(out.str());
}

}  // namespace

TEST_CASE("parse_poly small cases") {
    Fq F5(5);
    BPoly F = parse_poly("y^2 - x^3 - x - 1", F5);
    CHECK(F.t.size() == 4);
    CHECK(bp_coeff(F5, F, 0, 2)[0] == 1);
    CHECK(bp_coeff(F5, F, 3, 0)[0] == 4);
    CHECK(bp_coeff(F5, F, 1, 0)[0] == 4);
    CHECK(bp_coeff(F5, F, 0, 0)[0] == 4);

    Fq F3(3);
    unsigned dropped = 0;
    BPoly G = parse_poly("x*y + 3", F3, &dropped);
    CHECK(dropped == 1);
    CHECK(G.t.size() == 1);
    CHECK(bp_coeff(F3, G, 1, 1)[0] == 1);

    try {
        parse_poly("y^^2", F5);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_poly("", F5), ParseError);
    CHECK_THROWS_AS(parse_poly("5x", F5), ParseError);  // zero mod 5
    CHECK_THROWS_AS(parse_poly("x + + y", F5), ParseError);
}

TEST_CASE("render_poly round-trips") {
    Fq F7(7);
    std::mt19937_64 rng(777);
    for (int it = 0; it < 100; ++it) {
        BPoly f;
        unsigned terms = 1 + rng() % 6;
        for (unsigned t = 0; t < terms; ++t)
            bp_addto(F7, f, rng() % 5, rng() % 5, F7.from_int(1 + rng() % 6));
        if (f.is_zero()) continue;
        BPoly back = parse_poly(render_poly(F7, f), F7);
        CHECK(bp_eq(F7, f, back));
    }
}

TEST_CASE("triples format and file input") {
    Fq F5(5);
    std::string triples = "# curve\n0 2 1\n3 0 -1\n1 0 -1\n0 0 -1\n";
    BPoly A = parse_poly_triples(triples, F5);
    BPoly B = parse_poly("y^2 - x^3 - x - 1", F5);
    CHECK(bp_eq(F5, A, B));
    // auto-detection picks the right parser for both formats
    CHECK(bp_eq(F5, parse_poly_any(triples, F5), B));
    CHECK(bp_eq(F5, parse_poly_any("y^2 - x^3 - x - 1", F5), B));
    CHECK_THROWS_AS(parse_poly_triples("1 -2 3\n", F5), ParseError);

    std::string path = "cz_test_poly.txt";
    std::ofstream(path) << triples;
    CHECK(read_poly_source("@" + path) == triples);
    CHECK(read_poly_source("y - x") == "y - x");
    CHECK_THROWS_AS(read_poly_source("@no_such_file_here.txt"), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("naive counting small cases") {
    Fq F5(5), F7(7);
    BPoly E = parse_poly("y^2 - x^3 - x - 1", F5);
    CHECK(naive_count(F5, E, 1) == 9);
    CHECK(naive_count(F5, E, 2) == 27);
    CHECK(naive_torus_count(F5, E, 1) == 6);
    // singular plane models: the plane count differs from the smooth count
    CHECK(naive_count(F5, parse_poly("y^2 - x^3 - x^2", F5), 1) == 5);
    CHECK(naive_count(F5, parse_poly("y^2 - 2x^2 - x^3", F5), 1) == 7);
    // budget guard
    CHECK_THROWS_AS(naive_count(F7, E, 3, 100), std::domain_error);
}

TEST_CASE("zeta job produces the full document") {
    JobSpec job;
    job.p = 5;
    job.poly = "y^2 - x^3 - x - 1";
    auto doc = run_json(job, kExitOk);
    CHECK(doc["p"] == 5);
    CHECK(doc["genus"] == 1);
    CHECK(doc["counts"] == nlohmann::json::array({"9"}));
    CHECK(doc["numerator"] == nlohmann::json::array({"1", "3", "5"}));
    REQUIRE(doc.contains("timings"));
    CHECK(doc["timings"].contains("powers"));
    CHECK(doc["timings"].contains("traces"));
    CHECK(doc["timings"].contains("corrections"));
    REQUIRE(doc.contains("validation"));
    for (auto& c : doc["validation"]) CHECK((!c["ran"] || c["passed"]));

    // --no-verify drops the validation section
    job.no_verify = true;
    auto doc2 = run_json(job, kExitOk);
    CHECK(!doc2.contains("validation"));
}

TEST_CASE("output is deterministic across runs") {
    JobSpec job;
    job.p = 7;
    job.poly = "y^2 - x^3 - x";
    auto a = run_json(job, kExitOk);
    auto b = run_json(job, kExitOk);
    a.erase("timings");
    b.erase("timings");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("count job reports plane-model residues") {
    JobSpec job;
    job.command = Command::Count;
    job.p = 3;
    job.poly = "y - x";
    job.max_r = 2;
    job.lambda_override = 1;
    auto doc = run_json(job, kExitOk);
    CHECK(doc["lambda"] == 1);
    CHECK(doc["modulus"] == 3);
    // |X(F_3)| = 4, |X(F_9)| = 10, both = 1 mod 3
    CHECK(doc["plane_counts_mod"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("exit codes") {
    std::ostringstream out, err;
    JobSpec bad;
    bad.p = 5;
    bad.poly = "y^^2";
    CHECK(run(bad, out, err) == kExitParseError);
    CHECK(err.str().find("input error") != std::string::npos);

    JobSpec notprime;
    notprime.p = 4;
    notprime.poly = "y - x";
    CHECK(run(notprime, out, err) == kExitParseError);

    // not a curve over F_p(x): precondition violation
    JobSpec flat;
    flat.p = 5;
    flat.poly = "x^2 + x + 1";
    CHECK(run(flat, out, err) == kExitPrecondition);

    // a reducible input (a line times an elliptic curve) slips past the
    // caller precondition but is caught by self-verification
    JobSpec reducible;
    reducible.p = 5;
    reducible.poly = "y^3 - x^3*y - x*y - y";
    std::ostringstream rout, rerr;
    CHECK(run(reducible, rout, rerr) == kExitValidationFailed);

    // dropped-term warning reaches the diagnostic stream
    JobSpec warn;
    warn.p = 3;
    warn.poly = "x*y + 3 + y^2 - x^3";
    std::ostringstream wout, werr;
    CHECK(run(warn, wout, werr) == kExitOk);
    CHECK(werr.str().find("warning") != std::string::npos);
}
