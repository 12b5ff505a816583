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

#include <CLI11.hpp>

#include <curvezeta/driver.hpp>

int main(int argc, char** argv) {
    CLI::App app{"curvezeta: zeta functions of plane curves over prime fields"};
    app.require_subcommand(1);

    curvezeta::JobSpec job;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", job.p, "prime p")->required();
        cmd->add_option("--poly", job.poly, "polynomial expression, 'i j c' triples, or @file")
            ->required();
        cmd->add_option("--max-r", job.max_r, "largest extension degree r");
        cmd->add_option("--lambda", job.lambda_override, "override precision exponent lambda");
        cmd->add_flag("--json", job.json, "JSON output");
        cmd->add_option("--naive-budget", job.naive_budget,
                        "candidate-pair budget for naive enumeration");
        cmd->add_flag("--no-verify", job.no_verify, "skip self-tests after computing the zeta function");
    };

    CLI::App* zeta = app.add_subcommand("zeta", "compute the zeta function of the nonsingular model");
    CLI::App* count = app.add_subcommand("count", "plane-model point counts mod p^lambda");
    CLI::App* verify = app.add_subcommand("verify", "compute and self-test the zeta function");
    add_common(zeta);
    add_common(count);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : curvezeta::kExitParseError;
    }

    if (zeta->parsed()) job.command = curvezeta::Command::Zeta;
    if (count->parsed()) job.command = curvezeta::Command::Count;
    if (verify->parsed()) job.command = curvezeta::Command::Verify;

    return curvezeta::run(job, std::cout, std::cerr);
}
