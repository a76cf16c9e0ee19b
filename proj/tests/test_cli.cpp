/*   Copyright 2026 The fuzzcalc authors

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

// End-to-end checks of the command-line front end: exit codes, output
// formats and determinism. The binary path comes from FUZZCALC_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* env = std::getenv("FUZZCALC_BIN");
    REQUIRE_MESSAGE(env != nullptr, "FUZZCALC_BIN must point at the CLI binary");
    return env;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("diff exit codes follow the verdict") {
    auto ok = run("diff gh \"tfn(3,4,5)\" \"tfn(-3,-2,-1)\"");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("crisp(6)") != std::string::npos);

    auto missing = run("diff gh \"tfn(0,2,4)\" \"tpfn(0,1,2,3)\"");
    CHECK(missing.exit_code == 2);
    CHECK(missing.out.find("not_exists") != std::string::npos);

    auto standard = run("diff standard \"tfn(0,1,2)\" \"tfn(0,1,2)\"");
    CHECK(standard.exit_code == 0);
    CHECK(standard.out.find("tfn(-2, 0, 2)") != std::string::npos);

    auto usage = run("diff gh \"tfn(5,4,3)\" \"tfn(0,1,2)\"");
    CHECK(usage.exit_code == 1);

    auto badkind = run("diff nope \"tfn(0,1,2)\" \"tfn(0,1,2)\"");
    CHECK(badkind.exit_code == 1);
}

TEST_CASE("derive exit codes and values") {
    auto h_neg = run("derive h \"tfn(0,2,4)*x1\" --at -1");
    CHECK(h_neg.exit_code == 2);
    CHECK(h_neg.out.find("forward_h_diff_missing") != std::string::npos);

    auto gh_neg = run("derive gh \"tfn(0,2,4)*x1\" --at -1");
    CHECK(gh_neg.exit_code == 0);
    CHECK(gh_neg.out.find("tfn(0, 2, 4)") != std::string::npos);

    auto crisp = run("derive h \"crisp(1)*x1\" --at 5");
    CHECK(crisp.exit_code == 0);
    CHECK(crisp.out.find("crisp(1)") != std::string::npos);

    auto second = run("derive h \"tfn(1,2,3)*sin(x1)\" --at 0.8 --order 2");
    CHECK(second.exit_code == 2);
    CHECK(second.out.find("failing order: 2") != std::string::npos);

    auto parse_error = run("derive h \"tfn(0,1,2)*\" --at 1");
    CHECK(parse_error.exit_code == 1);

    auto json_mode = run("--output json derive h \"tfn(0,2,4)*x1\" --at 1");
    CHECK(json_mode.exit_code == 0);
    Json j = Json::parse(json_mode.out);
    CHECK(j["verdict"] == "differentiable");
    CHECK(j["value"]["params"] == Json::array({0.0, 2.0, 4.0}));
    CHECK(j["config"]["h0"] == 1e-2);
}

TEST_CASE("scan: json output, regions and determinism") {
    const std::string cmd =
        "--output json scan \"tfn(0,2,4)*x1^2\" --box \"x1=-1:1\" --samples 21";
    auto first = run(cmd);
    CHECK(first.exit_code == 0);
    auto second = run(cmd);
    CHECK(second.out == first.out); // byte-identical reruns

    Json j = Json::parse(first.out);
    CHECK(j["points"].size() == 21);
    REQUIRE(j["regions"].size() == 2);
    CHECK(j["regions"][0]["h"] == "not_differentiable");
    CHECK(j["regions"][1]["h"] == "differentiable");
    CHECK(j["regions"][1]["x_start"] == 0.0);

    auto bad_box = run("scan \"tfn(0,2,4)*x1^2\" --box \"x1=oops\"");
    CHECK(bad_box.exit_code == 1);
}

TEST_CASE("multivariable scan with second-order flags") {
    auto r = run("--output json scan \"tfn(-1,1,3)*(x1^3+2*x2^3) + tfn(-1,1,3)*(x1*x2)\" "
                 "--box \"x1=0.1:2\" --box \"x2=0.1:2\" --samples 3 --order 2");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["points"].size() == 9);
    for (const auto& p : j["points"]) {
        CHECK(p["h"]["verdict"] == "differentiable");
        bool mixed12 = false, mixed21 = false;
        for (const auto& o : p["order2"]) {
            if (o["i"] == 1 && o["j"] == 2)
                mixed12 = o["result"]["verdict"] == "not_exists";
            if (o["i"] == 2 && o["j"] == 1)
                mixed21 = o["result"]["verdict"] == "not_exists";
        }
        CHECK(mixed12);
        CHECK(mixed21);
    }
}

TEST_CASE("eval prints profiles in every format") {
    auto pretty = run("eval \"tfn(0,2,4)*x1\" --at 2");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.out.find("tfn(0, 4, 8)") != std::string::npos);

    auto csv = run("--grid 3 --output csv eval \"tfn(0,2,4)*x1\" --at 2");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "alpha,lower,upper\n0,0,8\n0.5,2,6\n1,4,4\n");

    auto curves = run("--grid 3 --output csv scan \"tfn(0,2,4)*x1\" --box \"x1=1:2\" --samples 2");
    CHECK(curves.exit_code == 0);
    CHECK(curves.out.rfind("x,alpha,lower,upper\n", 0) == 0);

    auto json_mode = run("--output json eval \"tfn(0,2,4)*x1\" --at 1");
    Json j = Json::parse(json_mode.out);
    CHECK(j["shape"] == "triangular");
}

TEST_CASE("fixtures command is robust across configurations") {
    auto normal = run("fixtures");
    CHECK(normal.exit_code == 0);
    CHECK(normal.out.find("30/30 fixtures passed") != std::string::npos);

    // coarse grid: fixtures are grid-robust
    auto coarse = run("--grid 11 fixtures");
    CHECK(coarse.exit_code == 0);

    // tightened tolerance: convergence fixtures still pass
    auto tight = run("--output json --tol 1e-9 fixtures");
    Json j = Json::parse(tight.out);
    for (const auto& f : j["fixtures"]) {
        const std::string name = f["name"];
        if (name == "constant_function_zero_derivative" || name == "linear_positive_halfline" ||
            name == "linear_negative_halfline_gh" || name == "quadratic_origin") {
            CAPTURE(name);
            CHECK(f["pass"] == true);
        }
    }
    CHECK(tight.exit_code == 0); // in fact the whole suite stays green
}

TEST_CASE("environment variable sets the default grid") {
    auto r = run("--output csv eval \"tfn(0,2,4)*x1\" --at 1", "FUZZCALC_GRID=5 ");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n')
            ++lines;
    CHECK(lines == 6); // header + 5 grid levels

    // explicit flag wins over the environment
    auto flag = run("--grid 3 --output csv eval \"tfn(0,2,4)*x1\" --at 1", "FUZZCALC_GRID=5 ");
    int flag_lines = 0;
    for (char c : flag.out)
        if (c == '\n')
            ++flag_lines;
    CHECK(flag_lines == 4);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("").exit_code == 1);
    CHECK(run("unknown-subcommand").exit_code == 1);
    CHECK(run("derive h").exit_code == 1);
    CHECK(run("derive h \"tfn(0,1,2)*x1\" --at 1,2").exit_code == 1); // arity mismatch
    CHECK(run("scan \"tfn(0,1,2)*x1\"").exit_code == 1);              // missing box
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("output goes to a file with --out") {
    const std::string path = "/tmp/fuzzcalc_test_out.json";
    std::remove(path.c_str());
    auto r = run("--output json --out " + path + " diff h \"tfn(-1,1,3)\" \"tfn(-1,0,1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
        content.append(buf.data(), n);
    fclose(f);
    Json j = Json::parse(content);
    CHECK(j["verdict"] == "exists");
    CHECK(j["witness"]["params"] == Json::array({0.0, 1.0, 2.0}));
    std::remove(path.c_str());
}
