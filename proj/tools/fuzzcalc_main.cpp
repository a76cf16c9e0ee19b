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

// Analyzer front end. Talks to the library exclusively through the C
// API; pretty output is rendered from the returned JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuzzcalc/fuzzcalc.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegativeVerdict = 2;

struct ContextDeleter {
    void operator()(fc_context* c) const { fc_context_free(c); }
};
struct NumberDeleter {
    void operator()(fc_number* n) const { fc_number_free(n); }
};
struct ExprDeleter {
    void operator()(fc_expr* e) const { fc_expr_free(e); }
};
struct ResultDeleter {
    void operator()(fc_result* r) const { fc_result_free(r); }
};

using ContextPtr = std::unique_ptr<fc_context, ContextDeleter>;
using NumberPtr = std::unique_ptr<fc_number, NumberDeleter>;
using ExprPtr = std::unique_ptr<fc_expr, ExprDeleter>;
using ResultPtr = std::unique_ptr<fc_result, ResultDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    fc_string_free(s);
    return out;
}

struct Options {
    int grid = 0; // 0: env or library default
    double h0 = 1e-2;
    double shrink = 0.5;
    int iters = 20;
    double tol = 1e-6;
    std::string output = "pretty"; // json | csv | pretty
    std::string out_path;
};

[[noreturn]] void die(fc_context* ctx, const char* what) {
    std::cerr << "error: " << what;
    const char* detail = fc_last_error(ctx);
    if (detail && *detail)
        std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(kExitUsage);
}

void check(fc_context* ctx, fc_status s, const char* what) {
    if (s != FC_OK)
        die(ctx, what);
}

ContextPtr make_context(const Options& opt) {
    ContextPtr ctx(fc_context_new());
    if (!ctx) {
        std::cerr << "error: context allocation failed\n";
        std::exit(kExitUsage);
    }
    int grid = opt.grid;
    if (grid == 0) {
        if (const char* env = std::getenv("FUZZCALC_GRID"))
            grid = std::atoi(env);
    }
    if (grid != 0)
        check(ctx.get(), fc_set_grid_size(ctx.get(), grid), "invalid grid size");
    check(ctx.get(), fc_set_limit_params(ctx.get(), opt.h0, opt.shrink, opt.iters, opt.tol),
          "invalid limit parameters");
    return ctx;
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << "\n";
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << opt.out_path << "\n";
        std::exit(kExitUsage);
    }
    f << text;
}

std::string number_text(const Json& number_json) {
    const std::string shape = number_json.value("shape", "general");
    std::ostringstream os;
    if (shape == "triangular" || shape == "trapezoidal" || shape == "crisp") {
        os << (shape == "triangular" ? "tfn(" : shape == "trapezoidal" ? "tpfn(" : "crisp(");
        const auto& params = number_json.at("params");
        for (std::size_t i = 0; i < params.size(); ++i)
            os << (i ? ", " : "") << params[i].get<double>();
        os << ")";
    } else {
        const auto& cuts = number_json.at("cuts");
        os << "general{support [" << cuts.front()[0].get<double>() << ", "
           << cuts.front()[1].get<double>() << "], core [" << cuts.back()[0].get<double>()
           << ", " << cuts.back()[1].get<double>() << "]}";
    }
    return os.str();
}

std::string pretty_diff(const Json& j) {
    std::ostringstream os;
    os << j.value("operator", "?") << ": " << j.value("verdict", "?") << "\n";
    if (j.contains("witness"))
        os << "  result: " << number_text(j["witness"]) << "\n";
    if (j.contains("value"))
        os << "  result: " << number_text(j["value"]) << "\n";
    if (j.contains("case"))
        os << "  case: (" << (j["case"].get<int>() == 1 ? "i" : "ii") << ")\n";
    if (j.contains("violations"))
        for (const auto& v : j["violations"])
            os << "  violated: " << v.value("condition", "?") << " at alpha "
               << v.value("alpha", 0.0) << " (magnitude " << v.value("magnitude", 0.0) << ")\n";
    return os.str();
}

std::string pretty_derivative(const Json& j) {
    std::ostringstream os;
    os << "mode " << j.value("mode", "?") << ", order " << j.value("order", 1) << ": "
       << j.value("verdict", "?") << "\n";
    if (j.contains("reason"))
        os << "  reason: " << j["reason"].get<std::string>() << "\n";
    if (j.contains("failing_order"))
        os << "  failing order: " << j["failing_order"].get<int>() << "\n";
    if (j.contains("one_sided") && j["one_sided"].get<bool>())
        os << "  one-sided\n";
    if (j.contains("detail"))
        os << "  detail: " << j["detail"].get<std::string>() << "\n";
    if (j.contains("value"))
        os << "  value: " << number_text(j["value"]) << "\n";
    if (j.contains("trace"))
        os << "  trace: " << j["trace"].size() << " steps\n";
    if (j.contains("partials")) {
        int i = 1;
        for (const auto& p : j["partials"]) {
            os << "  d/dx" << i++ << ": " << p.value("verdict", "?");
            if (p.contains("value"))
                os << " = " << number_text(p["value"]);
            if (p.contains("reason"))
                os << " (" << p["reason"].get<std::string>() << ")";
            os << "\n";
        }
    }
    if (j.contains("pairs")) {
        for (const auto& p : j["pairs"]) {
            os << "  d2/dx" << p["i"].get<int>() << "dx" << p["j"].get<int>() << ": "
               << p["result"].value("verdict", "?") << "\n";
        }
    }
    return os.str();
}

std::string pretty_scan(const Json& j) {
    std::ostringstream os;
    os << "scan of " << j["request"].value("expr", "?") << "\n";
    os << "  points: " << j["points"].size() << "\n";
    for (const auto& r : j["regions"]) {
        os << "  indices [" << r["from_index"].get<std::size_t>() << ", "
           << r["to_index"].get<std::size_t>() << "]";
        if (r.contains("x_start"))
            os << "  x in [" << r["x_start"].get<double>() << ", " << r["x_end"].get<double>()
               << "]";
        os << "  H: " << r.value("h", "-") << "  gH: " << r.value("gh", "-") << "\n";
    }
    return os.str();
}

std::string pretty_fixtures(const Json& j) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& f : j["fixtures"]) {
        const bool ok = f.value("pass", false);
        passed += ok ? 1 : 0;
        os << (ok ? "[PASS] " : "[FAIL] ") << f.value("name", "?") << "\n";
        if (!ok) {
            os << "        expected: " << f.value("expected", "") << "\n";
            os << "        actual:   " << f.value("actual", "") << "\n";
        }
    }
    os << passed << "/" << j["fixtures"].size() << " fixtures passed\n";
    return os.str();
}

std::vector<double> parse_at(const std::vector<double>& at) { return at; }

// --box "x1=-1:1" -> (index, lo, hi)
bool parse_box_spec(const std::string& spec, int& var, double& lo, double& hi) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || spec.empty() || spec[0] != 'x')
        return false;
    try {
        var = std::stoi(spec.substr(1, eq - 1));
    } catch (...) {
        return false;
    }
    const auto colon = spec.find(':', eq);
    if (colon == std::string::npos)
        return false;
    try {
        lo = std::stod(spec.substr(eq + 1, colon - eq - 1));
        hi = std::stod(spec.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return var >= 1 && lo < hi;
}

int require_structured_output(const Options& opt, const char* what) {
    if (opt.output == "csv") {
        std::cerr << "error: csv output is not available for " << what
                  << " (use json or pretty)\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_diff(const Options& opt, const std::string& kind, const std::string& a_text,
             const std::string& b_text) {
    if (int rc = require_structured_output(opt, "diff"))
        return rc;
    ContextPtr ctx = make_context(opt);
    fc_number* a_raw = nullptr;
    check(ctx.get(), fc_number_parse(ctx.get(), a_text.c_str(), &a_raw), "bad fuzzy literal");
    NumberPtr a(a_raw);
    fc_number* b_raw = nullptr;
    check(ctx.get(), fc_number_parse(ctx.get(), b_text.c_str(), &b_raw), "bad fuzzy literal");
    NumberPtr b(b_raw);

    fc_result* r_raw = nullptr;
    check(ctx.get(), fc_diff(ctx.get(), kind.c_str(), a.get(), b.get(), &r_raw), "diff failed");
    ResultPtr r(r_raw);

    std::string json = take_string([&] {
        char* s = nullptr;
        check(ctx.get(), fc_result_to_json(ctx.get(), r.get(), &s), "serialization failed");
        return s;
    }());
    if (opt.output == "json")
        write_output(opt, json);
    else
        write_output(opt, pretty_diff(Json::parse(json)));
    return fc_result_verdict(r.get()) ? kExitOk : kExitNegativeVerdict;
}

int run_derive(const Options& opt, const std::string& mode, const std::string& expr_text,
               const std::vector<double>& at, int order, int var) {
    if (int rc = require_structured_output(opt, "derive"))
        return rc;
    ContextPtr ctx = make_context(opt);
    fc_expr* e_raw = nullptr;
    check(ctx.get(), fc_expr_parse(ctx.get(), expr_text.c_str(), 0, &e_raw), "bad expression");
    ExprPtr e(e_raw);
    if (static_cast<int>(at.size()) != fc_expr_arity(e.get())) {
        std::cerr << "error: --at needs " << fc_expr_arity(e.get()) << " coordinates\n";
        return kExitUsage;
    }
    fc_result* r_raw = nullptr;
    check(ctx.get(),
          fc_derive(ctx.get(), e.get(), mode.c_str(), at.data(), static_cast<int>(at.size()),
                    order, var, &r_raw),
          "derive failed");
    ResultPtr r(r_raw);
    std::string json = take_string([&] {
        char* s = nullptr;
        check(ctx.get(), fc_result_to_json(ctx.get(), r.get(), &s), "serialization failed");
        return s;
    }());
    if (opt.output == "json")
        write_output(opt, json);
    else
        write_output(opt, pretty_derivative(Json::parse(json)));
    return fc_result_verdict(r.get()) ? kExitOk : kExitNegativeVerdict;
}

int run_scan(const Options& opt, const std::string& expr_text,
             const std::vector<std::string>& box_specs, int samples, int order) {
    ContextPtr ctx = make_context(opt);
    if (box_specs.empty()) {
        std::cerr << "error: scan needs at least one --box\n";
        return kExitUsage;
    }
    std::vector<double> lo(box_specs.size()), hi(box_specs.size());
    std::vector<bool> seen(box_specs.size(), false);
    for (const std::string& spec : box_specs) {
        int var = 0;
        double l = 0, h = 0;
        if (!parse_box_spec(spec, var, l, h) || var > static_cast<int>(box_specs.size())) {
            std::cerr << "error: bad box spec '" << spec << "' (use \"x1=-1:1\")\n";
            return kExitUsage;
        }
        lo[static_cast<std::size_t>(var - 1)] = l;
        hi[static_cast<std::size_t>(var - 1)] = h;
        seen[static_cast<std::size_t>(var - 1)] = true;
    }
    for (bool s : seen)
        if (!s) {
            std::cerr << "error: box specs must cover x1..xn contiguously\n";
            return kExitUsage;
        }

    if (opt.output == "csv") {
        if (box_specs.size() != 1) {
            std::cerr << "error: csv level curves need a single variable\n";
            return kExitUsage;
        }
        fc_expr* e_raw = nullptr;
        check(ctx.get(), fc_expr_parse(ctx.get(), expr_text.c_str(), 1, &e_raw),
              "bad expression");
        ExprPtr e(e_raw);
        char* csv = nullptr;
        check(ctx.get(), fc_level_curves_csv(ctx.get(), e.get(), lo[0], hi[0], samples, &csv),
              "csv emission failed");
        write_output(opt, take_string(csv));
        return kExitOk;
    }

    int modes = 1 | 2;
    if (order >= 2)
        modes |= 4;
    fc_result* r_raw = nullptr;
    check(ctx.get(),
          fc_scan(ctx.get(), expr_text.c_str(), lo.data(), hi.data(),
                  static_cast<int>(box_specs.size()), samples, modes, &r_raw),
          "scan failed");
    ResultPtr r(r_raw);
    std::string json = take_string([&] {
        char* s = nullptr;
        check(ctx.get(), fc_result_to_json(ctx.get(), r.get(), &s), "serialization failed");
        return s;
    }());
    if (opt.output == "json")
        write_output(opt, json);
    else
        write_output(opt, pretty_scan(Json::parse(json)));
    return kExitOk;
}

int run_eval(const Options& opt, const std::string& expr_text, const std::vector<double>& at) {
    ContextPtr ctx = make_context(opt);
    fc_expr* e_raw = nullptr;
    check(ctx.get(), fc_expr_parse(ctx.get(), expr_text.c_str(), 0, &e_raw), "bad expression");
    ExprPtr e(e_raw);
    if (static_cast<int>(at.size()) != fc_expr_arity(e.get())) {
        std::cerr << "error: --at needs " << fc_expr_arity(e.get()) << " coordinates\n";
        return kExitUsage;
    }
    fc_number* n_raw = nullptr;
    check(ctx.get(),
          fc_expr_eval(ctx.get(), e.get(), at.data(), static_cast<int>(at.size()), &n_raw),
          "evaluation failed");
    NumberPtr n(n_raw);

    if (opt.output == "csv") {
        char* csv = nullptr;
        check(ctx.get(), fc_number_profile_csv(ctx.get(), n.get(), &csv), "csv emission failed");
        write_output(opt, take_string(csv));
        return kExitOk;
    }
    char* js = nullptr;
    check(ctx.get(), fc_number_to_json(ctx.get(), n.get(), &js), "serialization failed");
    std::string json = take_string(js);
    if (opt.output == "json") {
        write_output(opt, json);
        return kExitOk;
    }
    Json j = Json::parse(json);
    std::ostringstream os;
    os << number_text(j) << "\n";
    const auto& grid = j["grid"];
    const auto& cuts = j["cuts"];
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        // closest grid index
        std::size_t best = 0;
        double best_gap = 2.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double gap = std::abs(grid[k].get<double>() - alpha);
            if (gap < best_gap) {
                best_gap = gap;
                best = k;
            }
        }
        os << "  alpha " << grid[best].get<double>() << ": [" << cuts[best][0].get<double>()
           << ", " << cuts[best][1].get<double>() << "]\n";
    }
    write_output(opt, os.str());
    return kExitOk;
}

int run_fixture_suite(const Options& opt) {
    if (int rc = require_structured_output(opt, "fixtures"))
        return rc;
    ContextPtr ctx = make_context(opt);
    fc_result* r_raw = nullptr;
    check(ctx.get(), fc_run_fixtures(ctx.get(), &r_raw), "fixture run failed");
    ResultPtr r(r_raw);
    std::string json = take_string([&] {
        char* s = nullptr;
        check(ctx.get(), fc_result_to_json(ctx.get(), r.get(), &s), "serialization failed");
        return s;
    }());
    if (opt.output == "json")
        write_output(opt, json);
    else
        write_output(opt, pretty_fixtures(Json::parse(json)));
    return fc_result_verdict(r.get()) ? kExitOk : kExitNegativeVerdict;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy-number calculus analyzer"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--grid", opt.grid, "alpha levels (default 101; env FUZZCALC_GRID)");
    app.add_option("--h0", opt.h0, "initial limit step");
    app.add_option("--shrink", opt.shrink, "step factor in (0,1)");
    app.add_option("--iters", opt.iters, "maximum limit steps");
    app.add_option("--tol", opt.tol, "metric tolerance");
    app.add_option("--output", opt.output, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", opt.out_path, "write output to a file");

    auto* diff = app.add_subcommand("diff", "difference of two fuzzy literals");
    std::string diff_kind, diff_a, diff_b;
    diff->add_option("kind", diff_kind, "standard | h | gh")
        ->required()
        ->check(CLI::IsMember({"standard", "h", "gh"}));
    diff->add_option("a", diff_a, "left operand, e.g. \"tfn(3,4,5)\"")->required();
    diff->add_option("b", diff_b, "right operand")->required();

    auto* derive = app.add_subcommand("derive", "derivative analysis at a point");
    std::string derive_mode, derive_expr;
    std::vector<double> derive_at;
    int derive_order = 1, derive_var = 0;
    derive->add_option("mode", derive_mode, "h | gh")
        ->required()
        ->check(CLI::IsMember({"h", "gh"}));
    derive->add_option("expr", derive_expr, "expression")->required();
    derive->add_option("--at", derive_at, "evaluation point (comma separated)")
        ->required()
        ->delimiter(',');
    derive->add_option("--order", derive_order, "derivative order (default 1)");
    derive->add_option("--var", derive_var, "coordinate for partial derivatives (1-based)");

    auto* scan_cmd = app.add_subcommand("scan", "classify differentiability over a box");
    std::string scan_expr;
    std::vector<std::string> scan_boxes;
    int scan_samples = 21, scan_order = 0;
    scan_cmd->add_option("expr", scan_expr, "expression")->required();
    scan_cmd->add_option("--box", scan_boxes, "per-variable range, e.g. \"x1=-1:1\"")
        ->required();
    scan_cmd->add_option("--samples", scan_samples, "samples per axis (default 21)");
    scan_cmd->add_option("--order", scan_order, "2 adds the second-order existence map");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression at a point");
    std::string eval_expr;
    std::vector<double> eval_at;
    eval_cmd->add_option("expr", eval_expr, "expression")->required();
    eval_cmd->add_option("--at", eval_at, "evaluation point (comma separated)")
        ->required()
        ->delimiter(',');

    auto* fixtures_cmd = app.add_subcommand("fixtures", "run the built-in fixture suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (diff->parsed())
            return run_diff(opt, diff_kind, diff_a, diff_b);
        if (derive->parsed())
            return run_derive(opt, derive_mode, derive_expr, parse_at(derive_at), derive_order,
                              derive_var);
        if (scan_cmd->parsed())
            return run_scan(opt, scan_expr, scan_boxes, scan_samples, scan_order);
        if (eval_cmd->parsed())
            return run_eval(opt, eval_expr, eval_at);
        if (fixtures_cmd->parsed())
            return run_fixture_suite(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
