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

#include "fuzzcalc/fuzzcalc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fuzzcalc/analyzer.hpp"
#include "fuzzcalc/arithmetic.hpp"
#include "fuzzcalc/config.hpp"
#include "fuzzcalc/error.hpp"
#include "fuzzcalc/json_io.hpp"
#include "fuzzcalc/metric.hpp"
#include "fuzzcalc/parser.hpp"

using namespace fuzzcalc;

struct fc_context {
    Config config;
    std::string last_error;
};

struct fc_number {
    FuzzyNumber value;
};

struct fc_expr {
    FuzzyExpr expr;
};

struct fc_result {
    Json json;
    bool verdict = false;
};

namespace {

fc_status map_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidArgument: return FC_ERR_INVALID_ARG;
    case ErrorCode::InvalidShape: return FC_ERR_INVALID_SHAPE;
    case ErrorCode::DomainError: return FC_ERR_DOMAIN;
    case ErrorCode::ParseError: return FC_ERR_PARSE;
    case ErrorCode::ArityError: return FC_ERR_ARITY;
    case ErrorCode::UnsupportedForm: return FC_ERR_UNSUPPORTED;
    }
    return FC_ERR_INTERNAL;
}

template <typename F>
fc_status guarded(fc_context* ctx, F&& body) {
    if (!ctx)
        return FC_ERR_INVALID_ARG;
    try {
        ctx->last_error.clear();
        return body();
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return FC_ERR_INTERNAL;
    }
}

fc_status bad_arg(fc_context* ctx, const char* msg) {
    if (ctx)
        ctx->last_error = msg;
    return FC_ERR_INVALID_ARG;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fc_status emit_string(fc_context* ctx, const std::string& s, char** out) {
    *out = dup_string(s);
    if (!*out) {
        ctx->last_error = "out of memory";
        return FC_ERR_INTERNAL;
    }
    return FC_OK;
}

} // namespace

extern "C" {

fc_context* fc_context_new(void) { return new (std::nothrow) fc_context(); }

void fc_context_free(fc_context* ctx) { delete ctx; }

const char* fc_last_error(const fc_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

fc_status fc_set_grid_size(fc_context* ctx, int levels) {
    return guarded(ctx, [&]() -> fc_status {
        AlphaGrid::uniform(levels); // validates
        ctx->config.grid_size = levels;
        return FC_OK;
    });
}

fc_status fc_set_limit_params(fc_context* ctx, double h0, double shrink, int max_iters,
                              double tol) {
    return guarded(ctx, [&]() -> fc_status {
        if (!(h0 > 0.0) || !(shrink > 0.0 && shrink < 1.0) || max_iters < 2 || !(tol > 0.0))
            throw Error(ErrorCode::InvalidArgument, "invalid limit parameters");
        ctx->config.limit = {h0, shrink, max_iters, tol};
        return FC_OK;
    });
}

int fc_grid_size(const fc_context* ctx) { return ctx ? ctx->config.grid_size : 0; }

fc_status fc_number_parse(fc_context* ctx, const char* literal, fc_number** out) {
    if (!literal || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{parse_fuzzy_literal(literal, ctx->config.grid())};
        return FC_OK;
    });
}

fc_status fc_number_triangular(fc_context* ctx, double a1, double a, double a2, fc_number** out) {
    if (!out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{FuzzyNumber::triangular(a1, a, a2, ctx->config.grid())};
        return FC_OK;
    });
}

fc_status fc_number_trapezoidal(fc_context* ctx, double a1, double a2, double a3, double a4,
                                fc_number** out) {
    if (!out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{FuzzyNumber::trapezoidal(a1, a2, a3, a4, ctx->config.grid())};
        return FC_OK;
    });
}

fc_status fc_number_crisp(fc_context* ctx, double v, fc_number** out) {
    if (!out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{FuzzyNumber::crisp(v, ctx->config.grid())};
        return FC_OK;
    });
}

void fc_number_free(fc_number* n) { delete n; }

fc_status fc_number_membership(fc_context* ctx, const fc_number* n, double r, double* out) {
    if (!n || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = n->value.membership(r);
        return FC_OK;
    });
}

fc_status fc_number_alpha_cut(fc_context* ctx, const fc_number* n, double alpha, double* lower,
                              double* upper) {
    if (!n || !lower || !upper)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        Interval c = n->value.alpha_cut(alpha);
        *lower = c.lower;
        *upper = c.upper;
        return FC_OK;
    });
}

fc_status fc_number_to_json(fc_context* ctx, const fc_number* n, char** out) {
    if (!n || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx,
                   [&]() -> fc_status { return emit_string(ctx, to_json(n->value).dump(), out); });
}

fc_status fc_number_to_text(fc_context* ctx, const fc_number* n, char** out) {
    if (!n || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status { return emit_string(ctx, n->value.to_string(), out); });
}

fc_status fc_add(fc_context* ctx, const fc_number* a, const fc_number* b, fc_number** out) {
    if (!a || !b || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{add(a->value, b->value)};
        return FC_OK;
    });
}

fc_status fc_scalar_mul(fc_context* ctx, double l, const fc_number* a, fc_number** out) {
    if (!a || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{scalar_mul(l, a->value)};
        return FC_OK;
    });
}

fc_status fc_distance(fc_context* ctx, const fc_number* a, const fc_number* b, double* out) {
    if (!a || !b || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = distance(a->value, b->value);
        return FC_OK;
    });
}

fc_status fc_diff(fc_context* ctx, const char* kind, const fc_number* a, const fc_number* b,
                  fc_result** out) {
    if (!kind || !a || !b || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        const std::string k = kind;
        auto* res = new fc_result();
        if (k == "standard") {
            FuzzyNumber d = standard_diff(a->value, b->value);
            res->json["operator"] = "standard";
            res->json["verdict"] = "exists";
            res->json["value"] = to_json(d);
            res->verdict = true;
        } else if (k == "h" || k == "gh") {
            ExistenceCertificate cert =
                k == "h" ? h_diff(a->value, b->value) : gh_diff(a->value, b->value);
            res->json = to_json(cert);
            res->verdict = cert.exists;
        } else {
            delete res;
            throw Error(ErrorCode::InvalidArgument, "kind must be standard, h or gh");
        }
        res->json["config"] = to_json(ctx->config);
        *out = res;
        return FC_OK;
    });
}

fc_status fc_expr_parse(fc_context* ctx, const char* text, int arity, fc_expr** out) {
    if (!text || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        const int n = arity > 0 ? arity : infer_arity(text);
        *out = new fc_expr{parse(text, n, ctx->config.grid())};
        return FC_OK;
    });
}

void fc_expr_free(fc_expr* e) { delete e; }

int fc_expr_arity(const fc_expr* e) { return e ? e->expr.arity() : 0; }

fc_status fc_expr_eval(fc_context* ctx, const fc_expr* e, const double* x, int n,
                       fc_number** out) {
    if (!e || !x || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        *out = new fc_number{e->expr.eval(std::span<const double>(x, static_cast<std::size_t>(n)))};
        return FC_OK;
    });
}

fc_status fc_derive(fc_context* ctx, const fc_expr* e, const char* mode, const double* x, int n,
                    int order, int var, fc_result** out) {
    if (!e || !mode || !x || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        const std::string m = mode;
        if (n != e->expr.arity())
            throw Error(ErrorCode::ArityError, "point does not match expression arity");
        if (order < 1)
            throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
        if (var < 0 || var > e->expr.arity())
            throw Error(ErrorCode::InvalidArgument, "variable index out of range");
        std::span<const double> pt(x, static_cast<std::size_t>(n));
        const LimitParams& lp = ctx->config.limit;
        auto* res = new fc_result();

        if (m == "h") {
            if (e->expr.arity() == 1 || var > 0) {
                const int v = var > 0 ? var : 1;
                DerivativeResult r = higher_h_derivative(e->expr, pt, v, order, lp);
                res->json = to_json(r);
                res->verdict = r.differentiable;
            } else if (order == 1) {
                MultivariableResult r = multivariable_h_derivative(e->expr, pt, lp);
                res->json["mode"] = "h";
                res->json["verdict"] =
                    r.differentiable ? "differentiable" : "not_differentiable";
                res->json["continuity_ok"] = r.continuity_ok;
                if (!r.detail.empty())
                    res->json["detail"] = r.detail;
                Json parts = Json::array();
                for (const DerivativeResult& p : r.partials)
                    parts.push_back(to_json(p));
                res->json["partials"] = std::move(parts);
                res->verdict = r.differentiable;
            } else if (order == 2) {
                auto pairs = second_partial_existence(e->expr, pt);
                res->json["mode"] = "h";
                res->json["order"] = 2;
                bool all = true;
                Json arr = Json::array();
                for (const auto& [key, entry] : pairs) {
                    Json pj;
                    pj["i"] = key.first;
                    pj["j"] = key.second;
                    pj["result"] = to_json(entry);
                    arr.push_back(std::move(pj));
                    all = all && entry.exists;
                }
                res->json["pairs"] = std::move(arr);
                res->json["verdict"] = all ? "differentiable" : "not_differentiable";
                res->verdict = all;
            } else {
                delete res;
                throw Error(ErrorCode::UnsupportedForm,
                            "orders above 2 need --var on multivariable expressions");
            }
        } else if (m == "gh") {
            if (order != 1) {
                delete res;
                throw Error(ErrorCode::UnsupportedForm, "gh derivatives support order 1 only");
            }
            if (e->expr.arity() == 1) {
                const FuzzyExpr& expr = e->expr;
                auto f = [&expr](double t) {
                    return expr.eval(std::span<const double>(&t, 1));
                };
                DerivativeResult r = gh_derivative_numeric(f, pt[0], lp);
                res->json = to_json(r);
                res->verdict = r.differentiable;
            } else if (var > 0) {
                DerivativeResult r = partial_gh_derivative(e->expr, pt, var, lp);
                res->json = to_json(r);
                res->verdict = r.differentiable;
            } else {
                res->json["mode"] = "gh";
                bool all = true;
                Json parts = Json::array();
                for (int i = 1; i <= e->expr.arity(); ++i) {
                    DerivativeResult r = partial_gh_derivative(e->expr, pt, i, lp);
                    all = all && r.differentiable;
                    parts.push_back(to_json(r));
                }
                res->json["partials"] = std::move(parts);
                res->json["verdict"] = all ? "differentiable" : "not_differentiable";
                res->verdict = all;
            }
        } else {
            delete res;
            throw Error(ErrorCode::InvalidArgument, "mode must be h or gh");
        }
        res->json["config"] = to_json(ctx->config);
        *out = res;
        return FC_OK;
    });
}

fc_status fc_scan(fc_context* ctx, const char* expr_text, const double* lo, const double* hi,
                  int n, int samples_per_axis, int modes, fc_result** out) {
    if (!expr_text || !lo || !hi || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        ScanRequest req;
        req.expr_text = expr_text;
        for (int i = 0; i < n; ++i)
            req.box.push_back({lo[i], hi[i]});
        req.samples_per_axis = samples_per_axis;
        if (modes == 0)
            modes = 1 | 2;
        req.mode_h = (modes & 1) != 0;
        req.mode_gh = (modes & 2) != 0;
        req.mode_order2 = (modes & 4) != 0;
        req.config = ctx->config;
        DiffReport rep = scan(req);
        auto* res = new fc_result();
        res->json = rep.to_json();
        res->verdict = true;
        *out = res;
        return FC_OK;
    });
}

fc_status fc_run_fixtures(fc_context* ctx, fc_result** out) {
    if (!out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        DiffReport rep = run_fixtures(ctx->config);
        auto* res = new fc_result();
        res->json = rep.to_json();
        res->verdict = rep.all_fixtures_pass();
        *out = res;
        return FC_OK;
    });
}

fc_status fc_level_curves_csv(fc_context* ctx, const fc_expr* e, double lo, double hi, int samples,
                              char** out) {
    if (!e || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status {
        return emit_string(ctx, level_curves_csv(e->expr, {lo, hi}, samples), out);
    });
}

fc_status fc_number_profile_csv(fc_context* ctx, const fc_number* n, char** out) {
    if (!n || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status { return emit_string(ctx, profile_csv(n->value), out); });
}

int fc_result_verdict(const fc_result* r) { return r && r->verdict ? 1 : 0; }

fc_status fc_result_to_json(fc_context* ctx, const fc_result* r, char** out) {
    if (!r || !out)
        return bad_arg(ctx, "null argument");
    return guarded(ctx, [&]() -> fc_status { return emit_string(ctx, r->json.dump(2), out); });
}

void fc_result_free(fc_result* r) { delete r; }

void fc_string_free(char* s) { std::free(s); }

} // extern "C"
