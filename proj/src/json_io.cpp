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

#include "fuzzcalc/json_io.hpp"

#include <cmath>

#include "fuzzcalc/error.hpp"

namespace fuzzcalc {

namespace {

const char* shape_name(Shape s) {
    switch (s) {
    case Shape::Triangular: return "triangular";
    case Shape::Trapezoidal: return "trapezoidal";
    case Shape::Crisp: return "crisp";
    case Shape::General: return "general";
    }
    return "?";
}

Json cuts_to_json(const std::vector<Interval>& cuts) {
    Json arr = Json::array();
    for (const Interval& c : cuts)
        arr.push_back(Json::array({c.lower, c.upper}));
    return arr;
}

// NaN is not representable in JSON; the trace uses null instead.
Json finite_or_null(double v) {
    if (std::isnan(v))
        return nullptr;
    return v;
}

} // namespace

Json to_json(const FuzzyNumber& f) {
    Json j;
    j["shape"] = shape_name(f.shape().shape);
    if (f.shape().shape != Shape::General)
        j["params"] = f.shape().params;
    j["grid"] = f.grid().levels();
    j["cuts"] = cuts_to_json(f.cuts());
    return j;
}

FuzzyNumber fuzzy_number_from_json(const Json& j) {
    const std::string shape = j.at("shape").get<std::string>();
    AlphaGrid grid = j.contains("grid") ? AlphaGrid(j.at("grid").get<std::vector<double>>())
                                        : AlphaGrid::uniform();
    if (j.contains("cuts")) {
        std::vector<Interval> cuts;
        for (const auto& c : j.at("cuts"))
            cuts.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
        return FuzzyNumber::from_cuts(grid, std::move(cuts));
    }
    const auto params = j.at("params").get<std::vector<double>>();
    if (shape == "triangular")
        return FuzzyNumber::triangular(params.at(0), params.at(1), params.at(2), grid);
    if (shape == "trapezoidal")
        return FuzzyNumber::trapezoidal(params.at(0), params.at(1), params.at(2), params.at(3),
                                        grid);
    if (shape == "crisp")
        return FuzzyNumber::crisp(params.at(0), grid);
    throw Error(ErrorCode::InvalidArgument, "general profiles need explicit cuts");
}

Json to_json(const ExistenceCertificate& c) {
    Json j;
    j["operator"] = c.op == DiffOp::HDiff ? "h_diff" : "gh_diff";
    j["verdict"] = c.exists ? "exists" : "not_exists";
    if (c.witness)
        j["witness"] = to_json(*c.witness);
    if (c.op == DiffOp::GHDiff && c.exists)
        j["case"] = c.gh_case;
    if (!c.violations.empty()) {
        Json arr = Json::array();
        for (const Violation& v : c.violations) {
            Json vj;
            vj["alpha"] = v.alpha;
            vj["condition"] = to_string(v.condition);
            vj["magnitude"] = v.magnitude;
            arr.push_back(std::move(vj));
        }
        j["violations"] = std::move(arr);
    }
    j["candidate"] = cuts_to_json(c.candidate);
    if (!c.candidate_alt.empty())
        j["candidate_alt"] = cuts_to_json(c.candidate_alt);
    j["grid"] = c.grid.levels();
    return j;
}

Json to_json(const DerivativeResult& r) {
    Json j;
    j["mode"] = r.mode == DiffMode::H ? "h" : "gh";
    j["verdict"] = r.differentiable ? "differentiable" : "not_differentiable";
    if (r.value)
        j["value"] = to_json(*r.value);
    if (r.reason)
        j["reason"] = to_string(*r.reason);
    j["order"] = r.order;
    if (r.failing_order > 0)
        j["failing_order"] = r.failing_order;
    j["side"] = r.side == Side::Both          ? "both"
                : r.side == Side::ForwardOnly ? "forward_only"
                                              : "backward_only";
    if (r.one_sided)
        j["one_sided"] = true;
    j["used_symbolic"] = r.used_symbolic;
    j["used_numeric"] = r.used_numeric;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    Json steps = Json::array();
    for (const StepRecord& s : r.trace) {
        Json sj;
        sj["h"] = s.h;
        sj["forward_exists"] = s.forward_exists;
        sj["backward_exists"] = s.backward_exists;
        sj["delta_forward"] = finite_or_null(s.delta_forward);
        sj["delta_backward"] = finite_or_null(s.delta_backward);
        sj["delta_forward_extrap"] = finite_or_null(s.delta_forward_extrap);
        sj["delta_backward_extrap"] = finite_or_null(s.delta_backward_extrap);
        sj["delta_pair"] = finite_or_null(s.delta_pair);
        steps.push_back(std::move(sj));
    }
    j["trace"] = std::move(steps);
    return j;
}

Json to_json(const SecondPartial& s) {
    Json j;
    j["verdict"] = s.exists ? "exists" : "not_exists";
    if (s.value)
        j["value"] = to_json(*s.value);
    if (s.blocking_term >= 0)
        j["blocking_term"] = s.blocking_term + 1;
    if (!s.detail.empty())
        j["detail"] = s.detail;
    return j;
}

Json to_json(const Config& c) {
    Json j;
    j["grid_size"] = c.grid_size;
    j["h0"] = c.limit.h0;
    j["shrink"] = c.limit.shrink;
    j["max_iters"] = c.limit.max_iters;
    j["tol"] = c.limit.tol;
    return j;
}

} // namespace fuzzcalc
