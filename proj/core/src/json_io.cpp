// Copyright 2026 The skewcomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewcomm/json_io.hpp"

#include <cmath>

#include "skewcomm/errors.hpp"

namespace skewcomm {

namespace {

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorKind::MalformedInput, what);
}

const Json &member(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        malformed(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

Json lambda_json(const std::optional<Scalar> &lambda) {
    return lambda ? scalar_to_json(*lambda) : Json(nullptr);
}

}  // namespace

Json scalar_to_json(Scalar s) { return Json::array({s.real(), s.imag()}); }

Scalar scalar_from_json(const Json &j) {
    if (j.is_number()) {
        return Scalar(j.get<double>(), 0.0);
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        malformed("scalar must be [re, im]");
    }
    const Scalar s(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        malformed("scalar is not finite");
    }
    return s;
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            data.push_back(scalar_to_json(m(i, k)));
        }
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json &j) {
    const Json &rows = member(j, "rows");
    const Json &cols = member(j, "cols");
    const Json &data = member(j, "data");
    if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long long>() <= 0 ||
        cols.get<long long>() <= 0) {
        malformed("rows and cols must be positive integers");
    }
    const auto r = rows.get<long long>();
    const auto c = cols.get<long long>();
    if (!data.is_array() || static_cast<long long>(data.size()) != r * c) {
        malformed("data must hold rows*cols entries");
    }
    ComplexMatrix m(r, c);
    for (long long i = 0; i < r; ++i) {
        for (long long k = 0; k < c; ++k) {
            m(i, k) = scalar_from_json(data[static_cast<std::size_t>(i * c + k)]);
        }
    }
    return m;
}

Json pair_to_json(const OperatorPair &pair) {
    return Json{{"A", matrix_to_json(pair.A)},
                {"B", matrix_to_json(pair.B)},
                {"declared_lambda", lambda_json(pair.declared_lambda)},
                {"label", pair.label}};
}

OperatorPair pair_from_json(const Json &j) {
    OperatorPair pair;
    pair.A = matrix_from_json(member(j, "A"));
    pair.B = matrix_from_json(member(j, "B"));
    if (j.contains("declared_lambda") && !j.at("declared_lambda").is_null()) {
        pair.declared_lambda = scalar_from_json(j.at("declared_lambda"));
    }
    if (j.contains("label")) {
        if (!j.at("label").is_string()) {
            malformed("label must be a string");
        }
        pair.label = j.at("label").get<std::string>();
    }
    if (pair.A.rows() != pair.A.cols() || pair.B.rows() != pair.B.cols() ||
        pair.A.rows() != pair.B.rows()) {
        malformed("A and B must be square with equal dimension");
    }
    return pair;
}

Json to_json(const StructureFlags &flags) {
    return Json{{"hermitian", flags.hermitian},
                {"positive_semidefinite", flags.positive_semidefinite},
                {"positive_definite", flags.positive_definite},
                {"unitary", flags.unitary},
                {"invertible", flags.invertible},
                {"quasi_nilpotent", flags.quasi_nilpotent},
                {"tolerance_used", flags.tolerance_used}};
}

Json to_json(const FactorReport &report) {
    Json lambda = report.status == FactorStatus::Any ? Json("any") : lambda_json(report.lambda_hat);
    return Json{{"status", to_string(report.status)},
                {"lambda_hat", std::move(lambda)},
                {"residual", report.residual},
                {"ab_norm", report.ab_norm},
                {"ba_norm", report.ba_norm}};
}

Json to_json(const SpectrumMatchReport &report) {
    Json assignment = Json::array();
    for (const auto &[i, k] : report.assignment) {
        assignment.push_back(Json::array({i, k}));
    }
    return Json{{"matched", report.matched},
                {"max_pair_distance", report.max_pair_distance},
                {"assignment", std::move(assignment)}};
}

Json to_json(const LambdaConstraint &constraint) {
    return Json{{"constraint", constraint.text}, {"source", constraint.source}};
}

Json to_json(const ClassificationReport &report) {
    Json j = to_json(report.factor);
    switch (report.factor.status) {
        case FactorStatus::Unique:
            j["summary"] = "AB = lambda BA with a unique factor";
            break;
        case FactorStatus::Any:
            j["summary"] = "AB = BA = 0: every nonzero lambda works";
            break;
        case FactorStatus::None:
            j["summary"] = "no factor: the pair does not commute up to a scalar";
            break;
    }
    j["flags_A"] = to_json(report.flags_A);
    j["flags_B"] = to_json(report.flags_B);
    j["ab_quasi_nilpotent"] = report.ab_quasi_nilpotent;
    j["swap_match"] = report.swap_match ? to_json(*report.swap_match) : Json(nullptr);
    j["rotation_match"] = report.rotation_match ? to_json(*report.rotation_match) : Json(nullptr);
    Json constraints = Json::array();
    for (const LambdaConstraint &c : report.constraints) {
        constraints.push_back(to_json(c));
    }
    j["constraints"] = std::move(constraints);
    j["consistent"] = report.consistent;
    j["violations"] = report.violations;
    return j;
}

Json to_json(const UnitaryIntertwiner &intertwiner) {
    return Json{{"U", matrix_to_json(intertwiner.U)},
                {"V", matrix_to_json(intertwiner.V)},
                {"P", matrix_to_json(intertwiner.P)},
                {"Q", matrix_to_json(intertwiner.Q)},
                {"residual_intertwine", intertwiner.residual_intertwine},
                {"residual_unitary", intertwiner.residual_unitary}};
}

Json to_json(const GudderNagyReport &report) {
    return Json{{"lhs_holds", report.lhs_holds},
                {"rhs_holds", report.rhs_holds},
                {"consistent", report.consistent},
                {"lhs_residual", report.lhs_residual},
                {"rhs_b2_residual", report.rhs_b2_residual},
                {"rhs_a2_residual", report.rhs_a2_residual}};
}

Json to_json(const ProjectionResult &result) {
    return Json{{"projection", matrix_to_json(result.projection)},
                {"epsilon_used", result.epsilon_used},
                {"nodes_used", result.nodes_used},
                {"quadrature_error_estimate", result.quadrature_error_estimate},
                {"exact_error", result.exact_error ? Json(*result.exact_error) : Json(nullptr)}};
}

Json to_json(const RelationResiduals &residuals) {
    return Json{{"kk_inv", residuals.kk_inv},
                {"ke_rel", residuals.ke_rel},
                {"kf_rel", residuals.kf_rel},
                {"ef_rel", residuals.ef_rel},
                {"factor_KE", to_json(residuals.factor_ke)},
                {"factor_KF", to_json(residuals.factor_kf)}};
}

Json to_json(const RealizationSpec &spec) {
    const RealizationParams &p = spec.params;
    Json params = Json::object();
    if (p.n) {
        params["n"] = *p.n;
    }
    if (p.lambda) {
        params["lambda"] = scalar_to_json(*p.lambda);
    }
    switch (spec.kind) {
        case RealizationKind::Jordan2:
        case RealizationKind::Jordan3:
            params["x"] = scalar_to_json(p.x);
            params["y"] = scalar_to_json(p.y);
            params["z"] = scalar_to_json(p.z);
            break;
        case RealizationKind::NilpotentDiag: {
            Json betas = Json::array();
            for (const Scalar &b : p.betas) {
                betas.push_back(scalar_to_json(b));
            }
            params["betas"] = std::move(betas);
            params["pivot"] = p.pivot.value_or(1);
            params["solve_pivot"] = p.solve_pivot;
            break;
        }
        case RealizationKind::UqSl2:
            if (p.q) {
                params["q"] = scalar_to_json(*p.q);
            }
            params["eps"] = p.eps;
            params["generator"] = p.generator == UqGenerator::E ? "E" : "F";
            params["normalization"] =
                p.normalization == UqNormalization::Bracket ? "bracket" : "unit-lower";
            break;
        default:
            break;
    }
    return Json{{"kind", to_string(spec.kind)}, {"params", std::move(params)}};
}

RealizationSpec realization_spec_from_json(const Json &j) {
    const Json &kind = member(j, "kind");
    if (!kind.is_string()) {
        malformed("kind must be a string");
    }
    const auto parsed = parse_realization_kind(kind.get<std::string>());
    if (!parsed) {
        malformed("unknown realization kind \"" + kind.get<std::string>() + "\"");
    }
    RealizationSpec spec;
    spec.kind = *parsed;
    if (!j.contains("params")) {
        return spec;
    }
    const Json &params = j.at("params");
    if (!params.is_object()) {
        malformed("params must be an object");
    }
    RealizationParams &p = spec.params;
    try {
        if (params.contains("n")) p.n = params.at("n").get<int>();
        if (params.contains("lambda")) p.lambda = scalar_from_json(params.at("lambda"));
        if (params.contains("x")) p.x = scalar_from_json(params.at("x"));
        if (params.contains("y")) p.y = scalar_from_json(params.at("y"));
        if (params.contains("z")) p.z = scalar_from_json(params.at("z"));
        if (params.contains("q")) p.q = scalar_from_json(params.at("q"));
        if (params.contains("eps")) p.eps = params.at("eps").get<int>();
        if (params.contains("pivot")) p.pivot = params.at("pivot").get<int>();
        if (params.contains("solve_pivot")) p.solve_pivot = params.at("solve_pivot").get<bool>();
        if (params.contains("betas")) {
            for (const Json &b : params.at("betas")) {
                p.betas.push_back(scalar_from_json(b));
            }
        }
        if (params.contains("generator")) {
            const auto g = params.at("generator").get<std::string>();
            if (g != "E" && g != "F") {
                malformed("generator must be \"E\" or \"F\"");
            }
            p.generator = g == "F" ? UqGenerator::F : UqGenerator::E;
        }
        if (params.contains("normalization")) {
            const auto norm = params.at("normalization").get<std::string>();
            if (norm != "bracket" && norm != "unit-lower") {
                malformed("normalization must be \"bracket\" or \"unit-lower\"");
            }
            p.normalization =
                norm == "unit-lower" ? UqNormalization::UnitLower : UqNormalization::Bracket;
        }
    } catch (const nlohmann::json::exception &e) {
        malformed(std::string("bad realization params: ") + e.what());
    }
    return spec;
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace skewcomm
