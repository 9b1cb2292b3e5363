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

// JSON encodings.
//
// Matrix: {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
// Scalar: [re, im].
// Pair:   {"A": matrix, "B": matrix, "declared_lambda": [re, im] | null, "label": text}.
//
// Doubles are written in shortest round-trip form, so decode(encode(M)) == M
// bit for bit.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "skewcomm/commutation.hpp"
#include "skewcomm/intertwiner.hpp"
#include "skewcomm/linalg.hpp"
#include "skewcomm/realizations.hpp"
#include "skewcomm/resolvent.hpp"

namespace skewcomm {

using Json = nlohmann::json;

Json scalar_to_json(Scalar s);
/// Throws MalformedInput.
Scalar scalar_from_json(const Json &j);

Json matrix_to_json(const ComplexMatrix &m);
/// Validates shape and finiteness. Throws MalformedInput.
ComplexMatrix matrix_from_json(const Json &j);

Json pair_to_json(const OperatorPair &pair);
OperatorPair pair_from_json(const Json &j);

Json to_json(const StructureFlags &flags);
Json to_json(const FactorReport &report);
Json to_json(const SpectrumMatchReport &report);
Json to_json(const LambdaConstraint &constraint);
Json to_json(const ClassificationReport &report);
Json to_json(const UnitaryIntertwiner &intertwiner);
Json to_json(const GudderNagyReport &report);
Json to_json(const ProjectionResult &result);
Json to_json(const RelationResiduals &residuals);

Json to_json(const RealizationSpec &spec);
RealizationSpec realization_spec_from_json(const Json &j);

/// Parses text; wraps parser errors as MalformedInput.
Json parse_json(const std::string &text);

}  // namespace skewcomm
