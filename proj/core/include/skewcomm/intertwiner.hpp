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

// Unitary intertwiners AB = UBA for self-adjoint pairs.

#pragma once

#include "skewcomm/commutation.hpp"
#include "skewcomm/linalg.hpp"

namespace skewcomm {

struct NormConditionReport {
    bool holds = false;             // ||AB^2A - BA^2B|| small
    double product_residual = 0.0;  // relative
    double abs_residual = 0.0;      // ||(|AB| - |BA|)|| relative
    bool abs_agrees = true;         // the |AB| = |BA| route gives the same verdict
};

struct GudderNagyReport {
    bool lhs_holds = false;  // AB^2A = BA^2B
    bool rhs_holds = false;  // AB^2 = B^2A and BA^2 = A^2B
    bool consistent = false;
    double lhs_residual = 0.0;
    double rhs_b2_residual = 0.0;
    double rhs_a2_residual = 0.0;
};

struct UnitaryIntertwiner {
    ComplexMatrix U;
    ComplexMatrix V;
    ComplexMatrix P;
    ComplexMatrix Q;
    double residual_intertwine = 0.0;  // ||AB - UBA||_F / max(1, ||AB||_F)
    double residual_unitary = 0.0;     // ||U^*U - I||_F
};

/// Evaluates AB^2A = BA^2B directly and through |AB| = |BA|.
/// Throws NotHermitian unless both A and B are self-adjoint.
NormConditionReport norm_condition(const OperatorPair &pair, double tol = kDefaultTol);

/// Same check as a boolean. Throws VerificationFailed when the two routes
/// disagree.
bool check_norm_condition(const OperatorPair &pair, double tol = kDefaultTol);

GudderNagyReport gudder_nagy_check(const OperatorPair &pair, double tol = kDefaultTol);

/// U = V^2 + Q from the polar decomposition AB = V|AB|, where Q projects
/// onto ker AB. V^2 vanishes on that kernel, so U acts as the identity there.
///
/// Throws NotHermitian, ConditionFailed when AB^2A != BA^2B, and
/// VerificationFailed when the constructed U misses the tolerance.
UnitaryIntertwiner construct_intertwiner(const OperatorPair &pair, double tol = kDefaultTol);

/// Any unitary U with AB = UBA is accepted, not only the canonical one.
bool verify_intertwiner(const OperatorPair &pair, const ComplexMatrix &u, double tol = kDefaultTol);

}  // namespace skewcomm
