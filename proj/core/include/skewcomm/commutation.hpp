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

// Detection and classification of relations AB = lambda * BA.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewcomm/linalg.hpp"

namespace skewcomm {

struct OperatorPair {
    ComplexMatrix A;
    ComplexMatrix B;
    std::optional<Scalar> declared_lambda;
    std::string label;
};

enum class FactorStatus {
    Unique,  // a single lambda fits
    Any,     // AB = BA = 0, every nonzero lambda works
    None,    // no lambda fits
};

std::string to_string(FactorStatus status);

struct FactorReport {
    FactorStatus status = FactorStatus::None;
    std::optional<Scalar> lambda_hat;
    double residual = 0.0;  // ||AB - lambda_hat BA||_F / max(1, ||AB||_F)
    double ab_norm = 0.0;
    double ba_norm = 0.0;
};

struct SpectrumMatchReport {
    bool matched = false;
    double max_pair_distance = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> assignment;
};

/// What a constraint asserts about lambda.
enum class ConstraintKind {
    Real,                 // lambda in R
    Sign,                 // lambda in {1, -1}
    One,                  // lambda = 1
    UnitModulus,          // |lambda| = 1
    RootOfUnity,          // lambda^order = 1
    QuasiNilpotentProduct // sigma(AB) = {0}
};

struct LambdaConstraint {
    ConstraintKind kind = ConstraintKind::Real;
    int order = 0;       // only for RootOfUnity
    std::string text;    // e.g. "lambda in {1,-1}"
    std::string source;  // which result implies it
};

struct ClassificationReport {
    StructureFlags flags_A;
    StructureFlags flags_B;
    FactorReport factor;
    std::vector<LambdaConstraint> constraints;
    bool ab_quasi_nilpotent = false;
    std::optional<SpectrumMatchReport> swap_match;
    std::optional<SpectrumMatchReport> rotation_match;
    bool consistent = true;
    std::vector<std::string> violations;
};

struct TraceEntry {
    int k = 0;
    Scalar tr_ab_k;  // tr[A B^k]
    Scalar tr_a_k_b; // tr[A^k B]
};

struct TraceDetReport {
    std::vector<TraceEntry> traces;
    Scalar det_ab;
    bool ab_invertible = false;
    std::vector<LambdaConstraint> constraints;
};

/// Least-squares fit of lambda in AB = lambda BA. UNIQUE needs the relative
/// residual to stay within 10 * tol.
FactorReport detect_factor(const OperatorPair &pair, double tol = kDefaultTol);

/// Optimal matching between the multisets a and b under |a_i - b_j|.
SpectrumMatchReport match_spectra(const std::vector<Scalar> &a, const std::vector<Scalar> &b,
                                  double tol);

/// Is S invariant (as a multiset) under multiplication by lambda?
SpectrumMatchReport spectrum_rotation_check(const SpectrumSet &s, Scalar lambda, double tol);

/// Do sigma(AB) and sigma(BA) coincide as multisets?
SpectrumMatchReport spectrum_swap_check(const OperatorPair &pair, double tol);

/// Traces tr[AB^k], tr[A^kB] for k = 1..kmax and det(AB), together with the
/// factor constraints they force when AB = lambda BA holds with AB != 0.
TraceDetReport trace_det_constraints(const OperatorPair &pair, int kmax, double tol = kDefaultTol);

ClassificationReport classify_pair(const OperatorPair &pair, double tol = kDefaultTol);

/// Basis of { B : AB = lambda BA } for normal A. Throws NotNormal.
std::vector<ComplexMatrix> solve_lambda_commutant(const ComplexMatrix &a, Scalar lambda,
                                                  double tol = kDefaultTol);

/// Checks ABXBA = BAXAB for `trials` seeded Ginibre X.
bool measurement_map_check(const OperatorPair &pair, int trials, std::uint64_t seed,
                           double tol = kDefaultTol);

}  // namespace skewcomm
