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

// Resolvents, spectral projections and Stone's formula on C^n.
//
// In finite dimension weak and norm convergence agree, so the epsilon -> 0
// limit in Stone's formula is measured directly in the Frobenius norm.

#pragma once

#include <optional>

#include "skewcomm/linalg.hpp"

namespace skewcomm {

struct Interval {
    double a = 0.0;
    double b = 1.0;
};

enum class QuadratureRule { Trapezoid, GaussLegendre };

struct StoneQuadratureSpec {
    Interval interval;
    double epsilon = 1e-3;
    /// Composite node count. Zero picks a trapezoid spacing of epsilon / 5.
    int nodes = 0;
    QuadratureRule rule = QuadratureRule::Trapezoid;
};

struct ProjectionResult {
    ComplexMatrix projection;
    double epsilon_used = 0.0;
    int nodes_used = 0;
    double quadrature_error_estimate = 0.0;
    std::optional<double> exact_error;
};

struct ResolventNormReport {
    double resolvent_norm = 0.0;  // spectral norm of (A - w)^-1
    double inverse_distance = 0.0;  // 1 / dist(w, sigma(A))
    bool holds = false;
};

struct TransportBoundReport {
    double measured = 0.0;  // max_t ||lambda^-1 [R((t+ie)/lambda) - R((t-ie)/lambda)]||_2
    double bound = 0.0;     // 2 eps / (|lambda|^2 d^2)
    double min_distance = 0.0;  // d
    bool holds = false;
};

/// (A - wI)^-1 by LU with partial pivoting. Throws SpectrumHit when w lies
/// within tol * max(1, ||A||_F) of an eigenvalue.
ComplexMatrix resolvent(const ComplexMatrix &a, Scalar w, double tol = kDefaultTol);

/// For self-adjoint A the resolvent norm equals 1 / dist(w, sigma(A)).
ResolventNormReport resolvent_norm_report(const ComplexMatrix &a, Scalar w,
                                          double tol = kDefaultTol);
bool resolvent_norm_check(const ComplexMatrix &a, Scalar w, double tol = kDefaultTol);

/// Sum of eigenprojections for eigenvalues inside (a, b).
/// Throws EndpointOnSpectrum when an endpoint is an eigenvalue.
ComplexMatrix exact_projection(const ComplexMatrix &a, Interval interval,
                               double tol = kDefaultTol);

/// Node count the default trapezoid spacing of epsilon / 5 implies.
int default_stone_nodes(Interval interval, double epsilon);

/// (1 / 2 pi i) * integral over [a, b] of R(t + i eps) - R(t - i eps).
/// Endpoints closer than 10 * eps to an eigenvalue are rejected.
ProjectionResult stone_projection(const ComplexMatrix &a, const StoneQuadratureSpec &spec,
                                  double tol = kDefaultTol);

/// Bound on the transported integrand for positive A when lambda = -1 or
/// Im lambda != 0. Throws InvalidParameter for other lambda or a non-positive
/// interval, NotHermitian for non-self-adjoint A.
TransportBoundReport transported_integrand_bound(const ComplexMatrix &a, Scalar lambda,
                                                 Interval interval, double epsilon,
                                                 int nodes = 256, double tol = kDefaultTol);

}  // namespace skewcomm
