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

#include "skewcomm/intertwiner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewcomm/errors.hpp"

namespace skewcomm {

namespace {

void require_hermitian_pair(const OperatorPair &pair, double tol) {
    require_same_square(pair.A, pair.B);
    if (!is_hermitian(pair.A, tol)) {
        throw Error(ErrorKind::NotHermitian, "A is not self-adjoint");
    }
    if (!is_hermitian(pair.B, tol)) {
        throw Error(ErrorKind::NotHermitian, "B is not self-adjoint");
    }
}

}  // namespace

NormConditionReport norm_condition(const OperatorPair &pair, double tol) {
    require_hermitian_pair(pair, tol);
    const ComplexMatrix &a = pair.A;
    const ComplexMatrix &b = pair.B;
    const auto n = static_cast<double>(a.rows());

    // |BA|^2 = AB^2A and |AB|^2 = BA^2B for self-adjoint A, B.
    const ComplexMatrix lhs = a * b * b * a;
    const ComplexMatrix rhs = b * a * a * b;
    NormConditionReport report;
    const double product_diff = (lhs - rhs).norm();
    report.product_residual = product_diff / std::max(1.0, lhs.norm());
    report.holds = report.product_residual <= tol;

    const ComplexMatrix abs_ab = polar(a * b, tol).absC;
    const ComplexMatrix abs_ba = polar(b * a, tol).absC;
    const double abs_diff = (abs_ab - abs_ba).norm();
    report.abs_residual = abs_diff / std::max(1.0, abs_ab.norm());

    // Two-sided comparison of the routes:
    //   ||X^2 - Y^2|| <= (||X|| + ||Y||) ||X - Y||   and
    //   ||X - Y||_2   <= ||X^2 - Y^2||_2^(1/2)       for X, Y >= 0.
    // Both hold exactly; a breach means the polar factors are unreliable.
    const double slack = 1e-12 * std::max(1.0, lhs.norm());
    const double upper_from_abs =
        (spectral_norm(abs_ab) + spectral_norm(abs_ba)) * abs_diff * (1.0 + 1e-6) + slack;
    const double upper_from_product = std::sqrt(n * product_diff) * (1.0 + 1e-6) +
                                      1e-12 * std::max(1.0, abs_ab.norm()) + std::sqrt(n * slack);
    report.abs_agrees = product_diff <= upper_from_abs && abs_diff <= upper_from_product;
    return report;
}

bool check_norm_condition(const OperatorPair &pair, double tol) {
    const NormConditionReport report = norm_condition(pair, tol);
    if (!report.abs_agrees) {
        throw Error(ErrorKind::VerificationFailed,
                    "AB^2A = BA^2B and |AB| = |BA| disagree (product residual " +
                        std::to_string(report.product_residual) + ", |.| residual " +
                        std::to_string(report.abs_residual) + ")");
    }
    return report.holds;
}

GudderNagyReport gudder_nagy_check(const OperatorPair &pair, double tol) {
    require_hermitian_pair(pair, tol);
    const ComplexMatrix &a = pair.A;
    const ComplexMatrix &b = pair.B;
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix b2 = b * b;

    GudderNagyReport report;
    report.lhs_residual = relative_distance(a * b2 * a, b * a2 * b, a * b2 * a);
    report.rhs_b2_residual = relative_distance(a * b2, b2 * a, a * b2);
    report.rhs_a2_residual = relative_distance(b * a2, a2 * b, a2 * b);
    report.lhs_holds = report.lhs_residual <= tol;
    report.rhs_holds = report.rhs_b2_residual <= tol && report.rhs_a2_residual <= tol;
    report.consistent = report.lhs_holds == report.rhs_holds;
    return report;
}

UnitaryIntertwiner construct_intertwiner(const OperatorPair &pair, double tol) {
    require_hermitian_pair(pair, tol);
    if (!check_norm_condition(pair, tol)) {
        throw Error(ErrorKind::ConditionFailed, "AB^2A != BA^2B, no unitary intertwiner exists");
    }
    const ComplexMatrix ab = pair.A * pair.B;
    const ComplexMatrix ba = pair.B * pair.A;
    const auto n = static_cast<std::size_t>(ab.rows());
    const PolarParts parts = polar(ab, tol);

    UnitaryIntertwiner out;
    out.V = parts.V;
    out.P = parts.P;
    out.Q = parts.Q;
    out.U = parts.V * parts.V + parts.Q;
    out.residual_unitary = (out.U.adjoint() * out.U - identity(n)).norm();
    out.residual_intertwine = relative_distance(ab, out.U * ba, ab);

    if (out.residual_unitary > tol || out.residual_intertwine > 10.0 * tol) {
        throw Error(ErrorKind::VerificationFailed,
                    "constructed U misses tolerance (unitarity " +
                        std::to_string(out.residual_unitary) + ", intertwining " +
                        std::to_string(out.residual_intertwine) + ", rank " +
                        std::to_string(parts.rank) + ")");
    }
    return out;
}

bool verify_intertwiner(const OperatorPair &pair, const ComplexMatrix &u, double tol) {
    require_same_square(pair.A, pair.B);
    if (u.rows() != pair.A.rows() || u.cols() != pair.A.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "U does not match the pair dimension");
    }
    const auto n = static_cast<std::size_t>(u.rows());
    const bool unitary = within((u.adjoint() * u - identity(n)).norm(),
                                std::sqrt(static_cast<double>(n)), tol);
    const ComplexMatrix ab = pair.A * pair.B;
    const ComplexMatrix ba = pair.B * pair.A;
    return unitary && relative_distance(ab, u * ba, ab) <= tol;
}

}  // namespace skewcomm
