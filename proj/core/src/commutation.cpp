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

#include "skewcomm/commutation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "skewcomm/assignment.hpp"
#include "skewcomm/errors.hpp"
#include "skewcomm/random.hpp"

namespace skewcomm {

std::string to_string(FactorStatus status) {
    switch (status) {
        case FactorStatus::Unique:
            return "UNIQUE";
        case FactorStatus::Any:
            return "ANY";
        case FactorStatus::None:
            return "NONE";
    }
    return "NONE";
}

FactorReport detect_factor(const OperatorPair &pair, double tol) {
    require_same_square(pair.A, pair.B);
    const ComplexMatrix ab = pair.A * pair.B;
    const ComplexMatrix ba = pair.B * pair.A;

    FactorReport report;
    report.ab_norm = ab.norm();
    report.ba_norm = ba.norm();
    const bool ab_zero = report.ab_norm <= tol;
    const bool ba_zero = report.ba_norm <= tol;

    if (ab_zero && ba_zero) {
        report.status = FactorStatus::Any;
        report.residual = 0.0;
        return report;
    }
    if (ba_zero) {
        // AB != 0 = BA: no lambda can work.
        report.status = FactorStatus::None;
        report.residual = report.ab_norm / std::max(1.0, report.ab_norm);
        return report;
    }
    if (ab_zero) {
        // The fit would be lambda = 0, which is excluded.
        report.status = FactorStatus::None;
        report.lambda_hat = Scalar(0.0);
        report.residual = report.ab_norm / std::max(1.0, report.ab_norm);
        return report;
    }

    const Scalar lambda = frobenius_inner(ba, ab) / (report.ba_norm * report.ba_norm);
    report.lambda_hat = lambda;
    report.residual = (ab - lambda * ba).norm() / std::max(1.0, report.ab_norm);
    report.status = report.residual <= 10.0 * tol ? FactorStatus::Unique : FactorStatus::None;
    return report;
}

SpectrumMatchReport match_spectra(const std::vector<Scalar> &a, const std::vector<Scalar> &b,
                                  double tol) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "spectra have different sizes");
    }
    CostMatrix costs;
    costs.n = a.size();
    costs.cost.resize(costs.n * costs.n);
    for (std::size_t i = 0; i < costs.n; ++i) {
        for (std::size_t j = 0; j < costs.n; ++j) {
            costs.cost[i * costs.n + j] = std::abs(a[i] - b[j]);
        }
    }
    const std::vector<std::size_t> cols = solve_assignment(costs);

    SpectrumMatchReport report;
    report.assignment.reserve(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        report.assignment.emplace_back(i, cols[i]);
        report.max_pair_distance = std::max(report.max_pair_distance, costs.at(i, cols[i]));
    }
    report.matched = report.max_pair_distance <= tol;
    return report;
}

SpectrumMatchReport spectrum_rotation_check(const SpectrumSet &s, Scalar lambda, double tol) {
    if (lambda == Scalar(0.0)) {
        throw Error(ErrorKind::InvalidParameter, "rotation factor must be nonzero");
    }
    std::vector<Scalar> rotated(s.values.size());
    std::transform(s.values.begin(), s.values.end(), rotated.begin(),
                   [&](const Scalar &v) { return lambda * v; });
    return match_spectra(s.values, rotated, tol);
}

SpectrumMatchReport spectrum_swap_check(const OperatorPair &pair, double tol) {
    require_same_square(pair.A, pair.B);
    const SpectrumSet ab = eigenvalues(pair.A * pair.B);
    const SpectrumSet ba = eigenvalues(pair.B * pair.A);
    return match_spectra(ab.values, ba.values, tol);
}

namespace {

LambdaConstraint make_constraint(ConstraintKind kind, std::string source, int order = 0) {
    LambdaConstraint c;
    c.kind = kind;
    c.order = order;
    c.source = std::move(source);
    switch (kind) {
        case ConstraintKind::Real:
            c.text = "lambda in R";
            break;
        case ConstraintKind::Sign:
            c.text = "lambda in {1,-1}";
            break;
        case ConstraintKind::One:
            c.text = "lambda = 1";
            break;
        case ConstraintKind::UnitModulus:
            c.text = "|lambda| = 1";
            break;
        case ConstraintKind::RootOfUnity:
            c.text = "lambda^" + std::to_string(order) + " = 1";
            break;
        case ConstraintKind::QuasiNilpotentProduct:
            c.text = "sigma(AB) = {0}";
            break;
    }
    return c;
}

std::string format_magnitude(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
}

// Distance of lambda from the set a constraint allows. Quasi-nilpotency is
// not a condition on lambda and is handled by the caller.
double constraint_gap(const LambdaConstraint &c, Scalar lambda) {
    switch (c.kind) {
        case ConstraintKind::Real:
            return std::abs(lambda.imag());
        case ConstraintKind::Sign:
            return std::min(std::abs(lambda - 1.0), std::abs(lambda + 1.0));
        case ConstraintKind::One:
            return std::abs(lambda - 1.0);
        case ConstraintKind::UnitModulus:
            return std::abs(std::abs(lambda) - 1.0);
        case ConstraintKind::RootOfUnity:
            return std::abs(std::pow(lambda, c.order) - 1.0);
        case ConstraintKind::QuasiNilpotentProduct:
            return 0.0;
    }
    return 0.0;
}

bool spectrum_is_zero(const SpectrumSet &s, double scale, double tol) {
    return std::all_of(s.values.begin(), s.values.end(),
                       [&](const Scalar &v) { return within(std::abs(v), scale, tol); });
}

}  // namespace

TraceDetReport trace_det_constraints(const OperatorPair &pair, int kmax, double tol) {
    require_same_square(pair.A, pair.B);
    const auto n = static_cast<std::size_t>(pair.A.rows());
    const double norm_a = pair.A.norm();
    const double norm_b = pair.B.norm();

    TraceDetReport report;
    ComplexMatrix b_pow = pair.B;
    ComplexMatrix a_pow = pair.A;
    double b_scale = norm_b;
    double a_scale = norm_a;
    std::optional<int> first_ab;
    std::optional<int> first_ab_rev;
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1) {
            b_pow = b_pow * pair.B;
            a_pow = a_pow * pair.A;
            b_scale *= norm_b;
            a_scale *= norm_a;
        }
        TraceEntry entry;
        entry.k = k;
        entry.tr_ab_k = (pair.A * b_pow).trace();
        entry.tr_a_k_b = (a_pow * pair.B).trace();
        if (!first_ab && !within(std::abs(entry.tr_ab_k), norm_a * b_scale, tol)) {
            first_ab = k;
        }
        if (!first_ab_rev && !within(std::abs(entry.tr_a_k_b), a_scale * norm_b, tol)) {
            first_ab_rev = k;
        }
        report.traces.push_back(entry);
    }
    if (first_ab) {
        report.constraints.push_back(make_constraint(
            ConstraintKind::One, "tr[AB^k] != 0 at k=" + std::to_string(*first_ab)));
    }
    if (first_ab_rev) {
        report.constraints.push_back(make_constraint(
            ConstraintKind::One, "tr[A^kB] != 0 at k=" + std::to_string(*first_ab_rev)));
    }

    const ComplexMatrix ab = pair.A * pair.B;
    report.det_ab = ab.determinant();
    const Svd parts = svd(ab);
    report.ab_invertible =
        parts.singulars.front() > 0.0 && parts.singulars.back() > tol * parts.singulars.front();
    if (report.ab_invertible) {
        report.constraints.push_back(make_constraint(ConstraintKind::RootOfUnity, "det(AB) != 0",
                                                     static_cast<int>(n)));
    }
    return report;
}

ClassificationReport classify_pair(const OperatorPair &pair, double tol) {
    require_same_square(pair.A, pair.B);
    const auto n = static_cast<int>(pair.A.rows());

    ClassificationReport report;
    report.flags_A = classify_structure(pair.A, tol);
    report.flags_B = classify_structure(pair.B, tol);
    report.factor = detect_factor(pair, tol);

    const ComplexMatrix ab = pair.A * pair.B;
    const double ab_scale = ab.norm();
    const SpectrumSet sigma_ab = eigenvalues(ab);
    report.ab_quasi_nilpotent = spectrum_is_zero(sigma_ab, ab_scale, tol);

    if (report.factor.status != FactorStatus::Unique) {
        // No relation with AB != 0 to test.
        return report;
    }
    const Scalar lambda = *report.factor.lambda_hat;
    const double lambda_tol = 10.0 * tol * std::max(1.0, std::abs(lambda));
    const double spectral_tol = tol * std::max(1.0, ab_scale);

    auto add = [&](LambdaConstraint c) {
        const double gap = constraint_gap(c, lambda);
        const double allowed =
            c.kind == ConstraintKind::RootOfUnity ? lambda_tol * c.order : lambda_tol;
        if (gap > allowed) {
            report.violations.push_back(c.text + " (" + c.source + "): off by " +
                                        format_magnitude(gap));
        }
        report.constraints.push_back(std::move(c));
    };

    const StructureFlags &fa = report.flags_A;
    const StructureFlags &fb = report.flags_B;

    // Self-adjointness and positivity.
    if (fa.hermitian || fb.hermitian) {
        add(make_constraint(ConstraintKind::Real, "A or B self-adjoint"));
    }
    if (fa.hermitian && fb.hermitian) {
        add(make_constraint(ConstraintKind::Sign, "A and B self-adjoint"));
        if (fa.positive_semidefinite || fb.positive_semidefinite) {
            add(make_constraint(ConstraintKind::One, "A and B self-adjoint, one of them positive"));
        }
    }

    // Spectrum of the products.
    report.swap_match = spectrum_swap_check(pair, spectral_tol);
    if (!report.swap_match->matched) {
        report.violations.push_back("sigma(AB) = sigma(BA): off by " +
                                    format_magnitude(report.swap_match->max_pair_distance));
    }
    report.rotation_match = spectrum_rotation_check(sigma_ab, lambda, spectral_tol);
    if (!report.rotation_match->matched) {
        report.violations.push_back("sigma(AB) = lambda sigma(AB): off by " +
                                    format_magnitude(report.rotation_match->max_pair_distance));
    }
    if (!report.ab_quasi_nilpotent) {
        add(make_constraint(ConstraintKind::UnitModulus, "sigma(AB) != {0}"));
    }
    if (std::abs(std::abs(lambda) - 1.0) > lambda_tol) {
        LambdaConstraint c =
            make_constraint(ConstraintKind::QuasiNilpotentProduct, "|lambda| != 1 with AB != 0");
        if (!report.ab_quasi_nilpotent) {
            double radius = 0.0;
            for (const Scalar &v : sigma_ab.values) {
                radius = std::max(radius, std::abs(v));
            }
            report.violations.push_back(c.text + " (" + c.source + "): spectral radius " +
                                        format_magnitude(radius));
        }
        report.constraints.push_back(std::move(c));
    }

    // Invertible factor: the other one has a lambda-invariant spectrum.
    auto invertible_factor = [&](const StructureFlags &inv_flags, const ComplexMatrix &other,
                                 const StructureFlags &other_flags, const char *inv_name,
                                 const char *other_name) {
        if (!inv_flags.invertible) {
            return;
        }
        const SpectrumSet sigma_other = eigenvalues(other);
        const SpectrumMatchReport rot =
            spectrum_rotation_check(sigma_other, lambda, tol * std::max(1.0, other.norm()));
        if (!rot.matched) {
            report.violations.push_back(std::string("sigma(") + other_name + ") = lambda sigma(" +
                                        other_name + ") (" + inv_name + " invertible): off by " +
                                        format_magnitude(rot.max_pair_distance));
        }
        if (!other_flags.quasi_nilpotent) {
            add(make_constraint(ConstraintKind::UnitModulus,
                                std::string(inv_name) + " invertible, sigma(" + other_name +
                                    ") != {0}"));
        } else if (inv_flags.unitary) {
            add(make_constraint(ConstraintKind::UnitModulus, std::string(inv_name) + " unitary"));
        }
    };
    invertible_factor(fa, pair.B, fb, "A", "B");
    invertible_factor(fb, pair.A, fa, "B", "A");

    // Finite-dimensional trace and determinant conditions.
    for (LambdaConstraint &c : trace_det_constraints(pair, n, tol).constraints) {
        add(std::move(c));
    }

    report.consistent = report.violations.empty();
    return report;
}

std::vector<ComplexMatrix> solve_lambda_commutant(const ComplexMatrix &a, Scalar lambda,
                                                  double tol) {
    require_square(a, "solve_lambda_commutant");
    if (lambda == Scalar(0.0)) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be nonzero");
    }
    if (!is_normal(a, tol)) {
        throw Error(ErrorKind::NotNormal,
                    "A is not normal; the commutant needs a unitary eigenbasis");
    }
    // For normal A the Schur form is diagonal and its basis is orthonormal,
    // also across repeated eigenvalues.
    Eigen::ComplexSchur<ComplexMatrix> schur(a, /*computeU=*/true);
    if (schur.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "Schur decomposition did not converge");
    }
    const ComplexMatrix &u = schur.matrixU();
    const ComplexMatrix &t = schur.matrixT();
    const Eigen::Index n = a.rows();
    const double threshold = tol * std::max(1.0, a.norm());

    std::vector<ComplexMatrix> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(t(i, i) - lambda * t(j, j)) <= threshold) {
                // u e_i e_j^* u^*
                basis.push_back(u.col(i) * u.col(j).adjoint());
            }
        }
    }
    return basis;
}

bool measurement_map_check(const OperatorPair &pair, int trials, std::uint64_t seed, double tol) {
    require_same_square(pair.A, pair.B);
    const auto n = static_cast<std::size_t>(pair.A.rows());
    const ComplexMatrix ab = pair.A * pair.B;
    const ComplexMatrix ba = pair.B * pair.A;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const ComplexMatrix x = ginibre(n, n, rng);
        const ComplexMatrix lhs = ab * x * ba;
        const ComplexMatrix rhs = ba * x * ab;
        if (!within((lhs - rhs).norm(), lhs.norm(), tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace skewcomm
