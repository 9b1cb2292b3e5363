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

#include <algorithm>
#include <cmath>

#include "skewcomm/commutation.hpp"
#include "skewcomm/errors.hpp"
#include "skewcomm/random.hpp"
#include "skewcomm/realizations.hpp"
#include "test_util.hpp"

namespace skewcomm {
namespace {

using testing::kI;
using testing::mat;

bool has_constraint(const std::vector<LambdaConstraint> &cs, ConstraintKind kind, int order = 0) {
    return std::any_of(cs.begin(), cs.end(), [&](const LambdaConstraint &c) {
        return c.kind == kind && (order == 0 || c.order == order);
    });
}

TEST(DetectFactor, PauliAnticommute) {
    const FactorReport r = detect_factor({sigma_x(), sigma_y(), std::nullopt, ""});
    EXPECT_EQ(r.status, FactorStatus::Unique);
    EXPECT_LT(std::abs(*r.lambda_hat + 1.0), 1e-15);
    EXPECT_LE(r.residual, 1e-15);
}

TEST(DetectFactor, SelfPairIsOne) {
    Rng rng(2);
    const ComplexMatrix m = ginibre(4, 4, rng);
    const FactorReport r = detect_factor({m, m, std::nullopt, ""});
    EXPECT_EQ(r.status, FactorStatus::Unique);
    EXPECT_LT(std::abs(*r.lambda_hat - 1.0), 1e-14);
}

TEST(DetectFactor, ClockShiftFourIsI) {
    const FactorReport r = detect_factor(clock_shift_pair(4));
    EXPECT_EQ(r.status, FactorStatus::Unique);
    EXPECT_LT(std::abs(*r.lambda_hat - kI), 1e-14);
}

TEST(DetectFactor, BothProductsZeroIsAny) {
    const ComplexMatrix e11 = mat({{1, 0}, {0, 0}});
    const ComplexMatrix e22 = mat({{0, 0}, {0, 1}});
    const FactorReport r = detect_factor({e11, e22, std::nullopt, ""});
    EXPECT_EQ(r.status, FactorStatus::Any);
}

TEST(DetectFactor, OnlyOneProductZeroIsNone) {
    // A = E12, B = E11: AB = 0 but BA = E12.
    const ComplexMatrix a = mat({{0, 1}, {0, 0}});
    const ComplexMatrix b = mat({{1, 0}, {0, 0}});
    EXPECT_EQ(detect_factor({a, b, std::nullopt, ""}).status, FactorStatus::None);
    // Reversed: AB = E12 != 0 while BA = 0.
    EXPECT_EQ(detect_factor({b, a, std::nullopt, ""}).status, FactorStatus::None);
}

TEST(DetectFactor, GenericHermitianPairIsNone) {
    Rng rng(4);
    const FactorReport r =
        detect_factor({random_hermitian(4, rng), random_hermitian(4, rng), std::nullopt, ""});
    EXPECT_EQ(r.status, FactorStatus::None);
    EXPECT_GT(r.residual, 1e-3);
}

TEST(DetectFactor, DimensionMismatch) {
    EXPECT_THROW(detect_factor({identity(2), identity(3), std::nullopt, ""}), Error);
}

TEST(SpectrumRotation, Examples) {
    const SpectrumSet s{{1.0, kI, -1.0, -kI}, 4};
    EXPECT_TRUE(spectrum_rotation_check(s, kI, 1e-12).matched);
    const SpectrumSet t{{Scalar(0.3, 2.0), 5.0}, 2};
    const SpectrumMatchReport id = spectrum_rotation_check(t, 1.0, 1e-12);
    EXPECT_TRUE(id.matched);
    EXPECT_EQ(id.max_pair_distance, 0.0);
    EXPECT_FALSE(spectrum_rotation_check({{1.0, 2.0}, 2}, -1.0, 1e-9).matched);
    EXPECT_THROW(spectrum_rotation_check(s, 0.0, 1e-9), Error);
}

TEST(SpectrumSwap, Examples) {
    EXPECT_TRUE(spectrum_swap_check({sigma_x(), sigma_y(), std::nullopt, ""}, 1e-12).matched);
    Rng rng(6);
    const ComplexMatrix m = ginibre(5, 5, rng);
    EXPECT_TRUE(spectrum_swap_check({m, identity(5), std::nullopt, ""}, 1e-12).matched);
    const ComplexMatrix a = ginibre(6, 6, rng);
    const ComplexMatrix b = ginibre(6, 6, rng);
    EXPECT_TRUE(spectrum_swap_check({a, b, std::nullopt, ""}, 1e-7).matched);
}

TEST(TraceDet, IdenticalPauliForcesOne) {
    const TraceDetReport r = trace_det_constraints({sigma_x(), sigma_x(), std::nullopt, ""}, 2);
    EXPECT_LT(std::abs(r.traces[0].tr_ab_k - 2.0), 1e-15);
    EXPECT_TRUE(has_constraint(r.constraints, ConstraintKind::One));
}

TEST(TraceDet, PauliXYGivesSquareRoot) {
    const TraceDetReport r = trace_det_constraints({sigma_x(), sigma_y(), std::nullopt, ""}, 2);
    for (const TraceEntry &e : r.traces) {
        EXPECT_LT(std::abs(e.tr_ab_k), 1e-15);
        EXPECT_LT(std::abs(e.tr_a_k_b), 1e-15);
    }
    EXPECT_TRUE(r.ab_invertible);
    // det(i sigma_z) = 1
    EXPECT_LT(std::abs(r.det_ab - 1.0), 1e-15);
    EXPECT_FALSE(has_constraint(r.constraints, ConstraintKind::One));
    EXPECT_TRUE(has_constraint(r.constraints, ConstraintKind::RootOfUnity, 2));
}

TEST(TraceDet, ClockShiftFour) {
    const TraceDetReport r = trace_det_constraints(clock_shift_pair(4), 4);
    EXPECT_TRUE(r.ab_invertible);
    EXPECT_TRUE(has_constraint(r.constraints, ConstraintKind::RootOfUnity, 4));
    EXPECT_LT(std::abs(std::pow(kI, 4) - 1.0), 1e-15);
}

TEST(ClassifyPair, PauliXYConsistentWithSignConstraint) {
    const ClassificationReport r = classify_pair(pauli_pair(PauliKind::XY));
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(has_constraint(r.constraints, ConstraintKind::Sign));
    EXPECT_TRUE(has_constraint(r.constraints, ConstraintKind::Real));
    EXPECT_FALSE(has_constraint(r.constraints, ConstraintKind::One));
}

TEST(ClassifyPair, NilpotentDiagLambdaThree) {
    const OperatorPair p = nilpotent_diag_pair({1.0, 3.0}, 1, 3.0);
    const ClassificationReport r = classify_pair(p);
    EXPECT_EQ(r.factor.status, FactorStatus::Unique);
    EXPECT_LT(std::abs(*r.factor.lambda_hat - 3.0), 1e-14);
    EXPECT_TRUE(r.ab_quasi_nilpotent);
    EXPECT_TRUE(has_constraint(r.constraints, ConstraintKind::QuasiNilpotentProduct));
    EXPECT_TRUE(r.consistent);
}

TEST(ClassifyPair, GenericPairReportsNoFactor) {
    Rng rng(9);
    const ClassificationReport r =
        classify_pair({diagonal({1.0, 2.0}), random_hermitian(2, rng), std::nullopt, ""});
    EXPECT_EQ(r.factor.status, FactorStatus::None);
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(r.constraints.empty());
}

TEST(ClassifyPair, LooseToleranceExposesSpectralViolation) {
    // With tol 0.07 the least-squares fit lambda = 0.8 is accepted, but
    // sigma(AB) = {+-sqrt 2} is not invariant under multiplication by 0.8.
    const ClassificationReport r =
        classify_pair({diagonal({1.0, 2.0}), sigma_x(), std::nullopt, ""}, 0.07);
    ASSERT_EQ(r.factor.status, FactorStatus::Unique);
    EXPECT_NEAR(r.factor.lambda_hat->real(), 0.8, 1e-15);
    EXPECT_FALSE(r.consistent);
    ASSERT_FALSE(r.violations.empty());
    EXPECT_NE(r.violations.front().find("lambda sigma(AB)"), std::string::npos);
}

TEST(ClassifyPair, EveryRealizationKindIsConsistent) {
    for (RealizationKind kind : all_realization_kinds()) {
        RealizationSpec spec;
        spec.kind = kind;
        RealizationParams &p = spec.params;
        switch (kind) {
            case RealizationKind::ClockShift:
                p.n = 5;
                break;
            case RealizationKind::CyclicShiftDiag:
                p.n = 6;
                p.lambda = std::polar(1.0, 2.0 * M_PI / 6.0);
                break;
            case RealizationKind::NilpotentDiag:
                p.betas = {1.0, 2.0, 0.5};
                p.pivot = 2;
                p.lambda = Scalar(0.0, 3.0);
                p.solve_pivot = true;
                break;
            case RealizationKind::Jordan2:
            case RealizationKind::Jordan3:
                p.x = 2.0;
                p.y = Scalar(0.0, 1.0);
                p.z = -1.0;
                p.lambda = Scalar(1.0, 1.0);
                break;
            case RealizationKind::UqSl2:
                p.n = 4;
                p.q = Scalar(1.3 * std::cos(0.7), 1.3 * std::sin(0.7));
                break;
            default:
                break;
        }
        const ClassificationReport r = classify_pair(generate(spec));
        EXPECT_TRUE(r.consistent) << to_string(kind);
    }
}

TEST(Commutant, DiagonalOneTwoLambdaTwo) {
    const ComplexMatrix a = diagonal({1.0, 2.0});
    const auto basis = solve_lambda_commutant(a, 2.0);
    ASSERT_EQ(basis.size(), 1u);
    const ComplexMatrix &b = basis.front();
    // Up to phase the basis element is E21.
    EXPECT_NEAR(std::abs(b(1, 0)), 1.0, 1e-14);
    EXPECT_NEAR(b.norm(), 1.0, 1e-14);
    EXPECT_LT((a * b - 2.0 * b * a).norm(), 1e-14);
}

TEST(Commutant, IdentityCases) {
    EXPECT_EQ(solve_lambda_commutant(identity(3), 1.0).size(), 9u);
    EXPECT_TRUE(solve_lambda_commutant(identity(3), 2.0).empty());
}

TEST(Commutant, RejectsNonNormalAndZeroLambda) {
    try {
        solve_lambda_commutant(mat({{1, 1}, {0, 1}}), 1.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotNormal);
    }
    EXPECT_THROW(solve_lambda_commutant(identity(2), 0.0), Error);
}

TEST(Commutant, BasisIsOrthonormalAndSolvesRelation) {
    // Unitary conjugate of diag(1, -1, 2, -2, 0): lambda = -1 pairs 1/-1, 2/-2, 0/0.
    Rng rng(12);
    const ComplexMatrix u = random_unitary(5, rng);
    const ComplexMatrix a = u * diagonal({1.0, -1.0, 2.0, -2.0, 0.0}) * u.adjoint();
    const auto basis = solve_lambda_commutant(a, -1.0);
    ASSERT_EQ(basis.size(), 5u);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        EXPECT_LT((a * basis[i] + basis[i] * a).norm(), 1e-12);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Scalar ip = frobenius_inner(basis[i], basis[j]);
            EXPECT_LT(std::abs(ip - (i == j ? 1.0 : 0.0)), 1e-12);
        }
    }
}

TEST(MeasurementMap, Examples) {
    EXPECT_TRUE(measurement_map_check(pauli_pair(PauliKind::XY), 50, 1));
    EXPECT_TRUE(measurement_map_check(
        {diagonal({1.0, 2.0}), diagonal({Scalar(0, 3), -1.0}), std::nullopt, ""}, 50, 2));
    EXPECT_FALSE(measurement_map_check({diagonal({1.0, 2.0}), sigma_x(), std::nullopt, ""}, 50, 3));
}

TEST(MeasurementMap, ExplicitWitnessForFailure) {
    // X = E11: ABXBA and BAXAB differ for A = diag(1,2), B = sigma_x.
    const ComplexMatrix a = diagonal({1.0, 2.0});
    const ComplexMatrix b = sigma_x();
    const ComplexMatrix x = mat({{1, 0}, {0, 0}});
    EXPECT_GT((a * b * x * b * a - b * a * x * a * b).norm(), 1.0);
}

}  // namespace
}  // namespace skewcomm
