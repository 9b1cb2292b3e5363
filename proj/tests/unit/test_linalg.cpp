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

#include <cmath>

#include "skewcomm/errors.hpp"
#include "skewcomm/linalg.hpp"
#include "skewcomm/random.hpp"
#include "skewcomm/realizations.hpp"
#include "test_util.hpp"

namespace skewcomm {
namespace {

using testing::dist;
using testing::kI;
using testing::mat;

const ComplexMatrix kLowerShift = mat({{0, 0}, {1, 0}});

TEST(Adjoint, WorkedExamples) {
    EXPECT_EQ(adjoint(sigma_y()), sigma_y());
    EXPECT_EQ(adjoint(identity(3)), identity(3));
    EXPECT_EQ(adjoint(kLowerShift), mat({{0, 1}, {0, 0}}));
}

TEST(Adjoint, ConjugatesEntries) {
    const ComplexMatrix m = mat({{Scalar(1, 2), Scalar(3, -4), 5.0}});
    const ComplexMatrix expected = mat({{Scalar(1, -2)}, {Scalar(3, 4)}, {5.0}});
    EXPECT_EQ(adjoint(m), expected);
}

TEST(Matmul, PauliProduct) {
    EXPECT_LT(dist(matmul(sigma_x(), sigma_y()), kI * sigma_z()), 1e-15);
    EXPECT_LT(dist(matmul(sigma_y(), sigma_x()), -kI * sigma_z()), 1e-15);
}

TEST(Matmul, IdentityAndJordanProduct) {
    Rng rng(3);
    const ComplexMatrix m = ginibre(3, 4, rng);
    EXPECT_EQ(matmul(m, identity(4)), m);
    const Scalar x(2.0, 1.0);
    const Scalar y(-1.0, 0.5);
    const Scalar lambda(0.0, 3.0);
    const ComplexMatrix a = mat({{x, 0}, {y, lambda * x}});
    EXPECT_LT(dist(matmul(a, kLowerShift), mat({{0, 0}, {lambda * x, 0}})), 1e-15);
}

TEST(Matmul, RejectsShapeMismatch) {
    try {
        matmul(identity(2), identity(3));
        FAIL() << "expected DimensionMismatch";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(MatrixPower, MatchesRepeatedProduct) {
    Rng rng(5);
    const ComplexMatrix m = ginibre(4, 4, rng);
    EXPECT_EQ(matrix_power(m, 0), identity(4));
    EXPECT_LT(dist(matrix_power(m, 3), m * m * m), 1e-12);
    EXPECT_THROW(matrix_power(m, -1), Error);
}

TEST(Eigenvalues, DiagonalSortedByRealThenImag) {
    const SpectrumSet s = eigenvalues(diagonal({1.0, kI, -1.0, -kI}));
    ASSERT_EQ(s.values.size(), 4u);
    EXPECT_EQ(s.source_dim, 4u);
    const std::vector<Scalar> expected{-1.0, -kI, kI, 1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LT(std::abs(s.values[i] - expected[i]), 1e-14) << i;
    }
}

TEST(Eigenvalues, NilpotentIsExactlyZero) {
    const SpectrumSet s = eigenvalues(kLowerShift);
    ASSERT_EQ(s.values.size(), 2u);
    EXPECT_EQ(s.values[0], Scalar(0.0));
    EXPECT_EQ(s.values[1], Scalar(0.0));
}

TEST(Eigenvalues, PermutedStrictlyTriangularStaysExact) {
    // A 5-cycle conjugate of a strictly lower triangular matrix.
    Rng rng(11);
    ComplexMatrix t = ComplexMatrix::Zero(5, 5);
    for (int i = 1; i < 5; ++i) {
        for (int j = 0; j < i; ++j) {
            t(i, j) = rng.complex_normal();
        }
    }
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(5);
    perm.indices() << 2, 4, 0, 1, 3;
    const ComplexMatrix m = perm * t * perm.transpose();
    for (const Scalar &v : eigenvalues(m).values) {
        EXPECT_EQ(std::abs(v), 0.0);
    }
}

TEST(Eigenvalues, ClockShiftProductSolvesCharacteristicPolynomial) {
    // Oracle: (AB)^4 = -I by direct multiplication, so sigma(AB) is the set of
    // fourth roots of -1, each once because AB is unitary with distinct roots.
    const OperatorPair p = clock_shift_pair(4);
    const ComplexMatrix ab = p.A * p.B;
    ASSERT_LT(dist(matrix_power(ab, 4), -identity(4)), 1e-14);
    const SpectrumSet s = eigenvalues(ab);
    ASSERT_EQ(s.values.size(), 4u);
    std::vector<Scalar> roots;
    for (int k = 0; k < 4; ++k) {
        roots.push_back(std::polar(1.0, M_PI / 4.0 + k * M_PI / 2.0));
    }
    // Real parts tie pairwise, so compare as multisets rather than by sort order.
    const SpectrumMatchReport m = match_spectra(s.values, roots, 1e-12);
    EXPECT_TRUE(m.matched) << m.max_pair_distance;
}

TEST(Eigenvalues, TraceAndDeterminantOfRandomMatrices) {
    Rng rng(17);
    for (int n = 1; n <= 8; ++n) {
        const ComplexMatrix m = ginibre(static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng);
        const SpectrumSet s = eigenvalues(m);
        Scalar sum = 0.0;
        Scalar prod = 1.0;
        for (const Scalar &v : s.values) {
            sum += v;
            prod *= v;
            // Each eigenvalue makes M - vI singular.
            const Svd d = svd(m - v * identity(static_cast<std::size_t>(n)));
            EXPECT_LE(d.singulars.back(), 1e-10 * d.singulars.front());
        }
        EXPECT_LT(std::abs(sum - trace(m)), 1e-11 * n);
        EXPECT_LT(std::abs(prod - determinant(m)), 1e-10 * std::max(1.0, std::abs(prod)));
    }
}

TEST(Eigenvalues, RejectsNonSquareAndNonFinite) {
    EXPECT_THROW(eigenvalues(ComplexMatrix::Zero(2, 3)), Error);
    ComplexMatrix bad = identity(2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    try {
        eigenvalues(bad);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedInput);
    }
}

TEST(HermitianEig, WorkedExamples) {
    const HermitianEig z = hermitian_eig(sigma_z());
    EXPECT_NEAR(z.eigenvalues[0], -1.0, 1e-15);
    EXPECT_NEAR(z.eigenvalues[1], 1.0, 1e-15);
    for (double v : hermitian_eig(identity(4)).eigenvalues) {
        EXPECT_NEAR(v, 1.0, 1e-15);
    }
    const HermitianEig b = hermitian_eig((sigma_x() + sigma_y()) / std::sqrt(2.0));
    EXPECT_NEAR(b.eigenvalues[0], -1.0, 1e-14);
    EXPECT_NEAR(b.eigenvalues[1], 1.0, 1e-14);
}

TEST(HermitianEig, ReconstructsAndIsUnitary) {
    Rng rng(23);
    const ComplexMatrix m = random_hermitian(6, rng);
    const HermitianEig e = hermitian_eig(m);
    std::vector<Scalar> d(e.eigenvalues.begin(), e.eigenvalues.end());
    EXPECT_LT(relative_distance(e.eigenvectors * diagonal(d) * e.eigenvectors.adjoint(), m, m),
              1e-13);
    EXPECT_LT(dist(e.eigenvectors.adjoint() * e.eigenvectors, identity(6)), 1e-13);
    EXPECT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
}

TEST(HermitianEig, RejectsNonHermitian) {
    try {
        hermitian_eig(kLowerShift);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
}

TEST(Svd, Examples) {
    const Svd a = svd(diagonal({3.0, 2.0}));
    EXPECT_NEAR(a.singulars[0], 3.0, 1e-15);
    EXPECT_NEAR(a.singulars[1], 2.0, 1e-15);
    const Svd b = svd(kLowerShift);
    EXPECT_NEAR(b.singulars[0], 1.0, 1e-15);
    EXPECT_NEAR(b.singulars[1], 0.0, 1e-15);
    const ComplexMatrix u = (identity(2) + kI * sigma_z()) / std::sqrt(2.0);
    ASSERT_LT(dist(u.adjoint() * u, identity(2)), 1e-15);
    const Svd c = svd(u);
    EXPECT_NEAR(c.singulars[0], 1.0, 1e-15);
    EXPECT_NEAR(c.singulars[1], 1.0, 1e-15);
}

TEST(Svd, RectangularReconstruction) {
    Rng rng(29);
    const ComplexMatrix m = ginibre(3, 5, rng);
    const Svd s = svd(m);
    ComplexMatrix sigma = ComplexMatrix::Zero(s.W.cols(), s.X.cols());
    for (std::size_t i = 0; i < s.singulars.size(); ++i) {
        sigma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = s.singulars[i];
    }
    EXPECT_LT(relative_distance(s.W * sigma * s.X.adjoint(), m, m), 1e-13);
    EXPECT_NEAR(spectral_norm(m), s.singulars.front(), 1e-14);
}

TEST(Polar, PauliIntertwinerProduct) {
    const ComplexMatrix c = sigma_x() * (sigma_x() + sigma_y()) / std::sqrt(2.0);
    const PolarParts p = polar(c);
    EXPECT_LT(dist(p.absC, identity(2)), 1e-14);
    EXPECT_LT(dist(p.V, c), 1e-14);
    EXPECT_EQ(p.rank, 2u);
    EXPECT_LT(p.Q.norm(), 1e-14);
}

TEST(Polar, Identity) {
    const PolarParts p = polar(identity(3));
    EXPECT_LT(dist(p.V, identity(3)), 1e-15);
    EXPECT_LT(dist(p.absC, identity(3)), 1e-15);
    EXPECT_LT(p.Q.norm(), 1e-15);
}

TEST(Polar, RankOneShift) {
    const PolarParts p = polar(kLowerShift);
    EXPECT_LT(dist(p.absC, diagonal({1.0, 0.0})), 1e-15);
    EXPECT_LT(dist(p.V, kLowerShift), 1e-15);
    EXPECT_EQ(p.rank, 1u);
    EXPECT_LT(dist(p.Q, diagonal({0.0, 1.0})), 1e-15);
    EXPECT_LT(dist(p.P + p.Q, identity(2)), 1e-15);
}

TEST(ClassifyStructure, Examples) {
    const StructureFlags x = classify_structure(sigma_x());
    EXPECT_TRUE(x.hermitian);
    EXPECT_TRUE(x.unitary);
    EXPECT_TRUE(x.invertible);
    EXPECT_FALSE(x.positive_semidefinite);
    EXPECT_FALSE(x.quasi_nilpotent);

    const StructureFlags n = classify_structure(kLowerShift);
    EXPECT_TRUE(n.quasi_nilpotent);
    EXPECT_FALSE(n.invertible);
    EXPECT_FALSE(n.hermitian);

    const StructureFlags d = classify_structure(diagonal({2.0, 0.0}));
    EXPECT_TRUE(d.hermitian);
    EXPECT_TRUE(d.positive_semidefinite);
    EXPECT_FALSE(d.positive_definite);
    EXPECT_FALSE(d.invertible);
}

TEST(ClassifyStructure, PositiveDefiniteAndUnitary) {
    Rng rng(31);
    const ComplexMatrix g = ginibre(4, 4, rng);
    const StructureFlags pd = classify_structure(g * g.adjoint() + identity(4));
    EXPECT_TRUE(pd.positive_definite);
    EXPECT_TRUE(pd.positive_semidefinite);
    EXPECT_TRUE(classify_structure(random_unitary(5, rng)).unitary);
}

TEST(Helpers, FrobeniusInnerTraceDeterminant) {
    const ComplexMatrix x = mat({{1.0, kI}, {0.0, 2.0}});
    const ComplexMatrix y = mat({{kI, 1.0}, {3.0, 0.0}});
    // tr(X^* Y) = conj(1)*i + conj(i)*1 + 0*3 + 2*0
    EXPECT_LT(std::abs(frobenius_inner(x, y) - (kI - kI)), 1e-15);
    EXPECT_LT(std::abs(frobenius_inner(x, x) - x.squaredNorm()), 1e-15);
    EXPECT_EQ(trace(x), Scalar(3.0));
    EXPECT_LT(std::abs(determinant(y) - (-3.0)), 1e-15);
    EXPECT_TRUE(within(1e-10, 100.0, 1e-11));
    EXPECT_FALSE(within(1e-10, 0.5, 1e-11));
    EXPECT_TRUE(is_normal(sigma_y()));
    EXPECT_FALSE(is_normal(kLowerShift));
    EXPECT_TRUE(all_finite(x));
}

}  // namespace
}  // namespace skewcomm
