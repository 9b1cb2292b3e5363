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

// Dense complex matrix kernels shared by every other module.
//
// Matrices are plain Eigen values. Functions take them by const reference and
// return fresh values; nothing here keeps state between calls, so all of it is
// safe to call concurrently on shared inputs.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace skewcomm {

using Scalar = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default relative tolerance for every "is zero / is equal" decision.
inline constexpr double kDefaultTol = 1e-9;

/// Eigenvalues with algebraic multiplicity, sorted by (real, imag).
struct SpectrumSet {
    std::vector<Scalar> values;
    std::size_t source_dim = 0;
};

struct StructureFlags {
    bool hermitian = false;
    bool positive_semidefinite = false;
    bool positive_definite = false;
    bool unitary = false;
    bool invertible = false;
    bool quasi_nilpotent = false;
    double tolerance_used = kDefaultTol;
};

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, unitary
};

/// M = W * diag(singulars) * X^*.
struct Svd {
    ComplexMatrix W;
    std::vector<double> singulars;  // descending, non-negative
    ComplexMatrix X;
};

/// C = V * absC with V a partial isometry whose initial projection is P.
struct PolarParts {
    ComplexMatrix V;
    ComplexMatrix absC;
    ComplexMatrix P;
    ComplexMatrix Q;
    std::size_t rank = 0;
};

ComplexMatrix identity(std::size_t n);
ComplexMatrix zeros(std::size_t rows, std::size_t cols);
ComplexMatrix diagonal(const std::vector<Scalar> &entries);

ComplexMatrix adjoint(const ComplexMatrix &m);

/// Throws DimensionMismatch when m.cols() != n.rows().
ComplexMatrix matmul(const ComplexMatrix &m, const ComplexMatrix &n);

/// Integer power of a square matrix; p >= 0.
ComplexMatrix matrix_power(const ComplexMatrix &m, int p);

double frobenius_norm(const ComplexMatrix &m);

/// Frobenius inner product <X, Y> = tr(X^* Y).
Scalar frobenius_inner(const ComplexMatrix &x, const ComplexMatrix &y);

/// True when value <= tol * max(1, scale).
inline bool within(double value, double scale, double tol) {
    return value <= tol * (scale > 1.0 ? scale : 1.0);
}

/// ||a - b||_F / max(1, ||reference||_F).
double relative_distance(const ComplexMatrix &a, const ComplexMatrix &b,
                         const ComplexMatrix &reference);

bool all_finite(const ComplexMatrix &m);

void require_square(const ComplexMatrix &m, const char *what);
void require_same_square(const ComplexMatrix &a, const ComplexMatrix &b);

/// All eigenvalues of a general square matrix.
///
/// Rows and columns that already isolate an eigenvalue (a zero off-diagonal
/// row or column inside the active block) are peeled off first, the way
/// LAPACK's permutation balancing does; the remaining core goes through
/// Hessenberg reduction and shifted complex QR. The peeling keeps triangular
/// and permuted-triangular inputs exact, which matters for the nilpotent
/// products that show up throughout.
///
/// Throws ConvergenceFailure when the QR iteration does not converge.
SpectrumSet eigenvalues(const ComplexMatrix &m);

/// Spectral decomposition of a Hermitian matrix. Throws NotHermitian when
/// ||M - M^*||_F > tol * max(1, ||M||_F).
HermitianEig hermitian_eig(const ComplexMatrix &m, double tol = kDefaultTol);

Svd svd(const ComplexMatrix &m);

/// Spectral norm (largest singular value).
double spectral_norm(const ComplexMatrix &m);

/// Polar decomposition through the SVD. Singular values at or below
/// tol * sigma_max are treated as zero when building V.
PolarParts polar(const ComplexMatrix &c, double tol = kDefaultTol);

StructureFlags classify_structure(const ComplexMatrix &m, double tol = kDefaultTol);

bool is_hermitian(const ComplexMatrix &m, double tol = kDefaultTol);
bool is_normal(const ComplexMatrix &m, double tol = kDefaultTol);

Scalar trace(const ComplexMatrix &m);
Scalar determinant(const ComplexMatrix &m);

/// Lexicographic (real, imag) ordering used for every reported spectrum.
void sort_spectrum(std::vector<Scalar> &values);

}  // namespace skewcomm
