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

#include "skewcomm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "skewcomm/errors.hpp"

namespace skewcomm {

ComplexMatrix identity(std::size_t n) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

ComplexMatrix diagonal(const std::vector<Scalar> &entries) {
    ComplexMatrix out = zeros(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &m) { return m.adjoint(); }

ComplexMatrix matmul(const ComplexMatrix &m, const ComplexMatrix &n) {
    if (m.cols() != n.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "cannot multiply " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " by " + std::to_string(n.rows()) + "x" + std::to_string(n.cols()));
    }
    return m * n;
}

ComplexMatrix matrix_power(const ComplexMatrix &m, int p) {
    require_square(m, "matrix_power");
    if (p < 0) {
        throw Error(ErrorKind::InvalidParameter, "negative matrix power");
    }
    ComplexMatrix result = identity(static_cast<std::size_t>(m.rows()));
    ComplexMatrix base = m;
    while (p > 0) {
        if (p & 1) {
            result = result * base;
        }
        p >>= 1;
        if (p > 0) {
            base = base * base;
        }
    }
    return result;
}

double frobenius_norm(const ComplexMatrix &m) { return m.norm(); }

Scalar frobenius_inner(const ComplexMatrix &x, const ComplexMatrix &y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "frobenius_inner shape mismatch");
    }
    return (x.conjugate().cwiseProduct(y)).sum();
}

double relative_distance(const ComplexMatrix &a, const ComplexMatrix &b,
                         const ComplexMatrix &reference) {
    return (a - b).norm() / std::max(1.0, reference.norm());
}

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + " needs a non-empty square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_same_square(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "operator A");
    require_square(b, "operator B");
    if (a.rows() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "A is " + std::to_string(a.rows()) +
                                                      "-dimensional but B is " +
                                                      std::to_string(b.rows()) + "-dimensional");
    }
}

void sort_spectrum(std::vector<Scalar> &values) {
    std::sort(values.begin(), values.end(), [](const Scalar &a, const Scalar &b) {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    });
}

namespace {

// Index of an active row whose off-diagonal entries inside the active block are
// all exactly zero, or -1.
Eigen::Index find_isolated_row(const ComplexMatrix &m, const std::vector<Eigen::Index> &active) {
    for (Eigen::Index i : active) {
        bool isolated = true;
        for (Eigen::Index j : active) {
            if (j != i && m(i, j) != Scalar(0.0)) {
                isolated = false;
                break;
            }
        }
        if (isolated) {
            return i;
        }
    }
    return -1;
}

Eigen::Index find_isolated_col(const ComplexMatrix &m, const std::vector<Eigen::Index> &active) {
    for (Eigen::Index j : active) {
        bool isolated = true;
        for (Eigen::Index i : active) {
            if (i != j && m(i, j) != Scalar(0.0)) {
                isolated = false;
                break;
            }
        }
        if (isolated) {
            return j;
        }
    }
    return -1;
}

}  // namespace

SpectrumSet eigenvalues(const ComplexMatrix &m) {
    require_square(m, "eigenvalues");
    if (!all_finite(m)) {
        throw Error(ErrorKind::MalformedInput, "matrix has non-finite entries");
    }
    const Eigen::Index n = m.rows();

    std::vector<Eigen::Index> active(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        active[static_cast<std::size_t>(i)] = i;
    }

    SpectrumSet out;
    out.source_dim = static_cast<std::size_t>(n);
    out.values.reserve(static_cast<std::size_t>(n));

    // Peel isolated eigenvalues until the remaining block is irreducible under
    // permutations.
    for (;;) {
        Eigen::Index k = find_isolated_row(m, active);
        if (k < 0) {
            k = find_isolated_col(m, active);
        }
        if (k < 0) {
            break;
        }
        out.values.push_back(m(k, k));
        active.erase(std::find(active.begin(), active.end(), k));
        if (active.empty()) {
            break;
        }
    }

    if (!active.empty()) {
        const auto core_n = static_cast<Eigen::Index>(active.size());
        ComplexMatrix core(core_n, core_n);
        for (Eigen::Index r = 0; r < core_n; ++r) {
            for (Eigen::Index c = 0; c < core_n; ++c) {
                core(r, c) = m(active[static_cast<std::size_t>(r)], active[static_cast<std::size_t>(c)]);
            }
        }
        Eigen::ComplexSchur<ComplexMatrix> schur(core_n);
        schur.setMaxIterations(static_cast<Eigen::Index>(60) * core_n);
        schur.compute(core, /*computeU=*/false);
        if (schur.info() != Eigen::Success) {
            throw Error(ErrorKind::ConvergenceFailure,
                        "complex QR iteration did not converge on a " + std::to_string(core_n) +
                            "x" + std::to_string(core_n) + " block");
        }
        const ComplexMatrix &t = schur.matrixT();
        for (Eigen::Index i = 0; i < core_n; ++i) {
            out.values.push_back(t(i, i));
        }
    }

    sort_spectrum(out.values);
    return out;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return within((m - m.adjoint()).norm(), m.norm(), tol);
}

bool is_normal(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const ComplexMatrix mm = m * m.adjoint();
    const ComplexMatrix mtm = m.adjoint() * m;
    return within((mm - mtm).norm(), mtm.norm(), tol);
}

HermitianEig hermitian_eig(const ComplexMatrix &m, double tol) {
    require_square(m, "hermitian_eig");
    if (!is_hermitian(m, tol)) {
        throw Error(ErrorKind::NotHermitian, "||M - M*||_F = " +
                                                 std::to_string((m - m.adjoint()).norm()) +
                                                 " exceeds tolerance");
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
    }
    HermitianEig out;
    const RealVector &ev = solver.eigenvalues();
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    out.eigenvectors = solver.eigenvectors();
    return out;
}

Svd svd(const ComplexMatrix &m) {
    if (m.size() == 0) {
        throw Error(ErrorKind::DimensionMismatch, "svd of an empty matrix");
    }
    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "Jacobi SVD did not converge");
    }
    Svd out;
    out.W = solver.matrixU();
    out.X = solver.matrixV();
    const RealVector &s = solver.singularValues();
    out.singulars.assign(s.data(), s.data() + s.size());
    return out;
}

double spectral_norm(const ComplexMatrix &m) {
    Eigen::JacobiSVD<ComplexMatrix> solver(m);
    return solver.singularValues().size() > 0 ? solver.singularValues()(0) : 0.0;
}

PolarParts polar(const ComplexMatrix &c, double tol) {
    require_square(c, "polar");
    const Svd parts = svd(c);
    const auto n = c.rows();
    const double sigma_max = parts.singulars.empty() ? 0.0 : parts.singulars.front();

    RealVector sigma(n);
    RealVector keep = RealVector::Zero(n);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        sigma(i) = parts.singulars[static_cast<std::size_t>(i)];
        if (sigma(i) > tol * sigma_max) {
            keep(i) = 1.0;
            ++rank;
        }
    }

    PolarParts out;
    out.absC = parts.X * sigma.cast<Scalar>().asDiagonal() * parts.X.adjoint();
    out.absC = 0.5 * (out.absC + out.absC.adjoint());
    out.V = parts.W * keep.cast<Scalar>().asDiagonal() * parts.X.adjoint();
    out.P = out.V.adjoint() * out.V;
    out.Q = identity(static_cast<std::size_t>(n)) - out.P;
    out.rank = rank;
    return out;
}

StructureFlags classify_structure(const ComplexMatrix &m, double tol) {
    require_square(m, "classify_structure");
    const auto n = static_cast<std::size_t>(m.rows());
    const double fro = m.norm();

    StructureFlags flags;
    flags.tolerance_used = tol;
    flags.hermitian = is_hermitian(m, tol);
    if (flags.hermitian) {
        const HermitianEig eig = hermitian_eig(m, tol);
        const double min_ev = eig.eigenvalues.front();
        flags.positive_semidefinite = min_ev >= -tol * std::max(1.0, fro);
        flags.positive_definite = min_ev > tol * std::max(1.0, fro);
    }

    const ComplexMatrix gram = m.adjoint() * m;
    flags.unitary = within((gram - identity(n)).norm(), std::sqrt(static_cast<double>(n)), tol);

    const Svd parts = svd(m);
    const double smax = parts.singulars.front();
    const double smin = parts.singulars.back();
    flags.invertible = smax > 0.0 && smin > tol * smax;

    const SpectrumSet spec = eigenvalues(m);
    flags.quasi_nilpotent = std::all_of(spec.values.begin(), spec.values.end(), [&](const Scalar &v) {
        return std::abs(v) <= tol * std::max(1.0, fro);
    });
    return flags;
}

Scalar trace(const ComplexMatrix &m) {
    require_square(m, "trace");
    return m.trace();
}

Scalar determinant(const ComplexMatrix &m) {
    require_square(m, "determinant");
    return m.determinant();
}

}  // namespace skewcomm
