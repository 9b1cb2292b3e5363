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

#include "skewcomm/samplers.hpp"

#include <algorithm>
#include <cmath>

namespace skewcomm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Scalar random_nonzero(Rng &rng, double lo, double hi) {
    return std::polar(rng.uniform(lo, hi), rng.uniform(0.0, kTwoPi));
}

// Real value in +-[lo, hi], exactly zero with probability p_zero.
double random_weight(Rng &rng, double p_zero) {
    if (rng.uniform(0.0, 1.0) < p_zero) {
        return 0.0;
    }
    const double mag = rng.uniform(0.2, 2.0);
    return rng.uniform(0.0, 1.0) < 0.5 ? -mag : mag;
}

ComplexMatrix kron(const ComplexMatrix &x, const ComplexMatrix &y) {
    ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

ComplexMatrix direct_sum(const ComplexMatrix &x, const ComplexMatrix &y) {
    ComplexMatrix out = ComplexMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
    out.topLeftCorner(x.rows(), x.cols()) = x;
    out.bottomRightCorner(y.rows(), y.cols()) = y;
    return out;
}

ComplexMatrix random_real_diagonal(Rng &rng, int n, double p_zero) {
    std::vector<Scalar> d(static_cast<std::size_t>(n));
    for (Scalar &v : d) {
        v = random_weight(rng, p_zero);
    }
    return diagonal(d);
}

}  // namespace

Scalar random_q(Rng &rng) {
    for (;;) {
        const Scalar q = random_nonzero(rng, 0.5, 2.0);
        if (std::abs(q * q - 1.0) >= 0.1) {
            return q;
        }
    }
}

RealizationSpec random_realization_spec(Rng &rng, RealizationSampling sampling) {
    RealizationSpec spec;
    RealizationParams &p = spec.params;
    auto random_lambda = [&]() -> Scalar {
        if (sampling.unit_modulus_only) {
            return std::polar(1.0, rng.uniform(0.0, kTwoPi));
        }
        Scalar lambda = random_nonzero(rng, 1.0 / 3.0, 3.0);
        if (sampling.non_unit_only && std::abs(std::abs(lambda) - 1.0) < 0.1) {
            lambda *= 1.5;
        }
        return lambda;
    };

    std::vector<RealizationKind> kinds = {RealizationKind::NilpotentDiag, RealizationKind::Jordan2,
                                          RealizationKind::Jordan3};
    if (!sampling.non_unit_only) {
        kinds.insert(kinds.end(), {RealizationKind::ClockShift, RealizationKind::CyclicShiftDiag,
                                   RealizationKind::PauliXY});
    }
    if (!sampling.unit_modulus_only) {
        kinds.push_back(RealizationKind::UqSl2);
    }
    spec.kind = kinds[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(kinds.size()) - 1))];

    switch (spec.kind) {
        case RealizationKind::ClockShift:
            p.n = rng.uniform_int(2, 10);
            break;
        case RealizationKind::CyclicShiftDiag: {
            const int n = rng.uniform_int(2, 8);
            p.n = n;
            p.lambda = std::polar(1.0, kTwoPi * rng.uniform_int(1, n - 1) / n);
            break;
        }
        case RealizationKind::NilpotentDiag: {
            const int size = rng.uniform_int(2, 6);
            for (int i = 0; i < size; ++i) {
                p.betas.push_back(random_nonzero(rng, 0.5, 2.0));
            }
            p.pivot = rng.uniform_int(1, size - 1);
            p.lambda = random_lambda();
            p.solve_pivot = true;
            break;
        }
        case RealizationKind::Jordan2:
        case RealizationKind::Jordan3:
            p.x = random_nonzero(rng, 0.5, 2.0);
            p.y = rng.complex_normal();
            p.z = rng.complex_normal();
            p.lambda = random_lambda();
            break;
        case RealizationKind::PauliXY:
        case RealizationKind::PauliIntertwiner:
            break;
        case RealizationKind::UqSl2:
            p.n = rng.uniform_int(1, 6);
            p.q = random_q(rng);
            p.eps = rng.uniform(0.0, 1.0) < 0.5 ? 1 : -1;
            p.generator = rng.uniform(0.0, 1.0) < 0.5 ? UqGenerator::E : UqGenerator::F;
            p.normalization =
                rng.uniform(0.0, 1.0) < 0.5 ? UqNormalization::Bracket : UqNormalization::UnitLower;
            break;
    }
    return spec;
}

OperatorPair random_intertwinable_pair(Rng &rng, int max_dim) {
    max_dim = std::max(max_dim, 2);
    const int shape = rng.uniform_int(0, 2);
    ComplexMatrix a;
    ComplexMatrix b;
    std::string label;
    auto pauli_block = [&](int copies) {
        const ComplexMatrix partner = rng.uniform(0.0, 1.0) < 0.5
                                          ? ComplexMatrix((sigma_x() + sigma_y()) / std::sqrt(2.0))
                                          : sigma_y();
        return std::pair{kron(sigma_x(), random_real_diagonal(rng, copies, 0.15)),
                         kron(partner, random_real_diagonal(rng, copies, 0.15))};
    };
    if (shape == 0 || max_dim < 3) {
        const int n = rng.uniform_int(2, max_dim);
        a = random_real_diagonal(rng, n, 0.2);
        b = random_real_diagonal(rng, n, 0.2);
        label = "commuting";
    } else if (shape == 1) {
        const auto [x, y] = pauli_block(rng.uniform_int(1, max_dim / 2));
        a = x;
        b = y;
        label = "pauli-tensor";
    } else {
        const int copies = rng.uniform_int(1, (max_dim - 1) / 2);
        const int rest = rng.uniform_int(1, max_dim - 2 * copies);
        const auto [x, y] = pauli_block(copies);
        a = direct_sum(x, random_real_diagonal(rng, rest, 0.2));
        b = direct_sum(y, random_real_diagonal(rng, rest, 0.2));
        label = "pauli-tensor+commuting";
    }
    const ComplexMatrix u = random_unitary(static_cast<std::size_t>(a.rows()), rng);
    OperatorPair pair;
    pair.A = u * a * u.adjoint();
    pair.B = u * b * u.adjoint();
    pair.A = 0.5 * (pair.A + pair.A.adjoint());
    pair.B = 0.5 * (pair.B + pair.B.adjoint());
    pair.label = label;
    return pair;
}

OperatorPair random_positive_commuting_pair(Rng &rng, int max_dim) {
    const int n = rng.uniform_int(2, std::max(2, max_dim));
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    ComplexMatrix b = ComplexMatrix::Zero(n, n);
    int start = 0;
    while (start < n) {
        const int size = rng.uniform_int(1, n - start);
        const double value = rng.uniform(0.0, 1.0) < 0.2 ? 0.0 : rng.uniform(0.1, 3.0);
        a.block(start, start, size, size) = value * ComplexMatrix::Identity(size, size);
        b.block(start, start, size, size) = random_hermitian(static_cast<std::size_t>(size), rng);
        start += size;
    }
    const ComplexMatrix u = random_unitary(static_cast<std::size_t>(n), rng);
    OperatorPair pair;
    pair.A = u * a * u.adjoint();
    pair.B = u * b * u.adjoint();
    pair.A = 0.5 * (pair.A + pair.A.adjoint());
    pair.B = 0.5 * (pair.B + pair.B.adjoint());
    pair.label = "positive-commuting";
    return pair;
}

ComplexMatrix random_planted_normal(Rng &rng, int n, Scalar lambda) {
    std::vector<Scalar> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i > 0 && rng.uniform(0.0, 1.0) < 0.5) {
            a[static_cast<std::size_t>(i)] =
                lambda * a[static_cast<std::size_t>(rng.uniform_int(0, i - 1))];
        } else {
            a[static_cast<std::size_t>(i)] = random_nonzero(rng, 0.5, 2.0);
        }
    }
    const ComplexMatrix u = random_unitary(static_cast<std::size_t>(n), rng);
    return u * diagonal(a) * u.adjoint();
}

}  // namespace skewcomm
