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

#include "skewcomm/realizations.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "skewcomm/errors.hpp"

namespace skewcomm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr std::array<std::pair<RealizationKind, const char *>, 8> kKindNames{{
    {RealizationKind::ClockShift, "clock-shift"},
    {RealizationKind::CyclicShiftDiag, "cyclic-shift-diag"},
    {RealizationKind::NilpotentDiag, "nilpotent-diag"},
    {RealizationKind::Jordan2, "jordan2"},
    {RealizationKind::Jordan3, "jordan3"},
    {RealizationKind::PauliXY, "pauli-xy"},
    {RealizationKind::PauliIntertwiner, "pauli-intertwiner"},
    {RealizationKind::UqSl2, "uq-sl2"},
}};

std::string scalar_text(Scalar s) {
    std::ostringstream out;
    out << s.real() << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag()) << "i";
    return out.str();
}

void require_nonzero(Scalar lambda) {
    if (lambda == Scalar(0.0) || !std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
        throw Error(ErrorKind::InvalidParameter, "lambda must be a finite nonzero scalar");
    }
}

void validate_q(Scalar q) {
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || q == Scalar(0.0)) {
        throw Error(ErrorKind::InvalidParameter, "q must be finite and nonzero");
    }
    if (std::abs(q * q - 1.0) <= 1e-12) {
        throw Error(ErrorKind::InvalidParameter, "q must satisfy q^2 != 1");
    }
}

// A e_j = e_(j-1 mod n)
ComplexMatrix cyclic_shift(int n) {
    ComplexMatrix a = zeros(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        a((j + n - 1) % n, j) = 1.0;
    }
    return a;
}

}  // namespace

std::string to_string(RealizationKind kind) {
    for (const auto &[k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<RealizationKind> parse_realization_kind(const std::string &name) {
    for (const auto &[k, text] : kKindNames) {
        if (name == text) {
            return k;
        }
    }
    return std::nullopt;
}

const std::vector<RealizationKind> &all_realization_kinds() {
    static const std::vector<RealizationKind> kinds = [] {
        std::vector<RealizationKind> out;
        for (const auto &entry : kKindNames) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return kinds;
}

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << Scalar(0.0), Scalar(0.0, -1.0), Scalar(0.0, 1.0), Scalar(0.0);
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

OperatorPair clock_shift_pair(int n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidParameter, "clock-shift needs n >= 2");
    }
    std::vector<Scalar> clock(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        clock[static_cast<std::size_t>(j)] = std::polar(1.0, kTwoPi * j / n);
    }
    OperatorPair pair;
    pair.A = cyclic_shift(n);
    pair.B = diagonal(clock);
    pair.declared_lambda = std::polar(1.0, kTwoPi / n);
    pair.label = "clock-shift n=" + std::to_string(n);
    return pair;
}

OperatorPair cyclic_shift_diag_pair(int n, Scalar lambda, double tol) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidParameter, "cyclic-shift-diag needs N >= 2");
    }
    require_nonzero(lambda);
    const double gap = std::abs(ipow(lambda, n) - 1.0);
    if (gap > tol * std::max(1.0, std::pow(std::abs(lambda), n))) {
        throw Error(ErrorKind::InvalidParameter,
                    "λ^N ≠ 1 (|lambda^N - 1| = " + std::to_string(gap) +
                        "); the cyclic wrap needs a root of unity, use nilpotent-diag for "
                        "arbitrary lambda");
    }
    std::vector<Scalar> weights(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        weights[static_cast<std::size_t>(j)] = ipow(lambda, j);
    }
    OperatorPair pair;
    pair.A = cyclic_shift(n);
    pair.B = diagonal(weights);
    pair.declared_lambda = lambda;
    pair.label = "cyclic-shift-diag N=" + std::to_string(n) + " lambda=" + scalar_text(lambda);
    return pair;
}

OperatorPair nilpotent_diag_pair(const std::vector<Scalar> &betas, int pivot, Scalar lambda,
                                 double tol) {
    require_nonzero(lambda);
    const auto size = static_cast<int>(betas.size());
    if (size < 2) {
        throw Error(ErrorKind::InvalidParameter, "nilpotent-diag needs at least two betas");
    }
    if (pivot < 1 || pivot >= size) {
        throw Error(ErrorKind::InvalidParameter,
                    "pivot must lie in [1, " + std::to_string(size - 1) + "]");
    }
    const Scalar lower = betas[static_cast<std::size_t>(pivot - 1)];
    const Scalar upper = betas[static_cast<std::size_t>(pivot)];
    if (lower == Scalar(0.0)) {
        throw Error(ErrorKind::InvalidParameter,
                    "beta[pivot-1] must be nonzero, otherwise AB = BA = 0");
    }
    const double gap = std::abs(upper - lambda * lower);
    if (gap > tol * std::max(1.0, std::abs(upper))) {
        throw Error(ErrorKind::InvalidParameter,
                    "beta[pivot] = " + scalar_text(upper) + " but lambda * beta[pivot-1] = " +
                        scalar_text(lambda * lower));
    }
    OperatorPair pair;
    pair.B = diagonal(betas);
    pair.A = zeros(betas.size(), betas.size());
    pair.A(pivot - 1, pivot) = 1.0;
    pair.declared_lambda = lambda;
    pair.label = "nilpotent-diag n=" + std::to_string(size) + " pivot=" + std::to_string(pivot) +
                 " lambda=" + scalar_text(lambda);
    return pair;
}

OperatorPair nilpotent_diag_pair_solved(std::vector<Scalar> betas, int pivot, Scalar lambda) {
    if (pivot < 1 || pivot >= static_cast<int>(betas.size())) {
        throw Error(ErrorKind::InvalidParameter, "pivot out of range");
    }
    betas[static_cast<std::size_t>(pivot)] = lambda * betas[static_cast<std::size_t>(pivot - 1)];
    return nilpotent_diag_pair(betas, pivot, lambda, 0.0);
}

OperatorPair jordan_pair(int dim, Scalar x, Scalar y, Scalar z, Scalar lambda) {
    require_nonzero(lambda);
    OperatorPair pair;
    if (dim == 2) {
        pair.B = zeros(2, 2);
        pair.B(1, 0) = 1.0;
        pair.A = zeros(2, 2);
        pair.A(0, 0) = x;
        pair.A(1, 0) = y;
        pair.A(1, 1) = lambda * x;
    } else if (dim == 3) {
        pair.B = zeros(3, 3);
        pair.B(1, 0) = 1.0;
        pair.B(2, 1) = 1.0;
        pair.A = zeros(3, 3);
        pair.A(0, 0) = x;
        pair.A(1, 0) = y;
        pair.A(1, 1) = lambda * x;
        pair.A(2, 0) = z;
        pair.A(2, 1) = lambda * y;
        pair.A(2, 2) = lambda * lambda * x;
    } else {
        throw Error(ErrorKind::InvalidParameter, "jordan pairs exist for dim 2 and 3 only");
    }
    pair.declared_lambda = lambda;
    pair.label = "jordan" + std::to_string(dim) + " lambda=" + scalar_text(lambda);
    return pair;
}

OperatorPair pauli_pair(PauliKind kind) {
    OperatorPair pair;
    pair.A = sigma_x();
    if (kind == PauliKind::XY) {
        pair.B = sigma_y();
        pair.declared_lambda = Scalar(-1.0);
        pair.label = "pauli-xy";
    } else {
        pair.B = (sigma_x() + sigma_y()) / std::sqrt(2.0);
        pair.label = "pauli-intertwiner";
    }
    return pair;
}

Scalar ipow(Scalar base, int exponent) {
    if (exponent < 0) {
        return Scalar(1.0) / ipow(base, -exponent);
    }
    Scalar result(1.0);
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Scalar q_bracket(int m, Scalar q) {
    validate_q(q);
    if (m < 0) {
        return -q_bracket(-m, q);
    }
    Scalar sum(0.0);
    for (int k = 0; k < m; ++k) {
        sum += ipow(q, m - 1 - 2 * k);
    }
    return sum;
}

Scalar q_bracket_closed_form(int m, Scalar q) {
    validate_q(q);
    return (ipow(q, m) - ipow(q, -m)) / (q - Scalar(1.0) / q);
}

UqSl2Module uq_sl2_module(int n, Scalar q, int eps, UqNormalization normalization) {
    if (n < 0) {
        throw Error(ErrorKind::InvalidParameter, "module index n must be >= 0");
    }
    if (eps != 1 && eps != -1) {
        throw Error(ErrorKind::InvalidParameter, "eps must be +1 or -1");
    }
    validate_q(q);
    const auto dim = static_cast<std::size_t>(n + 1);

    UqSl2Module mod;
    mod.n = n;
    mod.q = q;
    mod.eps = eps;
    mod.normalization = normalization;
    mod.E = zeros(dim, dim);
    mod.F = zeros(dim, dim);
    mod.K = zeros(dim, dim);
    mod.Kinv = zeros(dim, dim);
    const double sign = static_cast<double>(eps);
    for (int i = 0; i < n; ++i) {
        if (normalization == UqNormalization::Bracket) {
            mod.E(i, i + 1) = sign * q_bracket(n - i, q);
            mod.F(i + 1, i) = q_bracket(i + 1, q);
        } else {
            mod.E(i, i + 1) = sign * q_bracket(i + 1, q) * q_bracket(n - i, q);
            mod.F(i + 1, i) = 1.0;
        }
    }
    for (int i = 0; i <= n; ++i) {
        mod.K(i, i) = sign * ipow(q, n - 2 * i);
        mod.Kinv(i, i) = sign * ipow(q, 2 * i - n);
    }
    return mod;
}

RelationResiduals verify_uq_relations(const UqSl2Module &mod, double tol) {
    const auto dim = static_cast<std::size_t>(mod.n + 1);
    const ComplexMatrix id = identity(dim);
    const Scalar q2 = mod.q * mod.q;

    RelationResiduals out;
    out.kk_inv = std::max(relative_distance(mod.K * mod.Kinv, id, id),
                          relative_distance(mod.Kinv * mod.K, id, id));
    const ComplexMatrix q2e = q2 * mod.E;
    out.ke_rel = relative_distance(mod.K * mod.E * mod.Kinv, q2e, q2e);
    const ComplexMatrix qm2f = mod.F / q2;
    out.kf_rel = relative_distance(mod.K * mod.F * mod.Kinv, qm2f, qm2f);
    const ComplexMatrix cartan = (mod.K - mod.Kinv) / (mod.q - Scalar(1.0) / mod.q);
    out.ef_rel = relative_distance(mod.E * mod.F - mod.F * mod.E, cartan, cartan);

    out.factor_ke = detect_factor(uq_sl2_pair(mod, UqGenerator::E), tol);
    out.factor_kf = detect_factor(uq_sl2_pair(mod, UqGenerator::F), tol);
    return out;
}

OperatorPair uq_sl2_pair(const UqSl2Module &mod, UqGenerator generator) {
    OperatorPair pair;
    pair.A = mod.K;
    const Scalar q2 = mod.q * mod.q;
    if (generator == UqGenerator::E) {
        pair.B = mod.E;
        pair.declared_lambda = q2;
    } else {
        pair.B = mod.F;
        pair.declared_lambda = Scalar(1.0) / q2;
    }
    pair.label = std::string("uq-sl2 (K,") + (generator == UqGenerator::E ? "E" : "F") +
                 ") n=" + std::to_string(mod.n) + " q=" + scalar_text(mod.q) +
                 " eps=" + std::to_string(mod.eps);
    return pair;
}

OperatorPair generate(const RealizationSpec &spec, double tol) {
    const RealizationParams &p = spec.params;
    auto need_n = [&]() {
        if (!p.n) {
            throw Error(ErrorKind::InvalidParameter, to_string(spec.kind) + " needs n");
        }
        return *p.n;
    };
    auto need_lambda = [&]() {
        if (!p.lambda) {
            throw Error(ErrorKind::InvalidParameter, to_string(spec.kind) + " needs lambda");
        }
        return *p.lambda;
    };
    switch (spec.kind) {
        case RealizationKind::ClockShift:
            return clock_shift_pair(need_n());
        case RealizationKind::CyclicShiftDiag:
            return cyclic_shift_diag_pair(need_n(), need_lambda(), tol);
        case RealizationKind::NilpotentDiag: {
            const int pivot = p.pivot.value_or(1);
            if (p.solve_pivot) {
                return nilpotent_diag_pair_solved(p.betas, pivot, need_lambda());
            }
            return nilpotent_diag_pair(p.betas, pivot, need_lambda(), tol);
        }
        case RealizationKind::Jordan2:
            return jordan_pair(2, p.x, p.y, p.z, need_lambda());
        case RealizationKind::Jordan3:
            return jordan_pair(3, p.x, p.y, p.z, need_lambda());
        case RealizationKind::PauliXY:
            return pauli_pair(PauliKind::XY);
        case RealizationKind::PauliIntertwiner:
            return pauli_pair(PauliKind::Intertwiner);
        case RealizationKind::UqSl2: {
            if (!p.q) {
                throw Error(ErrorKind::InvalidParameter, "uq-sl2 needs q");
            }
            const UqSl2Module mod = uq_sl2_module(need_n(), *p.q, p.eps, p.normalization);
            return uq_sl2_pair(mod, p.generator);
        }
    }
    throw Error(ErrorKind::InvalidParameter, "unknown realization kind");
}

}  // namespace skewcomm
