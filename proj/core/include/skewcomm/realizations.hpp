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

// Finite-dimensional operator pairs with a known commutation factor, and the
// simple U_q(sl2) modules.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewcomm/commutation.hpp"
#include "skewcomm/linalg.hpp"

namespace skewcomm {

enum class RealizationKind {
    ClockShift,
    CyclicShiftDiag,
    NilpotentDiag,
    Jordan2,
    Jordan3,
    PauliXY,
    PauliIntertwiner,
    UqSl2,
};

/// CLI spelling, e.g. "clock-shift".
std::string to_string(RealizationKind kind);
std::optional<RealizationKind> parse_realization_kind(const std::string &name);
const std::vector<RealizationKind> &all_realization_kinds();

enum class PauliKind { XY, Intertwiner };

/// Which generator pairs with K in a generated U_q(sl2) pair.
enum class UqGenerator { E, F };

/// Basis normalization of the simple U_q(sl2) module.
///  Bracket:   E = eps * superdiag([n], ..., [1]), F = subdiag([1], ..., [n]).
///  UnitLower: F = subdiag(1, ..., 1), E = eps * superdiag([1][n], [2][n-1], ...).
/// The two are conjugate by a diagonal matrix; for n = 2 the second one is
/// the three-dimensional realization with E entries q + 1/q and unit F.
enum class UqNormalization { Bracket, UnitLower };

struct RealizationParams {
    std::optional<int> n;
    std::optional<Scalar> lambda;
    Scalar x{1.0, 0.0};
    Scalar y{0.0, 0.0};
    Scalar z{0.0, 0.0};
    std::optional<Scalar> q;
    int eps = 1;
    std::vector<Scalar> betas;
    std::optional<int> pivot;
    bool solve_pivot = false;  // nilpotent-diag: set beta[pivot] := lambda * beta[pivot-1]
    UqGenerator generator = UqGenerator::E;
    UqNormalization normalization = UqNormalization::Bracket;
};

struct RealizationSpec {
    RealizationKind kind = RealizationKind::PauliXY;
    RealizationParams params;
};

struct UqSl2Module {
    int n = 0;
    Scalar q{2.0, 0.0};
    int eps = 1;
    UqNormalization normalization = UqNormalization::Bracket;
    ComplexMatrix E;
    ComplexMatrix F;
    ComplexMatrix K;
    ComplexMatrix Kinv;
};

struct RelationResiduals {
    double kk_inv = 0.0;  // max(||K Kinv - I||, ||Kinv K - I||) relative
    double ke_rel = 0.0;  // ||K E Kinv - q^2 E|| relative
    double kf_rel = 0.0;  // ||K F Kinv - q^-2 F|| relative
    double ef_rel = 0.0;  // ||EF - FE - (K - Kinv)/(q - 1/q)|| relative
    FactorReport factor_ke;  // expected q^2
    FactorReport factor_kf;  // expected q^-2
};

/// B = diag(w^0, ..., w^(n-1)), w = exp(2 pi i / n); A e_j = e_(j-1 mod n).
OperatorPair clock_shift_pair(int n);

/// Cyclic shift with B e_j = lambda^j e_j. The wrap-around needs lambda^N = 1.
OperatorPair cyclic_shift_diag_pair(int n, Scalar lambda, double tol = kDefaultTol);

/// B = diag(betas); A e_pivot = e_(pivot-1), zero elsewhere.
/// Requires beta[pivot] = lambda * beta[pivot-1] with beta[pivot-1] != 0.
OperatorPair nilpotent_diag_pair(const std::vector<Scalar> &betas, int pivot, Scalar lambda,
                                 double tol = kDefaultTol);

/// Same, but overwrites beta[pivot] with lambda * beta[pivot-1].
OperatorPair nilpotent_diag_pair_solved(std::vector<Scalar> betas, int pivot, Scalar lambda);

/// B the lower shift, A lower triangular with geometric lambda weights.
OperatorPair jordan_pair(int dim, Scalar x, Scalar y, Scalar z, Scalar lambda);

OperatorPair pauli_pair(PauliKind kind);

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// Integer power by repeated squaring; exact for powers of two.
Scalar ipow(Scalar base, int exponent);

/// [m]_q as the sum q^(m-1) + q^(m-3) + ... + q^(1-m). [0] = 0, [-m] = -[m].
Scalar q_bracket(int m, Scalar q);

/// (q^m - q^-m) / (q - q^-1); cancels badly as q^2 -> 1.
Scalar q_bracket_closed_form(int m, Scalar q);

UqSl2Module uq_sl2_module(int n, Scalar q, int eps = 1,
                          UqNormalization normalization = UqNormalization::Bracket);

RelationResiduals verify_uq_relations(const UqSl2Module &mod, double tol = kDefaultTol);

/// (K, E) or (K, F) of the module, declared factor q^2 or q^-2.
OperatorPair uq_sl2_pair(const UqSl2Module &mod, UqGenerator generator);

/// Builds the pair a spec describes. Throws InvalidParameter.
OperatorPair generate(const RealizationSpec &spec, double tol = kDefaultTol);

}  // namespace skewcomm
