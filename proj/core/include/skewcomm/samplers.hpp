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

// Seeded samplers for structured operator pairs.

#pragma once

#include "skewcomm/commutation.hpp"
#include "skewcomm/random.hpp"
#include "skewcomm/realizations.hpp"

namespace skewcomm {

struct RealizationSampling {
    bool unit_modulus_only = false;  // restrict to |lambda| = 1
    bool non_unit_only = false;      // restrict to |lambda| != 1
};

/// A random realization with a declared factor (every kind except the
/// intertwiner example).
RealizationSpec random_realization_spec(Rng &rng, RealizationSampling sampling = {});

/// q with |q| in [0.5, 2] and |q^2 - 1| >= 0.1.
Scalar random_q(Rng &rng);

/// Self-adjoint pairs with AB^2 = B^2A and BA^2 = A^2B: commuting pairs,
/// Pauli-type blocks tensored with commuting diagonals, and direct sums of
/// the two, conjugated by a Haar unitary. Dimension is at most max_dim.
OperatorPair random_intertwinable_pair(Rng &rng, int max_dim);

/// Positive A with a self-adjoint B that is block diagonal on the eigenspaces
/// of A.
OperatorPair random_positive_commuting_pair(Rng &rng, int max_dim);

/// Normal A = U diag(a) U^* where a contains planted pairs a_i = lambda a_j.
ComplexMatrix random_planted_normal(Rng &rng, int n, Scalar lambda);

}  // namespace skewcomm
