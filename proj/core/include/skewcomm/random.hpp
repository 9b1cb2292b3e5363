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

// Seeded random matrix ensembles for property trials.

#pragma once

#include <cstdint>
#include <random>

#include "skewcomm/linalg.hpp"

namespace skewcomm {

/// One step of the splitmix64 output function.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-trial seed: splitmix64 expansion of seed XOR index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    double normal();
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive
    Scalar complex_normal();          // E|z|^2 = 1

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
};

/// i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng);
ComplexMatrix random_hermitian(std::size_t n, Rng &rng);
/// G G^* with G of shape n x rank.
ComplexMatrix random_psd(std::size_t n, std::size_t rank, Rng &rng);
/// Haar-distributed unitary via QR of a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, Rng &rng);

}  // namespace skewcomm
