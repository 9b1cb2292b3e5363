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

#include "skewcomm/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace skewcomm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

// The standard distributions are implementation-defined; these are written
// out so trial inputs are identical across standard libraries.
double Rng::uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Rng::normal() { return complex_normal().real() * std::sqrt(2.0); }

// Box-Muller; u1 is kept away from zero so the logarithm stays finite.
Scalar Rng::complex_normal() {
    const double u1 = uniform(0x1.0p-53, 1.0);
    const double u2 = uniform(0.0, 1.0);
    const double radius = std::sqrt(-std::log(u1));
    return std::polar(radius, kTwoPi * u2);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            out(i, j) = rng.complex_normal();
        }
    }
    return out;
}

ComplexMatrix random_hermitian(std::size_t n, Rng &rng) {
    const ComplexMatrix g = ginibre(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_psd(std::size_t n, std::size_t rank, Rng &rng) {
    const ComplexMatrix g = ginibre(n, rank, rng);
    const ComplexMatrix out = g * g.adjoint();
    return 0.5 * (out + out.adjoint());
}

ComplexMatrix random_unitary(std::size_t n, Rng &rng) {
    const ComplexMatrix g = ginibre(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Scalar d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(j) *= d / mag;
        }
    }
    return q;
}

}  // namespace skewcomm
