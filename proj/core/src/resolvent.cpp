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

#include "skewcomm/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "skewcomm/errors.hpp"

namespace skewcomm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// No spectrum guard; callers have already established w is safe.
ComplexMatrix lu_resolvent(const ComplexMatrix &a, Scalar w) {
    const auto n = static_cast<std::size_t>(a.rows());
    ComplexMatrix shifted = a;
    shifted.diagonal().array() -= w;
    Eigen::PartialPivLU<ComplexMatrix> lu(shifted);
    return lu.solve(identity(n));
}

double distance_to_spectrum(const std::vector<double> &spectrum, Scalar w) {
    double best = std::numeric_limits<double>::infinity();
    for (double ev : spectrum) {
        best = std::min(best, std::abs(Scalar(ev) - w));
    }
    return best;
}

// Fixed-shape pairwise summation keeps the result independent of the order in
// which node contributions were produced.
ComplexMatrix pairwise_sum(std::vector<ComplexMatrix> &terms, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
        return terms[lo];
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

struct QuadratureNode {
    double t;
    double weight;
};

// Legendre nodes on [-1, 1] by Newton iteration on P_m.
std::vector<QuadratureNode> gauss_legendre(int m) {
    std::vector<QuadratureNode> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) {
                break;
            }
        }
        out[static_cast<std::size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return out;
}

constexpr int kPanelOrder = 8;

std::vector<QuadratureNode> build_nodes(Interval interval, int nodes, QuadratureRule rule) {
    std::vector<QuadratureNode> out;
    if (rule == QuadratureRule::Trapezoid) {
        const double h = (interval.b - interval.a) / (nodes - 1);
        out.reserve(static_cast<std::size_t>(nodes));
        for (int k = 0; k < nodes; ++k) {
            const double w = (k == 0 || k == nodes - 1) ? 0.5 * h : h;
            out.push_back({interval.a + k * h, w});
        }
        return out;
    }
    const int panels = std::max(1, (nodes + kPanelOrder - 1) / kPanelOrder);
    const std::vector<QuadratureNode> ref = gauss_legendre(kPanelOrder);
    const double width = (interval.b - interval.a) / panels;
    out.reserve(static_cast<std::size_t>(panels * kPanelOrder));
    for (int p = 0; p < panels; ++p) {
        const double mid = interval.a + (p + 0.5) * width;
        for (const QuadratureNode &r : ref) {
            out.push_back({mid + 0.5 * width * r.t, 0.5 * width * r.weight});
        }
    }
    return out;
}

ComplexMatrix stone_quadrature(const ComplexMatrix &a, const std::vector<QuadratureNode> &nodes,
                               double epsilon) {
    std::vector<ComplexMatrix> terms(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const ComplexMatrix upper = lu_resolvent(a, Scalar(nodes[k].t, epsilon));
        const ComplexMatrix lower = lu_resolvent(a, Scalar(nodes[k].t, -epsilon));
        terms[k] = nodes[k].weight * (upper - lower);
    }
    return pairwise_sum(terms, 0, terms.size()) / Scalar(0.0, 2.0 * kPi);
}

void validate_interval(Interval interval) {
    if (!(interval.a < interval.b) || !std::isfinite(interval.a) || !std::isfinite(interval.b)) {
        throw Error(ErrorKind::InvalidParameter, "interval needs finite a < b");
    }
}

}  // namespace

ComplexMatrix resolvent(const ComplexMatrix &a, Scalar w, double tol) {
    require_square(a, "resolvent");
    const SpectrumSet spec = eigenvalues(a);
    double dist = std::numeric_limits<double>::infinity();
    for (const Scalar &ev : spec.values) {
        dist = std::min(dist, std::abs(ev - w));
    }
    if (within(dist, a.norm(), tol)) {
        throw Error(ErrorKind::SpectrumHit,
                    "w is within " + std::to_string(dist) + " of the spectrum");
    }
    return lu_resolvent(a, w);
}

ResolventNormReport resolvent_norm_report(const ComplexMatrix &a, Scalar w, double tol) {
    const HermitianEig eig = hermitian_eig(a, tol);
    const double dist = distance_to_spectrum(eig.eigenvalues, w);
    if (within(dist, a.norm(), tol)) {
        throw Error(ErrorKind::SpectrumHit,
                    "w is within " + std::to_string(dist) + " of the spectrum");
    }
    ResolventNormReport report;
    report.resolvent_norm = spectral_norm(lu_resolvent(a, w));
    report.inverse_distance = 1.0 / dist;
    report.holds = within(std::abs(report.resolvent_norm - report.inverse_distance),
                          report.inverse_distance, tol);
    return report;
}

bool resolvent_norm_check(const ComplexMatrix &a, Scalar w, double tol) {
    return resolvent_norm_report(a, w, tol).holds;
}

ComplexMatrix exact_projection(const ComplexMatrix &a, Interval interval, double tol) {
    validate_interval(interval);
    const HermitianEig eig = hermitian_eig(a, tol);
    const double guard = tol * std::max(1.0, a.norm());
    const auto n = static_cast<std::size_t>(a.rows());
    ComplexMatrix out = zeros(n, n);
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
        const double ev = eig.eigenvalues[i];
        if (std::abs(ev - interval.a) <= guard || std::abs(ev - interval.b) <= guard) {
            throw Error(ErrorKind::EndpointOnSpectrum,
                        "eigenvalue " + std::to_string(ev) + " sits on an interval endpoint");
        }
        if (ev > interval.a && ev < interval.b) {
            const auto col = eig.eigenvectors.col(static_cast<Eigen::Index>(i));
            out += col * col.adjoint();
        }
    }
    return out;
}

int default_stone_nodes(Interval interval, double epsilon) {
    const double spacing = epsilon / 5.0;
    const double count = std::ceil((interval.b - interval.a) / spacing) + 1.0;
    return std::max(16, static_cast<int>(std::min(count, 1e8)));
}

ProjectionResult stone_projection(const ComplexMatrix &a, const StoneQuadratureSpec &spec,
                                  double tol) {
    validate_interval(spec.interval);
    if (!(spec.epsilon > 0.0) || !std::isfinite(spec.epsilon)) {
        throw Error(ErrorKind::InvalidParameter, "epsilon must be positive");
    }
    const int nodes = spec.nodes > 0 ? spec.nodes : default_stone_nodes(spec.interval, spec.epsilon);
    if (nodes < 16) {
        throw Error(ErrorKind::InvalidParameter, "at least 16 quadrature nodes are required");
    }
    const HermitianEig eig = hermitian_eig(a, tol);
    const double guard = 10.0 * spec.epsilon;
    for (double ev : eig.eigenvalues) {
        const double gap = std::min(std::abs(ev - spec.interval.a), std::abs(ev - spec.interval.b));
        if (gap <= guard) {
            throw Error(ErrorKind::EndpointOnSpectrum,
                        "eigenvalue " + std::to_string(ev) + " lies within 10*epsilon of an endpoint");
        }
    }
    if (within(spec.epsilon, a.norm(), tol)) {
        throw Error(ErrorKind::SpectrumHit, "epsilon is below the resolvent guard");
    }

    const std::vector<QuadratureNode> fine = build_nodes(spec.interval, nodes, spec.rule);
    const std::vector<QuadratureNode> coarse =
        build_nodes(spec.interval, std::max(16, nodes / 2), spec.rule);

    ProjectionResult result;
    result.projection = stone_quadrature(a, fine, spec.epsilon);
    result.epsilon_used = spec.epsilon;
    result.nodes_used = static_cast<int>(fine.size());
    if (!all_finite(result.projection)) {
        throw Error(ErrorKind::ConvergenceFailure, "quadrature produced non-finite entries");
    }
    result.quadrature_error_estimate =
        (result.projection - stone_quadrature(a, coarse, spec.epsilon)).norm();
    result.exact_error = (result.projection - exact_projection(a, spec.interval, tol)).norm();
    return result;
}

TransportBoundReport transported_integrand_bound(const ComplexMatrix &a, Scalar lambda,
                                                 Interval interval, double epsilon, int nodes,
                                                 double tol) {
    const bool minus_one = lambda == Scalar(-1.0);
    if (!minus_one && lambda.imag() == 0.0) {
        throw Error(ErrorKind::InvalidParameter,
                    "the transported bound needs lambda = -1 or Im lambda != 0");
    }
    validate_interval(interval);
    if (interval.a <= 0.0) {
        throw Error(ErrorKind::InvalidParameter, "interval must lie in (0, inf)");
    }
    if (!(epsilon > 0.0) || nodes < 2) {
        throw Error(ErrorKind::InvalidParameter, "need epsilon > 0 and at least two nodes");
    }
    const HermitianEig eig = hermitian_eig(a, tol);
    if (eig.eigenvalues.front() < -tol * std::max(1.0, a.norm())) {
        throw Error(ErrorKind::InvalidParameter, "A must be positive semidefinite");
    }

    TransportBoundReport report;
    report.min_distance = std::numeric_limits<double>::infinity();
    const double guard = tol * std::max(1.0, a.norm());
    const double h = (interval.b - interval.a) / (nodes - 1);
    for (int k = 0; k < nodes; ++k) {
        const double t = interval.a + k * h;
        const Scalar w_plus = Scalar(t, epsilon) / lambda;
        const Scalar w_minus = Scalar(t, -epsilon) / lambda;
        const double d = std::min(distance_to_spectrum(eig.eigenvalues, w_plus),
                                  distance_to_spectrum(eig.eigenvalues, w_minus));
        if (d <= guard) {
            throw Error(ErrorKind::SpectrumHit, "transported node lands on the spectrum");
        }
        report.min_distance = std::min(report.min_distance, d);
        const ComplexMatrix diff = (lu_resolvent(a, w_plus) - lu_resolvent(a, w_minus)) / lambda;
        report.measured = std::max(report.measured, spectral_norm(diff));
    }
    const double mod2 = std::norm(lambda);
    report.bound = 2.0 * epsilon / (mod2 * report.min_distance * report.min_distance);
    // Equality is attained for lambda = -1; allow for rounding.
    report.holds = report.measured <= report.bound * (1.0 + 1e-10);
    return report;
}

}  // namespace skewcomm
