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

#include "skewcomm/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "skewcomm/commutation.hpp"
#include "skewcomm/errors.hpp"
#include "skewcomm/intertwiner.hpp"
#include "skewcomm/realizations.hpp"
#include "skewcomm/resolvent.hpp"
#include "skewcomm/samplers.hpp"

namespace skewcomm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = kTwoPi / 2.0;

// Published thresholds are stated for tol = 1e-9; they scale with the
// configured tolerance so a tighter tol tightens every check.
double scaled(const SuiteConfig &cfg, double at_default) { return at_default * cfg.tol / 1e-9; }

PropertyOutcome verdict(double magnitude, double threshold) {
    return {magnitude <= threshold, magnitude};
}

int random_dim(Rng &rng, const SuiteConfig &cfg, int lo = 2, int cap = 1 << 20) {
    return rng.uniform_int(lo, std::max(lo, std::min(cfg.max_dim, cap)));
}

Scalar random_nonzero(Rng &rng, double lo, double hi) {
    return std::polar(rng.uniform(lo, hi), rng.uniform(0.0, kTwoPi));
}

double max_abs(const std::vector<Scalar> &values) {
    double out = 0.0;
    for (const Scalar &v : values) {
        out = std::max(out, std::abs(v));
    }
    return out;
}

// Diagonal entries spaced at least 0.2 apart, conjugated by a Haar unitary.
ComplexMatrix random_separated_hermitian(Rng &rng, int n, std::vector<double> &spectrum) {
    spectrum.assign(static_cast<std::size_t>(n), 0.0);
    double value = rng.uniform(-3.0, -1.0);
    std::vector<Scalar> diag;
    for (int i = 0; i < n; ++i) {
        spectrum[static_cast<std::size_t>(i)] = value;
        diag.emplace_back(value);
        value += rng.uniform(0.2, 1.0);
    }
    const ComplexMatrix u = random_unitary(static_cast<std::size_t>(n), rng);
    ComplexMatrix a = u * diagonal(diag) * u.adjoint();
    return 0.5 * (a + a.adjoint());
}

// Interval with endpoints at midpoints of spectral gaps (or 0.5 past the ends).
Interval random_gap_interval(Rng &rng, const std::vector<double> &spectrum) {
    const int n = static_cast<int>(spectrum.size());
    auto cut = [&](int gap) {
        if (gap == 0) {
            return spectrum.front() - 0.5;
        }
        if (gap == n) {
            return spectrum.back() + 0.5;
        }
        return 0.5 * (spectrum[static_cast<std::size_t>(gap - 1)] +
                      spectrum[static_cast<std::size_t>(gap)]);
    };
    const int lo = rng.uniform_int(0, n - 1);
    const int hi = rng.uniform_int(lo + 1, n);
    return {cut(lo), cut(hi)};
}

Json interval_json(Interval j) { return Json::array({j.a, j.b}); }

// ---------------------------------------------------------------- matrix core

PropertyOutcome adjoint_involution(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix m = ginibre(static_cast<std::size_t>(random_dim(rng, cfg, 1)),
                                    static_cast<std::size_t>(random_dim(rng, cfg, 1)), rng);
    in["M"] = matrix_to_json(m);
    return verdict(frobenius_norm(adjoint(adjoint(m)) - m), 0.0);
}

PropertyOutcome ab_ba_spectrum(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const auto n = static_cast<std::size_t>(random_dim(rng, cfg));
    const ComplexMatrix m = ginibre(n, n, rng);
    const ComplexMatrix k = ginibre(n, n, rng);
    in["M"] = matrix_to_json(m);
    in["N"] = matrix_to_json(k);
    const double thr = scaled(cfg, 1e-7);
    const SpectrumMatchReport r =
        match_spectra(eigenvalues(m * k).values, eigenvalues(k * m).values, thr);
    return verdict(r.max_pair_distance, thr);
}

PropertyOutcome polar_decomposition(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const auto n = static_cast<std::size_t>(random_dim(rng, cfg));
    const auto r = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n)));
    const ComplexMatrix c = ginibre(n, r, rng) * ginibre(r, n, rng);
    in["C"] = matrix_to_json(c);
    const PolarParts parts = polar(c, cfg.tol);
    const double scale = std::max(1.0, c.norm());
    const ComplexMatrix p = parts.V.adjoint() * parts.V;
    const double idem = (p * p - p).norm();
    const double herm = (p - p.adjoint()).norm();
    const double rec = (parts.V * parts.absC - c).norm() / scale;
    const HermitianEig eig = hermitian_eig(parts.absC, cfg.tol);
    const double negativity = std::max(0.0, -eig.eigenvalues.front()) / scale;
    return verdict(std::max({rec, idem, herm, negativity}), scaled(cfg, 1e-9));
}

PropertyOutcome hermitian_eig_reconstruction(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix m = random_hermitian(static_cast<std::size_t>(random_dim(rng, cfg, 1)), rng);
    in["M"] = matrix_to_json(m);
    const HermitianEig eig = hermitian_eig(m, cfg.tol);
    std::vector<Scalar> d(eig.eigenvalues.begin(), eig.eigenvalues.end());
    const ComplexMatrix rec = eig.eigenvectors * diagonal(d) * eig.eigenvectors.adjoint();
    return verdict(relative_distance(rec, m, m), scaled(cfg, 1e-9));
}

PropertyOutcome svd_reconstruction(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix m = ginibre(static_cast<std::size_t>(random_dim(rng, cfg, 1)),
                                    static_cast<std::size_t>(random_dim(rng, cfg, 1)), rng);
    in["M"] = matrix_to_json(m);
    const Svd s = svd(m);
    ComplexMatrix sigma = ComplexMatrix::Zero(s.W.cols(), s.X.cols());
    for (std::size_t i = 0; i < s.singulars.size(); ++i) {
        sigma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = s.singulars[i];
    }
    bool ordered = s.singulars.empty() || s.singulars.back() >= 0.0;
    for (std::size_t i = 1; i < s.singulars.size(); ++i) {
        ordered = ordered && s.singulars[i - 1] >= s.singulars[i];
    }
    const double err = relative_distance(s.W * sigma * s.X.adjoint(), m, m);
    PropertyOutcome out = verdict(err, scaled(cfg, 1e-9));
    out.ok = out.ok && ordered;
    return out;
}

// ---------------------------------------------------------------- commutation

OperatorPair realization_case(Rng &rng, const SuiteConfig &cfg, Json &in,
                              RealizationSampling sampling = {}) {
    const RealizationSpec spec = random_realization_spec(rng, sampling);
    in["realization"] = to_json(spec);
    return generate(spec, cfg.tol);
}

PropertyOutcome factor_scale_invariance(Rng &rng, const SuiteConfig &cfg, Json &in) {
    OperatorPair pair;
    if (rng.uniform(0.0, 1.0) < 0.25) {
        const auto n = static_cast<std::size_t>(random_dim(rng, cfg));
        pair.A = ginibre(n, n, rng);
        pair.B = ginibre(n, n, rng);
        in["pair"] = pair_to_json(pair);
    } else {
        pair = realization_case(rng, cfg, in);
    }
    const Scalar alpha = random_nonzero(rng, 0.5, 2.0);
    const Scalar beta = random_nonzero(rng, 0.5, 2.0);
    in["alpha"] = scalar_to_json(alpha);
    in["beta"] = scalar_to_json(beta);
    const FactorReport base = detect_factor(pair, cfg.tol);
    OperatorPair rescaled = pair;
    rescaled.A *= alpha;
    rescaled.B *= beta;
    const FactorReport moved = detect_factor(rescaled, cfg.tol);
    if (base.status != moved.status) {
        return {false, std::numeric_limits<double>::infinity()};
    }
    if (base.status != FactorStatus::Unique) {
        return {};
    }
    const double scale = std::max(1.0, std::abs(*base.lambda_hat));
    return verdict(std::abs(*base.lambda_hat - *moved.lambda_hat) / scale, scaled(cfg, 1e-12));
}

PropertyOutcome factor_swap_inverse(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const OperatorPair pair = realization_case(rng, cfg, in);
    const FactorReport fwd = detect_factor(pair, cfg.tol);
    if (fwd.status != FactorStatus::Unique) {
        return {};
    }
    const FactorReport rev = detect_factor({pair.B, pair.A, std::nullopt, ""}, cfg.tol);
    if (rev.status != FactorStatus::Unique) {
        return {false, rev.residual};
    }
    const Scalar expected = 1.0 / *fwd.lambda_hat;
    const double err = std::abs(*rev.lambda_hat - expected) / std::max(1.0, std::abs(expected));
    return verdict(err, 10.0 * cfg.tol);
}

PropertyOutcome product_spectra(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const OperatorPair pair = realization_case(rng, cfg, in);
    const FactorReport f = detect_factor(pair, cfg.tol);
    if (f.status != FactorStatus::Unique || f.residual > scaled(cfg, 1e-10)) {
        return {};
    }
    const double thr = cfg.tol * std::max(1.0, f.ab_norm);
    const SpectrumMatchReport swap = spectrum_swap_check(pair, thr);
    const SpectrumMatchReport rot =
        spectrum_rotation_check(eigenvalues(pair.A * pair.B), *f.lambda_hat, thr);
    return verdict(std::max(swap.max_pair_distance, rot.max_pair_distance), thr);
}

PropertyOutcome quasi_nilpotent_product(Rng &rng, const SuiteConfig &cfg, Json &in) {
    OperatorPair pair;
    if (rng.uniform(0.0, 1.0) < 0.5) {
        // The worked nilpotent-diagonal example, |lambda| in {1/3, 3}.
        const int size = rng.uniform_int(2, 6);
        std::vector<Scalar> betas;
        for (int i = 0; i < size; ++i) {
            betas.push_back(random_nonzero(rng, 0.5, 2.0));
        }
        const int pivot = rng.uniform_int(1, size - 1);
        const double modulus = rng.uniform(0.0, 1.0) < 0.5 ? 1.0 / 3.0 : 3.0;
        const Scalar lambda = std::polar(modulus, rng.uniform(0.0, kTwoPi));
        pair = nilpotent_diag_pair_solved(betas, pivot, lambda);
        in["pair"] = pair_to_json(pair);
    } else {
        pair = realization_case(rng, cfg, in, {.non_unit_only = true});
    }
    const FactorReport f = detect_factor(pair, cfg.tol);
    if (f.status != FactorStatus::Unique || std::abs(std::abs(*f.lambda_hat) - 1.0) <= 1e-6 ||
        f.ab_norm <= 1e-6) {
        return {};
    }
    const double radius = max_abs(eigenvalues(pair.A * pair.B).values) / f.ab_norm;
    return verdict(radius, scaled(cfg, 1e-7));
}

PropertyOutcome positive_anticommutant(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int n = random_dim(rng, cfg, 1, 6);
    const int rank = rng.uniform_int(1, n);
    const ComplexMatrix a =
        random_psd(static_cast<std::size_t>(n), static_cast<std::size_t>(rank), rng);
    in["A"] = matrix_to_json(a);
    double worst = 0.0;
    for (const ComplexMatrix &b : solve_lambda_commutant(a, -1.0, cfg.tol)) {
        worst = std::max(worst, (a * b).norm());
    }
    return verdict(worst, scaled(cfg, 1e-9));
}

PropertyOutcome commutant_residual(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int n = random_dim(rng, cfg);
    const Scalar lambda = rng.uniform(0.0, 1.0) < 0.3 ? std::polar(1.0, rng.uniform(0.0, kTwoPi))
                                                      : random_nonzero(rng, 0.5, 2.0);
    const ComplexMatrix a = random_planted_normal(rng, n, lambda);
    in["A"] = matrix_to_json(a);
    in["lambda"] = scalar_to_json(lambda);
    double worst = 0.0;
    for (const ComplexMatrix &b : solve_lambda_commutant(a, lambda, cfg.tol)) {
        const double scale = std::max(1.0, a.norm() * b.norm());
        worst = std::max(worst, (a * b - lambda * b * a).norm() / scale);
    }
    return verdict(worst, scaled(cfg, 1e-8));
}

PropertyOutcome measurement_map(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const OperatorPair pair = realization_case(rng, cfg, in, {.unit_modulus_only = true});
    const FactorReport f = detect_factor(pair, cfg.tol);
    if (f.status != FactorStatus::Unique || f.residual > scaled(cfg, 1e-10) ||
        std::abs(std::abs(*f.lambda_hat) - 1.0) > 10.0 * cfg.tol) {
        return {};
    }
    const std::uint64_t seed = rng.engine()();
    in["map_seed"] = seed;
    return {measurement_map_check(pair, 10, seed, cfg.tol), 0.0};
}

// ---------------------------------------------------------------- intertwiner

PropertyOutcome intertwining_criterion_outcome(const OperatorPair &pair, const SuiteConfig &cfg) {
    const GudderNagyReport r = gudder_nagy_check(pair, scaled(cfg, 1e-8));
    return {r.consistent, std::max({r.lhs_residual, r.rhs_a2_residual, r.rhs_b2_residual})};
}

PropertyOutcome intertwining_criterion_random(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const auto n = static_cast<std::size_t>(random_dim(rng, cfg));
    OperatorPair pair{random_hermitian(n, rng), random_hermitian(n, rng), std::nullopt, ""};
    in["pair"] = pair_to_json(pair);
    return intertwining_criterion_outcome(pair, cfg);
}

PropertyOutcome intertwining_criterion_structured(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const OperatorPair pair = rng.uniform(0.0, 1.0) < 0.75
                                  ? random_intertwinable_pair(rng, cfg.max_dim)
                                  : random_positive_commuting_pair(rng, cfg.max_dim);
    in["pair"] = pair_to_json(pair);
    PropertyOutcome out = intertwining_criterion_outcome(pair, cfg);
    // Structured pairs satisfy both sides, so consistency alone is not enough.
    const GudderNagyReport r = gudder_nagy_check(pair, scaled(cfg, 1e-8));
    out.ok = out.ok && r.lhs_holds && r.rhs_holds;
    return out;
}

PropertyOutcome intertwiner_invariants(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const OperatorPair pair = random_intertwinable_pair(rng, cfg.max_dim);
    in["pair"] = pair_to_json(pair);
    const UnitaryIntertwiner ui = construct_intertwiner(pair, cfg.tol);
    const ComplexMatrix ab = pair.A * pair.B;
    const double scale = std::max(1.0, ab.norm());
    const auto n = static_cast<std::size_t>(ab.rows());
    const double unitary = (ui.U.adjoint() * ui.U - identity(n)).norm() / scaled(cfg, 1e-9);
    const double inter = (ab - ui.U * pair.B * pair.A).norm() / scale / scaled(cfg, 1e-8);
    const double commute = (ab * ui.U - ui.U * ab).norm() / scale / scaled(cfg, 1e-8);
    const ComplexMatrix pap = ui.P * pair.A * ui.P;
    const ComplexMatrix pbp = ui.P * pair.B * ui.P;
    const double compress = (ab - pap * pbp).norm() / scale / scaled(cfg, 1e-8);
    // Magnitude is the worst ratio to its own threshold.
    return verdict(std::max({unitary, inter, commute, compress}), 1.0);
}

PropertyOutcome positive_case_commutes(Rng &rng, const SuiteConfig &cfg, Json &in) {
    OperatorPair pair = random_positive_commuting_pair(rng, cfg.max_dim);
    if (rng.uniform(0.0, 1.0) < 0.5) {
        std::swap(pair.A, pair.B);
    }
    in["pair"] = pair_to_json(pair);
    if (!norm_condition(pair, cfg.tol).holds) {
        return {false, std::numeric_limits<double>::infinity()};
    }
    const ComplexMatrix ab = pair.A * pair.B;
    const double comm = (ab - pair.B * pair.A).norm() / std::max(1.0, ab.norm());
    return verdict(comm, scaled(cfg, 1e-8));
}

// ---------------------------------------------------------------- realizations

PropertyOutcome declared_factor(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const OperatorPair pair = realization_case(rng, cfg, in);
    const FactorReport f = detect_factor(pair, cfg.tol);
    const ClassificationReport c = classify_pair(pair, cfg.tol);
    if (!c.consistent) {
        in["violations"] = c.violations;
        return {false, f.residual};
    }
    if (f.status == FactorStatus::Any) {
        return {};
    }
    if (f.status != FactorStatus::Unique) {
        return {false, f.residual};
    }
    const Scalar declared = *pair.declared_lambda;
    const double err = std::abs(*f.lambda_hat - declared) / std::max(1.0, std::abs(declared));
    return verdict(err, scaled(cfg, 1e-10));
}

PropertyOutcome clock_shift_structure(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int n = rng.uniform_int(2, 10);
    in["n"] = n;
    const OperatorPair pair = clock_shift_pair(n);
    const Scalar lambda = *pair.declared_lambda;
    const bool unitary = classify_structure(pair.A, cfg.tol).unitary &&
                         classify_structure(pair.B, cfg.tol).unitary;
    const double root = std::abs(ipow(lambda, n) - 1.0);
    const SpectrumMatchReport rot = spectrum_rotation_check(eigenvalues(pair.B), lambda, cfg.tol);
    PropertyOutcome out = verdict(std::max(root, rot.max_pair_distance), cfg.tol);
    out.ok = out.ok && unitary;
    return out;
}

PropertyOutcome nilpotent_diag_structure(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int size = rng.uniform_int(2, 6);
    std::vector<Scalar> betas;
    for (int i = 0; i < size; ++i) {
        betas.push_back(random_nonzero(rng, 0.5, 2.0));
    }
    const int pivot = rng.uniform_int(1, size - 1);
    Scalar lambda = random_nonzero(rng, 1.0 / 3.0, 3.0);
    if (std::abs(std::abs(lambda) - 1.0) < 0.1) {
        lambda *= 1.5;
    }
    const OperatorPair pair = nilpotent_diag_pair_solved(betas, pivot, lambda);
    in["pair"] = pair_to_json(pair);
    const ClassificationReport c = classify_pair(pair, cfg.tol);
    const bool ok = c.consistent && c.ab_quasi_nilpotent && !c.flags_A.invertible;
    return {ok, max_abs(eigenvalues(pair.A * pair.B).values)};
}

PropertyOutcome uq_relations(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int n = rng.uniform_int(0, 10);
    const Scalar q = random_q(rng);
    const int eps = rng.uniform(0.0, 1.0) < 0.5 ? 1 : -1;
    const UqNormalization norm =
        rng.uniform(0.0, 1.0) < 0.5 ? UqNormalization::Bracket : UqNormalization::UnitLower;
    in["n"] = n;
    in["q"] = scalar_to_json(q);
    in["eps"] = eps;
    in["normalization"] = norm == UqNormalization::Bracket ? "bracket" : "unit-lower";
    const UqSl2Module mod = uq_sl2_module(n, q, eps, norm);
    const RelationResiduals r = verify_uq_relations(mod, cfg.tol);
    const double rel = std::max({r.kk_inv, r.ke_rel, r.kf_rel, r.ef_rel});
    const double e_pow = matrix_power(mod.E, n + 1).norm() /
                         std::max(1.0, std::pow(mod.E.norm(), n + 1));
    const double f_pow = matrix_power(mod.F, n + 1).norm() /
                         std::max(1.0, std::pow(mod.F.norm(), n + 1));
    const bool nil = std::max(e_pow, f_pow) <= scaled(cfg, 1e-10);
    PropertyOutcome out = verdict(std::max({rel, e_pow, f_pow}), cfg.tol);
    out.ok = out.ok && nil;
    return out;
}

PropertyOutcome q_bracket_symmetry(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int m = rng.uniform_int(0, 12);
    const Scalar q = random_q(rng);
    in["m"] = m;
    in["q"] = scalar_to_json(q);
    // Rounding scale: the sum of term moduli in q^{m-1} + ... + q^{1-m}.
    double scale = 1.0;
    for (int k = 0; k < m; ++k) {
        scale += std::pow(std::abs(q), m - 1 - 2 * k);
    }
    const Scalar direct = q_bracket(m, q);
    const double sym = std::abs(direct - q_bracket(m, 1.0 / q)) / scale;
    const double closed = std::abs(direct - q_bracket_closed_form(m, q)) / scale;
    PropertyOutcome out = verdict(sym, scaled(cfg, 1e-12));
    out.ok = out.ok && closed <= cfg.tol;
    return out;
}

PropertyOutcome jordan_uq_identification(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const Scalar q = random_q(rng);
    in["q"] = scalar_to_json(q);
    const OperatorPair jp = jordan_pair(3, q * q, 0.0, 0.0, 1.0 / (q * q));
    const UqSl2Module mod = uq_sl2_module(2, q, 1, UqNormalization::UnitLower);
    const double scale = std::max(1.0, mod.K.cwiseAbs().maxCoeff());
    const double err =
        std::max((jp.A - mod.K).cwiseAbs().maxCoeff(), (jp.B - mod.F).cwiseAbs().maxCoeff());
    return verdict(err / scale, scaled(cfg, 1e-12));
}

// ---------------------------------------------------------------- resolvent

PropertyOutcome exact_projection_structure(Rng &rng, const SuiteConfig &cfg, Json &in) {
    std::vector<double> spectrum;
    const ComplexMatrix a = random_separated_hermitian(rng, random_dim(rng, cfg, 1), spectrum);
    const Interval j = random_gap_interval(rng, spectrum);
    in["A"] = matrix_to_json(a);
    in["interval"] = interval_json(j);
    const ComplexMatrix p = exact_projection(a, j, cfg.tol);
    const auto inside = std::count_if(spectrum.begin(), spectrum.end(),
                                      [&](double d) { return d > j.a && d < j.b; });
    const double tr = trace(p).real();
    const bool count_ok = std::lround(tr) == inside;
    PropertyOutcome out =
        verdict(std::max((p * p - p).norm(), (p - p.adjoint()).norm()), scaled(cfg, 1e-10));
    out.ok = out.ok && count_ok;
    return out;
}

PropertyOutcome stone_reference(Rng &, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix a = diagonal({1.0, 2.0, 3.0});
    in["A"] = matrix_to_json(a);
    in["interval"] = Json::array({1.5, 2.5});
    in["epsilon"] = 1e-3;
    in["nodes"] = 2000;
    const ProjectionResult r = stone_projection(a, {{1.5, 2.5}, 1e-3, 2000}, cfg.tol);
    return verdict(*r.exact_error, 5e-3);
}

PropertyOutcome stone_first_order(Rng &, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix a = diagonal({1.0, 2.0, 3.0});
    in["A"] = matrix_to_json(a);
    in["interval"] = Json::array({1.5, 2.5});
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    Json ratios = Json::array();
    for (double eps : {1e-2, 5e-3, 2.5e-3}) {
        const ProjectionResult r = stone_projection(a, {{1.5, 2.5}, eps, 0}, cfg.tol);
        const double ratio = *r.exact_error / eps;
        ratios.push_back(ratio);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    in["error_over_epsilon"] = ratios;
    return verdict(hi / lo, 1.5);
}

// Each eigenvalue d contributes at most (eps/pi)(1/|d-a| + 1/|d-b|) to the
// smoothing error, from the arctangent form of the Poisson integral.
PropertyOutcome stone_poisson_bound(Rng &rng, const SuiteConfig &cfg, Json &in) {
    std::vector<double> spectrum;
    const ComplexMatrix a =
        random_separated_hermitian(rng, random_dim(rng, cfg, 1, 4), spectrum);
    const Interval j = random_gap_interval(rng, spectrum);
    const double eps = rng.uniform(5e-3, 1e-2);
    in["A"] = matrix_to_json(a);
    in["interval"] = interval_json(j);
    in["epsilon"] = eps;
    const ProjectionResult r = stone_projection(a, {j, eps, 0}, cfg.tol);
    double bound = 0.0;
    for (double d : spectrum) {
        bound += eps / kPi * (1.0 / std::abs(d - j.a) + 1.0 / std::abs(d - j.b));
    }
    return verdict(*r.exact_error / (1.01 * bound + r.quadrature_error_estimate + cfg.tol), 1.0);
}

PropertyOutcome resolvent_identity(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix a = random_hermitian(static_cast<std::size_t>(random_dim(rng, cfg, 1)), rng);
    auto off_axis = [&]() {
        const double im = rng.uniform(0.5, 2.0);
        return Scalar(rng.uniform(-3.0, 3.0), rng.uniform(0.0, 1.0) < 0.5 ? -im : im);
    };
    const Scalar w1 = off_axis();
    const Scalar w2 = off_axis();
    in["A"] = matrix_to_json(a);
    in["w1"] = scalar_to_json(w1);
    in["w2"] = scalar_to_json(w2);
    const ComplexMatrix r1 = resolvent(a, w1, cfg.tol);
    const ComplexMatrix r2 = resolvent(a, w2, cfg.tol);
    const ComplexMatrix lhs = r1 - r2;
    const double err = (lhs - (w1 - w2) * r1 * r2).norm() / std::max(1.0, lhs.norm());
    return verdict(err, scaled(cfg, 1e-9));
}

PropertyOutcome resolvent_norm(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const ComplexMatrix a = random_hermitian(static_cast<std::size_t>(random_dim(rng, cfg, 1)), rng);
    const HermitianEig eig = hermitian_eig(a, cfg.tol);
    Scalar w;
    double dist = 0.0;
    do {
        w = Scalar(rng.uniform(-4.0, 4.0), rng.uniform(-1.0, 1.0));
        dist = std::numeric_limits<double>::infinity();
        for (double d : eig.eigenvalues) {
            dist = std::min(dist, std::abs(w - d));
        }
    } while (dist <= 0.1);
    in["A"] = matrix_to_json(a);
    in["w"] = scalar_to_json(w);
    const ResolventNormReport r = resolvent_norm_report(a, w, cfg.tol);
    const double gap = std::abs(r.resolvent_norm - r.inverse_distance) /
                       std::max(1.0, r.inverse_distance);
    PropertyOutcome out{r.holds, gap};
    return out;
}

PropertyOutcome transport_bound(Rng &rng, const SuiteConfig &cfg, Json &in) {
    const int n = random_dim(rng, cfg, 1, 6);
    const ComplexMatrix a = random_psd(static_cast<std::size_t>(n),
                                       static_cast<std::size_t>(rng.uniform_int(1, n)), rng);
    Scalar lambda(-1.0, 0.0);
    const int shape = rng.uniform_int(0, 2);
    if (shape > 0) {
        // Keep the angle off the real axis so Im(lambda) != 0.
        const double theta = rng.uniform(0.05, kPi - 0.05) * (rng.uniform(0.0, 1.0) < 0.5 ? 1 : -1);
        lambda = std::polar(shape == 1 ? 1.0 : rng.uniform(0.3, 3.0), theta);
    }
    const double lo = rng.uniform(0.1, 1.0);
    const Interval j{lo, lo + rng.uniform(0.5, 3.0)};
    const double eps = std::pow(10.0, rng.uniform(-4.0, -2.0));
    in["A"] = matrix_to_json(a);
    in["lambda"] = scalar_to_json(lambda);
    in["interval"] = interval_json(j);
    in["epsilon"] = eps;
    const TransportBoundReport r = transported_integrand_bound(a, lambda, j, eps, 256, cfg.tol);
    return {r.holds, r.measured / r.bound};
}

std::vector<PropertyDef> build_properties() {
    return {
        {"adjoint_involution", true, adjoint_involution},
        {"ab_ba_spectrum", true, ab_ba_spectrum},
        {"polar_decomposition", true, polar_decomposition},
        {"hermitian_eig_reconstruction", true, hermitian_eig_reconstruction},
        {"svd_reconstruction", true, svd_reconstruction},
        {"factor_scale_invariance", true, factor_scale_invariance},
        {"factor_swap_inverse", true, factor_swap_inverse},
        {"product_spectra", true, product_spectra},
        {"quasi_nilpotent_product", true, quasi_nilpotent_product},
        {"positive_anticommutant", true, positive_anticommutant},
        {"commutant_residual", true, commutant_residual},
        {"measurement_map", true, measurement_map},
        {"intertwining_criterion_random", true, intertwining_criterion_random},
        {"intertwining_criterion_structured", true, intertwining_criterion_structured},
        {"intertwiner_invariants", true, intertwiner_invariants},
        {"positive_case_commutes", true, positive_case_commutes},
        {"declared_factor", true, declared_factor},
        {"clock_shift_structure", true, clock_shift_structure},
        {"nilpotent_diag_structure", true, nilpotent_diag_structure},
        {"uq_relations", true, uq_relations},
        {"q_bracket_symmetry", true, q_bracket_symmetry},
        {"jordan_uq_identification", true, jordan_uq_identification},
        {"exact_projection_structure", true, exact_projection_structure},
        {"stone_reference", false, stone_reference},
        {"stone_first_order", false, stone_first_order},
        {"stone_poisson_bound", true, stone_poisson_bound},
        {"resolvent_identity", true, resolvent_identity},
        {"resolvent_norm", true, resolvent_norm},
        {"transport_bound", true, transport_bound},
    };
}

}  // namespace

const std::vector<PropertyDef> &suite_properties() {
    static const std::vector<PropertyDef> props = build_properties();
    return props;
}

SuiteOutcome run_suite(const SuiteConfig &config) { return run_suite(config, {}); }

SuiteOutcome run_suite(const SuiteConfig &config, const std::vector<std::string> &only) {
    if (config.trials < 1) {
        throw Error(ErrorKind::InvalidParameter, "trials must be at least 1");
    }
    if (!(config.tol > 0.0) || !std::isfinite(config.tol)) {
        throw Error(ErrorKind::InvalidParameter, "tol must be positive");
    }
    if (config.max_dim < 2) {
        throw Error(ErrorKind::InvalidParameter, "max_dim must be at least 2");
    }
    SuiteOutcome outcome;
    const auto &props = suite_properties();
    for (std::size_t p = 0; p < props.size(); ++p) {
        const PropertyDef &def = props[p];
        if (!only.empty() && std::find(only.begin(), only.end(), def.name) == only.end()) {
            continue;
        }
        PropertyTally tally{def.name};
        int recorded = 0;
        const int trials = def.per_trial ? config.trials : 1;
        for (int t = 0; t < trials; ++t) {
            Rng rng(derive_seed(derive_seed(config.seed, p), static_cast<std::uint64_t>(t)));
            Json inputs = Json::object();
            PropertyOutcome result;
            try {
                result = def.run(rng, config, inputs);
            } catch (const std::exception &e) {
                inputs["error"] = e.what();
                result = {false, std::numeric_limits<double>::quiet_NaN()};
            }
            if (std::isfinite(result.magnitude)) {
                tally.max_magnitude = std::max(tally.max_magnitude, result.magnitude);
            }
            if (result.ok) {
                ++tally.passed;
                continue;
            }
            ++tally.failed;
            if (recorded < kMaxRecordedFailures) {
                outcome.failures.push_back({def.name, t, result.magnitude, std::move(inputs)});
                ++recorded;
            } else {
                ++outcome.failures_omitted;
            }
        }
        outcome.passed += tally.passed;
        outcome.failed += tally.failed;
        outcome.properties.push_back(std::move(tally));
    }
    return outcome;
}

Json to_json(const SuiteConfig &config) {
    return {{"seed", config.seed},
            {"trials", config.trials},
            {"tol", config.tol},
            {"max_dim", config.max_dim}};
}

namespace {

Json magnitude_json(double m) {
    if (std::isnan(m)) {
        return nullptr;
    }
    if (std::isinf(m)) {
        return "inf";
    }
    return m;
}

}  // namespace

Json to_json(const SuiteOutcome &outcome) {
    Json props = Json::array();
    for (const PropertyTally &t : outcome.properties) {
        props.push_back({{"name", t.name},
                         {"passed", t.passed},
                         {"failed", t.failed},
                         {"max_magnitude", t.max_magnitude}});
    }
    Json failures = Json::array();
    for (const SuiteFailure &f : outcome.failures) {
        failures.push_back({{"property", f.property},
                            {"trial", f.trial},
                            {"magnitude", magnitude_json(f.magnitude)},
                            {"counterexample", f.counterexample}});
    }
    return {{"passed", outcome.passed},
            {"failed", outcome.failed},
            {"properties", props},
            {"failures", failures},
            {"failures_omitted", outcome.failures_omitted}};
}

}  // namespace skewcomm
