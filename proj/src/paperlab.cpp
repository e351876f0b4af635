// Copyright 2026 The qortho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qortho/paperlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qortho/errors.hpp"
#include "qortho/linalg.hpp"
#include "qortho/mub.hpp"

namespace qortho {

namespace {

void require_delta(double delta) {
  if (!std::isfinite(delta) || delta < 0) {
    throw InputError("delta must be finite and non-negative");
  }
}

}  // namespace

CMatrix perturbation_generator(double delta) {
  CMatrix t = CMatrix::Zero(4, 4);
  t(0, 0) = delta;
  t(1, 1) = -delta;
  return t;
}

CMatrix subsystem_unitary() {
  const Complex i(0, 1);
  CMatrix u(4, 4);
  u << 1, 0, -i, 0,
       0, 1, 0, i,
       0, 1, 0, -i,
       1, 0, i, 0;
  return u / std::numbers::sqrt2;
}

CMatrix hybrid_offdiagonal() {
  CMatrix x = CMatrix::Zero(4, 4);
  x.block(0, 2, 2, 2) = pauli::x();
  x.block(2, 0, 2, 2) = pauli::x();
  return x;
}

AlgebraSpec hybrid_a_spec() { return AlgebraSpec::blocks(4, {2, 2}); }

AlgebraSpec hybrid_b_spec() {
  return AlgebraSpec::span(4, {CMatrix::Identity(4, 4), hybrid_offdiagonal()});
}

AlgebraSpec subsystem_a_spec() { return AlgebraSpec::masa(standard_basis(4)); }

AlgebraSpec subsystem_b_spec() {
  std::vector<CMatrix> units;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      units.push_back(kron(CMatrix::Identity(2, 2), matrix_unit(2, i, j)));
    }
  }
  // conjugated(W, S) builds W S W^*, so W = U^* gives U^* S U
  return AlgebraSpec::conjugated(subsystem_unitary().adjoint(),
                                 AlgebraSpec::span(4, std::move(units)));
}

double hybrid_closed_form(double delta) {
  return 0.5 * (std::cosh(4 * delta) + std::cosh(2 * delta));
}

double subsystem_closed_form(double delta) {
  const double e = std::exp(4 * delta);
  return 0.25 * std::exp(-4 * delta) * (e + 1) * (e + 1);
}

PerturbedExample example_hybrid(double delta) {
  require_delta(delta);
  auto a = build(hybrid_a_spec());
  auto b = build(hybrid_b_spec());
  // C = V B V^*
  const CMatrix v = expm(perturbation_generator(delta));
  std::vector<CMatrix> c;
  for (const auto& e : b.basis()) c.push_back(v * e * v.adjoint());
  return {{ExampleName::Hybrid, delta, 4}, std::move(a), std::move(b), v, std::move(c),
          hybrid_closed_form(delta)};
}

PerturbedExample example_subsystem(double delta) {
  require_delta(delta);
  auto a = build(subsystem_a_spec());
  auto b = build(subsystem_b_spec());
  // C = (e^T)^* B e^T
  const CMatrix w = expm(perturbation_generator(delta));
  std::vector<CMatrix> c;
  for (const auto& e : b.basis()) c.push_back(w.adjoint() * e * w);
  return {{ExampleName::Subsystem, delta, 4}, std::move(a), std::move(b), w, std::move(c),
          subsystem_closed_form(delta)};
}

ExampleEvaluation evaluate(const PerturbedExample& ex, double tol) {
  ExampleEvaluation out;
  out.report = analyze_frames(ex.a.ambient(), ex.a.basis(), ex.c, tol);
  out.expected_q = ex.expected_q;
  out.abs_diff = std::abs(out.report.q - ex.expected_q);
  out.rel_diff = out.abs_diff / std::abs(ex.expected_q);
  return out;
}

MubExample example_mub(std::size_t n, double tol) {
  if (n < 2) throw InputError("mub example needs n >= 2");
  auto a = masa_of(standard_basis(n));
  auto b = masa_of(fourier_basis(n));
  auto report = analyze(a, b, tol);
  const double eps = unbiasedness_epsilon(BasisFamily{n, {standard_basis(n), fourier_basis(n)}});
  return {n, std::move(a), std::move(b), report, eps};
}

TrialReport run_trials(const TrialConfig& cfg) {
  if (cfg.count == 0) throw InputError("trial count must be at least 1");
  if (cfg.spec_a.n != cfg.n || cfg.spec_b.n != cfg.n) {
    throw DimensionError("trial specs do not match n = " + std::to_string(cfg.n));
  }
  const auto a = build(cfg.spec_a);
  const auto b0 = build(cfg.spec_b);

  TrialReport r;
  r.n = cfg.n;
  r.seed = cfg.seed;
  r.count = cfg.count;
  r.dim_a = a.dim();
  r.dim_b = b0.dim();
  r.q_min = std::numeric_limits<double>::infinity();
  r.q_max = -std::numeric_limits<double>::infinity();
  double q_sum = 0.0;

  // Trial 0 is the pair as given; trial t > 0 conjugates B by haar_unitary(n, seed + t).
  for (std::size_t t = 0; t < cfg.count; ++t) {
    const std::uint64_t trial_seed = cfg.seed + t;
    OrthogonalityReport rep;
    try {
      const CMatrix u = t == 0 ? CMatrix::Identity(cfg.n, cfg.n) : haar_unitary(cfg.n, trial_seed);
      const auto b = build(AlgebraSpec::conjugated(u, cfg.spec_b));
      rep = analyze(a, b, cfg.tol);
    } catch (const Error& e) {
      throw InternalConsistencyError("trial " + std::to_string(t) + " (seed " +
                                     std::to_string(trial_seed) + "): " + e.what());
    }
    r.q_min = std::min(r.q_min, rep.q);
    r.q_max = std::max(r.q_max, rep.q);
    q_sum += rep.q;
    r.eps_max = std::max({r.eps_max, rep.eps_a_privatizes_b, rep.eps_b_privatizes_a});
    r.max_route_spread = std::max(r.max_route_spread, rep.route_spread);
    r.max_frobenius_residual = std::max(r.max_frobenius_residual, rep.frobenius_residual);
    if (!rep.forward_bound_ok) ++r.forward_violations;
    if (!rep.converse_bound_ok) ++r.converse_violations;
    if (!rep.forward_bound_ok || !rep.converse_bound_ok) {
      r.violations.push_back({t, trial_seed, rep.q, rep.eps_a_privatizes_b,
                              rep.eps_b_privatizes_a, rep.forward_bound_ok,
                              rep.converse_bound_ok});
    }
  }
  r.q_mean = q_sum / static_cast<double>(cfg.count);
  return r;
}

}  // namespace qortho
