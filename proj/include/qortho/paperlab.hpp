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

#pragma once

// Generators for the three worked examples (hybrid M2 (+) M2 memory, the
// private-subsystem example, standard-vs-Fourier MASAs) and the randomized
// harness that checks the privacy/orthogonality inequalities on conjugated
// algebra pairs.
//
// The perturbed partner C in the hybrid and subsystem examples comes from a
// congruence by e^T with T real diagonal. That matrix is not unitary, so C is
// not a unital *-algebra; it is carried as the frame obtained by pushing B's
// orthonormal basis through the congruence, and Q(A, C) is the basis sum over
// that frame.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qortho/algebra.hpp"
#include "qortho/privacy.hpp"

namespace qortho {

enum class ExampleName { Hybrid, Subsystem, Mub };

struct ExampleCase {
  ExampleName name = ExampleName::Hybrid;
  double delta = 0.0;
  std::size_t n = 4;
};

/// diag(delta, -delta, 0, 0)
CMatrix perturbation_generator(double delta);
/// The 4x4 unitary (entries 0, +-1, +-i over sqrt 2) of the subsystem example.
CMatrix subsystem_unitary();
/// [[0, sigma_x], [sigma_x, 0]]
CMatrix hybrid_offdiagonal();

AlgebraSpec hybrid_a_spec();      // M2 (+) M2
AlgebraSpec hybrid_b_spec();      // span{I4, [[0, sx], [sx, 0]]}
AlgebraSpec subsystem_a_spec();   // diagonal 4x4
AlgebraSpec subsystem_b_spec();   // U^* (I2 (x) M2) U

double hybrid_closed_form(double delta);     // (cosh 4d + cosh 2d) / 2
double subsystem_closed_form(double delta);  // e^{-4d} (e^{4d} + 1)^2 / 4

struct PerturbedExample {
  ExampleCase which;
  UnitalStarAlgebra a;
  UnitalStarAlgebra b;     // unperturbed partner
  CMatrix noise;           // e^T
  std::vector<CMatrix> c;  // transported basis of b
  double expected_q = 0;
};

PerturbedExample example_hybrid(double delta);
PerturbedExample example_subsystem(double delta);

struct ExampleEvaluation {
  OrthogonalityReport report;
  double expected_q = 0;
  double abs_diff = 0;
  double rel_diff = 0;
};

ExampleEvaluation evaluate(const PerturbedExample& ex, double tol = kDefaultPrivacyTol);

struct MubExample {
  std::size_t n = 0;
  UnitalStarAlgebra a;  // masa of the standard basis
  UnitalStarAlgebra b;  // masa of the Fourier basis
  OrthogonalityReport report;
  double unbiasedness_eps = 0;
};

MubExample example_mub(std::size_t n, double tol = kDefaultPrivacyTol);

struct TrialConfig {
  std::size_t n = 0;
  AlgebraSpec spec_a;
  AlgebraSpec spec_b;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  double tol = kDefaultPrivacyTol;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // haar_unitary(n, seed) reproduces the conjugation (trial > 0)
  double q = 0;
  double eps_ab = 0;
  double eps_ba = 0;
  bool forward_ok = false;
  bool converse_ok = false;
};

struct TrialReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  double q_min = 0;
  double q_max = 0;
  double q_mean = 0;
  double eps_max = 0;
  double max_route_spread = 0;
  double max_frobenius_residual = 0;
  std::size_t forward_violations = 0;
  std::size_t converse_violations = 0;
  std::vector<TrialRecord> violations;

  bool ok() const { return forward_violations == 0 && converse_violations == 0; }
};

/// Trial 0 analyzes spec_a against spec_b as given. Trial t in [1, count)
/// conjugates spec_b by haar_unitary(n, seed + t) first.
TrialReport run_trials(const TrialConfig& cfg);

}  // namespace qortho
