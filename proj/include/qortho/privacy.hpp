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

// The orthogonality measure Q(A, B), the epsilon-privacy norm
// ||(E_A - D_n) o E_B||_2 and the two inequalities tying them together.
//
// Every quantity is also available on plain operator frames (lists of
// matrices that need not be orthonormal). For an orthonormal basis of an
// algebra the frame operator sum_i |F_i><F_i| is the conditional expectation,
// so the frame forms reduce to the algebra forms.

#include <cstddef>
#include <span>
#include <vector>

#include "qortho/algebra.hpp"
#include "qortho/channels.hpp"

namespace qortho {

using FrameView = std::span<const CMatrix>;

inline constexpr double kDefaultPrivacyTol = 1e-8;

/// Re Tr(T_A T_B).
double q_via_natural(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b);
/// Re Tr(C_A C_B) with C the Choi matrices of the conditional expectations.
double q_via_choi(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b);
/// sum_ij |Tr(A_i B_j)|^2 over the standardized bases.
double q_via_basis(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b);

double q_via_natural(FrameView a, FrameView b);
double q_via_choi(FrameView a, FrameView b);
double q_via_basis(FrameView a, FrameView b);

/// ||(E_privatizer - D_n) o E_target||_2, the largest singular value.
double privacy_norm(const UnitalStarAlgebra& privatizer, const UnitalStarAlgebra& target);
double privacy_norm(FrameView privatizer, FrameView target);

/// ||(T_A - T_D) T_B||_F^2. For algebras this equals Q(A, B) - 1; a mismatch
/// beyond 1e-8 throws InternalConsistencyError.
double frobenius_deviation_sq(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b);

bool is_quasiorthogonal(double q, double tol = kDefaultPrivacyTol);
bool is_eps_quasiorthogonal(double q, double eps, double tol = kDefaultPrivacyTol);
/// target is eps-private relative to privatizer
bool is_eps_private(const UnitalStarAlgebra& privatizer, const UnitalStarAlgebra& target,
                    double eps, double tol = kDefaultPrivacyTol);

// Residuals of the three equivalent quasiorthogonality conditions, maximized
// over basis elements.
struct QuasiorthogonalityConditions {
  double centered_trace = 0;   // |Tr((A - Tr A/n)(B - Tr B/n))|
  double trace_product = 0;    // |Tr(AB) - Tr(A)Tr(B)/n|
  double expectation = 0;      // ||E_A(B) - Tr(B)/n I||, both directions
};
QuasiorthogonalityConditions quasiorthogonality_conditions(const UnitalStarAlgebra& a,
                                                           const UnitalStarAlgebra& b);

struct OrthogonalityReport {
  std::size_t n = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t d_max = 0;
  std::size_t d_min = 0;

  double q_natural = 0;
  double q_choi = 0;
  double q_basis = 0;
  double q = 0;  // consensus: q_choi
  double route_spread = 0;

  double eps_a_privatizes_b = 0;  // ||(E_A - D_n) o E_B||
  double eps_b_privatizes_a = 0;  // ||(E_B - D_n) o E_A||
  double frobenius_sq_ab = 0;     // ||(T_A - T_D) T_B||_F^2
  double frobenius_residual = 0;  // |frobenius_sq_ab - (q - 1)|

  double forward_bound = 0;   // sqrt((q - 1)(d_max - 1))
  double converse_bound = 0;  // (d_min - 1) max(eps)^2

  bool quasiorthogonal = false;
  bool forward_bound_ok = false;
  bool converse_bound_ok = false;
  // Single-direction converse inequalities from the proof:
  // q - 1 <= (dim B - 1) eps_ab^2 and q - 1 <= (dim A - 1) eps_ba^2.
  bool converse_ab_ok = false;
  bool converse_ba_ok = false;

  // False for frame analyses, where the T's are not projections and the
  // Frobenius identity is only reported.
  bool projection_identity_enforced = true;
  double tol = kDefaultPrivacyTol;
};

OrthogonalityReport analyze(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b,
                            double tol = kDefaultPrivacyTol);

/// Same quantities with E_A, E_B replaced by frame operators.
OrthogonalityReport analyze_frames(std::size_t n, FrameView a, FrameView b,
                                   double tol = kDefaultPrivacyTol);

}  // namespace qortho
