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

#include "qortho/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qortho/errors.hpp"

namespace qortho {

namespace {

void require_same_n(std::size_t a, std::size_t b) {
  if (a != b) {
    std::ostringstream os;
    os << "algebras live in different ambient dimensions (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

std::size_t frame_dim(FrameView a, FrameView b) {
  if (a.empty() || b.empty()) throw EmptyInputError("frame is empty");
  const auto n = static_cast<std::size_t>(a.front().rows());
  require_same_n(n, static_cast<std::size_t>(b.front().rows()));
  return n;
}

// Tr(x y) without forming the product.
Complex trace_of_product(const CMatrix& x, const CMatrix& y) {
  return (x.array() * y.transpose().array()).sum();
}

double real_part_checked(Complex z, const char* route) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z.real()))) {
    std::ostringstream os;
    os << route << ": trace has imaginary part " << z.imag();
    throw InternalConsistencyError(os.str());
  }
  return z.real();
}

}  // namespace

double q_via_natural(FrameView a, FrameView b) {
  const auto n = frame_dim(a, b);
  const auto ta = frame_superoperator(n, a);
  const auto tb = frame_superoperator(n, b);
  return real_part_checked(trace_of_product(ta.natural(), tb.natural()), "q_via_natural");
}

double q_via_choi(FrameView a, FrameView b) {
  frame_dim(a, b);
  // Choi matrices assembled from the basis as sums of conj(A_i) (x) A_i.
  return real_part_checked(trace_of_product(choi_from_basis(a), choi_from_basis(b)), "q_via_choi");
}

double q_via_basis(FrameView a, FrameView b) {
  frame_dim(a, b);
  double sum = 0.0;
  for (const auto& x : a) {
    for (const auto& y : b) sum += std::norm(trace_of_product(x, y));
  }
  return sum;
}

double q_via_natural(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b) {
  require_same_n(a.ambient(), b.ambient());
  return q_via_natural(FrameView(a.basis()), FrameView(b.basis()));
}

double q_via_choi(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b) {
  require_same_n(a.ambient(), b.ambient());
  return q_via_choi(FrameView(a.basis()), FrameView(b.basis()));
}

double q_via_basis(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b) {
  require_same_n(a.ambient(), b.ambient());
  return q_via_basis(FrameView(a.basis()), FrameView(b.basis()));
}

double privacy_norm(FrameView privatizer, FrameView target) {
  const auto n = frame_dim(privatizer, target);
  const CMatrix dev = (frame_superoperator(n, privatizer).natural() - depolarizing(n).natural()) *
                      frame_superoperator(n, target).natural();
  return spectral_norm(dev);
}

double privacy_norm(const UnitalStarAlgebra& privatizer, const UnitalStarAlgebra& target) {
  require_same_n(privatizer.ambient(), target.ambient());
  const auto n = privatizer.ambient();
  const auto dev = compose(subtract(conditional_expectation(privatizer), depolarizing(n)),
                           conditional_expectation(target));
  return spectral_norm(dev.natural());
}

double frobenius_deviation_sq(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b) {
  require_same_n(a.ambient(), b.ambient());
  const auto n = a.ambient();
  const auto dev = compose(subtract(conditional_expectation(a), depolarizing(n)),
                           conditional_expectation(b));
  const double f = dev.natural().squaredNorm();
  const double q = q_via_choi(a, b);
  if (std::abs(f - (q - 1.0)) > 1e-8) {
    std::ostringstream os;
    os << "||(T_A - T_D) T_B||_F^2 = " << f << " but Q - 1 = " << q - 1.0;
    throw InternalConsistencyError(os.str());
  }
  return f;
}

bool is_quasiorthogonal(double q, double tol) { return q <= 1.0 + tol; }

bool is_eps_quasiorthogonal(double q, double eps, double tol) { return q <= 1.0 + eps + tol; }

bool is_eps_private(const UnitalStarAlgebra& privatizer, const UnitalStarAlgebra& target,
                    double eps, double tol) {
  return privacy_norm(privatizer, target) <= eps + tol;
}

QuasiorthogonalityConditions quasiorthogonality_conditions(const UnitalStarAlgebra& a,
                                                           const UnitalStarAlgebra& b) {
  require_same_n(a.ambient(), b.ambient());
  const auto n = a.ambient();
  const double dn = static_cast<double>(n);
  const CMatrix id = CMatrix::Identity(n, n);
  QuasiorthogonalityConditions r;
  for (const auto& x : a.basis()) {
    const Complex tx = x.trace();
    for (const auto& y : b.basis()) {
      const Complex ty = y.trace();
      const Complex centered = trace_of_product(x - tx / dn * id, y - ty / dn * id);
      r.centered_trace = std::max(r.centered_trace, std::abs(centered));
      r.trace_product = std::max(r.trace_product, std::abs(trace_of_product(x, y) - tx * ty / dn));
    }
  }
  const auto ea = conditional_expectation(a);
  const auto eb = conditional_expectation(b);
  for (const auto& y : b.basis()) {
    r.expectation = std::max(r.expectation, (apply(ea, y) - y.trace() / dn * id).norm());
  }
  for (const auto& x : a.basis()) {
    r.expectation = std::max(r.expectation, (apply(eb, x) - x.trace() / dn * id).norm());
  }
  return r;
}

namespace {

OrthogonalityReport analyze_impl(std::size_t n, FrameView a, FrameView b, double tol,
                                 bool enforce_projection_identity) {
  if (!(tol > 0)) throw InputError("analyze: tolerance must be positive");
  OrthogonalityReport r;
  r.n = n;
  r.tol = tol;
  r.dim_a = a.size();
  r.dim_b = b.size();
  r.d_max = std::max(r.dim_a, r.dim_b);
  r.d_min = std::min(r.dim_a, r.dim_b);
  r.projection_identity_enforced = enforce_projection_identity;

  const CMatrix ta = frame_superoperator(n, a).natural();
  const CMatrix tb = frame_superoperator(n, b).natural();
  const CMatrix td = depolarizing(n).natural();

  r.q_natural = real_part_checked(trace_of_product(ta, tb), "q_via_natural");
  r.q_choi = real_part_checked(
      trace_of_product(choi_of(Superoperator(n, ta)).matrix(), choi_of(Superoperator(n, tb)).matrix()),
      "q_via_choi");
  r.q_basis = q_via_basis(a, b);
  r.q = r.q_choi;
  r.route_spread = std::max({std::abs(r.q_natural - r.q_choi), std::abs(r.q_choi - r.q_basis),
                             std::abs(r.q_natural - r.q_basis)});

  const CMatrix dev_ab = (ta - td) * tb;
  const CMatrix dev_ba = (tb - td) * ta;
  r.eps_a_privatizes_b = spectral_norm(dev_ab);
  r.eps_b_privatizes_a = spectral_norm(dev_ba);
  r.frobenius_sq_ab = dev_ab.squaredNorm();
  r.frobenius_residual = std::abs(r.frobenius_sq_ab - (r.q - 1.0));
  if (enforce_projection_identity) {
    if (r.frobenius_residual > 1e-8) {
      std::ostringstream os;
      os << "||(T_A - T_D) T_B||_F^2 = " << r.frobenius_sq_ab << " but Q - 1 = " << r.q - 1.0;
      throw InternalConsistencyError(os.str());
    }
    if (r.route_spread > 1e-8) {
      std::ostringstream os;
      os << "Q routes disagree by " << r.route_spread;
      throw InternalConsistencyError(os.str());
    }
  }

  const double excess = std::max(r.q - 1.0, 0.0);
  const double eps_max = std::max(r.eps_a_privatizes_b, r.eps_b_privatizes_a);
  r.forward_bound = std::sqrt(excess * static_cast<double>(r.d_max - 1));
  r.converse_bound = static_cast<double>(r.d_min - 1) * eps_max * eps_max;
  r.quasiorthogonal = is_quasiorthogonal(r.q, tol);

  if (r.d_max == 1) {
    // both algebras are scalars: the forward hypothesis is vacuous
    r.forward_bound_ok = r.converse_bound_ok = r.converse_ab_ok = r.converse_ba_ok = true;
    return r;
  }
  r.forward_bound_ok = r.eps_a_privatizes_b <= r.forward_bound + tol &&
                       r.eps_b_privatizes_a <= r.forward_bound + tol;
  r.converse_bound_ok = r.q - 1.0 <= r.converse_bound + tol;
  r.converse_ab_ok = r.q - 1.0 <= static_cast<double>(r.dim_b - 1) *
                                         r.eps_a_privatizes_b * r.eps_a_privatizes_b + tol;
  r.converse_ba_ok = r.q - 1.0 <= static_cast<double>(r.dim_a - 1) *
                                         r.eps_b_privatizes_a * r.eps_b_privatizes_a + tol;
  return r;
}

}  // namespace

OrthogonalityReport analyze(const UnitalStarAlgebra& a, const UnitalStarAlgebra& b, double tol) {
  require_same_n(a.ambient(), b.ambient());
  return analyze_impl(a.ambient(), a.basis(), b.basis(), tol, true);
}

OrthogonalityReport analyze_frames(std::size_t n, FrameView a, FrameView b, double tol) {
  if (frame_dim(a, b) != n) throw DimensionError("analyze_frames: frames are not n x n");
  return analyze_impl(n, a, b, tol, false);
}

}  // namespace qortho
