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

// Dense complex linear algebra kernel.
//
// Matrices are vectorized row-major throughout the library: vec(X)[i*n + j]
// holds X(i, j). With this convention a superoperator's natural
// representation satisfies nat * vec(X) == vec(Phi(X)) and kron(E_ik, E_jl)
// sits at row i*n + j, column k*n + l.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qortho {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;

/// Tr(b^* a), the Hilbert-Schmidt inner product <a, b>.
Complex hs_inner(const CMatrix& a, const CMatrix& b);

/// sqrt(<a, a>).
double hs_norm(const CMatrix& a);

CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class TraceOut { First, Second };

/// Traces out one factor of an (n1*n2)x(n1*n2) operator on C^n1 (x) C^n2.
CMatrix partial_trace(const CMatrix& m, std::size_t n1, std::size_t n2,
                      TraceOut factor);

/// Matrix exponential. Hermitian and anti-Hermitian inputs go through an
/// eigendecomposition; everything else through Pade scaling-and-squaring.
CMatrix expm(const CMatrix& t);

struct HermitianEigen {
  RVector values;   // ascending
  CMatrix vectors;  // columns, unitary
};

/// Throws HermitianityError unless ||m - m^*|| <= tol * ||m||.
HermitianEigen eig_hermitian(const CMatrix& m, double tol = 1e-10);

/// Largest singular value.
double spectral_norm(const CMatrix& m);

/// Modified Gram-Schmidt in the Hilbert-Schmidt inner product. Inputs whose
/// post-projection norm drops below tol * (largest input norm) are discarded,
/// so the result has exactly rank(span) elements.
std::vector<CMatrix> gram_schmidt(std::span<const CMatrix> mats,
                                  double tol = kDefaultRankTol);

/// ||x - P(x)||_HS where P projects onto the span of the HS-orthonormal set.
double span_residual(std::span<const CMatrix> onb, const CMatrix& x);

CVector vec(const CMatrix& x);
CMatrix unvec(const CVector& v, std::size_t rows, std::size_t cols);

CMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);
CMatrix adjoint(const CMatrix& m);
double hermiticity_residual(const CMatrix& m);
double unitarity_residual(const CMatrix& u);

namespace pauli {
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

// Seeded random source. The engine is mt19937_64 (fully specified by the
// standard) and Gaussians come from our own Box-Muller step, so a seed
// reproduces the same stream on every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();   // standard normal
  Complex complex_normal();  // E|z|^2 = 1

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of diag(R) pushed back into Q.
CMatrix haar_unitary(std::size_t n, Rng& rng);
CMatrix haar_unitary(std::size_t n, std::uint64_t seed);

/// Matrix with i.i.d. complex Gaussian entries.
CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace qortho
