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

#include "qortho/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qortho/errors.hpp"

namespace qortho {

namespace {

Eigen::Index sq(std::size_t n) { return static_cast<Eigen::Index>(n * n); }

void require_same_n(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": ambient dimensions " + std::to_string(a) +
                         " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

Superoperator::Superoperator(std::size_t n, CMatrix natural) : n_(n), nat_(std::move(natural)) {
  if (n == 0 || nat_.rows() != sq(n) || nat_.cols() != sq(n)) {
    throw DimensionError("Superoperator: natural representation must be n^2 x n^2");
  }
}

Superoperator Superoperator::identity(std::size_t n) {
  return {n, CMatrix::Identity(sq(n), sq(n))};
}

Superoperator Superoperator::zero(std::size_t n) { return {n, CMatrix::Zero(sq(n), sq(n))}; }

ChoiMatrix::ChoiMatrix(std::size_t n, CMatrix mat) : n_(n), mat_(std::move(mat)) {
  if (n == 0 || mat_.rows() != sq(n) || mat_.cols() != sq(n)) {
    throw DimensionError("ChoiMatrix: matrix must be n^2 x n^2");
  }
}

Superoperator from_action(std::size_t n, const MatrixMap& action) {
  if (n == 0) throw DimensionError("from_action: n must be positive");
  CMatrix nat(sq(n), sq(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const CMatrix image = action(matrix_unit(n, k, l));
      if (static_cast<std::size_t>(image.rows()) != n ||
          static_cast<std::size_t>(image.cols()) != n) {
        throw DimensionError("from_action: action returned a matrix of the wrong size");
      }
      nat.col(static_cast<Eigen::Index>(k * n + l)) = vec(image);
    }
  }
  return {n, std::move(nat)};
}

CMatrix apply(const Superoperator& s, const CMatrix& x) {
  const auto n = s.n();
  if (static_cast<std::size_t>(x.rows()) != n || static_cast<std::size_t>(x.cols()) != n) {
    throw DimensionError("apply: operand is not n x n");
  }
  return unvec(s.natural() * vec(x), n, n);
}

// Choi((i,k),(j,l)) = Phi(E_ij)(k,l) = nat((k,l),(i,j)); composite index (a,b) = a*n + b.
ChoiMatrix choi_of(const Superoperator& s) {
  const auto n = static_cast<Eigen::Index>(s.n());
  const CMatrix& nat = s.natural();
  CMatrix c(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) c(i * n + k, j * n + l) = nat(k * n + l, i * n + j);
  return {s.n(), std::move(c)};
}

Superoperator superop_of(const ChoiMatrix& choi) {
  const auto n = static_cast<Eigen::Index>(choi.n());
  const CMatrix& c = choi.matrix();
  CMatrix nat(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) nat(k * n + l, i * n + j) = c(i * n + k, j * n + l);
  return {choi.n(), std::move(nat)};
}

KrausSet kraus_of(const ChoiMatrix& choi, double tol) {
  const auto n = choi.n();
  const HermitianEigen eig = eig_hermitian(choi.matrix(), 1e-9);
  const double scale = eig.values.cwiseAbs().maxCoeff();
  KrausSet out{n, {}};
  if (scale == 0.0) {
    out.ops.push_back(CMatrix::Zero(n, n));
    return out;
  }
  const double floor = -std::max(tol, 1e-9) * scale;
  if (eig.values(0) < floor) {
    throw NotCPError("kraus_of: Choi matrix has eigenvalue " + std::to_string(eig.values(0)));
  }
  // With C = sum_k v_k v_k^*, v_k[i*n + a] = K_k(a, i).
  for (Eigen::Index k = eig.values.size() - 1; k >= 0; --k) {
    const double lambda = eig.values(k);
    if (lambda < tol * scale) break;
    const CVector v = std::sqrt(lambda) * eig.vectors.col(k);
    out.ops.push_back(unvec(v, n, n).transpose());
  }
  return out;
}

Superoperator superop_of(const KrausSet& k) {
  if (k.ops.empty()) throw EmptyInputError("superop_of: empty Kraus set");
  CMatrix nat = CMatrix::Zero(sq(k.n), sq(k.n));
  // vec(K X K^*) = (K (x) conj(K)) vec(X) under row-major vec
  for (const auto& op : k.ops) {
    if (static_cast<std::size_t>(op.rows()) != k.n || op.rows() != op.cols()) {
      throw DimensionError("superop_of: Kraus operator has the wrong shape");
    }
    nat += kron(op, op.conjugate());
  }
  return {k.n, std::move(nat)};
}

double trace_preservation_residual(const KrausSet& k) {
  CMatrix sum = CMatrix::Zero(k.n, k.n);
  for (const auto& op : k.ops) sum += op.adjoint() * op;
  return (sum - CMatrix::Identity(k.n, k.n)).norm();
}

Superoperator frame_superoperator(std::size_t n, std::span<const CMatrix> frame) {
  CMatrix nat = CMatrix::Zero(sq(n), sq(n));
  for (const auto& f : frame) {
    if (static_cast<std::size_t>(f.rows()) != n || f.rows() != f.cols()) {
      throw DimensionError("frame_superoperator: frame element has the wrong shape");
    }
    const CVector v = vec(f);
    nat += v * v.adjoint();
  }
  return {n, std::move(nat)};
}

CMatrix choi_from_basis(std::span<const CMatrix> frame) {
  if (frame.empty()) throw EmptyInputError("choi_from_basis: empty frame");
  const auto n = frame.front().rows();
  CMatrix c = CMatrix::Zero(n * n, n * n);
  for (const auto& f : frame) c += kron(f.conjugate(), f);
  return c;
}

Superoperator conditional_expectation(const UnitalStarAlgebra& alg) {
  return frame_superoperator(alg.ambient(), alg.basis());
}

Superoperator depolarizing(std::size_t n) {
  if (n == 0) throw DimensionError("depolarizing: n must be positive");
  const CVector v = vec(CMatrix::Identity(n, n));
  return {n, v * v.adjoint() / static_cast<double>(n)};
}

Superoperator compose(const Superoperator& s1, const Superoperator& s2) {
  require_same_n(s1.n(), s2.n(), "compose");
  return {s1.n(), s1.natural() * s2.natural()};
}

Superoperator subtract(const Superoperator& s1, const Superoperator& s2) {
  require_same_n(s1.n(), s2.n(), "subtract");
  return {s1.n(), s1.natural() - s2.natural()};
}

}  // namespace qortho
