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

// Linear maps on M_n(C). The natural representation (n^2 x n^2, acting on
// row-major vec) is the stored form; Choi and Kraus are derived views.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qortho/algebra.hpp"
#include "qortho/linalg.hpp"

namespace qortho {

class Superoperator {
 public:
  Superoperator(std::size_t n, CMatrix natural);

  static Superoperator identity(std::size_t n);
  static Superoperator zero(std::size_t n);

  std::size_t n() const { return n_; }
  const CMatrix& natural() const { return nat_; }

 private:
  std::size_t n_;
  CMatrix nat_;
};

// C = sum_ij E_ij (x) Phi(E_ij)
class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t n, CMatrix mat);

  std::size_t n() const { return n_; }
  const CMatrix& matrix() const { return mat_; }

 private:
  std::size_t n_;
  CMatrix mat_;
};

// Phi(X) = sum_k K_k X K_k^*
struct KrausSet {
  std::size_t n = 0;
  std::vector<CMatrix> ops;
};

using MatrixMap = std::function<CMatrix(const CMatrix&)>;

Superoperator from_action(std::size_t n, const MatrixMap& action);
CMatrix apply(const Superoperator& s, const CMatrix& x);

ChoiMatrix choi_of(const Superoperator& s);
Superoperator superop_of(const ChoiMatrix& c);

/// Eigendecomposition-based Kraus extraction. Eigenvalues below
/// tol * lambda_max are dropped; one below -max(tol, 1e-9) * lambda_max
/// means the map is not completely positive.
KrausSet kraus_of(const ChoiMatrix& c, double tol = 1e-10);
Superoperator superop_of(const KrausSet& k);

/// ||sum K^* K - I||_HS
double trace_preservation_residual(const KrausSet& k);

/// X -> sum_i <X, F_i> F_i. For an orthonormal basis of an algebra this is
/// the conditional expectation onto it.
Superoperator frame_superoperator(std::size_t n, std::span<const CMatrix> frame);

/// sum_i conj(F_i) (x) F_i, assembled directly from the frame.
CMatrix choi_from_basis(std::span<const CMatrix> frame);

Superoperator conditional_expectation(const UnitalStarAlgebra& alg);

/// D_n(X) = Tr(X)/n I_n
Superoperator depolarizing(std::size_t n);

/// s1 after s2
Superoperator compose(const Superoperator& s1, const Superoperator& s2);
Superoperator subtract(const Superoperator& s1, const Superoperator& s2);

}  // namespace qortho
