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

#include <cstddef>
#include <vector>

#include "qortho/algebra.hpp"
#include "qortho/linalg.hpp"

namespace qortho {

// A basis is stored as a unitary whose columns are the basis vectors.
struct BasisFamily {
  std::size_t n = 0;
  std::vector<CMatrix> bases;
};

CMatrix standard_basis(std::size_t n);
/// Column j has entries w^{jk}/sqrt(n), w = exp(2 pi i/n).
CMatrix fourier_basis(std::size_t n);

/// p + 1 mutually unbiased bases of C^p for prime p: the standard basis plus
/// the eigenbases of the Weyl-Heisenberg operators X Z^a.
BasisFamily mub_family_prime(std::size_t p);

bool is_prime(std::size_t p);

/// Throws BasisError if any basis is not orthonormal to 1e-10.
void check_family(const BasisFamily& family, double tol = 1e-10);

UnitalStarAlgebra masa_of(const CMatrix& basis);

struct UnbiasednessStats {
  double max_eps = 0;   // n max |<psi, phi>|^2 - 1 over vectors of distinct bases
  double mean_eps = 0;  // n mean |<psi, phi>|^2 - 1, same pairs (always 0 for
                        // orthonormal bases; reported as a sanity statistic)
};

/// Smallest eps such that the family is eps-approximately mutually unbiased.
double unbiasedness_epsilon(const BasisFamily& family);
UnbiasednessStats unbiasedness_stats(const BasisFamily& family);

/// Entry (k, l) = Q(masa(B_k), masa(B_l)).
Eigen::MatrixXd pairwise_q(const BasisFamily& family);

}  // namespace qortho
