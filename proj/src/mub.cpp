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

#include "qortho/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qortho/errors.hpp"
#include "qortho/privacy.hpp"

namespace qortho {

namespace {

Complex root_of_unity(std::size_t n, std::size_t power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % n) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

void require_pairs(const BasisFamily& family) {
  if (family.bases.size() < 2) {
    throw InputError("basis family needs at least two bases, got " +
                     std::to_string(family.bases.size()));
  }
}

}  // namespace

CMatrix standard_basis(std::size_t n) {
  if (n == 0) throw DimensionError("standard_basis: n must be positive");
  return CMatrix::Identity(n, n);
}

CMatrix fourier_basis(std::size_t n) {
  if (n == 0) throw DimensionError("fourier_basis: n must be positive");
  CMatrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) f(k, j) = norm * root_of_unity(n, j * k);
  }
  return f;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

BasisFamily mub_family_prime(std::size_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  BasisFamily family{p, {standard_basis(p)}};
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  if (p == 2) {
    // eigenbases of sigma_x and sigma_y
    for (const Complex phase : {Complex(1, 0), Complex(0, 1)}) {
      CMatrix b(2, 2);
      b << norm, norm, norm * phase, -norm * phase;
      family.bases.push_back(b);
    }
    return family;
  }
  // v_{a,b}[k] = w^{a k^2 + b k} / sqrt(p), a, b in Z_p
  for (std::size_t a = 0; a < p; ++a) {
    CMatrix basis(p, p);
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t k = 0; k < p; ++k) {
        basis(k, b) = norm * root_of_unity(p, (a * k * k + b * k) % p);
      }
    }
    family.bases.push_back(basis);
  }
  return family;
}

void check_family(const BasisFamily& family, double tol) {
  for (std::size_t k = 0; k < family.bases.size(); ++k) {
    const CMatrix& b = family.bases[k];
    if (static_cast<std::size_t>(b.rows()) != family.n ||
        static_cast<std::size_t>(b.cols()) != family.n) {
      throw DimensionError("basis " + std::to_string(k) + " does not have n vectors of length n");
    }
    const double res = unitarity_residual(b);
    if (res > tol) {
      throw BasisError("basis " + std::to_string(k) + " is not orthonormal (residual " +
                       std::to_string(res) + ")");
    }
  }
}

UnitalStarAlgebra masa_of(const CMatrix& basis) { return build(AlgebraSpec::masa(basis)); }

UnbiasednessStats unbiasedness_stats(const BasisFamily& family) {
  require_pairs(family);
  check_family(family);
  const double n = static_cast<double>(family.n);
  double worst = 0.0;
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < family.bases.size(); ++k) {
    for (std::size_t l = k + 1; l < family.bases.size(); ++l) {
      const Eigen::MatrixXd overlaps =
          (family.bases[k].adjoint() * family.bases[l]).cwiseAbs2();
      worst = std::max(worst, overlaps.maxCoeff());
      total += overlaps.sum();
      count += static_cast<std::size_t>(overlaps.size());
    }
  }
  return {n * worst - 1.0, n * total / static_cast<double>(count) - 1.0};
}

double unbiasedness_epsilon(const BasisFamily& family) {
  return unbiasedness_stats(family).max_eps;
}

Eigen::MatrixXd pairwise_q(const BasisFamily& family) {
  require_pairs(family);
  check_family(family);
  std::vector<UnitalStarAlgebra> masas;
  masas.reserve(family.bases.size());
  for (const auto& b : family.bases) masas.push_back(masa_of(b));
  const auto m = static_cast<Eigen::Index>(masas.size());
  Eigen::MatrixXd q(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index l = k; l < m; ++l) {
      q(k, l) = q(l, k) = q_via_choi(masas[k], masas[l]);
    }
  }
  return q;
}

}  // namespace qortho
