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

// Unital *-subalgebras of M_n(C), stored as a Hilbert-Schmidt orthonormal
// basis in standard form: element 0 is I/sqrt(n), the rest are Hermitian and
// traceless.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qortho/linalg.hpp"

namespace qortho {

struct AlgebraTolerances {
  double closure = 1e-9;         // unitality, *-closure, product closure
  double orthonormality = 1e-10; // input bases and unitaries
  double rank = kDefaultRankTol; // Gram-Schmidt drop threshold (relative)
};

struct AlgebraSpec;

namespace spec {

// The span must already be an algebra; it is validated, never closed.
struct Span {
  std::vector<CMatrix> matrices;
};
// Smallest unital *-algebra containing the generators.
struct Generators {
  std::vector<CMatrix> matrices;
};
// Full matrix blocks placed consecutively along the diagonal.
struct Blocks {
  std::vector<std::size_t> sizes;
};
// span{|v_i><v_i|} for an orthonormal basis {v_i}.
struct Masa {
  std::vector<CVector> vectors;
};
// U * inner * U^*.
struct Conjugated {
  CMatrix unitary;
  std::shared_ptr<const AlgebraSpec> inner;
};

}  // namespace spec

struct AlgebraSpec {
  std::size_t n = 0;
  std::variant<spec::Span, spec::Generators, spec::Blocks, spec::Masa, spec::Conjugated> kind;

  static AlgebraSpec span(std::size_t n, std::vector<CMatrix> matrices);
  static AlgebraSpec generators(std::size_t n, std::vector<CMatrix> matrices);
  static AlgebraSpec blocks(std::size_t n, std::vector<std::size_t> sizes);
  static AlgebraSpec masa(std::size_t n, std::vector<CVector> vectors);
  static AlgebraSpec masa(const CMatrix& basis_columns);
  static AlgebraSpec conjugated(CMatrix unitary, AlgebraSpec inner);

  std::string kind_name() const;
};

class UnitalStarAlgebra {
 public:
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return onb_.size(); }
  const std::vector<CMatrix>& basis() const { return onb_; }

  /// Validates an explicit span; see build(AlgebraSpec::span(...)).
  static UnitalStarAlgebra from_span(std::span<const CMatrix> matrices,
                                     const AlgebraTolerances& tol = {});
  static UnitalStarAlgebra scalars(std::size_t n);
  static UnitalStarAlgebra full(std::size_t n);

 private:
  UnitalStarAlgebra(std::size_t n, std::vector<CMatrix> onb)
      : n_(n), onb_(std::move(onb)) {}

  friend UnitalStarAlgebra build(const AlgebraSpec&, const AlgebraTolerances&);

  std::size_t n_;
  std::vector<CMatrix> onb_;
};

UnitalStarAlgebra build(const AlgebraSpec& spec, const AlgebraTolerances& tol = {});

/// Rewrites an HS-orthonormal basis of a unital *-closed span into standard
/// form. Throws NotUnitalError / NotStarClosedError when the span is neither.
std::vector<CMatrix> standardize_basis(std::span<const CMatrix> raw_onb,
                                       const AlgebraTolerances& tol = {});

struct ValidationReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  double orthonormality = 0;          // max |<e_i, e_j> - delta_ij|
  double unitality = 0;               // ||I - P(I)||
  double star_closure = 0;            // max ||e^* - P(e^*)||
  double multiplicative_closure = 0;  // max ||e_i e_j - P(e_i e_j)||
  double hermiticity = 0;             // max ||e - e^*||
  double standard_form = 0;           // ||e_0 - I/sqrt(n)||, max |Tr e_k|, k >= 1
  double tolerance = 1e-9;
  bool passed = false;
};

ValidationReport validate(std::span<const CMatrix> onb, double tol = 1e-9);
ValidationReport validate(const UnitalStarAlgebra& alg, double tol = 1e-9);

inline std::size_t dim(const UnitalStarAlgebra& alg) { return alg.dim(); }
inline std::size_t ambient(const UnitalStarAlgebra& alg) { return alg.ambient(); }

/// Largest mutual reconstruction residual between two spans (any spanning sets).
double span_distance(std::span<const CMatrix> a, std::span<const CMatrix> b);

}  // namespace qortho
