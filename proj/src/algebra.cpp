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

#include "qortho/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <type_traits>

#include "qortho/errors.hpp"

namespace qortho {

namespace {

CMatrix normalized_identity(std::size_t n) {
  return CMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n));
}

void require_shape(const CMatrix& m, std::size_t n, const char* what) {
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
    std::ostringstream os;
    os << what << ": expected " << n << "x" << n << " matrix, got " << m.rows() << "x"
       << m.cols();
    throw DimensionError(os.str());
  }
}

double star_closure_residual(std::span<const CMatrix> onb) {
  double worst = 0.0;
  for (const auto& e : onb) worst = std::max(worst, span_residual(onb, e.adjoint()));
  return worst;
}

double product_closure_residual(std::span<const CMatrix> onb) {
  double worst = 0.0;
  for (const auto& a : onb) {
    for (const auto& b : onb) worst = std::max(worst, span_residual(onb, a * b));
  }
  return worst;
}

std::vector<CMatrix> blocks_basis(std::size_t n, const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw InputError("blocks: no block sizes given");
  std::size_t total = 0;
  for (auto s : sizes) {
    if (s == 0) throw InputError("blocks: block sizes must be positive");
    total += s;
  }
  if (total != n) {
    throw InputError("blocks: sizes sum to " + std::to_string(total) + ", ambient n is " +
                     std::to_string(n));
  }
  std::vector<CMatrix> units;
  std::size_t offset = 0;
  for (auto s : sizes) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) units.push_back(matrix_unit(n, offset + i, offset + j));
    }
    offset += s;
  }
  return units;
}

std::vector<CMatrix> masa_basis(std::size_t n, const std::vector<CVector>& vectors,
                                const AlgebraTolerances& tol) {
  if (vectors.size() != n) {
    throw DimensionError("masa: expected " + std::to_string(n) + " vectors, got " +
                         std::to_string(vectors.size()));
  }
  CMatrix cols(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (static_cast<std::size_t>(vectors[k].size()) != n) {
      throw DimensionError("masa: vector " + std::to_string(k) + " has wrong length");
    }
    cols.col(k) = vectors[k];
  }
  const double res = unitarity_residual(cols);
  if (res > tol.orthonormality) {
    throw BasisError("masa: vectors are not orthonormal (residual " + std::to_string(res) + ")");
  }
  std::vector<CMatrix> projectors;
  projectors.reserve(n);
  for (const auto& v : vectors) projectors.push_back(v * v.adjoint());
  return projectors;
}

std::vector<CMatrix> close_generators(std::size_t n, const std::vector<CMatrix>& gens,
                                      const AlgebraTolerances& tol) {
  std::vector<CMatrix> seed{CMatrix::Identity(n, n)};
  for (const auto& g : gens) {
    require_shape(g, n, "generators");
    seed.push_back(g);
    seed.push_back(g.adjoint());
  }
  std::vector<CMatrix> onb = gram_schmidt(seed, tol.rank);

  // Each round either grows the span or terminates; dim <= n^2 bounds it.
  const std::size_t max_rounds = n * n;
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) {
      throw InternalConsistencyError("generators: closure did not stabilize");
    }
    std::vector<CMatrix> candidates = onb;
    for (const auto& a : onb) {
      for (const auto& b : onb) {
        CMatrix p = a * b;
        if (span_residual(onb, p) > tol.closure) candidates.push_back(std::move(p));
      }
    }
    if (candidates.size() == onb.size()) break;
    std::vector<CMatrix> grown = gram_schmidt(candidates, tol.rank);
    if (grown.size() == onb.size()) break;
    onb = std::move(grown);
  }
  return onb;
}

std::vector<CMatrix> checked_span(std::size_t n, const std::vector<CMatrix>& mats,
                                  const AlgebraTolerances& tol) {
  if (mats.empty()) throw EmptyInputError("span: no matrices given");
  for (const auto& m : mats) require_shape(m, n, "span");
  std::vector<CMatrix> onb = gram_schmidt(mats, tol.rank);

  const double unital = span_residual(onb, normalized_identity(n));
  if (unital > tol.closure) {
    throw NotUnitalError("span does not contain the identity", unital);
  }
  const double star = star_closure_residual(onb);
  if (star > tol.closure) {
    throw NotStarClosedError("span is not closed under adjoints", star);
  }
  const double prod = product_closure_residual(onb);
  if (prod > tol.closure) {
    throw NotAnAlgebraError("span is not closed under multiplication", prod);
  }
  return onb;
}

std::vector<CMatrix> raw_basis(const AlgebraSpec& s, const AlgebraTolerances& tol);

std::vector<CMatrix> conjugated_basis(std::size_t n, const spec::Conjugated& c,
                                      const AlgebraTolerances& tol) {
  if (!c.inner) throw InputError("conjugated: missing inner spec");
  if (c.inner->n != n) throw DimensionError("conjugated: inner spec has a different n");
  require_shape(c.unitary, n, "conjugated unitary");
  const double res = unitarity_residual(c.unitary);
  if (res > tol.orthonormality) {
    throw BasisError("conjugated: matrix is not unitary (residual " + std::to_string(res) + ")");
  }
  std::vector<CMatrix> inner = standardize_basis(raw_basis(*c.inner, tol), tol);
  for (auto& e : inner) e = c.unitary * e * c.unitary.adjoint();
  return inner;
}

std::vector<CMatrix> raw_basis(const AlgebraSpec& s, const AlgebraTolerances& tol) {
  if (s.n == 0) throw DimensionError("algebra spec: n must be positive");
  return std::visit(
      [&](const auto& k) -> std::vector<CMatrix> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Span>) {
          return checked_span(s.n, k.matrices, tol);
        } else if constexpr (std::is_same_v<K, spec::Generators>) {
          return close_generators(s.n, k.matrices, tol);
        } else if constexpr (std::is_same_v<K, spec::Blocks>) {
          return blocks_basis(s.n, k.sizes);
        } else if constexpr (std::is_same_v<K, spec::Masa>) {
          return gram_schmidt(masa_basis(s.n, k.vectors, tol), tol.rank);
        } else {
          return conjugated_basis(s.n, k, tol);
        }
      },
      s.kind);
}

}  // namespace

AlgebraSpec AlgebraSpec::span(std::size_t n, std::vector<CMatrix> matrices) {
  return {n, spec::Span{std::move(matrices)}};
}
AlgebraSpec AlgebraSpec::generators(std::size_t n, std::vector<CMatrix> matrices) {
  return {n, spec::Generators{std::move(matrices)}};
}
AlgebraSpec AlgebraSpec::blocks(std::size_t n, std::vector<std::size_t> sizes) {
  return {n, spec::Blocks{std::move(sizes)}};
}
AlgebraSpec AlgebraSpec::masa(std::size_t n, std::vector<CVector> vectors) {
  return {n, spec::Masa{std::move(vectors)}};
}
AlgebraSpec AlgebraSpec::masa(const CMatrix& basis_columns) {
  std::vector<CVector> vs;
  for (Eigen::Index k = 0; k < basis_columns.cols(); ++k) vs.push_back(basis_columns.col(k));
  return masa(static_cast<std::size_t>(basis_columns.rows()), std::move(vs));
}
AlgebraSpec AlgebraSpec::conjugated(CMatrix unitary, AlgebraSpec inner) {
  const std::size_t n = inner.n;
  return {n, spec::Conjugated{std::move(unitary),
                              std::make_shared<const AlgebraSpec>(std::move(inner))}};
}

std::string AlgebraSpec::kind_name() const {
  static constexpr const char* names[] = {"span", "generators", "blocks", "masa", "conjugated"};
  return names[kind.index()];
}

std::vector<CMatrix> standardize_basis(std::span<const CMatrix> raw_onb,
                                       const AlgebraTolerances& tol) {
  if (raw_onb.empty()) throw EmptyInputError("standardize_basis: empty basis");
  const auto n = static_cast<std::size_t>(raw_onb.front().rows());
  for (const auto& e : raw_onb) require_shape(e, n, "standardize_basis");

  const CMatrix unit = normalized_identity(n);
  const double unital = span_residual(raw_onb, unit);
  if (unital > tol.closure) throw NotUnitalError("span does not contain the identity", unital);
  const double star = star_closure_residual(raw_onb);
  if (star > tol.closure) throw NotStarClosedError("span is not closed under adjoints", star);

  std::vector<CMatrix> candidates{unit};
  candidates.reserve(2 * raw_onb.size() + 1);
  for (const auto& b : raw_onb) {
    const CMatrix t = b - hs_inner(b, unit) * unit;
    candidates.push_back(0.5 * (t + t.adjoint()));
    candidates.push_back(Complex(0, -0.5) * (t - t.adjoint()));
  }
  std::vector<CMatrix> out = gram_schmidt(candidates, tol.rank);
  if (out.size() != raw_onb.size()) {
    throw InternalConsistencyError("standardize_basis: rank changed from " +
                                   std::to_string(raw_onb.size()) + " to " +
                                   std::to_string(out.size()));
  }
  out[0] = unit;
  for (std::size_t k = 1; k < out.size(); ++k) {
    CMatrix h = 0.5 * (out[k] + out[k].adjoint());
    h -= hs_inner(h, unit) * unit;
    out[k] = h / h.norm();
  }
  return out;
}

UnitalStarAlgebra build(const AlgebraSpec& s, const AlgebraTolerances& tol) {
  std::vector<CMatrix> onb = standardize_basis(raw_basis(s, tol), tol);
  return UnitalStarAlgebra(s.n, std::move(onb));
}

UnitalStarAlgebra UnitalStarAlgebra::from_span(std::span<const CMatrix> matrices,
                                               const AlgebraTolerances& tol) {
  if (matrices.empty()) throw EmptyInputError("span: no matrices given");
  return build(AlgebraSpec::span(static_cast<std::size_t>(matrices.front().rows()),
                                 {matrices.begin(), matrices.end()}),
               tol);
}

UnitalStarAlgebra UnitalStarAlgebra::scalars(std::size_t n) {
  return build(AlgebraSpec::span(n, {CMatrix::Identity(n, n)}));
}

UnitalStarAlgebra UnitalStarAlgebra::full(std::size_t n) {
  return build(AlgebraSpec::blocks(n, {n}));
}

ValidationReport validate(std::span<const CMatrix> onb, double tol) {
  ValidationReport r;
  r.tolerance = tol;
  r.dim = onb.size();
  if (onb.empty() || onb.front().rows() == 0 || onb.front().rows() != onb.front().cols()) {
    r.passed = false;
    return r;
  }
  r.n = static_cast<std::size_t>(onb.front().rows());
  for (const auto& e : onb) {
    if (static_cast<std::size_t>(e.rows()) != r.n || e.rows() != e.cols()) {
      throw DimensionError("validate: basis elements have different shapes");
    }
  }
  const CMatrix unit = normalized_identity(r.n);
  for (std::size_t i = 0; i < onb.size(); ++i) {
    for (std::size_t j = 0; j < onb.size(); ++j) {
      const Complex g = hs_inner(onb[i], onb[j]);
      r.orthonormality = std::max(r.orthonormality, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
    r.hermiticity = std::max(r.hermiticity, hermiticity_residual(onb[i]));
    if (i > 0) r.standard_form = std::max(r.standard_form, std::abs(onb[i].trace()));
  }
  r.standard_form = std::max(r.standard_form, (onb[0] - unit).norm());
  r.unitality = span_residual(onb, unit);
  r.star_closure = star_closure_residual(onb);
  r.multiplicative_closure = product_closure_residual(onb);
  r.passed = r.orthonormality <= tol && r.unitality <= tol && r.star_closure <= tol &&
             r.multiplicative_closure <= tol && r.hermiticity <= tol &&
             r.standard_form <= tol;
  return r;
}

ValidationReport validate(const UnitalStarAlgebra& alg, double tol) {
  return validate(alg.basis(), tol);
}

double span_distance(std::span<const CMatrix> a, std::span<const CMatrix> b) {
  // Residuals are measured for unit-norm members against orthonormalized spans.
  const auto oa = gram_schmidt(a);
  const auto ob = gram_schmidt(b);
  double worst = 0.0;
  for (const auto& x : oa) worst = std::max(worst, span_residual(ob, x));
  for (const auto& y : ob) worst = std::max(worst, span_residual(oa, y));
  return worst;
}

}  // namespace qortho
