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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qortho/algebra.hpp"
#include "qortho/channels.hpp"
#include "qortho/errors.hpp"
#include "qortho/mub.hpp"
#include "test_helpers.hpp"

using namespace qortho;
using namespace qortho::testing;

namespace {

// Direct nat assembly: column k*n+l is vec(phi(E_kl)).
CMatrix brute_natural(std::size_t n, const MatrixMap& phi) {
  CMatrix nat(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) nat.col(k * n + l) = vec(phi(unit(n, k + 1, l + 1)));
  return nat;
}

// Choi matrix straight from its defining sum over matrix units.
CMatrix brute_choi(std::size_t n, const MatrixMap& phi) {
  CMatrix c = CMatrix::Zero(n * n, n * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) c += kron(unit(n, i, j), phi(unit(n, i, j)));
  return c;
}

KrausSet random_channel(std::size_t n, std::size_t r, Rng& rng) {
  // Stack of Ginibre blocks made an isometry by polar normalization.
  std::vector<CMatrix> g;
  CMatrix s = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < r; ++k) {
    g.push_back(ginibre(n, n, rng));
    s += g.back().adjoint() * g.back();
  }
  const auto e = eig_hermitian((s + s.adjoint()) / 2.0);
  const CMatrix inv_sqrt =
      e.vectors * e.values.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
      e.vectors.adjoint();
  for (auto& k : g) k = k * inv_sqrt;
  return {n, g};
}

std::vector<UnitalStarAlgebra> sample_algebras() {
  Rng rng(53);
  std::vector<UnitalStarAlgebra> out;
  out.push_back(UnitalStarAlgebra::scalars(3));
  out.push_back(UnitalStarAlgebra::full(3));
  out.push_back(build(AlgebraSpec::blocks(4, {2, 2})));
  out.push_back(build(AlgebraSpec::masa(fourier_basis(4))));
  out.push_back(build(AlgebraSpec::conjugated(haar_unitary(5, rng), AlgebraSpec::blocks(5, {2, 3}))));
  out.push_back(build(AlgebraSpec::generators(2, {pauli::x()})));
  return out;
}

}  // namespace

TEST_CASE("from_action examples") {
  CHECK(dist(from_action(3, [](const CMatrix& x) { return x; }).natural(), eye(9)) == 0);

  const MatrixMap conj_x = [](const CMatrix& x) { return CMatrix(pauli::x() * x * pauli::x()); };
  const CMatrix nat = from_action(2, conj_x).natural();
  CHECK(dist(nat, brute_natural(2, conj_x)) < 1e-15);
  // X E_kl X = E_{k^1, l^1}: a permutation of vec indices.
  for (int c = 0; c < 4; ++c) {
    CHECK(nat.col(c).cwiseAbs().sum() == doctest::Approx(1));
    CHECK(std::abs(nat(3 - c, c) - Complex(1)) < 1e-15);
  }

  const std::size_t n = 3;
  const CMatrix dep = from_action(n, [n](const CMatrix& x) {
                        return CMatrix(x.trace() / static_cast<double>(n) * eye(n));
                      }).natural();
  const CVector vi = vec(eye(n));
  CHECK(dist(dep, vi * vi.transpose() / 3.0) < 1e-15);
}

TEST_CASE("apply") {
  Rng rng(59);
  const CMatrix x = random_matrix(3, rng);
  CHECK(dist(qortho::apply(Superoperator::identity(3), x), x) < 1e-15);
  CHECK(max_abs(qortho::apply(depolarizing(2), pauli::z())) < 1e-15);
  CHECK(dist(qortho::apply(depolarizing(4), unit(4, 1, 1)), eye(4) / 4.0) < 1e-15);
  CHECK(dist(qortho::apply(depolarizing(3), eye(3)), eye(3)) < 1e-15);
  CHECK_THROWS_AS(qortho::apply(depolarizing(2), eye(3)), DimensionError);
}

TEST_CASE("choi_of examples") {
  CMatrix expected = CMatrix::Zero(4, 4);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) expected += kron(unit(2, i, j), unit(2, i, j));
  CHECK(dist(choi_of(Superoperator::identity(2)).matrix(), expected) < 1e-15);

  for (std::size_t n : {2, 3, 4}) {
    CHECK(dist(choi_of(depolarizing(n)).matrix(), eye(n * n) / static_cast<double>(n)) < 1e-15);
  }
}

TEST_CASE("choi_of matches the defining sum for arbitrary maps") {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = random_matrix(3, rng), b = random_matrix(3, rng);
    const MatrixMap phi = [a, b](const CMatrix& x) { return CMatrix(a * x * b + x.transpose()); };
    CHECK(dist(choi_of(from_action(3, phi)).matrix(), brute_choi(3, phi)) < 1e-13);
  }
}

TEST_CASE("superop_of inverts choi_of") {
  Rng rng(67);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 3;
    const Superoperator s(n, ginibre(n * n, n * n, rng));
    CHECK(dist(superop_of(choi_of(s)).natural(), s.natural()) == 0);
  }
  CHECK_THROWS_AS(Superoperator(2, eye(3)), DimensionError);
}

TEST_CASE("kraus_of examples") {
  const auto k = kraus_of(choi_of(Superoperator::identity(3)));
  REQUIRE(k.ops.size() == 1);
  const Complex phase = k.ops[0](0, 0);
  CHECK(std::abs(std::abs(phase) - 1) < 1e-12);
  CHECK(dist(k.ops[0], phase * eye(3)) < 1e-12);

  const auto kd = kraus_of(choi_of(depolarizing(3)));
  CHECK(kd.ops.size() == 9);
  CHECK(dist(choi_of(superop_of(kd)).matrix(), eye(9) / 3.0) < 1e-12);
  CHECK(trace_preservation_residual(kd) < 1e-12);

  CMatrix bad = eye(4) / 2.0;
  bad(3, 3) = -0.01;
  CHECK_THROWS_AS(kraus_of(ChoiMatrix(2, bad), 1e-8), NotCPError);
}

TEST_CASE("choi to kraus to choi round trip on random channels") {
  Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3, r = 1 + t % 4;
    const KrausSet k = random_channel(n, r, rng);
    const ChoiMatrix c = choi_of(superop_of(k));
    const KrausSet back = kraus_of(c);
    CHECK(back.ops.size() <= n * n);
    CHECK(dist(choi_of(superop_of(back)).matrix(), c.matrix()) < 1e-8);
    CHECK(trace_preservation_residual(back) < 1e-8);
  }
}

TEST_CASE("conditional expectation special cases") {
  for (std::size_t n : {1, 2, 3, 4}) {
    CHECK(dist(conditional_expectation(UnitalStarAlgebra::scalars(n)).natural(),
               depolarizing(n).natural()) < 1e-14);
    CHECK(dist(conditional_expectation(UnitalStarAlgebra::full(n)).natural(),
               Superoperator::identity(n).natural()) < 1e-13);
  }
  CHECK(dist(depolarizing(1).natural(), Superoperator::identity(1).natural()) == 0);

  const auto diag4 = build(AlgebraSpec::masa(standard_basis(4)));
  CHECK(dist(qortho::apply(conditional_expectation(diag4), CMatrix::Ones(4, 4)), eye(4)) < 1e-14);
}

TEST_CASE("Choi matrix of a conditional expectation from its basis") {
  Rng rng(73);
  for (const auto& alg : sample_algebras()) {
    const CMatrix direct = choi_from_basis(alg.basis());
    CHECK(dist(direct, choi_of(conditional_expectation(alg)).matrix()) < 1e-9);

    // A second orthonormal basis: a random unitary mix of the first.
    const std::size_t d = alg.dim();
    const CMatrix w = haar_unitary(d, rng);
    std::vector<CMatrix> other(d, CMatrix::Zero(alg.ambient(), alg.ambient()));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) other[i] += w(j, i) * alg.basis()[j];
    CHECK(dist(choi_from_basis(other), direct) < 1e-9);

    // The same choi from the defining sum over matrix units.
    const Superoperator e = conditional_expectation(alg);
    CHECK(dist(brute_choi(alg.ambient(), [&](const CMatrix& x) { return qortho::apply(e, x); }), direct) <
          1e-12);
  }
}

TEST_CASE("conditional expectation marginals, projection and module laws") {
  Rng rng(79);
  for (const auto& alg : sample_algebras()) {
    const std::size_t n = alg.ambient();
    const Superoperator e = conditional_expectation(alg);
    const CMatrix c = choi_of(e).matrix();
    CHECK(dist(partial_trace(c, n, n, TraceOut::First), eye(n)) < 1e-9);
    CHECK(dist(partial_trace(c, n, n, TraceOut::Second), eye(n)) < 1e-9);
    CHECK(std::abs(c.trace() - Complex(static_cast<double>(n))) < 1e-9);

    const CMatrix t = e.natural();
    CHECK(dist(t * t, t) < 1e-9);
    for (const auto& a : alg.basis()) CHECK((t * vec(a) - vec(a)).norm() < 1e-9);

    auto random_element = [&]() {
      CMatrix x = CMatrix::Zero(n, n);
      for (const auto& b : alg.basis()) x += rng.complex_normal() * b;
      return x;
    };
    for (int r = 0; r < 5; ++r) {
      const CMatrix a1 = random_element(), a2 = random_element(), x = random_matrix(n, rng);
      CHECK(dist(qortho::apply(e, a1 * x * a2), a1 * qortho::apply(e, x) * a2) < 1e-9);
    }

    const KrausSet k = kraus_of(choi_of(e));
    CHECK(trace_preservation_residual(k) < 1e-8);
  }
}

TEST_CASE("compose and subtract") {
  Rng rng(83);
  const Superoperator s(3, ginibre(9, 9, rng));
  CHECK(dist(compose(Superoperator::identity(3), s).natural(), s.natural()) < 1e-14);
  CHECK(max_abs(subtract(s, s).natural()) == 0);
  CHECK(max_abs(Superoperator::zero(3).natural()) == 0);

  const Superoperator ch = superop_of(random_channel(3, 2, rng));
  CHECK(dist(compose(depolarizing(3), ch).natural(), depolarizing(3).natural()) < 1e-12);

  // compose(s1, s2) applies s2 first.
  const MatrixMap left = [](const CMatrix& x) { return CMatrix(x * unit(2, 1, 2)); };
  const MatrixMap transpose = [](const CMatrix& x) { return CMatrix(x.transpose()); };
  const CMatrix x = random_matrix(2, rng);
  const CMatrix got = qortho::apply(compose(from_action(2, left), from_action(2, transpose)), x);
  CHECK(dist(got, x.transpose() * unit(2, 1, 2)) < 1e-14);
  CHECK_THROWS_AS(compose(depolarizing(2), depolarizing(3)), DimensionError);
}

TEST_CASE("frame superoperator of an orthonormal basis is the conditional expectation") {
  const auto alg = build(AlgebraSpec::blocks(4, {1, 3}));
  CHECK(dist(frame_superoperator(4, alg.basis()).natural(),
             conditional_expectation(alg).natural()) < 1e-14);
}
