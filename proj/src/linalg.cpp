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

#include "qortho/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qortho/errors.hpp"

namespace qortho {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  require_square(a, "hs_inner");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: operands have different shapes");
  }
  // Tr(b^* a) = sum_ij conj(b_ij) a_ij
  return (b.array().conjugate() * a.array()).sum();
}

double hs_norm(const CMatrix& a) { return a.norm(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, std::size_t n1, std::size_t n2,
                      TraceOut factor) {
  const auto dim = static_cast<Eigen::Index>(n1 * n2);
  if (n1 == 0 || n2 == 0 || m.rows() != dim || m.cols() != dim) {
    throw DimensionError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(dim) +
                         "x" + std::to_string(dim));
  }
  const auto a = static_cast<Eigen::Index>(n1);
  const auto b = static_cast<Eigen::Index>(n2);
  if (factor == TraceOut::First) {
    CMatrix out = CMatrix::Zero(b, b);
    for (Eigen::Index i = 0; i < a; ++i) out += m.block(i * b, i * b, b, b);
    return out;
  }
  CMatrix out(a, a);
  for (Eigen::Index i = 0; i < a; ++i) {
    for (Eigen::Index k = 0; k < a; ++k) out(i, k) = m.block(i * b, k * b, b, b).trace();
  }
  return out;
}

CMatrix expm(const CMatrix& t) {
  require_square(t, "expm");
  const double scale = std::max(1.0, t.norm());
  if (hermiticity_residual(t) <= 1e-10 * scale) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (t + t.adjoint()));
    const CVector d = es.eigenvalues().array().exp().cast<Complex>();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  }
  if ((t + t.adjoint()).norm() <= 1e-10 * scale) {
    // t = iH with H Hermitian
    const CMatrix h = Complex(0, -0.5) * (t - t.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    CVector d(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = std::polar(1.0, es.eigenvalues()(k));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  }
  return t.exp();
}

HermitianEigen eig_hermitian(const CMatrix& m, double tol) {
  require_square(m, "eig_hermitian");
  const double res = hermiticity_residual(m);
  if (res > tol * m.norm()) {
    throw HermitianityError("eig_hermitian: ||m - m*|| = " + std::to_string(res));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) {
    throw InternalConsistencyError("eig_hermitian: eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<CMatrix> gram_schmidt(std::span<const CMatrix> mats, double tol) {
  if (mats.empty()) throw EmptyInputError("gram_schmidt: no input matrices");
  if (!(tol > 0)) throw InputError("gram_schmidt: tolerance must be positive");
  const auto rows = mats.front().rows();
  const auto cols = mats.front().cols();
  double max_norm = 0.0;
  for (const auto& m : mats) {
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionError("gram_schmidt: inputs have different shapes");
    }
    max_norm = std::max(max_norm, m.norm());
  }

  std::vector<CMatrix> out;
  const double cutoff = tol * max_norm;
  for (const auto& m : mats) {
    CMatrix v = m;
    // two passes keep the output orthonormal to machine precision
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : out) v -= hs_inner(v, e) * e;
    }
    const double r = v.norm();
    if (r > cutoff && r > 0) out.push_back(v / r);
  }
  return out;
}

double span_residual(std::span<const CMatrix> onb, const CMatrix& x) {
  CMatrix r = x;
  for (const auto& e : onb) r -= hs_inner(x, e) * e;
  return r.norm();
}

CVector vec(const CMatrix& x) {
  CVector v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  }
  return v;
}

CMatrix unvec(const CVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw DimensionError("unvec: vector length does not match requested shape");
  }
  CMatrix x(rows, cols);
  const auto c = static_cast<Eigen::Index>(cols);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < c; ++j) x(i, j) = v(i * c + j);
  }
  return x;
}

CMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix e = CMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

CMatrix adjoint(const CMatrix& m) { return m.adjoint(); }

double hermiticity_residual(const CMatrix& m) { return (m - m.adjoint()).norm(); }

double unitarity_residual(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
}

namespace pauli {
CMatrix x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
CMatrix z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

CMatrix haar_unitary(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("haar_unitary: n must be positive");
  const CMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

CMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(n, rng);
}

}  // namespace qortho
