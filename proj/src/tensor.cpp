// Copyright 2026 The qset Authors
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

#include "qset/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qset {

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  CMatrix out(a.rows() * br, a.cols() * bc);
  // Column-major storage: walk output columns contiguously.
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index l = 0; l < bc; ++l) {
      Complex* col = out.col(j * bc + l).data();
      const Complex* bcol = b.col(l).data();
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const Complex aij = a(i, j);
        Complex* dst = col + i * br;
        for (Eigen::Index k = 0; k < br; ++k) dst[k] = aij * bcol[k];
      }
    }
  }
  return out;
}

CMatrix kron(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CMatrix dagger(const CMatrix& a) { return a.adjoint(); }

CMatrix identity(std::size_t n) { return CMatrix::Identity(n, n); }

CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix::Zero(rows, cols); }

CVector basis_vector(std::size_t n, std::size_t i) {
  CVector v = CVector::Zero(n);
  v(i) = 1.0;
  return v;
}

CMatrix swap_map(std::size_t nx, std::size_t ny) {
  CMatrix s = CMatrix::Zero(nx * ny, nx * ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) s(y * nx + x, x * ny + y) = 1.0;
  }
  return s;
}

double frobenius_norm(const CMatrix& a) { return a.norm(); }

Check approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol, std::string name) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                "approx_eq: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const double residual = (a - b).norm();
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return Check{std::move(name), residual <= tol.rel * scale, residual};
}

bool is_hermitian(const CMatrix& h, const Tolerance& tol) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= tol.rel * std::max(1.0, h.norm());
}

HermEig herm_eig(const CMatrix& h, const Tolerance& tol) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorKind::NotHermitian, "herm_eig: matrix is not square");
  }
  if ((h - h.adjoint()).norm() > tol.rel * h.norm()) {
    throw Error(ErrorKind::NotHermitian, "herm_eig: ‖h − h†‖ exceeds tolerance");
  }
  if (h.rows() == 0) return {RVector(0), CMatrix(0, 0)};
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalDegeneracy, "herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Right singular vectors of `a` split at cutoff; returns (span, null) bases.
std::pair<CMatrix, CMatrix> split_right_singular(const CMatrix& a, double cutoff) {
  const Eigen::Index n = a.cols();
  if (n == 0) return {CMatrix(0, 0), CMatrix(0, 0)};
  if (a.rows() == 0) return {CMatrix(n, 0), identity(n)};
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  const CMatrix& v = svd.matrixV();
  return {v.leftCols(rank), v.rightCols(n - rank)};
}

}  // namespace

CMatrix nullspace(const CMatrix& a, const Tolerance& tol) {
  return split_right_singular(a, tol.rel * a.norm()).second;
}

CMatrix orthonormal_span(const CMatrix& a, const Tolerance& tol) {
  if (a.cols() == 0 || a.rows() == 0) return CMatrix(a.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol.rel * a.norm()) ++rank;
  return svd.matrixU().leftCols(rank);
}

std::vector<std::vector<std::size_t>> cluster_eigenvalues(const RVector& values, double gap) {
  std::vector<std::vector<std::size_t>> clusters;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (clusters.empty() || values(i) - values(i - 1) > gap) clusters.emplace_back();
    clusters.back().push_back(static_cast<std::size_t>(i));
  }
  return clusters;
}

CVector vec_rows(const CMatrix& a) {
  CVector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  }
  return v;
}

CMatrix unvec_rows(const CVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw Error(ErrorKind::ShapeMismatch, "unvec_rows: length does not match shape");
  }
  CMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  }
  return a;
}

CMatrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  const CMatrix g = random_gaussian(n, n, seed);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * identity(n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qset
