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

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qset/error.hpp"

namespace qset {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical thresholds shared by every check in the library.
///
/// `rel` bounds relative Frobenius-norm residuals; `eig_gap` is the absolute
/// gap that separates eigenvalue clusters when splitting spectra.
struct Tolerance {
  double rel = 1e-9;
  double eig_gap = 1e-8;
};

/// Outcome of a single numerical identity check.
struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

bool all_pass(const std::vector<Check>& checks);

/// Kronecker product. Composite index (i, j) flattens to i * dim(b) + j.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(std::initializer_list<CMatrix> factors);

CMatrix dagger(const CMatrix& a);
CMatrix identity(std::size_t n);
CMatrix zeros(std::size_t rows, std::size_t cols);

/// Column vector e_i of length n.
CVector basis_vector(std::size_t n, std::size_t i);

/// Swap map X ⊗ Y -> Y ⊗ X for dim X = nx, dim Y = ny.
CMatrix swap_map(std::size_t nx, std::size_t ny);

double frobenius_norm(const CMatrix& a);

/// ‖a − b‖_F ≤ tol.rel · max(1, ‖a‖_F, ‖b‖_F). The residual is ‖a − b‖_F.
Check approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol,
                std::string name = {});

bool is_hermitian(const CMatrix& h, const Tolerance& tol);

struct HermEig {
  RVector values;  // ascending
  CMatrix vectors; // columns are orthonormal eigenvectors
};

/// Hermitian eigendecomposition h = U diag(λ) U†. Throws NotHermitian.
HermEig herm_eig(const CMatrix& h, const Tolerance& tol);

/// Orthonormal basis of {x : ‖a x‖ ≤ tol.rel ‖a‖ ‖x‖}, one column per vector.
CMatrix nullspace(const CMatrix& a, const Tolerance& tol);

/// Orthonormal basis of the column span of `a` (singular values above
/// tol.rel · ‖a‖_F).
CMatrix orthonormal_span(const CMatrix& a, const Tolerance& tol);

/// Groups of indices into an ascending spectrum whose consecutive gaps are
/// all below `gap`.
std::vector<std::vector<std::size_t>> cluster_eigenvalues(const RVector& values,
                                                          double gap);

/// Row-major flattening of a matrix into a column vector and its inverse.
CVector vec_rows(const CMatrix& a);
CMatrix unvec_rows(const CVector& v, std::size_t rows, std::size_t cols);

/// Haar-ish random unitary from a seeded generator (QR of a Gaussian matrix).
CMatrix random_unitary(std::size_t n, std::uint64_t seed);
CMatrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace qset
