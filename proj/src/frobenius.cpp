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

#include "qset/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace qset {

SSFA::SSFA(CMatrix mult, CMatrix unit) : dim_(mult.rows()), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (dim_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "the empty quantum set has no unit");
  }
  if (static_cast<std::size_t>(mult_.cols()) != dim_ * dim_) {
    throw Error(ErrorKind::ShapeMismatch, "multiplication must be n x n^2");
  }
  if (static_cast<std::size_t>(unit_.rows()) != dim_ || unit_.cols() != 1) {
    throw Error(ErrorKind::ShapeMismatch, "unit must be n x 1");
  }
}

CMatrix SSFA::left_mult(const CVector& x) const { return mult_ * kron(CMatrix(x), identity(dim_)); }

CMatrix SSFA::right_mult(const CVector& x) const { return mult_ * kron(identity(dim_), CMatrix(x)); }

CVector SSFA::multiply(const CVector& x, const CVector& y) const {
  return mult_ * kron(CMatrix(x), CMatrix(y));
}

bool same_algebra(const SSFA& a, const SSFA& b, const Tolerance& tol) {
  if (a.dim() != b.dim()) return false;
  return approx_eq(a.mult(), b.mult(), tol).pass && approx_eq(a.unit(), b.unit(), tol).pass;
}

namespace {

Check worst(std::string name, std::initializer_list<Check> parts) {
  Check out{std::move(name), true, 0.0};
  for (const auto& c : parts) {
    out.pass = out.pass && c.pass;
    out.residual = std::max(out.residual, c.residual);
  }
  return out;
}

}  // namespace

SsfaReport check_ssfa(const CMatrix& mult, const CMatrix& unit, const Tolerance& tol) {
  const std::size_t n = mult.rows();
  if (n == 0 || static_cast<std::size_t>(mult.cols()) != n * n || static_cast<std::size_t>(unit.rows()) != n ||
      unit.cols() != 1) {
    throw Error(ErrorKind::ShapeMismatch, "check_ssfa: expected mult n x n^2 and unit n x 1");
  }
  const CMatrix id = identity(n);
  const CMatrix comult = mult.adjoint();
  const CMatrix counit = unit.adjoint();
  const CMatrix cup = comult * unit;
  const CMatrix cap = counit * mult;

  SsfaReport r;
  r.associative = approx_eq(mult * kron(mult, id), mult * kron(id, mult), tol, "associative");
  r.unital = worst("unital", {approx_eq(mult * kron(unit, id), id, tol),
                              approx_eq(mult * kron(id, unit), id, tol)});
  const CMatrix dm = comult * mult;
  r.frobenius = worst("frobenius", {approx_eq(kron(id, mult) * kron(comult, id), dm, tol),
                                    approx_eq(kron(mult, id) * kron(id, comult), dm, tol)});
  r.special = approx_eq(mult * comult, id, tol, "special");
  r.symmetric = approx_eq(cap * swap_map(n, n), cap, tol, "symmetric");
  r.commutative = approx_eq(mult * swap_map(n, n), mult, tol, "commutative");
  r.snake = worst("snake", {approx_eq(kron(cap, id) * kron(id, cup), id, tol),
                            approx_eq(kron(id, cap) * kron(cup, id), id, tol)});
  return r;
}

SsfaReport check_ssfa(const SSFA& a, const Tolerance& tol) { return check_ssfa(a.mult(), a.unit(), tol); }

SSFA classical_algebra(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "classical_algebra: n must be >= 1");
  CMatrix m = CMatrix::Zero(n, n * n);
  for (std::size_t i = 0; i < n; ++i) m(i, i * n + i) = 1.0;
  return SSFA(std::move(m), CMatrix::Ones(n, 1));
}

SSFA matrix_algebra(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "matrix_algebra: k must be >= 1");
  const std::size_t n = k * k;
  const double s = std::sqrt(static_cast<double>(k));
  CMatrix m = CMatrix::Zero(n, n * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) m(i * k + l, (i * k + j) * n + (j * k + l)) = 1.0 / s;
    }
  }
  CMatrix u = CMatrix::Zero(n, 1);
  for (std::size_t i = 0; i < k; ++i) u(i * k + i, 0) = s;
  return SSFA(std::move(m), std::move(u));
}

SSFA direct_sum_algebra(const SSFA& a, const SSFA& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  CMatrix m = CMatrix::Zero(n, n * n);
  for (std::size_t c = 0; c < na; ++c)
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < na; ++y) m(c, x * n + y) = a.mult()(c, x * na + y);
  for (std::size_t c = 0; c < nb; ++c)
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t y = 0; y < nb; ++y) m(na + c, (na + x) * n + (na + y)) = b.mult()(c, x * nb + y);
  CMatrix u(n, 1);
  u << a.unit(), b.unit();
  return SSFA(std::move(m), std::move(u));
}

SSFA tensor_algebra(const SSFA& a, const SSFA& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  // (A ⊗ B) ⊗ (A ⊗ B) -> (A ⊗ A) ⊗ (B ⊗ B) -> A ⊗ B
  const CMatrix shuffle = kron({identity(na), swap_map(nb, na), identity(nb)});
  return SSFA(kron(a.mult(), b.mult()) * shuffle, kron(a.unit(), b.unit()));
}

bool is_standard_classical(const SSFA& a, const Tolerance& tol) {
  return same_algebra(a, classical_algebra(a.dim()), tol);
}

bool is_standard_matrix_algebra(const SSFA& a, const Tolerance& tol) {
  const auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(a.dim()))));
  if (k * k != a.dim()) return false;
  return same_algebra(a, matrix_algebra(k), tol);
}

CMatrix involution_matrix(const SSFA& a) {
  const std::size_t n = a.dim();
  const CMatrix cup = a.cup();
  CMatrix j(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) j(y, x) = cup(x * n + y, 0);
  return j;
}

CVector canonical_involution(const SSFA& a, const CVector& x) {
  if (static_cast<std::size_t>(x.size()) != a.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "canonical_involution: vector has wrong length");
  }
  return involution_matrix(a) * x.conjugate();
}

std::size_t WedderburnData::offset(std::size_t block) const {
  std::size_t off = 0;
  for (std::size_t b = 0; b < block; ++b) off += block_sizes[b] * block_sizes[b];
  return off;
}

namespace {

struct Block {
  std::size_t size;
  std::vector<CVector> basis;  // normalized matrix units e_jk / √size, index j·size + k
  std::vector<double> key;
};

CVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

bool perfect_square(std::size_t d, std::size_t& root) {
  root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
  return root * root == d;
}

// One randomized attempt; returns false when the random draw was degenerate.
bool try_wedderburn(const SSFA& a, std::uint64_t seed, const Tolerance& tol, WedderburnData& out) {
  const std::size_t n = a.dim();
  std::mt19937_64 rng(seed);
  const CMatrix jmat = involution_matrix(a);
  auto star = [&](const CVector& x) -> CVector { return jmat * x.conjugate(); };

  // Center: z with z·x == x·z for every basis x.
  CMatrix constraints(n * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const CVector ex = basis_vector(n, x);
    constraints.middleRows(x * n, n) = a.right_mult(ex) - a.left_mult(ex);
  }
  const CMatrix center = nullspace(constraints, tol);
  out.center_dim = center.cols();

  const CVector c = center * random_vector(center.cols(), rng);
  const CVector h = c + star(c);
  HermEig central = herm_eig(a.left_mult(h), tol);
  // Scale-free clustering: normalise the spectrum to unit spread.
  const double spread = std::max(1.0, central.values.cwiseAbs().maxCoeff());
  const auto clusters = cluster_eigenvalues(central.values / spread, tol.eig_gap);
  if (clusters.size() != out.center_dim) return false;

  std::vector<Block> blocks;
  for (const auto& cluster : clusters) {
    std::size_t k = 0;
    if (!perfect_square(cluster.size(), k)) return false;
    CMatrix v(n, cluster.size());
    for (std::size_t i = 0; i < cluster.size(); ++i) v.col(i) = central.vectors.col(cluster[i]);
    const CMatrix proj = v * v.adjoint();
    const CVector block_unit = proj * a.unit();

    Block block{k, {}, {}};
    for (Eigen::Index i = 0; i < block_unit.size(); ++i) {
      block.key.push_back(std::round(block_unit(i).real() * 1e6) / 1e6);
      block.key.push_back(std::round(block_unit(i).imag() * 1e6) / 1e6);
    }
    if (k == 1) {
      block.basis.push_back(block_unit);
      blocks.push_back(std::move(block));
      continue;
    }

    // Split the block unit into minimal projections with a random Hermitian
    // element of the block.
    const CVector y0 = proj * random_vector(n, rng);
    const CVector y = y0 + star(y0);
    const CMatrix restricted = v.adjoint() * a.left_mult(y) * v;
    HermEig local = herm_eig(restricted, tol);
    const double local_spread = std::max(1.0, local.values.cwiseAbs().maxCoeff());
    const auto rows = cluster_eigenvalues(local.values / local_spread, tol.eig_gap);
    if (rows.size() != k) return false;
    std::vector<CVector> diag_units;
    for (const auto& row : rows) {
      if (row.size() != k) return false;
      CMatrix w(n, k);
      for (std::size_t i = 0; i < k; ++i) w.col(i) = v * local.vectors.col(row[i]);
      diag_units.push_back(w * (w.adjoint() * block_unit));
    }

    // Off-diagonal units e_j1 = e_jj r e_11, normalised so e_j1* e_j1 = e_11.
    const CVector& e11 = diag_units[0];
    const CVector r = proj * random_vector(n, rng);
    std::vector<CVector> col_units(k);
    col_units[0] = e11;
    for (std::size_t j = 1; j < k; ++j) {
      const CVector s = a.multiply(a.multiply(diag_units[j], r), e11);
      const CVector ss = a.multiply(star(s), s);
      const Complex scale = e11.dot(ss) / e11.squaredNorm();
      if (std::abs(scale) < tol.eig_gap || scale.real() <= 0) return false;
      col_units[j] = s / std::sqrt(scale.real());
    }
    const double norm = std::sqrt(static_cast<double>(k));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        block.basis.push_back(a.multiply(col_units[j], star(col_units[l])) / norm);
      }
    }
    blocks.push_back(std::move(block));
  }

  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    if (x.size != y.size) return x.size < y.size;
    return x.key > y.key;
  });

  CMatrix w(n, n);
  std::size_t col = 0;
  out.block_sizes.clear();
  for (const auto& b : blocks) {
    out.block_sizes.push_back(b.size);
    for (const auto& v : b.basis) w.col(col++) = v;
  }
  if (col != n) return false;

  // Verify: unitary, and the transported algebra is blockwise matrix algebra.
  if (!approx_eq(w.adjoint() * w, identity(n), tol).pass) return false;
  SSFA expected = matrix_algebra(out.block_sizes[0]);
  for (std::size_t b = 1; b < out.block_sizes.size(); ++b) {
    expected = direct_sum_algebra(expected, matrix_algebra(out.block_sizes[b]));
  }
  const CMatrix transported_mult = w.adjoint() * a.mult() * kron(w, w);
  const CMatrix transported_unit = w.adjoint() * a.unit();
  if (!approx_eq(transported_mult, expected.mult(), tol).pass) return false;
  if (!approx_eq(transported_unit, expected.unit(), tol).pass) return false;
  out.iso = w.adjoint();
  return true;
}

}  // namespace

WedderburnData wedderburn(const SSFA& a, std::uint64_t seed, const Tolerance& tol) {
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    WedderburnData data;
    if (try_wedderburn(a, seed + attempt, tol, data)) return data;
  }
  throw Error(ErrorKind::NumericalDegeneracy,
              "wedderburn: could not separate central projections after 8 attempts");
}

std::vector<CVector> copyable_elements(const SSFA& a, const Tolerance& tol, std::uint64_t seed) {
  const WedderburnData wd = wedderburn(a, seed, tol);
  const CMatrix w = wd.iso.adjoint();
  std::vector<CVector> out;
  for (std::size_t b = 0; b < wd.block_sizes.size(); ++b) {
    if (wd.block_sizes[b] != 1) continue;
    CVector psi = w.col(wd.offset(b));
    const bool copied = approx_eq(a.comult() * psi, kron(CMatrix(psi), CMatrix(psi)), tol).pass;
    const bool normalised = std::abs((a.counit() * psi)(0, 0) - 1.0) <= tol.rel;
    if (!copied || !normalised) {
      throw Error(ErrorKind::PostconditionFailure, "copyable_elements: 1x1 block is not copyable");
    }
    out.push_back(std::move(psi));
  }
  auto lead = [](const CVector& v) {
    Eigen::Index i = 0;
    v.cwiseAbs().maxCoeff(&i);
    return i;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const CVector& x, const CVector& y) { return lead(x) < lead(y); });
  return out;
}

}  // namespace qset
