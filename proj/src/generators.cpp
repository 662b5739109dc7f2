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

#include "qset/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qset {

namespace {

CMatrix ketbra(const CVector& v) { return v * v.adjoint(); }

}  // namespace

QuantumFunction latin3() {
  ProjectorFamily fam{3, 3, 3, {}};
  fam.projectors.assign(3, std::vector<CMatrix>(3));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) fam.projectors[x][y] = ketbra(basis_vector(3, (x + y) % 3));
  return family_to_qfun(fam);
}

QuantumFunction qls4() {
  const Complex i(0.0, 1.0);
  const double r2 = std::sqrt(2.0);
  const double r5 = std::sqrt(5.0);
  auto e = [](std::size_t k) { return basis_vector(4, k); };
  const CVector psi_p = (e(1) + e(2)) / r2;
  const CVector psi_m = (e(1) - e(2)) / r2;
  const CVector phi_p = (i * e(0) + 2.0 * e(3)) / r5;
  const CVector phi_m = (2.0 * e(0) + i * e(3)) / r5;
  const std::vector<std::vector<CVector>> rows = {
      {e(0), e(1), e(2), e(3)},
      {psi_m, phi_p, phi_m, psi_p},
      {psi_p, phi_m, phi_p, psi_m},
      {e(3), e(2), e(1), e(0)},
  };
  ProjectorFamily fam{4, 4, 4, {}};
  for (const auto& row : rows) {
    std::vector<CMatrix> out;
    for (const auto& v : row) out.push_back(ketbra(v));
    fam.projectors.push_back(std::move(out));
  }
  return family_to_qfun(fam);
}

std::vector<CMatrix> pauli_basis() {
  const Complex i(0.0, 1.0);
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {identity(2), x, y, z};
}

QuantumFunction pauli_ueb() { return ueb_to_bijection(pauli_basis()); }

CMatrix random_projector(std::size_t d, std::size_t rank, std::uint64_t seed) {
  if (rank > d) throw Error(ErrorKind::InvalidArgument, "random_projector: rank exceeds dimension");
  const CMatrix u = random_unitary(d, seed);
  const CMatrix v = u.leftCols(rank);
  return v * v.adjoint();
}

QuantumFunction two_point_family(const CMatrix& p) {
  const CMatrix q = identity(p.rows()) - p;
  ProjectorFamily fam{2, 2, static_cast<std::size_t>(p.rows()), {{p, q}, {q, p}}};
  return family_to_qfun(fam);
}

QuantumFunction block_ppm(const CMatrix& p, const CMatrix& q) {
  const std::size_t d = p.rows();
  if (q.rows() != p.rows()) throw Error(ErrorKind::ShapeMismatch, "block_ppm: p and q must share a space");
  const CMatrix id = identity(d);
  const CMatrix z = zeros(d, d);
  ProjectorFamily fam{4, 4, d, {}};
  fam.projectors = {
      {p, id - p, z, z},
      {id - p, p, z, z},
      {z, z, q, id - q},
      {z, z, id - q, q},
  };
  return family_to_qfun(fam);
}

QuantumFunction random_block_ppm(std::uint64_t seed) {
  // Successive draws until the two lines are far from commuting.
  for (std::uint64_t k = 0;; ++k) {
    const CMatrix p = random_projector(2, 1, 2 * (seed + 7919 * k));
    const CMatrix q = random_projector(2, 1, 2 * (seed + 7919 * k) + 1);
    if ((p * q - q * p).norm() > 0.1) return block_ppm(p, q);
  }
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace qset
