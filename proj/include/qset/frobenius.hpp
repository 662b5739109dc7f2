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

#include <cstdint>
#include <vector>

#include "qset/tensor.hpp"

namespace qset {

/// A finite quantum set: a special symmetric dagger Frobenius algebra given
/// by its multiplication m (n × n²) and unit u (n × 1).
///
/// Construction only checks shapes; use check_ssfa() to verify the axioms.
/// Comultiplication, counit, cup and cap are derived from (m, u) by the dagger.
class SSFA {
 public:
  SSFA(CMatrix mult, CMatrix unit);

  std::size_t dim() const { return dim_; }
  const CMatrix& mult() const { return mult_; }
  const CMatrix& unit() const { return unit_; }

  CMatrix comult() const { return mult_.adjoint(); }
  CMatrix counit() const { return unit_.adjoint(); }
  /// δ ∘ u : ℂ -> A ⊗ A
  CMatrix cup() const { return comult() * unit_; }
  /// ε ∘ m : A ⊗ A -> ℂ
  CMatrix cap() const { return counit() * mult_; }

  /// Left multiplication x · (−) and right multiplication (−) · x.
  CMatrix left_mult(const CVector& x) const;
  CMatrix right_mult(const CVector& x) const;
  CVector multiply(const CVector& x, const CVector& y) const;

 private:
  std::size_t dim_;
  CMatrix mult_;
  CMatrix unit_;
};

/// True when the two algebras have the same dimension and structure tensors
/// within tolerance.
bool same_algebra(const SSFA& a, const SSFA& b, const Tolerance& tol);

struct SsfaReport {
  Check associative;
  Check unital;
  Check frobenius;
  Check special;
  Check symmetric;
  Check commutative;
  Check snake;

  /// The SSFA axioms; commutativity is reported but not required.
  bool valid() const {
    return associative.pass && unital.pass && frobenius.pass && special.pass &&
           symmetric.pass;
  }
  std::vector<Check> checks() const {
    return {associative, unital, frobenius, special, symmetric, commutative, snake};
  }
};

SsfaReport check_ssfa(const CMatrix& mult, const CMatrix& unit, const Tolerance& tol = {});
SsfaReport check_ssfa(const SSFA& a, const Tolerance& tol = {});

/// The n-element set: m(e_i ⊗ e_j) = δ_ij e_i, u = Σ e_i.
SSFA classical_algebra(std::size_t n);

/// Mat_k in the orthonormal basis v_ij = e_ij / √k, index i·k + j.
SSFA matrix_algebra(std::size_t k);

SSFA direct_sum_algebra(const SSFA& a, const SSFA& b);
SSFA tensor_algebra(const SSFA& a, const SSFA& b);

/// Is `a` literally classical_algebra(dim) in its standard basis?
bool is_standard_classical(const SSFA& a, const Tolerance& tol);
/// Is `a` literally matrix_algebra(k) for some k?
bool is_standard_matrix_algebra(const SSFA& a, const Tolerance& tol);

/// Block decomposition of a finite quantum set into matrix algebras.
struct WedderburnData {
  std::vector<std::size_t> block_sizes;  // ascending
  /// Unitary A -> ⊕ Mat_{n_i}; rows are ordered block by block, each block in
  /// the matrix_algebra(n_i) basis.
  CMatrix iso;
  std::size_t center_dim = 0;

  /// Offset of block b in the block-diagonal coordinate system.
  std::size_t offset(std::size_t block) const;
};

WedderburnData wedderburn(const SSFA& a, std::uint64_t seed = 0, const Tolerance& tol = {});

/// All ψ with δψ = ψ ⊗ ψ and εψ = 1, one per 1×1 Wedderburn block, ordered by
/// the position of their largest entry.
std::vector<CVector> copyable_elements(const SSFA& a, const Tolerance& tol = {},
                                       std::uint64_t seed = 0);

/// The antilinear involution x ↦ (x† ⊗ 1) · cup.
CVector canonical_involution(const SSFA& a, const CVector& x);

/// Linear part J of the involution: x* = J · conj(x).
CMatrix involution_matrix(const SSFA& a);

}  // namespace qset
