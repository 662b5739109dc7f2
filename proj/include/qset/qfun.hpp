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

#include "qset/frobenius.hpp"

namespace qset {

/// A quantum function (H, P) from `source` A to `target` B.
///
/// The matrix P : H ⊗ A -> B ⊗ H has shape (nB·d) × (d·nA); domain legs are
/// ordered (H, A) and codomain legs (B, H), each flattened left factor major.
/// Construction only checks shapes.
class QuantumFunction {
 public:
  QuantumFunction(SSFA source, SSFA target, std::size_t h_dim, CMatrix matrix);

  const SSFA& source() const { return source_; }
  const SSFA& target() const { return target_; }
  std::size_t h_dim() const { return h_dim_; }
  const CMatrix& matrix() const { return matrix_; }

 private:
  SSFA source_;
  SSFA target_;
  std::size_t h_dim_;
  CMatrix matrix_;
};

/// A quantum element of A is a quantum function ℂ -> A.
using QuantumElement = QuantumFunction;

/// Slice operators K_a = (⟨e_a| ⊗ 1_H) Q of a quantum element.
std::vector<CMatrix> slice_operators(const QuantumElement& q);

struct QfunReport {
  Check qf1;  // comultiplication pull-through
  Check qf2;  // counit pull-through
  Check qf3;  // rotated adjoint
  bool valid() const { return qf1.pass && qf2.pass && qf3.pass; }
  std::vector<Check> checks() const { return {qf1, qf2, qf3}; }
};

struct QbijReport {
  Check qb1;  // multiplication pull-through
  Check qb2;  // unit pull-through
  bool valid() const { return qb1.pass && qb2.pass; }
  std::vector<Check> checks() const { return {qb1, qb2}; }
};

QfunReport verify_qfun(const QuantumFunction& f, const Tolerance& tol = {});
/// Throws NotQuantumFunction unless verify_qfun passes.
QbijReport verify_qbij(const QuantumFunction& f, const Tolerance& tol = {});

/// P†P == 1 and PP† == 1 (false for non-square P).
Check is_unitary(const QuantumFunction& f, const Tolerance& tol = {});

/// P is invertible and the H-bent P⁻¹ is inverse to the H-bent P.
/// Throws Singular when P⁻¹ does not exist.
bool bi_invertible(const QuantumFunction& f, const Tolerance& tol = {});

QuantumFunction identity_qfun(const SSFA& a);

/// g ∘ f with Hilbert space H_g ⊗ H_f and matrix (Q ⊗ 1_{H_f})(1_{H_g} ⊗ P).
QuantumFunction compose(const QuantumFunction& g, const QuantumFunction& f,
                        const Tolerance& tol = {});

/// The dagger dual (H*, P̄) : B -> A of a quantum bijection, with
/// P̄[(a,j),(i,b)] = conj(P[(b,j),(i,a)]). Throws NotBijection.
QuantumFunction dagger_dual(const QuantumFunction& f, const Tolerance& tol = {});

/// Unit and counit conditions for the standard cups and caps on H between f
/// and a candidate dual.
struct DualityReport {
  Check right_unit;    // η_R : 1_A -> f̄ ∘ f
  Check right_counit;  // ε_R : f ∘ f̄ -> 1_B
  Check left_unit;     // η_L : 1_B -> f ∘ f̄
  Check left_counit;   // ε_L : f̄ ∘ f -> 1_A
  bool valid() const {
    return right_unit.pass && right_counit.pass && left_unit.pass && left_counit.pass;
  }
  std::vector<Check> checks() const { return {right_unit, right_counit, left_unit, left_counit}; }
};

DualityReport duality_checks(const QuantumFunction& f, const QuantumFunction& dual,
                             const Tolerance& tol = {});

/// Grid of projectors P[x][y] on a common Hilbert space: the classical
/// endpoint view of a quantum function X -> Y.
struct ProjectorFamily {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t h_dim = 0;
  std::vector<std::vector<CMatrix>> projectors;

  const CMatrix& at(std::size_t x, std::size_t y) const { return projectors[x][y]; }
};

/// Row conditions: self-adjoint idempotents, orthogonal and complete per row.
Check check_ppm_rows(const ProjectorFamily& p, const Tolerance& tol = {});
/// Column conditions: orthogonal and complete per column.
Check check_ppm_columns(const ProjectorFamily& p, const Tolerance& tol = {});

/// P(h ⊗ e_x) = Σ_y e_y ⊗ P[x][y] h. Throws RowConditionViolated.
QuantumFunction family_to_qfun(const ProjectorFamily& p, const Tolerance& tol = {});
/// Throws NotClassicalEndpoints unless both endpoints are standard classical sets.
ProjectorFamily qfun_to_family(const QuantumFunction& f, const Tolerance& tol = {});

/// The classical function x ↦ map[x] from [map.size()] to [target_size].
QuantumFunction classical_function(const std::vector<std::size_t>& map, std::size_t target_size);

/// Conjugates the Hilbert space: P' = (1_B ⊗ U) P (U† ⊗ 1_A).
QuantumFunction conjugate_hilbert(const QuantumFunction& f, const CMatrix& unitary);

/// Quantum element from a unital *-representation: rep[a] is ρ(e_a) on ℂ^d;
/// the slice operators are K_a = ρ(e_a)†. Throws NotRepresentation.
QuantumElement module_to_element(const SSFA& a, const std::vector<CMatrix>& rep,
                                 const Tolerance& tol = {});

/// One simple quantum element per Wedderburn block of `a`.
std::vector<QuantumElement> enumerate_simple_elements(const SSFA& a, std::uint64_t seed = 0,
                                                      const Tolerance& tol = {});

/// Rebuilds (m, u) from a complete list of pairwise non-isomorphic simple
/// quantum elements:
///   m(e_a ⊗ e_b) = Σ_i d_i Σ_c e_c Tr(K_c K_a† K_b†),  u = Σ_i d_i Σ_a e_a Tr(K_a).
/// Throws InconsistentElements.
SSFA reconstruct_algebra(const std::vector<QuantumElement>& elements, const Tolerance& tol = {});

/// Quantum bijection Mat_n -> [n²] from a unitary error basis {U_i}.
/// Throws NotUEB.
QuantumFunction ueb_to_bijection(const std::vector<CMatrix>& unitaries, const Tolerance& tol = {});

}  // namespace qset
