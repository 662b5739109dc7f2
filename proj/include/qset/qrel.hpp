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

#include <vector>

#include "qset/qgraph.hpp"

namespace qset {

/// A projector R on A ⊗ B commuting with left multiplications on A and
/// right multiplications on B. Construction only checks shapes.
class QuantumRelation {
 public:
  QuantumRelation(SSFA a, SSFA b, CMatrix matrix);

  const SSFA& a() const { return a_; }
  const SSFA& b() const { return b_; }
  const CMatrix& matrix() const { return matrix_; }

 private:
  SSFA a_;
  SSFA b_;
  CMatrix matrix_;
};

struct RelationReport {
  Check projector;  // R == R† == R²
  Check bimodule;   // R (L_x ⊗ R_y) == (L_x ⊗ R_y) R on basis pairs
  bool valid() const { return projector.pass && bimodule.pass; }
  std::vector<Check> checks() const { return {projector, bimodule}; }
};

RelationReport check_relation(const QuantumRelation& r, const Tolerance& tol = {});

/// p = R (u_A ⊗ u_B).
CVector to_projection(const QuantumRelation& r);

/// p ⋆ p == p in A^op ⊗ B, with (a ⊗ b) ⋆ (c ⊗ d) = (c·a) ⊗ (b·d).
Check projection_idempotent(const SSFA& a, const SSFA& b, const CVector& p, const Tolerance& tol = {});
/// p* == p under the canonical involutions of both factors.
Check projection_self_adjoint(const SSFA& a, const SSFA& b, const CVector& p, const Tolerance& tol = {});

/// R(x ⊗ y) = Σ (x · p¹) ⊗ (p² · y) for p = Σ p¹ ⊗ p². Throws NotProjection.
QuantumRelation from_projection(const SSFA& a, const SSFA& b, const CVector& p, const Tolerance& tol = {});

/// swap(p) == p. Throws TypeMismatch when the two sides differ.
bool is_symmetric(const QuantumRelation& r, const Tolerance& tol = {});
/// m_A(p) == u_A. Throws TypeMismatch when the two sides differ.
bool is_reflexive(const QuantumRelation& r, const Tolerance& tol = {});

/// The edge projector of the graph, as a relation on A × A.
QuantumRelation adjacency_to_relation(const QuantumGraph& qg);
/// G = (ε ⊗ 1) R (1 ⊗ u). Throws NotSymmetric, or NotQuantumGraph when the
/// recovered map fails the graph axioms.
QuantumGraph relation_to_adjacency(const QuantumRelation& r, const Tolerance& tol = {});

/// Projector P_V onto an operator system V ⊆ End(ℂ^d), acting on vectors
/// x[j·d + l] = X[j][l].
struct OperatorSystemProjector {
  std::size_t h_dim = 0;
  CMatrix matrix;
};

struct OperatorSystemReport {
  Check projector;
  Check dagger_closed;      // X ∈ V ⇒ X† ∈ V
  Check contains_identity;  // 1 ∈ V
  bool valid() const { return projector.pass && dagger_closed.pass && contains_identity.pass; }
  std::vector<Check> checks() const { return {projector, dagger_closed, contains_identity}; }
};

/// Throws ShapeMismatch unless the matrix is d² × d².
OperatorSystemReport check_operator_system(const OperatorSystemProjector& osp, const Tolerance& tol = {});

/// Orthogonal projector onto the span of the given d × d operators.
OperatorSystemProjector operator_system_from_span(const std::vector<CMatrix>& operators,
                                                  const Tolerance& tol = {});

/// Partial trace of the edge projector over the outer legs, divided by k².
/// Throws NotMatrixAlgebra unless the graph lives on matrix_algebra(k).
OperatorSystemProjector graph_to_operator_system(const QuantumGraph& qg, const Tolerance& tol = {});
/// R = 1 ⊗ P_V ⊗ 1 on Mat_k ⊗ Mat_k, then relation_to_adjacency.
QuantumGraph operator_system_to_graph(const OperatorSystemProjector& osp, const Tolerance& tol = {});

}  // namespace qset
