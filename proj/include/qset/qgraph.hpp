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

#include <optional>
#include <utility>
#include <vector>

#include "qset/qfun.hpp"

namespace qset {

enum class Reflexivity { Reflexive, Irreflexive, Neither };

const char* to_string(Reflexivity r);

struct QGraphReport {
  Check schur_idempotent;  // m (G ⊗ G) δ == G
  Check self_adjoint;      // G == G†
  Check symmetric;         // (cap ⊗ 1)(1 ⊗ G ⊗ 1)(1 ⊗ cup) == G
  Reflexivity reflexivity = Reflexivity::Neither;
  bool valid() const { return schur_idempotent.pass && self_adjoint.pass && symmetric.pass; }
  std::vector<Check> checks() const { return {schur_idempotent, self_adjoint, symmetric}; }
};

/// Throws ShapeMismatch when g is not n × n.
QGraphReport check_qgraph(const SSFA& a, const CMatrix& g, const Tolerance& tol = {});

/// A validated quantum adjacency matrix on a quantum set.
class QuantumGraph {
 public:
  /// Throws NotQuantumGraph when the axioms fail.
  QuantumGraph(SSFA algebra, CMatrix adjacency, const Tolerance& tol = {});

  const SSFA& algebra() const { return algebra_; }
  const CMatrix& adjacency() const { return adjacency_; }
  Reflexivity reflexivity() const { return reflexivity_; }
  /// Cached edge projector; see edge_projector().
  const CMatrix& projector() const { return projector_; }

 private:
  SSFA algebra_;
  CMatrix adjacency_;
  Reflexivity reflexivity_;
  CMatrix projector_;
};

/// Simple graph on [vertices]; every vertex carries a loop iff `reflexive`.
struct ClassicalGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool reflexive = false;

  /// 0/1 adjacency including the diagonal loops.
  std::vector<std::vector<bool>> adjacency() const;
};

ClassicalGraph complete_graph(std::size_t n);
ClassicalGraph cycle_graph(std::size_t n);
ClassicalGraph path_graph(std::size_t n);

QuantumGraph classical_to_quantum(const ClassicalGraph& g);
/// Throws NotClassical unless the algebra is a classical set and G is a 0/1
/// matrix with a uniform diagonal.
ClassicalGraph quantum_to_classical(const QuantumGraph& qg, const Tolerance& tol = {});

/// u ε − G. Throws PostconditionFailure if the result is not a quantum graph.
QuantumGraph complement(const QuantumGraph& qg, const Tolerance& tol = {});

/// (1 ⊗ m)(1 ⊗ G ⊗ 1)(δ ⊗ 1); on a classical graph e_v ⊗ e_w ↦ G_wv e_v ⊗ e_w.
CMatrix edge_projector(const QuantumGraph& qg);
/// (m ⊗ 1)(1 ⊗ G ⊗ 1)(1 ⊗ δ), equal to edge_projector for quantum graphs.
CMatrix edge_projector_mirrored(const QuantumGraph& qg);

struct HomReport {
  Check diagrammatic;
  /// Only for classical endpoints: v∼v', w≁w' ⇒ P[v'][w'] P[v][w] == 0.
  std::optional<Check> projector_form;
  bool agree = true;
  bool valid() const { return diagrammatic.pass; }
  std::vector<Check> checks() const;
};

/// Throws TypeMismatch when f does not run between the graphs' algebras, and
/// NotQuantumFunction when f fails the quantum function axioms.
HomReport verify_hom(const QuantumFunction& f, const QuantumGraph& g, const QuantumGraph& h,
                     const Tolerance& tol = {});

struct IsoReport {
  Check iso;  // P (1_H ⊗ G) == (G' ⊗ 1_H) P
  HomReport forward_hom;
  HomReport dual_hom;  // dagger dual as a homomorphism h -> g
  /// iso holds exactly when both homomorphism checks hold.
  bool consistent = true;
  bool valid() const { return iso.pass; }
  std::vector<Check> checks() const;
};

/// Throws NotBijection.
IsoReport verify_iso(const QuantumFunction& f, const QuantumGraph& g, const QuantumGraph& h,
                     const Tolerance& tol = {});

struct PpmIsoReport {
  Check cond1;  // Σ_{i ~ a} P[i][b] == Σ_{j ~ b} P[a][j]
  Check cond2;  // P[a][b] P[a'][b'] == 0 when a~a' and b~b' disagree
  bool agree() const { return cond1.pass == cond2.pass; }
};

/// Throws NotPPM unless rows and columns of p are projective partitions, and
/// ShapeMismatch when the sizes disagree with the graphs.
PpmIsoReport ppm_iso_conditions(const ProjectorFamily& p, const ClassicalGraph& g,
                                const ClassicalGraph& h, const Tolerance& tol = {});

}  // namespace qset
