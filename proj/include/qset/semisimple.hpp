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
#include <utility>
#include <vector>

#include "qset/qfun.hpp"

namespace qset {

/// Orthonormal (Frobenius) basis of the intertwiners X : H_f -> H_g with
/// P_g (X ⊗ 1_A) == (1_B ⊗ X) P_f. Each basis element is d_g × d_f.
struct IntertwinerBasis {
  std::size_t from_dim = 0;
  std::size_t to_dim = 0;
  std::vector<CMatrix> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Throws TypeMismatch unless f and g share source and target.
IntertwinerBasis intertwiner_space(const QuantumFunction& f, const QuantumFunction& g,
                                   const Tolerance& tol = {});

/// End(f) is one dimensional. Throws NotQuantumFunction.
bool is_simple(const QuantumFunction& f, const Tolerance& tol = {});

/// Block direct sum on H_f ⊕ H_g. Throws TypeMismatch.
QuantumFunction direct_sum(const QuantumFunction& f, const QuantumFunction& g,
                           const Tolerance& tol = {});

/// The zero quantum function A -> B on the zero Hilbert space.
QuantumFunction zero_qfun(const SSFA& source, const SSFA& target);

struct Splitting {
  CMatrix isometry;          // i : V -> H with i i† == r
  QuantumFunction function;  // (1_B ⊗ i†) P (i ⊗ 1_A)
};

/// Splits a self-adjoint idempotent intertwiner r of f.
/// Throws NotIdempotent or NotIntertwiner.
Splitting split_idempotent(const QuantumFunction& f, const CMatrix& r, const Tolerance& tol = {});

struct DecompositionPart {
  QuantumFunction function;
  CMatrix isometry;
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
};

struct DecompositionReport {
  Check isometries;    // i† i == 1 for every part
  Check completeness;  // Σ i i† == 1_H
  Check reassembly;    // Σ (1 ⊗ i) P_part (i† ⊗ 1) == P
  bool parts_simple = false;
  bool valid() const {
    return isometries.pass && completeness.pass && reassembly.pass && parts_simple;
  }
  std::vector<Check> checks() const;
};

/// Splits f into simple parts. Deterministic in `seed`; throws
/// NotQuantumFunction, or NumericalDegeneracy when no retry separates the
/// commutant.
Decomposition decompose(const QuantumFunction& f, std::uint64_t seed = 0, const Tolerance& tol = {});

DecompositionReport check_decomposition(const QuantumFunction& f, const Decomposition& d,
                                        const Tolerance& tol = {});

/// Σ (1_B ⊗ i) P_part (i† ⊗ 1_A).
CMatrix reassemble(const QuantumFunction& f, const Decomposition& d);

/// All projectors P[x][y] pairwise commute. Throws NotClassicalEndpoints.
bool essentially_classical_by_commutation(const QuantumFunction& f, const Tolerance& tol = {});
/// Every simple part is one dimensional.
bool essentially_classical_by_decomposition(const QuantumFunction& f, std::uint64_t seed = 0,
                                            const Tolerance& tol = {});
/// Commutation test for classical endpoints, decomposition test otherwise.
bool is_essentially_classical(const QuantumFunction& f, std::uint64_t seed = 0,
                              const Tolerance& tol = {});

/// The map x ↦ y of a one dimensional quantum function between classical sets.
std::vector<std::size_t> classical_map(const QuantumFunction& f, const Tolerance& tol = {});

/// The classical functions whose direct sum is f. Throws NotClassical.
std::vector<QuantumFunction> classical_components(const QuantumFunction& f, std::uint64_t seed = 0,
                                                  const Tolerance& tol = {});

struct ClosureReport {
  std::size_t dim = 0;
  Check products;  // B_i B_j re-expands in the basis
  Check adjoints;  // B_i† re-expands in the basis
  bool valid() const { return products.pass && adjoints.pass; }
};

ClosureReport intertwiner_closure_checks(const QuantumFunction& f, const Tolerance& tol = {});

}  // namespace qset
