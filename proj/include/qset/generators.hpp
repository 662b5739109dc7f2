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

#include "qset/qfun.hpp"

namespace qset {

/// The cyclic Latin square on [3]: P[x][y] = |x+y mod 3⟩⟨x+y mod 3|.
QuantumFunction latin3();

/// The 4 × 4 quantum Latin square with rows
///   0 1 2 3 / ψ− φ+ φ− ψ+ / ψ+ φ− φ+ ψ− / 3 2 1 0
/// where ψ± = (e1 ± e2)/√2, φ+ = (i e0 + 2 e3)/√5, φ− = (2 e0 + i e3)/√5.
QuantumFunction qls4();

/// The Pauli basis {1, X, Y, Z} on ℂ².
std::vector<CMatrix> pauli_basis();

/// Quantum bijection Mat_2 -> [4] built from the Pauli basis.
QuantumFunction pauli_ueb();

/// Rank-r orthogonal projector on ℂ^d drawn from a seeded generator.
CMatrix random_projector(std::size_t d, std::size_t rank, std::uint64_t seed);

/// The 2 × 2 family ((p, 1−p), (1−p, p)) as a quantum bijection [2] -> [2].
QuantumFunction two_point_family(const CMatrix& p);

/// [[p, 1−p, 0, 0], [1−p, p, 0, 0], [0, 0, q, 1−q], [0, 0, 1−q, q]].
QuantumFunction block_ppm(const CMatrix& p, const CMatrix& q);

/// block_ppm with seeded noncommuting rank-one projectors on ℂ².
QuantumFunction random_block_ppm(std::uint64_t seed);

/// All permutations of [n] in lexicographic order.
std::vector<std::vector<std::size_t>> all_permutations(std::size_t n);

}  // namespace qset
