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

// Test-only reference computations. These deliberately avoid the library's
// own tensor helpers so that agreement means something.

#include <cstdint>
#include <vector>

#include "qset/qgraph.hpp"

namespace oracle {

using qset::CMatrix;
using Adjacency = std::vector<std::vector<bool>>;

/// Entry-by-entry Kronecker product.
CMatrix naive_kron(const CMatrix& a, const CMatrix& b);

/// Rank by full-pivot LU with an absolute threshold.
std::size_t rank(const CMatrix& m, double threshold = 1e-9);

/// dim of {X : X P_xy = P_xy X for all x, y} (for a family on one space),
/// computed from vec(XP − PX) = (P^T ⊗ 1 − 1 ⊗ P) vec_cols(X).
std::size_t commutant_dim(const std::vector<CMatrix>& projectors);

/// Row/column PPM conditions checked entry by entry.
bool is_ppm(const std::vector<std::vector<CMatrix>>& p, double eps = 1e-9);

/// Classical graph homomorphism: v ~ v' ⇒ f(v) ~ f(v').
bool is_hom(const std::vector<std::size_t>& f, const Adjacency& g, const Adjacency& h);
/// Bijective f with v ~ v' ⇔ f(v) ~ f(v').
bool is_iso(const std::vector<std::size_t>& f, const Adjacency& g, const Adjacency& h);

/// All simple irreflexive graphs on n vertices (2^(n(n-1)/2) of them).
std::vector<qset::ClassicalGraph> all_graphs(std::size_t n);

/// Seeded random simple graph on n vertices.
qset::ClassicalGraph random_graph(std::size_t n, std::uint64_t seed, bool reflexive);

/// Permutation family P[x][f(x)] = 1 on a one dimensional space.
std::vector<std::vector<CMatrix>> permutation_family(const std::vector<std::size_t>& f);

}  // namespace oracle
