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

#include "oracles.hpp"

#include <Eigen/LU>
#include <random>

namespace oracle {

CMatrix naive_kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < b.rows(); ++k)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

std::size_t rank(const CMatrix& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<CMatrix> lu(m);
  lu.setThreshold(threshold);
  return static_cast<std::size_t>(lu.rank());
}

std::size_t commutant_dim(const std::vector<CMatrix>& projectors) {
  const Eigen::Index d = projectors.front().rows();
  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix stacked(d * d * static_cast<Eigen::Index>(projectors.size()), d * d);
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const CMatrix& p = projectors[k];
    stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
        naive_kron(p.transpose(), id) - naive_kron(id, p);
  }
  return static_cast<std::size_t>(d * d) - rank(stacked);
}

bool is_ppm(const std::vector<std::vector<CMatrix>>& p, double eps) {
  const std::size_t n = p.size();
  const std::size_t m = p.front().size();
  const Eigen::Index d = p[0][0].rows();
  const CMatrix id = CMatrix::Identity(d, d);
  for (std::size_t x = 0; x < n; ++x) {
    CMatrix row = CMatrix::Zero(d, d);
    for (std::size_t y = 0; y < m; ++y) {
      if ((p[x][y] - p[x][y].adjoint()).norm() > eps) return false;
      if ((p[x][y] * p[x][y] - p[x][y]).norm() > eps) return false;
      row += p[x][y];
    }
    if ((row - id).norm() > eps) return false;
  }
  for (std::size_t y = 0; y < m; ++y) {
    CMatrix col = CMatrix::Zero(d, d);
    for (std::size_t x = 0; x < n; ++x) col += p[x][y];
    if ((col - id).norm() > eps) return false;
  }
  return true;
}

bool is_hom(const std::vector<std::size_t>& f, const Adjacency& g, const Adjacency& h) {
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g[v][w] && !h[f[v]][f[w]]) return false;
  return true;
}

bool is_iso(const std::vector<std::size_t>& f, const Adjacency& g, const Adjacency& h) {
  if (g.size() != h.size()) return false;
  std::vector<bool> hit(h.size(), false);
  for (auto y : f) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g[v][w] != h[f[v]][f[w]]) return false;
  return true;
}

std::vector<qset::ClassicalGraph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) slots.emplace_back(v, w);
  std::vector<qset::ClassicalGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    qset::ClassicalGraph g{n, {}, false};
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) g.edges.push_back(slots[s]);
    out.push_back(std::move(g));
  }
  return out;
}

qset::ClassicalGraph random_graph(std::size_t n, std::uint64_t seed, bool reflexive) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  qset::ClassicalGraph g{n, {}, reflexive};
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w)
      if (coin(rng)) g.edges.emplace_back(v, w);
  return g;
}

std::vector<std::vector<CMatrix>> permutation_family(const std::vector<std::size_t>& f) {
  std::vector<std::vector<CMatrix>> p(f.size(), std::vector<CMatrix>(f.size(), CMatrix::Zero(1, 1)));
  for (std::size_t x = 0; x < f.size(); ++x) p[x][f[x]](0, 0) = 1.0;
  return p;
}

}  // namespace oracle
