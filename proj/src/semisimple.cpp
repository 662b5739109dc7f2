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

#include "qset/semisimple.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace qset {

namespace {

void require_parallel(const QuantumFunction& f, const QuantumFunction& g, const Tolerance& tol,
                      const char* what) {
  if (!same_algebra(f.source(), g.source(), tol) || !same_algebra(f.target(), g.target(), tol)) {
    throw Error(ErrorKind::TypeMismatch, what);
  }
}

void require_qfun(const QuantumFunction& f, const Tolerance& tol, const char* what) {
  if (!verify_qfun(f, tol).valid()) throw Error(ErrorKind::NotQuantumFunction, what);
}

CMatrix restrict_to(const QuantumFunction& f, const CMatrix& iso) {
  return kron(identity(f.target().dim()), iso.adjoint()) * f.matrix() *
         kron(iso, identity(f.source().dim()));
}

// Traceless, unit-norm Hermitian part of x; empty when x is (close to) scalar.
CMatrix hermitian_witness(const CMatrix& x, double floor) {
  const auto d = static_cast<double>(x.rows());
  for (int variant = 0; variant < 2; ++variant) {
    CMatrix h = variant == 0 ? CMatrix(x + x.adjoint()) : CMatrix(Complex(0, 1) * (x - x.adjoint()));
    h -= (h.trace() / d) * CMatrix::Identity(x.rows(), x.cols());
    const double n = h.norm();
    if (n > floor) return h / n;
  }
  return CMatrix(0, 0);
}

using PartKey = std::tuple<std::size_t, std::vector<long long>>;

PartKey part_key(const DecompositionPart& p) {
  std::vector<long long> entries;
  const CMatrix& m = p.function.matrix();
  entries.reserve(2 * m.size());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      entries.push_back(std::llround(m(i, j).real() * 1e6));
      entries.push_back(std::llround(m(i, j).imag() * 1e6));
    }
  }
  return {p.function.h_dim(), std::move(entries)};
}

// One splitting pass: spectral projectors of a Hermitian witness in End(f).
// Returns false when the witness has a single eigenvalue cluster.
bool split_once(const QuantumFunction& f, const IntertwinerBasis& end, std::uint64_t seed, int attempt,
                const Tolerance& tol, std::vector<Splitting>& out) {
  const std::size_t d = f.h_dim();
  constexpr double kScalarFloor = 1e-6;
  CMatrix witness;
  if (attempt == 0) {
    for (const auto& x : end.basis) {
      witness = hermitian_witness(x, kScalarFloor);
      if (witness.size() != 0) break;
    }
  } else {
    const CMatrix coeff = random_gaussian(end.dim(), 1, seed * 1315423911ULL + static_cast<std::uint64_t>(attempt));
    CMatrix y = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < end.dim(); ++k) y += coeff(k, 0) * end.basis[k];
    witness = hermitian_witness(y, kScalarFloor);
  }
  if (witness.size() == 0) return false;
  const HermEig eig = herm_eig(witness, tol);
  const auto clusters = cluster_eigenvalues(eig.values, tol.eig_gap);
  if (clusters.size() < 2) return false;
  out.clear();
  for (const auto& cluster : clusters) {
    CMatrix iso(d, cluster.size());
    for (std::size_t c = 0; c < cluster.size(); ++c) iso.col(c) = eig.vectors.col(cluster[c]);
    out.push_back(Splitting{iso, QuantumFunction(f.source(), f.target(), iso.cols(), restrict_to(f, iso))});
  }
  return true;
}

}  // namespace

IntertwinerBasis intertwiner_space(const QuantumFunction& f, const QuantumFunction& g, const Tolerance& tol) {
  require_parallel(f, g, tol, "intertwiner_space: functions are not parallel");
  const std::size_t df = f.h_dim();
  const std::size_t dg = g.h_dim();
  IntertwinerBasis out;
  out.from_dim = df;
  out.to_dim = dg;
  if (df == 0 || dg == 0) return out;
  const CMatrix ia = identity(f.source().dim());
  const CMatrix ib = identity(f.target().dim());
  const std::size_t rows = f.target().dim() * dg * df * f.source().dim();
  CMatrix constraint(rows, dg * df);
  for (std::size_t r = 0; r < dg; ++r) {
    for (std::size_t s = 0; s < df; ++s) {
      CMatrix e = zeros(dg, df);
      e(r, s) = 1.0;
      constraint.col(r * df + s) = vec_rows(g.matrix() * kron(e, ia) - kron(ib, e) * f.matrix());
    }
  }
  const CMatrix null = nullspace(constraint, tol);
  for (Eigen::Index k = 0; k < null.cols(); ++k) out.basis.push_back(unvec_rows(null.col(k), dg, df));
  return out;
}

bool is_simple(const QuantumFunction& f, const Tolerance& tol) {
  require_qfun(f, tol, "is_simple: input is not a quantum function");
  return intertwiner_space(f, f, tol).dim() == 1;
}

QuantumFunction zero_qfun(const SSFA& source, const SSFA& target) {
  return QuantumFunction(source, target, 0, CMatrix(0, 0));
}

QuantumFunction direct_sum(const QuantumFunction& f, const QuantumFunction& g, const Tolerance& tol) {
  require_parallel(f, g, tol, "direct_sum: functions are not parallel");
  const std::size_t df = f.h_dim();
  const std::size_t dg = g.h_dim();
  const std::size_t d = df + dg;
  CMatrix i_f = zeros(d, df);
  CMatrix i_g = zeros(d, dg);
  i_f.topRows(df) = identity(df);
  i_g.bottomRows(dg) = identity(dg);
  const CMatrix ia = identity(f.source().dim());
  const CMatrix ib = identity(f.target().dim());
  CMatrix m = kron(ib, i_f) * f.matrix() * kron(i_f.adjoint(), ia);
  m += kron(ib, i_g) * g.matrix() * kron(i_g.adjoint(), ia);
  return QuantumFunction(f.source(), f.target(), d, std::move(m));
}

Splitting split_idempotent(const QuantumFunction& f, const CMatrix& r, const Tolerance& tol) {
  const std::size_t d = f.h_dim();
  if (static_cast<std::size_t>(r.rows()) != d || static_cast<std::size_t>(r.cols()) != d) {
    throw Error(ErrorKind::ShapeMismatch, "split_idempotent: r must act on H");
  }
  if (!approx_eq(r, r.adjoint(), tol).pass || !approx_eq(r * r, r, tol).pass) {
    throw Error(ErrorKind::NotIdempotent, "split_idempotent: r is not a self-adjoint idempotent");
  }
  const CMatrix ia = identity(f.source().dim());
  const CMatrix ib = identity(f.target().dim());
  if (!approx_eq(f.matrix() * kron(r, ia), kron(ib, r) * f.matrix(), tol).pass) {
    throw Error(ErrorKind::NotIntertwiner, "split_idempotent: r does not commute with P");
  }
  const HermEig eig = herm_eig(r, tol);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > 0.5) keep.push_back(k);
  }
  CMatrix iso(d, keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) iso.col(c) = eig.vectors.col(keep[c]);
  QuantumFunction part(f.source(), f.target(), keep.size(), restrict_to(f, iso));
  return Splitting{std::move(iso), std::move(part)};
}

std::vector<Check> DecompositionReport::checks() const {
  return {isometries, completeness, reassembly, Check{"parts_simple", parts_simple, 0.0}};
}

CMatrix reassemble(const QuantumFunction& f, const Decomposition& d) {
  const CMatrix ia = identity(f.source().dim());
  const CMatrix ib = identity(f.target().dim());
  CMatrix sum = CMatrix::Zero(f.matrix().rows(), f.matrix().cols());
  for (const auto& p : d.parts) sum += kron(ib, p.isometry) * p.function.matrix() * kron(p.isometry.adjoint(), ia);
  return sum;
}

DecompositionReport check_decomposition(const QuantumFunction& f, const Decomposition& d, const Tolerance& tol) {
  DecompositionReport r;
  r.isometries = Check{"isometries", true, 0.0};
  CMatrix projector_sum = zeros(f.h_dim(), f.h_dim());
  r.parts_simple = true;
  for (const auto& p : d.parts) {
    const Check c = approx_eq(p.isometry.adjoint() * p.isometry, identity(p.function.h_dim()), tol);
    r.isometries.pass = r.isometries.pass && c.pass;
    r.isometries.residual = std::max(r.isometries.residual, c.residual);
    projector_sum += p.isometry * p.isometry.adjoint();
    r.parts_simple = r.parts_simple && verify_qfun(p.function, tol).valid() &&
                     intertwiner_space(p.function, p.function, tol).dim() == 1;
  }
  r.completeness = approx_eq(projector_sum, identity(f.h_dim()), tol, "completeness");
  r.reassembly = approx_eq(reassemble(f, d), f.matrix(), tol, "reassembly");
  return r;
}

Decomposition decompose(const QuantumFunction& f, std::uint64_t seed, const Tolerance& tol) {
  require_qfun(f, tol, "decompose: input is not a quantum function");
  constexpr int kAttempts = 8;
  Decomposition out;
  // Worklist of (function, isometry into the parent space).
  std::vector<std::pair<QuantumFunction, CMatrix>> work;
  if (f.h_dim() > 0) work.emplace_back(f, identity(f.h_dim()));
  while (!work.empty()) {
    auto [g, embed] = std::move(work.back());
    work.pop_back();
    const IntertwinerBasis end = intertwiner_space(g, g, tol);
    if (end.dim() <= 1) {
      out.parts.push_back(DecompositionPart{std::move(g), std::move(embed)});
      continue;
    }
    std::vector<Splitting> pieces;
    bool split = false;
    for (int attempt = 0; attempt < kAttempts && !split; ++attempt) {
      split = split_once(g, end, seed, attempt, tol, pieces);
    }
    if (!split) {
      throw Error(ErrorKind::NumericalDegeneracy,
                  "decompose: could not separate an endomorphism space of dimension " + std::to_string(end.dim()));
    }
    for (auto& piece : pieces) work.emplace_back(std::move(piece.function), embed * piece.isometry);
  }
  std::stable_sort(out.parts.begin(), out.parts.end(),
                   [](const DecompositionPart& a, const DecompositionPart& b) { return part_key(a) < part_key(b); });
  const DecompositionReport report = check_decomposition(f, out, tol);
  if (!report.valid()) {
    throw Error(ErrorKind::NumericalDegeneracy, "decompose: result fails its invariants");
  }
  return out;
}

bool essentially_classical_by_commutation(const QuantumFunction& f, const Tolerance& tol) {
  const ProjectorFamily p = qfun_to_family(f, tol);
  std::vector<const CMatrix*> all;
  for (const auto& row : p.projectors)
    for (const auto& q : row) all.push_back(&q);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!approx_eq((*all[i]) * (*all[j]), (*all[j]) * (*all[i]), tol).pass) return false;
    }
  }
  return true;
}

bool essentially_classical_by_decomposition(const QuantumFunction& f, std::uint64_t seed, const Tolerance& tol) {
  const Decomposition d = decompose(f, seed, tol);
  return std::all_of(d.parts.begin(), d.parts.end(),
                     [](const DecompositionPart& p) { return p.function.h_dim() == 1; });
}

bool is_essentially_classical(const QuantumFunction& f, std::uint64_t seed, const Tolerance& tol) {
  if (is_standard_classical(f.source(), tol) && is_standard_classical(f.target(), tol)) {
    return essentially_classical_by_commutation(f, tol);
  }
  return essentially_classical_by_decomposition(f, seed, tol);
}

std::vector<std::size_t> classical_map(const QuantumFunction& f, const Tolerance& tol) {
  if (!is_standard_classical(f.source(), tol) || !is_standard_classical(f.target(), tol)) {
    throw Error(ErrorKind::NotClassicalEndpoints, "classical_map: endpoints must be classical sets");
  }
  if (f.h_dim() != 1) throw Error(ErrorKind::NotClassical, "classical_map: Hilbert space is not one dimensional");
  const std::size_t nb = f.target().dim();
  std::vector<std::size_t> map(f.source().dim());
  for (std::size_t x = 0; x < map.size(); ++x) {
    std::size_t hit = nb;
    for (std::size_t y = 0; y < nb; ++y) {
      const Complex v = f.matrix()(y, x);
      if (std::abs(v - 1.0) <= tol.rel * 10) {
        if (hit != nb) throw Error(ErrorKind::NotClassical, "classical_map: column has two images");
        hit = y;
      } else if (std::abs(v) > tol.rel * 10) {
        throw Error(ErrorKind::NotClassical, "classical_map: entry is neither 0 nor 1");
      }
    }
    if (hit == nb) throw Error(ErrorKind::NotClassical, "classical_map: column has no image");
    map[x] = hit;
  }
  return map;
}

std::vector<QuantumFunction> classical_components(const QuantumFunction& f, std::uint64_t seed,
                                                  const Tolerance& tol) {
  if (!is_standard_classical(f.source(), tol) || !is_standard_classical(f.target(), tol)) {
    throw Error(ErrorKind::NotClassical, "classical_components: endpoints must be classical sets");
  }
  if (!essentially_classical_by_commutation(f, tol)) {
    throw Error(ErrorKind::NotClassical, "classical_components: projectors do not commute");
  }
  std::vector<QuantumFunction> out;
  for (const auto& part : decompose(f, seed, tol).parts) {
    out.push_back(classical_function(classical_map(part.function, tol), f.target().dim()));
  }
  return out;
}

ClosureReport intertwiner_closure_checks(const QuantumFunction& f, const Tolerance& tol) {
  const IntertwinerBasis end = intertwiner_space(f, f, tol);
  ClosureReport r;
  r.dim = end.dim();
  r.products = Check{"products", true, 0.0};
  r.adjoints = Check{"adjoints", true, 0.0};
  auto project = [&](const CMatrix& y) {
    CMatrix p = CMatrix::Zero(y.rows(), y.cols());
    for (const auto& b : end.basis) p += (b.adjoint() * y).trace() * b;
    return p;
  };
  auto absorb = [](Check& into, const Check& c) {
    into.pass = into.pass && c.pass;
    into.residual = std::max(into.residual, c.residual);
  };
  for (const auto& x : end.basis) {
    const CMatrix adj = x.adjoint();
    absorb(r.adjoints, approx_eq(project(adj), adj, tol));
    for (const auto& y : end.basis) {
      const CMatrix prod = x * y;
      absorb(r.products, approx_eq(project(prod), prod, tol));
    }
  }
  return r;
}

}  // namespace qset
