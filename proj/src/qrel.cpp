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

#include "qset/qrel.hpp"

#include <algorithm>

namespace qset {

QuantumRelation::QuantumRelation(SSFA a, SSFA b, CMatrix matrix)
    : a_(std::move(a)), b_(std::move(b)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(a_.dim() * b_.dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw Error(ErrorKind::ShapeMismatch, "relation matrix must be (nA·nB) square");
  }
}

RelationReport check_relation(const QuantumRelation& r, const Tolerance& tol) {
  const SSFA& a = r.a();
  const SSFA& b = r.b();
  const CMatrix& m = r.matrix();
  RelationReport rep;
  const Check herm = approx_eq(m, m.adjoint(), tol);
  const Check idem = approx_eq(m * m, m, tol);
  rep.projector = Check{"projector", herm.pass && idem.pass, std::max(herm.residual, idem.residual)};
  rep.bimodule = Check{"bimodule", true, 0.0};
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const CMatrix lx = a.left_mult(basis_vector(a.dim(), x));
    for (std::size_t y = 0; y < b.dim(); ++y) {
      const CMatrix act = kron(lx, b.right_mult(basis_vector(b.dim(), y)));
      const Check c = approx_eq(m * act, act * m, tol);
      rep.bimodule.pass = rep.bimodule.pass && c.pass;
      rep.bimodule.residual = std::max(rep.bimodule.residual, c.residual);
    }
  }
  return rep;
}

CVector to_projection(const QuantumRelation& r) { return r.matrix() * kron(r.a().unit(), r.b().unit()); }

namespace {

// The multiplication of A^op ⊗ B on flattened vectors.
CVector star_product(const SSFA& a, const SSFA& b, const CVector& p, const CVector& q) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CVector out = CVector::Zero(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Complex pij = p(i * nb + j);
      if (pij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const Complex qkl = q(k * nb + l);
          if (qkl == Complex(0.0)) continue;
          // (e_i ⊗ e_j) ⋆ (e_k ⊗ e_l) = (e_k e_i) ⊗ (e_j e_l)
          out += pij * qkl * kron(a.mult().col(k * na + i), b.mult().col(j * nb + l));
        }
    }
  return out;
}

void require_same_sides(const QuantumRelation& r, const Tolerance& tol, const char* what) {
  if (!same_algebra(r.a(), r.b(), tol)) throw Error(ErrorKind::TypeMismatch, what);
}

}  // namespace

Check projection_idempotent(const SSFA& a, const SSFA& b, const CVector& p, const Tolerance& tol) {
  return approx_eq(star_product(a, b, p, p), p, tol, "projection_idempotent");
}

Check projection_self_adjoint(const SSFA& a, const SSFA& b, const CVector& p, const Tolerance& tol) {
  const CVector star = kron(involution_matrix(a), involution_matrix(b)) * p.conjugate();
  return approx_eq(star, p, tol, "projection_self_adjoint");
}

QuantumRelation from_projection(const SSFA& a, const SSFA& b, const CVector& p, const Tolerance& tol) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (static_cast<std::size_t>(p.size()) != na * nb) {
    throw Error(ErrorKind::ShapeMismatch, "from_projection: p must live in A ⊗ B");
  }
  if (!projection_idempotent(a, b, p, tol).pass || !projection_self_adjoint(a, b, p, tol).pass) {
    throw Error(ErrorKind::NotProjection, "from_projection: p is not a projection in A^op ⊗ B");
  }
  CMatrix r = zeros(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Complex c = p(i * nb + j);
      if (c == Complex(0.0)) continue;
      r += c * kron(a.right_mult(basis_vector(na, i)), b.left_mult(basis_vector(nb, j)));
    }
  return QuantumRelation(a, b, std::move(r));
}

bool is_symmetric(const QuantumRelation& r, const Tolerance& tol) {
  require_same_sides(r, tol, "is_symmetric: relation is not on a single quantum set");
  const CVector p = to_projection(r);
  const std::size_t n = r.a().dim();
  return approx_eq(swap_map(n, n) * p, p, tol).pass;
}

bool is_reflexive(const QuantumRelation& r, const Tolerance& tol) {
  require_same_sides(r, tol, "is_reflexive: relation is not on a single quantum set");
  return approx_eq(r.a().mult() * to_projection(r), r.a().unit(), tol).pass;
}

QuantumRelation adjacency_to_relation(const QuantumGraph& qg) {
  return QuantumRelation(qg.algebra(), qg.algebra(), edge_projector(qg));
}

QuantumGraph relation_to_adjacency(const QuantumRelation& r, const Tolerance& tol) {
  if (!is_symmetric(r, tol)) throw Error(ErrorKind::NotSymmetric, "relation_to_adjacency: relation is not symmetric");
  const SSFA& a = r.a();
  const CMatrix id = identity(a.dim());
  const CMatrix g = kron(a.counit(), id) * r.matrix() * kron(id, a.unit());
  return QuantumGraph(a, g, tol);
}

OperatorSystemReport check_operator_system(const OperatorSystemProjector& osp, const Tolerance& tol) {
  const std::size_t d = osp.h_dim;
  const CMatrix& p = osp.matrix;
  if (static_cast<std::size_t>(p.rows()) != d * d || static_cast<std::size_t>(p.cols()) != d * d) {
    throw Error(ErrorKind::ShapeMismatch, "operator system projector must be d² × d²");
  }
  OperatorSystemReport r;
  const Check herm = approx_eq(p, p.adjoint(), tol);
  const Check idem = approx_eq(p * p, p, tol);
  r.projector = Check{"projector", herm.pass && idem.pass, std::max(herm.residual, idem.residual)};
  // X ↦ X† is x ↦ S conj(x); the range is invariant iff S conj(P) S == P.
  const CMatrix s = swap_map(d, d);
  r.dagger_closed = approx_eq(s * p.conjugate() * s, p, tol, "dagger_closed");
  const CVector one = vec_rows(identity(d));
  r.contains_identity = approx_eq(p * one, one, tol, "contains_identity");
  return r;
}

OperatorSystemProjector operator_system_from_span(const std::vector<CMatrix>& operators, const Tolerance& tol) {
  if (operators.empty()) throw Error(ErrorKind::InvalidArgument, "operator system needs a spanning set");
  const std::size_t d = operators[0].rows();
  CMatrix cols(d * d, operators.size());
  for (std::size_t k = 0; k < operators.size(); ++k) {
    if (static_cast<std::size_t>(operators[k].rows()) != d || static_cast<std::size_t>(operators[k].cols()) != d) {
      throw Error(ErrorKind::ShapeMismatch, "spanning operators must all be d × d");
    }
    cols.col(k) = vec_rows(operators[k]);
  }
  const CMatrix q = orthonormal_span(cols, tol);
  return OperatorSystemProjector{d, q * q.adjoint()};
}

OperatorSystemProjector graph_to_operator_system(const QuantumGraph& qg, const Tolerance& tol) {
  if (!is_standard_matrix_algebra(qg.algebra(), tol)) {
    throw Error(ErrorKind::NotMatrixAlgebra, "graph_to_operator_system: algebra is not Mat_k");
  }
  const std::size_t n = qg.algebra().dim();
  std::size_t k = 1;
  while (k * k < n) ++k;
  const CMatrix r = edge_projector(qg);
  const std::size_t kk = k * k;
  CMatrix pv = zeros(kk, kk);
  // Legs (i, j, l, m); trace out i and m.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t jl = 0; jl < kk; ++jl)
        for (std::size_t jl2 = 0; jl2 < kk; ++jl2) {
          pv(jl, jl2) += r((i * kk + jl) * k + m, (i * kk + jl2) * k + m);
        }
  pv /= static_cast<double>(kk);
  OperatorSystemProjector out{k, std::move(pv)};
  if (!check_operator_system(out, tol).valid()) {
    throw Error(ErrorKind::PostconditionFailure, "graph_to_operator_system: result is not an operator system");
  }
  return out;
}

QuantumGraph operator_system_to_graph(const OperatorSystemProjector& osp, const Tolerance& tol) {
  const std::size_t k = osp.h_dim;
  const CMatrix r = kron({identity(k), osp.matrix, identity(k)});
  return relation_to_adjacency(QuantumRelation(matrix_algebra(k), matrix_algebra(k), r), tol);
}

}  // namespace qset
