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

#include "qset/qgraph.hpp"

#include <algorithm>
#include <cmath>

namespace qset {

const char* to_string(Reflexivity r) {
  switch (r) {
    case Reflexivity::Reflexive: return "reflexive";
    case Reflexivity::Irreflexive: return "irreflexive";
    case Reflexivity::Neither: return "neither";
  }
  return "neither";
}

QGraphReport check_qgraph(const SSFA& a, const CMatrix& g, const Tolerance& tol) {
  const std::size_t n = a.dim();
  if (static_cast<std::size_t>(g.rows()) != n || static_cast<std::size_t>(g.cols()) != n) {
    throw Error(ErrorKind::ShapeMismatch, "check_qgraph: adjacency must be n x n");
  }
  const CMatrix id = identity(n);
  QGraphReport r;
  r.schur_idempotent = approx_eq(a.mult() * kron(g, g) * a.comult(), g, tol, "schur_idempotent");
  r.self_adjoint = approx_eq(g, g.adjoint(), tol, "self_adjoint");
  const CMatrix transposed = kron(a.cap(), id) * kron({id, g, id}) * kron(id, a.cup());
  r.symmetric = approx_eq(transposed, g, tol, "symmetric");
  const CMatrix loops = a.mult() * kron(g, id) * a.comult();
  if (approx_eq(loops, id, tol).pass) {
    r.reflexivity = Reflexivity::Reflexive;
  } else if (approx_eq(loops, zeros(n, n), tol).pass) {
    r.reflexivity = Reflexivity::Irreflexive;
  } else {
    r.reflexivity = Reflexivity::Neither;
  }
  return r;
}

QuantumGraph::QuantumGraph(SSFA algebra, CMatrix adjacency, const Tolerance& tol)
    : algebra_(std::move(algebra)), adjacency_(std::move(adjacency)) {
  const QGraphReport r = check_qgraph(algebra_, adjacency_, tol);
  if (!r.valid()) throw Error(ErrorKind::NotQuantumGraph, "adjacency fails the quantum graph axioms");
  reflexivity_ = r.reflexivity;
  const CMatrix id = identity(algebra_.dim());
  projector_ = kron(id, algebra_.mult()) * kron({id, adjacency_, id}) * kron(algebra_.comult(), id);
}

std::vector<std::vector<bool>> ClassicalGraph::adjacency() const {
  std::vector<std::vector<bool>> adj(vertices, std::vector<bool>(vertices, false));
  for (const auto& [v, w] : edges) {
    if (v >= vertices || w >= vertices) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (v == w) throw Error(ErrorKind::InvalidArgument, "loops are set through the reflexive flag");
    adj[v][w] = adj[w][v] = true;
  }
  for (std::size_t v = 0; v < vertices; ++v) adj[v][v] = reflexive;
  return adj;
}

ClassicalGraph complete_graph(std::size_t n) {
  ClassicalGraph g{n, {}, false};
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) g.edges.emplace_back(v, w);
  return g;
}

ClassicalGraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle graphs need at least 3 vertices");
  ClassicalGraph g{n, {}, false};
  for (std::size_t v = 0; v < n; ++v) g.edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return g;
}

ClassicalGraph path_graph(std::size_t n) {
  ClassicalGraph g{n, {}, false};
  for (std::size_t v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

QuantumGraph classical_to_quantum(const ClassicalGraph& g) {
  const auto adj = g.adjacency();
  CMatrix m = zeros(g.vertices, g.vertices);
  for (std::size_t v = 0; v < g.vertices; ++v)
    for (std::size_t w = 0; w < g.vertices; ++w) m(v, w) = adj[v][w] ? 1.0 : 0.0;
  return QuantumGraph(classical_algebra(g.vertices), std::move(m));
}

ClassicalGraph quantum_to_classical(const QuantumGraph& qg, const Tolerance& tol) {
  if (!is_standard_classical(qg.algebra(), tol)) {
    throw Error(ErrorKind::NotClassical, "quantum_to_classical: algebra is not a classical set");
  }
  const std::size_t n = qg.algebra().dim();
  const CMatrix& g = qg.adjacency();
  const double slack = tol.rel * std::max(1.0, g.norm());
  auto bit = [&](std::size_t v, std::size_t w) {
    const Complex x = g(v, w);
    if (std::abs(x) <= slack) return false;
    if (std::abs(x - 1.0) <= slack) return true;
    throw Error(ErrorKind::NotClassical, "quantum_to_classical: entry is neither 0 nor 1");
  };
  ClassicalGraph out{n, {}, n > 0 && bit(0, 0)};
  for (std::size_t v = 0; v < n; ++v) {
    if (bit(v, v) != out.reflexive) {
      throw Error(ErrorKind::NotClassical, "quantum_to_classical: loops on some but not all vertices");
    }
    for (std::size_t w = v + 1; w < n; ++w) {
      if (bit(v, w)) out.edges.emplace_back(v, w);
    }
  }
  return out;
}

QuantumGraph complement(const QuantumGraph& qg, const Tolerance& tol) {
  const SSFA& a = qg.algebra();
  const CMatrix gc = a.unit() * a.counit() - qg.adjacency();
  try {
    return QuantumGraph(a, gc, tol);
  } catch (const Error&) {
    throw Error(ErrorKind::PostconditionFailure, "complement: result is not a quantum graph");
  }
}

CMatrix edge_projector(const QuantumGraph& qg) { return qg.projector(); }

CMatrix edge_projector_mirrored(const QuantumGraph& qg) {
  const SSFA& a = qg.algebra();
  const CMatrix id = identity(a.dim());
  return kron(a.mult(), id) * kron({id, qg.adjacency(), id}) * kron(id, a.comult());
}

std::vector<Check> HomReport::checks() const {
  std::vector<Check> out{diagrammatic};
  if (projector_form) out.push_back(*projector_form);
  return out;
}

std::vector<Check> IsoReport::checks() const {
  std::vector<Check> out{iso};
  for (auto c : forward_hom.checks()) {
    c.name = "forward_" + c.name;
    out.push_back(c);
  }
  for (auto c : dual_hom.checks()) {
    c.name = "dual_" + c.name;
    out.push_back(c);
  }
  return out;
}

HomReport verify_hom(const QuantumFunction& f, const QuantumGraph& g, const QuantumGraph& h, const Tolerance& tol) {
  if (!same_algebra(f.source(), g.algebra(), tol) || !same_algebra(f.target(), h.algebra(), tol)) {
    throw Error(ErrorKind::TypeMismatch, "verify_hom: function does not run between the graphs");
  }
  if (!verify_qfun(f, tol).valid()) {
    throw Error(ErrorKind::NotQuantumFunction, "verify_hom: input is not a quantum function");
  }
  const std::size_t d = f.h_dim();
  const CMatrix& p = f.matrix();
  const CMatrix doubled = kron(identity(f.target().dim()), p) * kron(p, identity(f.source().dim()));
  const CMatrix lhs = doubled * kron(identity(d), g.projector());
  const CMatrix rhs = kron(h.projector(), identity(d)) * lhs;
  HomReport r;
  r.diagrammatic = approx_eq(lhs, rhs, tol, "hom");

  if (is_standard_classical(f.source(), tol) && is_standard_classical(f.target(), tol)) {
    const ProjectorFamily fam = qfun_to_family(f, tol);
    const CMatrix& ga = g.adjacency();
    const CMatrix& ha = h.adjacency();
    const double half = 0.5;
    Check c{"hom_projector_form", true, 0.0};
    for (std::size_t v = 0; v < fam.x_size; ++v)
      for (std::size_t v2 = 0; v2 < fam.x_size; ++v2) {
        if (std::abs(ga(v, v2)) < half) continue;
        for (std::size_t w = 0; w < fam.y_size; ++w)
          for (std::size_t w2 = 0; w2 < fam.y_size; ++w2) {
            if (std::abs(ha(w, w2)) >= half) continue;
            const Check z = approx_eq(fam.at(v2, w2) * fam.at(v, w), zeros(d, d), tol);
            c.pass = c.pass && z.pass;
            c.residual = std::max(c.residual, z.residual);
          }
      }
    r.agree = c.pass == r.diagrammatic.pass;
    r.projector_form = c;
  }
  return r;
}

IsoReport verify_iso(const QuantumFunction& f, const QuantumGraph& g, const QuantumGraph& h, const Tolerance& tol) {
  bool bijection = false;
  try {
    bijection = verify_qbij(f, tol).valid();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotQuantumFunction) throw;
  }
  if (!bijection) throw Error(ErrorKind::NotBijection, "verify_iso: input is not a quantum bijection");
  if (!same_algebra(f.source(), g.algebra(), tol) || !same_algebra(f.target(), h.algebra(), tol)) {
    throw Error(ErrorKind::TypeMismatch, "verify_iso: function does not run between the graphs");
  }
  const std::size_t d = f.h_dim();
  IsoReport r;
  r.iso = approx_eq(f.matrix() * kron(identity(d), g.adjacency()), kron(h.adjacency(), identity(d)) * f.matrix(),
                    tol, "iso");
  r.forward_hom = verify_hom(f, g, h, tol);
  r.dual_hom = verify_hom(dagger_dual(f, tol), h, g, tol);
  r.consistent = r.iso.pass == (r.forward_hom.valid() && r.dual_hom.valid());
  return r;
}

PpmIsoReport ppm_iso_conditions(const ProjectorFamily& p, const ClassicalGraph& g, const ClassicalGraph& h,
                                const Tolerance& tol) {
  if (p.x_size != g.vertices || p.y_size != h.vertices) {
    throw Error(ErrorKind::ShapeMismatch, "ppm_iso_conditions: family size differs from the graphs");
  }
  if (!check_ppm_rows(p, tol).pass || !check_ppm_columns(p, tol).pass) {
    throw Error(ErrorKind::NotPPM, "ppm_iso_conditions: family is not a projective permutation matrix");
  }
  const auto ga = g.adjacency();
  const auto ha = h.adjacency();
  const std::size_t d = p.h_dim;
  PpmIsoReport r{{"cond1", true, 0.0}, {"cond2", true, 0.0}};
  auto absorb = [](Check& into, const Check& c) {
    into.pass = into.pass && c.pass;
    into.residual = std::max(into.residual, c.residual);
  };
  for (std::size_t a = 0; a < p.x_size; ++a) {
    for (std::size_t b = 0; b < p.y_size; ++b) {
      CMatrix left = zeros(d, d);
      CMatrix right = zeros(d, d);
      for (std::size_t i = 0; i < p.x_size; ++i)
        if (ga[a][i]) left += p.at(i, b);
      for (std::size_t j = 0; j < p.y_size; ++j)
        if (ha[b][j]) right += p.at(a, j);
      absorb(r.cond1, approx_eq(left, right, tol));
      for (std::size_t a2 = 0; a2 < p.x_size; ++a2)
        for (std::size_t b2 = 0; b2 < p.y_size; ++b2) {
          if (ga[a][a2] == ha[b][b2]) continue;
          absorb(r.cond2, approx_eq(p.at(a, b) * p.at(a2, b2), zeros(d, d), tol));
        }
    }
  }
  return r;
}

}  // namespace qset
