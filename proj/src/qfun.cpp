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

#include "qset/qfun.hpp"

#include <algorithm>
#include <cmath>

namespace qset {

QuantumFunction::QuantumFunction(SSFA source, SSFA target, std::size_t h_dim, CMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), h_dim_(h_dim), matrix_(std::move(matrix)) {
  const std::size_t rows = target_.dim() * h_dim_;
  const std::size_t cols = h_dim_ * source_.dim();
  if (static_cast<std::size_t>(matrix_.rows()) != rows || static_cast<std::size_t>(matrix_.cols()) != cols) {
    throw Error(ErrorKind::ShapeMismatch, "quantum function matrix must be " + std::to_string(rows) + "x" +
                                              std::to_string(cols));
  }
}

std::vector<CMatrix> slice_operators(const QuantumElement& q) {
  if (q.source().dim() != 1) throw Error(ErrorKind::TypeMismatch, "quantum elements have source ℂ");
  const std::size_t d = q.h_dim();
  std::vector<CMatrix> k;
  for (std::size_t a = 0; a < q.target().dim(); ++a) k.push_back(q.matrix().middleRows(a * d, d));
  return k;
}

namespace {

Check named(Check c, std::string name) {
  c.name = std::move(name);
  return c;
}

Check worst(std::string name, std::initializer_list<Check> parts) {
  Check out{std::move(name), true, 0.0};
  for (const auto& c : parts) {
    out.pass = out.pass && c.pass;
    out.residual = std::max(out.residual, c.residual);
  }
  return out;
}

CVector delta_vector(std::size_t d) {
  CVector v = CVector::Zero(d * d);
  for (std::size_t i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return v;
}

void require_same(const SSFA& x, const SSFA& y, const Tolerance& tol, const char* what) {
  if (!same_algebra(x, y, tol)) throw Error(ErrorKind::TypeMismatch, what);
}

// (cap_B ⊗ 1_{HA})(1_B ⊗ P ⊗ 1_A)(1_{BH} ⊗ cup_A) written out in components;
// the dense Kronecker form costs O((nB·d·nA)³).
CMatrix rotate(const QuantumFunction& f) {
  const std::size_t na = f.source().dim();
  const std::size_t nb = f.target().dim();
  const std::size_t d = f.h_dim();
  const CMatrix cap = f.target().cap();
  const CMatrix cup = f.source().cup();
  const CMatrix& p = f.matrix();
  CMatrix out = CMatrix::Zero(d * na, nb * d);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t b2 = 0; b2 < nb; ++b2) {
      const Complex c = cap(0, b * nb + b2);
      if (c == Complex(0.0)) continue;
      for (std::size_t a1 = 0; a1 < na; ++a1)
        for (std::size_t a2 = 0; a2 < na; ++a2) {
          const Complex w = c * cup(a1 * na + a2, 0);
          if (w == Complex(0.0)) continue;
          for (std::size_t h = 0; h < d; ++h)
            for (std::size_t h2 = 0; h2 < d; ++h2) out(h * na + a2, b * d + h2) += w * p(b2 * d + h, h2 * na + a1);
        }
    }
  return out;
}

}  // namespace

QfunReport verify_qfun(const QuantumFunction& f, const Tolerance& tol) {
  const SSFA& a = f.source();
  const SSFA& b = f.target();
  const std::size_t d = f.h_dim();
  const CMatrix& p = f.matrix();
  const CMatrix ih = identity(d);
  const CMatrix ia = identity(a.dim());
  const CMatrix ib = identity(b.dim());

  QfunReport r;
  r.qf1 = approx_eq(kron(b.comult(), ih) * p, kron(ib, p) * (kron(p, ia) * kron(ih, a.comult())), tol, "qf1");
  r.qf2 = approx_eq(kron(b.counit(), ih) * p, kron(ih, a.counit()), tol, "qf2");
  r.qf3 = approx_eq(p.adjoint(), rotate(f), tol, "qf3");
  return r;
}

QbijReport verify_qbij(const QuantumFunction& f, const Tolerance& tol) {
  if (!verify_qfun(f, tol).valid()) {
    throw Error(ErrorKind::NotQuantumFunction, "verify_qbij: input fails the quantum function axioms");
  }
  const SSFA& a = f.source();
  const SSFA& b = f.target();
  const std::size_t d = f.h_dim();
  const CMatrix& p = f.matrix();
  const CMatrix ih = identity(d);
  QbijReport r;
  r.qb1 = approx_eq(p * kron(ih, a.mult()),
                    kron(b.mult(), ih) * kron(identity(b.dim()), p) * kron(p, identity(a.dim())), tol, "qb1");
  r.qb2 = approx_eq(p * kron(ih, a.unit()), kron(b.unit(), ih), tol, "qb2");
  return r;
}

Check is_unitary(const QuantumFunction& f, const Tolerance& tol) {
  const CMatrix& p = f.matrix();
  if (p.rows() != p.cols()) {
    return Check{"unitary", false, std::numeric_limits<double>::infinity()};
  }
  const CMatrix id = identity(p.rows());
  return worst("unitary", {approx_eq(p.adjoint() * p, id, tol), approx_eq(p * p.adjoint(), id, tol)});
}

bool bi_invertible(const QuantumFunction& f, const Tolerance& tol) {
  const CMatrix& p = f.matrix();
  if (p.rows() != p.cols()) throw Error(ErrorKind::Singular, "bi_invertible: P is not square");
  const std::size_t d = f.h_dim();
  if (d == 0) return true;
  Eigen::BDCSVD<CMatrix> svd(p);
  const RVector& s = svd.singularValues();
  if (s(s.size() - 1) <= tol.rel * p.norm()) {
    throw Error(ErrorKind::Singular, "bi_invertible: P has no inverse");
  }
  const CMatrix inv = p.inverse();
  const std::size_t na = f.source().dim();
  const std::size_t nb = f.target().dim();
  // bent inverse: H* ⊗ B -> A ⊗ H*, bent P: A ⊗ H* -> H* ⊗ B
  CMatrix bent_inv(na * d, d * nb);
  CMatrix bent(d * nb, na * d);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t b = 0; b < nb; ++b) {
          bent_inv(a * d + j, i * nb + b) = inv(i * na + a, b * d + j);
          bent(i * nb + b, a * d + j) = p(b * d + j, i * na + a);
        }
  return approx_eq(bent_inv * bent, identity(na * d), tol).pass &&
         approx_eq(bent * bent_inv, identity(d * nb), tol).pass;
}

QuantumFunction identity_qfun(const SSFA& a) { return QuantumFunction(a, a, 1, identity(a.dim())); }

QuantumFunction compose(const QuantumFunction& g, const QuantumFunction& f, const Tolerance& tol) {
  require_same(f.target(), g.source(), tol, "compose: target of f differs from source of g");
  const CMatrix m = kron(g.matrix(), identity(f.h_dim())) * kron(identity(g.h_dim()), f.matrix());
  return QuantumFunction(f.source(), g.target(), g.h_dim() * f.h_dim(), m);
}

QuantumFunction dagger_dual(const QuantumFunction& f, const Tolerance& tol) {
  const QbijReport report = verify_qbij(f, tol);
  if (!report.valid()) throw Error(ErrorKind::NotBijection, "dagger_dual: input is not a quantum bijection");
  const std::size_t d = f.h_dim();
  const std::size_t na = f.source().dim();
  const std::size_t nb = f.target().dim();
  const CMatrix& p = f.matrix();
  CMatrix dual(na * d, d * nb);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t b = 0; b < nb; ++b) dual(a * d + j, i * nb + b) = std::conj(p(b * d + j, i * na + a));
  QuantumFunction out(f.target(), f.source(), d, std::move(dual));
  if (!duality_checks(f, out, tol).valid()) {
    throw Error(ErrorKind::PostconditionFailure, "dagger_dual: duality identities fail");
  }
  return out;
}

DualityReport duality_checks(const QuantumFunction& f, const QuantumFunction& dual, const Tolerance& tol) {
  const std::size_t d = f.h_dim();
  if (dual.h_dim() != d) throw Error(ErrorKind::TypeMismatch, "duality_checks: Hilbert dimensions differ");
  const CMatrix cup = delta_vector(d);
  const CMatrix cap = cup.transpose();
  const CMatrix ia = identity(f.source().dim());
  const CMatrix ib = identity(f.target().dim());
  const CMatrix dual_after = compose(dual, f, tol).matrix();  // A -> A on H* ⊗ H
  const CMatrix f_after = compose(f, dual, tol).matrix();     // B -> B on H ⊗ H*
  DualityReport r;
  r.right_unit = named(approx_eq(dual_after * kron(cup, ia), kron(ia, cup), tol), "right_unit");
  r.right_counit = named(approx_eq(kron(ib, cap) * f_after, kron(cap, ib), tol), "right_counit");
  r.left_unit = named(approx_eq(f_after * kron(cup, ib), kron(ib, cup), tol), "left_unit");
  r.left_counit = named(approx_eq(kron(ia, cap) * dual_after, kron(cap, ia), tol), "left_counit");
  return r;
}

Check check_ppm_rows(const ProjectorFamily& p, const Tolerance& tol) {
  Check out{"ppm_rows", true, 0.0};
  auto absorb = [&](const Check& c) {
    out.pass = out.pass && c.pass;
    out.residual = std::max(out.residual, c.residual);
  };
  const CMatrix id = identity(p.h_dim);
  for (std::size_t x = 0; x < p.x_size; ++x) {
    CMatrix sum = zeros(p.h_dim, p.h_dim);
    for (std::size_t y = 0; y < p.y_size; ++y) {
      const CMatrix& q = p.at(x, y);
      absorb(approx_eq(q, q.adjoint(), tol));
      for (std::size_t y2 = 0; y2 < p.y_size; ++y2) {
        absorb(approx_eq(q * p.at(x, y2), y == y2 ? q : zeros(p.h_dim, p.h_dim), tol));
      }
      sum += q;
    }
    absorb(approx_eq(sum, id, tol));
  }
  return out;
}

Check check_ppm_columns(const ProjectorFamily& p, const Tolerance& tol) {
  Check out{"ppm_columns", true, 0.0};
  auto absorb = [&](const Check& c) {
    out.pass = out.pass && c.pass;
    out.residual = std::max(out.residual, c.residual);
  };
  const CMatrix id = identity(p.h_dim);
  for (std::size_t y = 0; y < p.y_size; ++y) {
    CMatrix sum = zeros(p.h_dim, p.h_dim);
    for (std::size_t x = 0; x < p.x_size; ++x) {
      const CMatrix& q = p.at(x, y);
      for (std::size_t x2 = 0; x2 < p.x_size; ++x2) {
        absorb(approx_eq(q * p.at(x2, y), x == x2 ? q : zeros(p.h_dim, p.h_dim), tol));
      }
      sum += q;
    }
    absorb(approx_eq(sum, id, tol));
  }
  return out;
}

QuantumFunction family_to_qfun(const ProjectorFamily& p, const Tolerance& tol) {
  if (p.projectors.size() != p.x_size) throw Error(ErrorKind::ShapeMismatch, "family: wrong row count");
  for (const auto& row : p.projectors) {
    if (row.size() != p.y_size) throw Error(ErrorKind::ShapeMismatch, "family: wrong column count");
    for (const auto& q : row) {
      if (static_cast<std::size_t>(q.rows()) != p.h_dim || static_cast<std::size_t>(q.cols()) != p.h_dim) {
        throw Error(ErrorKind::ShapeMismatch, "family: projector has wrong size");
      }
    }
  }
  if (!check_ppm_rows(p, tol).pass) {
    throw Error(ErrorKind::RowConditionViolated, "family_to_qfun: rows are not complete orthogonal families");
  }
  const std::size_t d = p.h_dim;
  CMatrix m = zeros(p.y_size * d, d * p.x_size);
  for (std::size_t x = 0; x < p.x_size; ++x)
    for (std::size_t y = 0; y < p.y_size; ++y)
      for (std::size_t h2 = 0; h2 < d; ++h2)
        for (std::size_t h = 0; h < d; ++h) m(y * d + h2, h * p.x_size + x) = p.at(x, y)(h2, h);
  return QuantumFunction(classical_algebra(p.x_size), classical_algebra(p.y_size), d, std::move(m));
}

ProjectorFamily qfun_to_family(const QuantumFunction& f, const Tolerance& tol) {
  if (!is_standard_classical(f.source(), tol) || !is_standard_classical(f.target(), tol)) {
    throw Error(ErrorKind::NotClassicalEndpoints, "qfun_to_family: endpoints must be classical sets");
  }
  ProjectorFamily p;
  p.x_size = f.source().dim();
  p.y_size = f.target().dim();
  p.h_dim = f.h_dim();
  const std::size_t d = p.h_dim;
  p.projectors.assign(p.x_size, std::vector<CMatrix>(p.y_size, zeros(d, d)));
  for (std::size_t x = 0; x < p.x_size; ++x)
    for (std::size_t y = 0; y < p.y_size; ++y)
      for (std::size_t h2 = 0; h2 < d; ++h2)
        for (std::size_t h = 0; h < d; ++h) p.projectors[x][y](h2, h) = f.matrix()(y * d + h2, h * p.x_size + x);
  return p;
}

QuantumFunction classical_function(const std::vector<std::size_t>& map, std::size_t target_size) {
  CMatrix m = zeros(target_size, map.size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] >= target_size) throw Error(ErrorKind::InvalidArgument, "classical_function: value out of range");
    m(map[x], x) = 1.0;
  }
  return QuantumFunction(classical_algebra(map.size()), classical_algebra(target_size), 1, std::move(m));
}

QuantumFunction conjugate_hilbert(const QuantumFunction& f, const CMatrix& unitary) {
  const CMatrix m = kron(identity(f.target().dim()), unitary) * f.matrix() *
                    kron(unitary.adjoint(), identity(f.source().dim()));
  return QuantumFunction(f.source(), f.target(), f.h_dim(), m);
}

QuantumElement module_to_element(const SSFA& a, const std::vector<CMatrix>& rep, const Tolerance& tol) {
  const std::size_t n = a.dim();
  if (rep.size() != n || rep.empty()) throw Error(ErrorKind::NotRepresentation, "one operator per basis vector");
  const std::size_t d = rep[0].rows();
  for (const auto& r : rep) {
    if (static_cast<std::size_t>(r.rows()) != d || static_cast<std::size_t>(r.cols()) != d) {
      throw Error(ErrorKind::NotRepresentation, "operators must share one square size");
    }
  }
  auto image = [&](const CVector& x) {
    CMatrix out = zeros(d, d);
    for (std::size_t c = 0; c < n; ++c) out += x(c) * rep[c];
    return out;
  };
  double worst_residual = 0.0;
  bool ok = true;
  auto absorb = [&](const Check& c) {
    ok = ok && c.pass;
    worst_residual = std::max(worst_residual, c.residual);
  };
  const CMatrix jmat = involution_matrix(a);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      absorb(approx_eq(rep[x] * rep[y], image(a.mult().col(x * n + y)), tol));
    }
    absorb(approx_eq(image(jmat.col(x)), rep[x].adjoint(), tol));
  }
  absorb(approx_eq(image(a.unit().col(0)), identity(d), tol));
  if (!ok) {
    throw Error(ErrorKind::NotRepresentation,
                "not a unital *-representation (residual " + std::to_string(worst_residual) + ")");
  }
  CMatrix q(n * d, d);
  for (std::size_t c = 0; c < n; ++c) q.middleRows(c * d, d) = rep[c].adjoint();
  QuantumElement element(classical_algebra(1), a, d, std::move(q));
  if (!verify_qfun(element, tol).valid()) {
    throw Error(ErrorKind::PostconditionFailure, "module_to_element: result is not a quantum element");
  }
  return element;
}

std::vector<QuantumElement> enumerate_simple_elements(const SSFA& a, std::uint64_t seed, const Tolerance& tol) {
  const WedderburnData wd = wedderburn(a, seed, tol);
  std::vector<QuantumElement> out;
  for (std::size_t b = 0; b < wd.block_sizes.size(); ++b) {
    const std::size_t k = wd.block_sizes[b];
    const std::size_t off = wd.offset(b);
    const double norm = std::sqrt(static_cast<double>(k));
    std::vector<CMatrix> rep;
    for (std::size_t x = 0; x < a.dim(); ++x) {
      CMatrix m(k, k);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) m(j, l) = wd.iso(off + j * k + l, x) / norm;
      rep.push_back(std::move(m));
    }
    out.push_back(module_to_element(a, rep, tol));
  }
  return out;
}

SSFA reconstruct_algebra(const std::vector<QuantumElement>& elements, const Tolerance& tol) {
  if (elements.empty()) throw Error(ErrorKind::InconsistentElements, "no elements given");
  const std::size_t n = elements[0].target().dim();
  CMatrix mult = zeros(n, n * n);
  CMatrix unit = zeros(n, 1);
  for (const auto& e : elements) {
    if (e.target().dim() != n || e.source().dim() != 1) {
      throw Error(ErrorKind::InconsistentElements, "elements must be quantum elements of one algebra");
    }
    const auto k = slice_operators(e);
    const double weight = static_cast<double>(e.h_dim());
    std::vector<CMatrix> kdag;
    for (const auto& m : k) kdag.push_back(m.adjoint());
    for (std::size_t a = 0; a < n; ++a) {
      unit(a, 0) += weight * k[a].trace();
      for (std::size_t b = 0; b < n; ++b) {
        const CMatrix ab = kdag[a] * kdag[b];
        for (std::size_t c = 0; c < n; ++c) mult(c, a * n + b) += weight * (k[c] * ab).trace();
      }
    }
  }
  if (!check_ssfa(mult, unit, tol).valid()) {
    throw Error(ErrorKind::InconsistentElements, "reconstructed tensors are not a quantum set");
  }
  return SSFA(std::move(mult), std::move(unit));
}

QuantumFunction ueb_to_bijection(const std::vector<CMatrix>& unitaries, const Tolerance& tol) {
  if (unitaries.empty()) throw Error(ErrorKind::NotUEB, "empty basis");
  const std::size_t n = unitaries[0].rows();
  if (unitaries.size() != n * n) throw Error(ErrorKind::NotUEB, "a unitary error basis on ℂ^n has n² elements");
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (static_cast<std::size_t>(unitaries[i].rows()) != n || static_cast<std::size_t>(unitaries[i].cols()) != n) {
      throw Error(ErrorKind::NotUEB, "all operators must be n x n");
    }
    for (std::size_t j = 0; j < unitaries.size(); ++j) {
      const Complex t = (unitaries[i].adjoint() * unitaries[j]).trace();
      const double expected = i == j ? static_cast<double>(n) : 0.0;
      if (std::abs(t - expected) > tol.rel * static_cast<double>(n)) {
        throw Error(ErrorKind::NotUEB, "Tr(U_i† U_j) != n δ_ij");
      }
    }
  }
  const SSFA mat = matrix_algebra(n);
  const std::size_t count = n * n;
  const double norm = std::sqrt(static_cast<double>(n));
  // Columns of the bijection [n²] -> Mat_n are the conjugation comodules.
  CMatrix p = zeros(count * n, n * count);
  for (std::size_t x = 0; x < count; ++x) {
    const CMatrix& u = unitaries[x];
    std::vector<CMatrix> rep;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CMatrix e = zeros(n, n);
        e(i, j) = 1.0 / norm;
        rep.push_back(u * e * u.adjoint());
      }
    }
    const QuantumElement q = module_to_element(mat, rep, tol);
    for (std::size_t h = 0; h < n; ++h) p.col(h * count + x) = q.matrix().col(h);
  }
  const QuantumFunction forward(classical_algebra(count), mat, n, std::move(p));
  return dagger_dual(forward, tol);
}

}  // namespace qset
