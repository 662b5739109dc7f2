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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qset/generators.hpp"
#include "qset/qrel.hpp"

using namespace qset;

namespace {

const Tolerance kTol{};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorKind::InvalidArgument;
}

CMatrix e(std::size_t k, std::size_t i, std::size_t j) {
  CMatrix m = zeros(k, k);
  m(i, j) = 1.0;
  return m;
}

CMatrix flip() {
  CMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

QuantumGraph complete_quantum(const SSFA& a) { return QuantumGraph(a, a.unit() * a.counit()); }

}  // namespace

TEST(Relation, ShapeIsChecked) {
  EXPECT_EQ(kind_of([] { QuantumRelation(classical_algebra(2), classical_algebra(3), identity(5)); }),
            ErrorKind::ShapeMismatch);
}

TEST(Relation, EdgeProjectorOfTriangle) {
  const QuantumRelation r = adjacency_to_relation(classical_to_quantum(complete_graph(3)));
  EXPECT_TRUE(check_relation(r).valid());
}

TEST(Relation, IdentityIsTheFullRelation) {
  const SSFA a = classical_algebra(2);
  const SSFA b = matrix_algebra(2);
  const QuantumRelation r(a, b, identity(8));
  EXPECT_TRUE(check_relation(r).valid());
  EXPECT_LE((to_projection(r) - kron(a.unit(), b.unit())).norm(), 1e-15);
}

TEST(Relation, GenericProjectorFailsBimodule) {
  const QuantumRelation r(classical_algebra(2), classical_algebra(2), random_projector(4, 2, 7));
  const RelationReport rep = check_relation(r);
  EXPECT_TRUE(rep.projector.pass);
  EXPECT_FALSE(rep.bimodule.pass);
}

TEST(Relation, ClassicalRelationsAreDiagonalSubsets) {
  const SSFA a = classical_algebra(2);
  for (std::size_t mask = 0; mask < 16; ++mask) {
    CMatrix r = zeros(4, 4);
    for (std::size_t i = 0; i < 4; ++i) r(i, i) = (mask >> i & 1U) ? 1.0 : 0.0;
    EXPECT_TRUE(check_relation(QuantumRelation(a, a, r)).valid()) << mask;
  }
  CMatrix half = identity(4);
  half(1, 1) = 0.5;
  EXPECT_FALSE(check_relation(QuantumRelation(a, a, half)).projector.pass);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const CMatrix p = random_projector(4, 1 + s % 3, 20 + s);
    EXPECT_FALSE(check_relation(QuantumRelation(a, a, p)).valid());
  }
}

TEST(Projection, ClassicalGraphExpansion) {
  const ClassicalGraph g = oracle::random_graph(4, 3, false);
  const auto adj = g.adjacency();
  const CVector p = to_projection(adjacency_to_relation(classical_to_quantum(g)));
  for (std::size_t v = 0; v < 4; ++v)
    for (std::size_t w = 0; w < 4; ++w) EXPECT_EQ(p(v * 4 + w), Complex(adj[w][v] ? 1.0 : 0.0));
}

TEST(Projection, UnitTensorUnitIsIdentity) {
  const SSFA a = matrix_algebra(2);
  const SSFA b = classical_algebra(3);
  const CVector p = kron(a.unit(), b.unit());
  EXPECT_TRUE(projection_idempotent(a, b, p).pass);
  EXPECT_TRUE(projection_self_adjoint(a, b, p).pass);
  EXPECT_LE((from_projection(a, b, p).matrix() - identity(12)).norm(), 1e-12);
}

TEST(Projection, RoundtripsBothWays) {
  for (const QuantumGraph& g : {classical_to_quantum(cycle_graph(5)), complete_quantum(matrix_algebra(2)),
                                operator_system_to_graph(operator_system_from_span({identity(2), flip()}))}) {
    const QuantumRelation r = adjacency_to_relation(g);
    const CVector p = to_projection(r);
    const QuantumRelation back = from_projection(r.a(), r.b(), p);
    EXPECT_LE((back.matrix() - r.matrix()).norm(), 1e-12);
    EXPECT_LE((to_projection(back) - p).norm(), 1e-12);
  }
}

TEST(Projection, RejectsNonProjections) {
  const SSFA a = classical_algebra(2);
  const CVector half = kron(a.unit(), a.unit()) * 0.5;
  EXPECT_FALSE(projection_idempotent(a, a, half).pass);
  EXPECT_EQ(kind_of([&] { from_projection(a, a, half); }), ErrorKind::NotProjection);
  CVector skew = zeros(4, 1);
  skew(1) = Complex(0.0, 1.0);
  EXPECT_FALSE(projection_self_adjoint(a, a, skew).pass);
  EXPECT_EQ(kind_of([&] { from_projection(a, a, CVector::Zero(3)); }), ErrorKind::ShapeMismatch);
}

TEST(Flags, TriangleWithAndWithoutLoops) {
  const QuantumRelation k3 = adjacency_to_relation(classical_to_quantum(complete_graph(3)));
  EXPECT_TRUE(is_symmetric(k3));
  EXPECT_FALSE(is_reflexive(k3));
  const QuantumRelation k3l = adjacency_to_relation(classical_to_quantum(ClassicalGraph{3, complete_graph(3).edges, true}));
  EXPECT_TRUE(is_symmetric(k3l));
  EXPECT_TRUE(is_reflexive(k3l));
}

TEST(Flags, CompleteQuantumRelation) {
  const QuantumRelation r = adjacency_to_relation(complete_quantum(matrix_algebra(2)));
  EXPECT_TRUE(is_symmetric(r));
  EXPECT_TRUE(is_reflexive(r));
}

TEST(Flags, DirectedPairIsNotSymmetric) {
  const SSFA a = classical_algebra(2);
  CMatrix m = zeros(4, 4);
  m(1, 1) = 1.0;
  const QuantumRelation r(a, a, m);
  ASSERT_TRUE(check_relation(r).valid());
  EXPECT_FALSE(is_symmetric(r));
  EXPECT_EQ(kind_of([&] { relation_to_adjacency(r); }), ErrorKind::NotSymmetric);
  EXPECT_EQ(kind_of([] { is_symmetric(QuantumRelation(classical_algebra(2), classical_algebra(1), identity(2))); }),
            ErrorKind::TypeMismatch);
}

TEST(Flags, MatchGraphReports) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const QuantumGraph g = classical_to_quantum(oracle::random_graph(4, s, s % 2 == 1));
    const QuantumRelation r = adjacency_to_relation(g);
    EXPECT_TRUE(is_symmetric(r));
    EXPECT_EQ(is_reflexive(r), g.reflexivity() == Reflexivity::Reflexive);
  }
}

TEST(AdjacencyRelation, ExhaustiveClassicalRoundtrip) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (bool refl : {false, true})
      for (ClassicalGraph g : oracle::all_graphs(n)) {
        g.reflexive = refl;
        const QuantumGraph q = classical_to_quantum(g);
        const QuantumGraph back = relation_to_adjacency(adjacency_to_relation(q));
        ASSERT_LE((back.adjacency() - q.adjacency()).norm(), 1e-12);
      }
}

TEST(AdjacencyRelation, QuantumRoundtrips) {
  for (const QuantumGraph& g : {complete_quantum(matrix_algebra(2)), QuantumGraph(matrix_algebra(2), zeros(4, 4)),
                                QuantumGraph(matrix_algebra(3), identity(9)),
                                complete_quantum(direct_sum_algebra(classical_algebra(1), matrix_algebra(2)))}) {
    const QuantumGraph back = relation_to_adjacency(adjacency_to_relation(g));
    EXPECT_LE((back.adjacency() - g.adjacency()).norm(), 1e-12);
  }
}

TEST(OperatorSystem, Extremes) {
  for (std::size_t k = 2; k <= 3; ++k) {
    const OperatorSystemProjector scalars = operator_system_from_span({identity(k)});
    EXPECT_TRUE(check_operator_system(scalars).valid());
    EXPECT_LE((operator_system_to_graph(scalars).adjacency() - identity(k * k)).norm(), 1e-12);

    std::vector<CMatrix> units;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) units.push_back(e(k, i, j));
    const OperatorSystemProjector all = operator_system_from_span(units);
    const SSFA a = matrix_algebra(k);
    EXPECT_LE((operator_system_to_graph(all).adjacency() - a.unit() * a.counit()).norm(), 1e-12);
    EXPECT_LE((graph_to_operator_system(complete_quantum(a)).matrix - identity(k * k)).norm(), 1e-12);
  }
}

TEST(OperatorSystem, FlipSpanRoundtrip) {
  const OperatorSystemProjector v = operator_system_from_span({identity(2), flip()});
  EXPECT_NEAR(v.matrix.trace().real(), 2.0, 1e-12);
  const QuantumGraph g = operator_system_to_graph(v);
  EXPECT_LE((graph_to_operator_system(g).matrix - v.matrix).norm(), 1e-12);
}

TEST(OperatorSystem, RandomSelfAdjointSpansRoundtrip) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const CMatrix x = random_gaussian(3, 3, 50 + s);
    const OperatorSystemProjector v = operator_system_from_span({identity(3), x, x.adjoint()});
    ASSERT_TRUE(check_operator_system(v).valid());
    const QuantumGraph g = operator_system_to_graph(v);
    EXPECT_TRUE(check_qgraph(g.algebra(), g.adjacency()).valid());
    EXPECT_LE((graph_to_operator_system(g).matrix - v.matrix).norm(), 1e-10);
  }
}

TEST(OperatorSystem, FailureModes) {
  const OperatorSystemReport upper = check_operator_system(operator_system_from_span({e(2, 0, 1)}));
  EXPECT_TRUE(upper.projector.pass);
  EXPECT_FALSE(upper.dagger_closed.pass);
  CMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  CMatrix y(2, 2);
  y << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  const OperatorSystemReport traceless = check_operator_system(operator_system_from_span({flip(), y, z}));
  EXPECT_TRUE(traceless.dagger_closed.pass);
  EXPECT_FALSE(traceless.contains_identity.pass);
  EXPECT_FALSE(check_operator_system(OperatorSystemProjector{2, identity(4) * 0.5}).projector.pass);
}

TEST(OperatorSystem, Errors) {
  EXPECT_EQ(kind_of([] { check_operator_system(OperatorSystemProjector{2, identity(3)}); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { operator_system_from_span({}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { operator_system_from_span({identity(2), identity(3)}); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { graph_to_operator_system(classical_to_quantum(complete_graph(4))); }),
            ErrorKind::NotMatrixAlgebra);
}
