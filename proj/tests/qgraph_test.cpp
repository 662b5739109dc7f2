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
#include "qset/qgraph.hpp"
#include "qset/qrel.hpp"
#include "qset/semisimple.hpp"

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

CMatrix all_ones_map(const SSFA& a) { return a.unit() * a.counit(); }

QuantumGraph complete_quantum(const SSFA& a) { return QuantumGraph(a, all_ones_map(a)); }

// A genuinely quantum graph on Mat₂: the one whose operator system is span{1, X}.
QuantumGraph flip_graph() {
  CMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return operator_system_to_graph(operator_system_from_span({identity(2), x}));
}

ProjectorFamily family_of(const std::vector<std::size_t>& perm) {
  return ProjectorFamily{perm.size(), perm.size(), 1, oracle::permutation_family(perm)};
}

}  // namespace

TEST(CheckQgraph, CompleteIrreflexiveTriangle) {
  const QGraphReport r = check_qgraph(classical_algebra(3), CMatrix::Ones(3, 3) - identity(3));
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.reflexivity, Reflexivity::Irreflexive);
}

TEST(CheckQgraph, HalfEntryIsNotSchurIdempotent) {
  CMatrix g = zeros(2, 2);
  g(0, 1) = g(1, 0) = 0.5;
  const QGraphReport r = check_qgraph(classical_algebra(2), g);
  EXPECT_FALSE(r.schur_idempotent.pass);
  EXPECT_TRUE(r.self_adjoint.pass);
  EXPECT_EQ(kind_of([&] { QuantumGraph(classical_algebra(2), g); }), ErrorKind::NotQuantumGraph);
}

TEST(CheckQgraph, AllOnesMapIsCompleteReflexiveGraph) {
  for (const SSFA& a : {classical_algebra(3), matrix_algebra(2), direct_sum_algebra(classical_algebra(1), matrix_algebra(2))}) {
    const QGraphReport r = check_qgraph(a, all_ones_map(a));
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.reflexivity, Reflexivity::Reflexive);
  }
}

TEST(CheckQgraph, IdentityIsReflexiveOnly) {
  const QGraphReport r = check_qgraph(matrix_algebra(3), identity(9));
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.reflexivity, Reflexivity::Reflexive);
  EXPECT_EQ(check_qgraph(matrix_algebra(2), zeros(4, 4)).reflexivity, Reflexivity::Irreflexive);
}

TEST(CheckQgraph, ReflexivityOfMixedLoops) {
  CMatrix g = zeros(2, 2);
  g(0, 0) = 1.0;
  const QGraphReport r = check_qgraph(classical_algebra(2), g);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.reflexivity, Reflexivity::Neither);
  EXPECT_STREQ(to_string(Reflexivity::Neither), "neither");
}

TEST(CheckQgraph, AsymmetricAdjacencyFails) {
  CMatrix g = zeros(2, 2);
  g(0, 1) = 1.0;
  EXPECT_FALSE(check_qgraph(classical_algebra(2), g).valid());
  EXPECT_EQ(kind_of([] { check_qgraph(classical_algebra(2), identity(3)); }), ErrorKind::ShapeMismatch);
}

TEST(CheckQgraph, FlipGraphIsQuantum) {
  const QuantumGraph g = flip_graph();
  EXPECT_TRUE(check_qgraph(g.algebra(), g.adjacency()).valid());
  EXPECT_EQ(g.reflexivity(), Reflexivity::Reflexive);
  EXPECT_GT((g.adjacency() - identity(4)).norm(), 0.1);
  EXPECT_GT((g.adjacency() - all_ones_map(g.algebra())).norm(), 0.1);
}

TEST(ClassicalGraphs, Builders) {
  EXPECT_EQ(complete_graph(4).edges.size(), 6u);
  EXPECT_EQ(cycle_graph(5).edges.size(), 5u);
  EXPECT_EQ(path_graph(3).edges.size(), 2u);
  EXPECT_EQ(kind_of([] { cycle_graph(2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { ClassicalGraph{2, {{0, 0}}, false}.adjacency(); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { ClassicalGraph{2, {{0, 2}}, false}.adjacency(); }), ErrorKind::InvalidArgument);
}

TEST(ClassicalGraphs, PathAdjacency) {
  const QuantumGraph g = classical_to_quantum(path_graph(3));
  CMatrix expected = zeros(3, 3);
  expected(0, 1) = expected(1, 0) = expected(1, 2) = expected(2, 1) = 1.0;
  EXPECT_LE((g.adjacency() - expected).norm(), 0.0);
}

TEST(ClassicalGraphs, LoopOnSingleVertex) {
  const QuantumGraph g = classical_to_quantum(ClassicalGraph{1, {}, true});
  EXPECT_EQ(g.adjacency()(0, 0), Complex(1.0));
  EXPECT_EQ(g.reflexivity(), Reflexivity::Reflexive);
}

TEST(ClassicalGraphs, RoundtripAllSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (bool refl : {false, true})
      for (ClassicalGraph g : oracle::all_graphs(n)) {
        g.reflexive = refl;
        const ClassicalGraph back = quantum_to_classical(classical_to_quantum(g));
        EXPECT_EQ(back.adjacency(), g.adjacency());
        EXPECT_EQ(back.reflexive, refl);
      }
}

TEST(ClassicalGraphs, QuantumToClassicalErrors) {
  EXPECT_EQ(kind_of([] { quantum_to_classical(complete_quantum(matrix_algebra(2))); }), ErrorKind::NotClassical);
  CMatrix g = zeros(2, 2);
  g(0, 0) = 1.0;
  EXPECT_EQ(kind_of([&] { quantum_to_classical(QuantumGraph(classical_algebra(2), g)); }), ErrorKind::NotClassical);
}

TEST(Complement, TriangleBecomesLoops) {
  const QuantumGraph c = complement(classical_to_quantum(complete_graph(3)));
  EXPECT_LE((c.adjacency() - identity(3)).norm(), 1e-15);
  EXPECT_EQ(c.reflexivity(), Reflexivity::Reflexive);
}

TEST(Complement, Involutive) {
  for (const QuantumGraph& g : {classical_to_quantum(path_graph(4)), flip_graph(), complete_quantum(matrix_algebra(2))}) {
    EXPECT_LE((complement(complement(g)).adjacency() - g.adjacency()).norm(), 1e-12);
  }
}

TEST(Complement, CompleteQuantumGraphGoesToZero) {
  const QuantumGraph c = complement(complete_quantum(matrix_algebra(2)));
  EXPECT_LE(c.adjacency().norm(), 1e-15);
  EXPECT_EQ(c.reflexivity(), Reflexivity::Irreflexive);
}

TEST(EdgeProjector, K2SpansOffDiagonalPairs) {
  const CMatrix p = edge_projector(classical_to_quantum(complete_graph(2)));
  CMatrix expected = zeros(4, 4);
  expected(1, 1) = expected(2, 2) = 1.0;
  EXPECT_LE((p - expected).norm(), 1e-15);
  EXPECT_LE(edge_projector(classical_to_quantum(ClassicalGraph{3, {}, false})).norm(), 0.0);
}

TEST(EdgeProjector, DiagonalForClassicalGraphs) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ClassicalGraph g = oracle::random_graph(5, s, s % 2 == 0);
    const auto adj = g.adjacency();
    const CMatrix p = edge_projector(classical_to_quantum(g));
    CMatrix expected = zeros(25, 25);
    for (std::size_t v = 0; v < 5; ++v)
      for (std::size_t w = 0; w < 5; ++w) expected(v * 5 + w, v * 5 + w) = adj[w][v] ? 1.0 : 0.0;
    EXPECT_LE((p - expected).norm(), 1e-14);
  }
}

TEST(EdgeProjector, MirroredConstructionAgrees) {
  for (const QuantumGraph& g : {classical_to_quantum(cycle_graph(4)), flip_graph(), complete_quantum(matrix_algebra(2)),
                                complete_quantum(direct_sum_algebra(classical_algebra(1), matrix_algebra(2)))}) {
    const CMatrix p = edge_projector(g);
    EXPECT_LE((edge_projector_mirrored(g) - p).norm(), 1e-12);
    EXPECT_LE((p * p - p).norm(), 1e-12);
    EXPECT_LE((p.adjoint() - p).norm(), 1e-12);
    EXPECT_TRUE(check_relation(adjacency_to_relation(g)).valid());
  }
}

TEST(Hom, TriangleEndomorphismsArePermutations) {
  const QuantumGraph k3 = classical_to_quantum(complete_graph(3));
  const auto adj = complete_graph(3).adjacency();
  std::size_t homs = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        const std::vector<std::size_t> f{a, b, c};
        const HomReport r = verify_hom(classical_function(f, 3), k3, k3);
        EXPECT_EQ(r.valid(), oracle::is_hom(f, adj, adj));
        ASSERT_TRUE(r.projector_form.has_value());
        EXPECT_TRUE(r.agree);
        homs += r.valid();
      }
  EXPECT_EQ(homs, 6u);
}

TEST(Hom, ConstantMapCollapsesEdge) {
  const QuantumGraph k2 = classical_to_quantum(complete_graph(2));
  EXPECT_FALSE(verify_hom(classical_function({0, 0}, 2), k2, k2).valid());
}

TEST(Hom, BothVerdictsAgreeOnAllThreeVertexGraphs) {
  std::vector<ClassicalGraph> graphs;
  for (bool refl : {false, true})
    for (ClassicalGraph g : oracle::all_graphs(3)) {
      g.reflexive = refl;
      graphs.push_back(g);
    }
  for (const auto& g : graphs)
    for (const auto& h : graphs) {
      const QuantumGraph qg = classical_to_quantum(g);
      const QuantumGraph qh = classical_to_quantum(h);
      for (std::size_t code = 0; code < 27; ++code) {
        const std::vector<std::size_t> f{code % 3, code / 3 % 3, code / 9};
        const HomReport r = verify_hom(classical_function(f, 3), qg, qh);
        EXPECT_TRUE(r.agree);
        EXPECT_EQ(r.valid(), oracle::is_hom(f, g.adjacency(), h.adjacency()));
      }
    }
}

TEST(Hom, IdentityOnQuantumGraphs) {
  for (const QuantumGraph& g : {flip_graph(), complete_quantum(matrix_algebra(2)), classical_to_quantum(cycle_graph(5))}) {
    const HomReport r = verify_hom(identity_qfun(g.algebra()), g, g);
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.projector_form.has_value(), is_standard_classical(g.algebra(), kTol));
  }
}

TEST(Hom, QuantumHomsAndTheirParts) {
  const QuantumGraph k3 = classical_to_quantum(complete_graph(3));
  const QuantumGraph k4 = classical_to_quantum(complete_graph(4));
  const HomReport r = verify_hom(latin3(), k3, k3);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.agree);
  for (const auto& f : {qls4(), random_block_ppm(1)}) {
    EXPECT_TRUE(verify_hom(f, k4, k4).valid());
    for (const auto& part : decompose(f).parts) EXPECT_TRUE(verify_hom(part.function, k4, k4).valid());
  }
}

TEST(Hom, Errors) {
  const QuantumGraph k3 = classical_to_quantum(complete_graph(3));
  EXPECT_EQ(kind_of([&] { verify_hom(qls4(), k3, k3); }), ErrorKind::TypeMismatch);
  const QuantumFunction f = latin3();
  const QuantumFunction broken(f.source(), f.target(), f.h_dim(), f.matrix() * 0.5);
  EXPECT_EQ(kind_of([&] { verify_hom(broken, k3, k3); }), ErrorKind::NotQuantumFunction);
}

TEST(Iso, CycleRotation) {
  const QuantumGraph c4 = classical_to_quantum(cycle_graph(4));
  const IsoReport r = verify_iso(classical_function({1, 2, 3, 0}, 4), c4, c4);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.forward_hom.valid());
  EXPECT_TRUE(r.dual_hom.valid());
  EXPECT_TRUE(r.consistent);
}

TEST(Iso, PathAutomorphismGroupHasOrderTwo) {
  const QuantumGraph p3 = classical_to_quantum(path_graph(3));
  std::size_t autos = 0;
  for (const auto& perm : all_permutations(3)) {
    const IsoReport r = verify_iso(classical_function(perm, 3), p3, p3);
    EXPECT_TRUE(r.consistent);
    autos += r.valid();
  }
  EXPECT_EQ(autos, 2u);
  EXPECT_FALSE(verify_iso(classical_function({1, 0, 2}, 3), p3, p3).valid());
}

TEST(Iso, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const ClassicalGraph g = oracle::random_graph(4, s, false);
    const ClassicalGraph h = oracle::random_graph(4, s + 100, false);
    for (const auto& perm : all_permutations(4)) {
      const IsoReport r = verify_iso(classical_function(perm, 4), classical_to_quantum(g), classical_to_quantum(h));
      EXPECT_EQ(r.valid(), oracle::is_iso(perm, g.adjacency(), h.adjacency()));
      EXPECT_TRUE(r.consistent);
    }
  }
}

TEST(Iso, QuantumBijectionsOnCompleteGraphs) {
  const QuantumGraph k4 = classical_to_quantum(complete_graph(4));
  for (const auto& f : {qls4(), random_block_ppm(2)}) {
    const IsoReport r = verify_iso(f, k4, k4);
    EXPECT_TRUE(r.valid());
    EXPECT_TRUE(r.consistent);
    const PpmIsoReport p = ppm_iso_conditions(qfun_to_family(f), complete_graph(4), complete_graph(4));
    EXPECT_EQ(p.cond1.pass, r.valid());
    EXPECT_TRUE(p.agree());
  }
}

TEST(Iso, Errors) {
  const QuantumGraph k2 = classical_to_quantum(complete_graph(2));
  EXPECT_EQ(kind_of([&] { verify_iso(classical_function({0, 0}, 2), k2, k2); }), ErrorKind::NotBijection);
}

TEST(PpmConditions, PermutationOnIsomorphicGraphs) {
  const PpmIsoReport r = ppm_iso_conditions(family_of({0, 2, 1}), path_graph(3), ClassicalGraph{3, {{0, 2}, {1, 2}}, false});
  EXPECT_TRUE(r.cond1.pass);
  EXPECT_TRUE(r.cond2.pass);
}

TEST(PpmConditions, NoIsomorphismTriangleToPath) {
  for (const auto& perm : all_permutations(3)) {
    const PpmIsoReport r = ppm_iso_conditions(family_of(perm), complete_graph(3), path_graph(3));
    EXPECT_FALSE(r.cond1.pass);
    EXPECT_FALSE(r.cond2.pass);
  }
}

TEST(PpmConditions, AgreeOnFourVertexSample) {
  const auto graphs = oracle::all_graphs(4);
  for (std::size_t i = 0; i < graphs.size(); i += 5)
    for (std::size_t j = 0; j < graphs.size(); j += 7)
      for (const auto& perm : all_permutations(4)) {
        const PpmIsoReport r = ppm_iso_conditions(family_of(perm), graphs[i], graphs[j]);
        EXPECT_TRUE(r.agree());
        EXPECT_EQ(r.cond1.pass, oracle::is_iso(perm, graphs[i].adjacency(), graphs[j].adjacency()));
      }
}

TEST(PpmConditions, Errors) {
  const CMatrix p = random_projector(2, 1, 3);
  const CMatrix q = random_projector(2, 1, 4);
  const ProjectorFamily rows{2, 2, 2, {{p, identity(2) - p}, {q, identity(2) - q}}};
  EXPECT_EQ(kind_of([&] { ppm_iso_conditions(rows, complete_graph(2), complete_graph(2)); }), ErrorKind::NotPPM);
  EXPECT_EQ(kind_of([] { ppm_iso_conditions(family_of({0, 1}), complete_graph(3), complete_graph(3)); }),
            ErrorKind::ShapeMismatch);
}
