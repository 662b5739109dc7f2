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

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "qset/qrel.hpp"

namespace qset::io {

using Json = nlohmann::json;

/// The document kinds understood by the command line tool.
enum class Kind {
  Algebra,
  QFun,
  Family,
  ClassicalGraph,
  QuantumGraph,
  Relation,
  Projection,
  OperatorSystem,
};

const char* to_string(Kind k);

/// Projection form p ∈ A ⊗ B of a relation, kept as raw data.
struct ProjectionDoc {
  SSFA a;
  SSFA b;
  CVector p;
};

/// A quantum graph document before validation.
struct GraphDoc {
  SSFA algebra;
  CMatrix adjacency;
};

using Document = std::variant<SSFA, QuantumFunction, ProjectorFamily, ClassicalGraph, GraphDoc,
                              QuantumRelation, ProjectionDoc, OperatorSystemProjector>;

/// Identifies the kind from the fields present. Throws MalformedInput.
Kind detect_kind(const Json& j);

/// Parses any document kind. Throws MalformedInput on missing or ill-typed
/// fields; the mathematical content is not validated.
Document parse(const Json& j, const Tolerance& tol = {});
Document load_file(const std::string& path, const Tolerance& tol = {});

Complex parse_complex(const Json& j);
CMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols);
CVector parse_vector(const Json& j, std::size_t size);
/// "classical:n", "matrix:k", or an inline algebra document.
SSFA parse_algebra_ref(const Json& j);

Json to_json(const Complex& z);
Json to_json(const CMatrix& m);
Json vector_to_json(const CVector& v);
/// Uses the short "classical:n" / "matrix:k" form for standard algebras.
Json algebra_ref(const SSFA& a, const Tolerance& tol = {});

Json to_json(const SSFA& a);
Json to_json(const QuantumFunction& f, const Tolerance& tol = {});
Json to_json(const ProjectorFamily& p);
Json to_json(const ClassicalGraph& g);
Json to_json(const QuantumGraph& g, const Tolerance& tol = {});
Json to_json(const QuantumRelation& r, const Tolerance& tol = {});
Json to_json(const ProjectionDoc& p, const Tolerance& tol = {});
Json to_json(const OperatorSystemProjector& osp);

/// Deterministic text: keys sorted, two-space indent, doubles printed with
/// 17 significant digits, non-finite doubles as null.
std::string dump(const Json& j);

void write_file(const std::string& path, const Json& j);

}  // namespace qset::io
