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

#include "qset/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qset::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t parse_size(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    malformed(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::size_t parse_suffix(const std::string& s, std::size_t prefix) {
  const std::string digits = s.substr(prefix);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    malformed("bad algebra reference '" + s + "'");
  }
  return std::stoul(digits);
}

SSFA parse_algebra_doc(const Json& j) {
  const std::size_t n = parse_size(j, "dim");
  return SSFA(parse_matrix(field(j, "mult"), n, n * n), parse_vector(field(j, "unit"), n));
}

std::size_t algebra_dim_sqrt(std::size_t n) {
  std::size_t k = 0;
  while (k * k < n) ++k;
  return k;
}

void dump_into(const Json& j, int indent, std::string& out) {
  const std::string pad(indent * 2, ' ');
  const std::string inner((indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys already sorted
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump_into(it.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Scalar lists, and lists of complex pairs (matrix rows), stay on one line.
      auto scalar_pair = [](const Json& e) {
        return e.is_primitive() ||
               (e.is_array() && e.size() <= 2 && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); }));
      };
      const bool flat = std::all_of(j.begin(), j.end(), scalar_pair);
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_into(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      // Adding 0.0 turns -0 into +0 so a dump survives a parse/dump cycle.
      std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Algebra: return "algebra";
    case Kind::QFun: return "qfun";
    case Kind::Family: return "family";
    case Kind::ClassicalGraph: return "classical_graph";
    case Kind::QuantumGraph: return "quantum_graph";
    case Kind::Relation: return "relation";
    case Kind::Projection: return "projection";
    case Kind::OperatorSystem: return "operator_system";
  }
  return "unknown";
}

Kind detect_kind(const Json& j) {
  if (!j.is_object()) malformed("document must be a JSON object");
  if (j.contains("mult")) return Kind::Algebra;
  if (j.contains("projectors")) return Kind::Family;
  if (j.contains("vertices")) return Kind::ClassicalGraph;
  if (j.contains("adjacency")) return Kind::QuantumGraph;
  if (j.contains("a") && j.contains("b")) return j.contains("projection") ? Kind::Projection : Kind::Relation;
  if (j.contains("source")) return Kind::QFun;
  if (j.contains("h_dim") && (j.contains("matrix") || j.contains("span"))) return Kind::OperatorSystem;
  malformed("cannot tell the document kind from its fields");
}

Complex parse_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("complex entries must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    malformed("matrix must have " + std::to_string(rows) + " rows");
  }
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      malformed("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
  }
  return m;
}

CVector parse_vector(const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size) malformed("vector must have " + std::to_string(size) + " entries");
  CVector v(size);
  for (std::size_t i = 0; i < size; ++i) v(i) = parse_complex(j[i]);
  return v;
}

SSFA parse_algebra_ref(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("classical:", 0) == 0) return classical_algebra(parse_suffix(s, 10));
    if (s.rfind("matrix:", 0) == 0) return matrix_algebra(parse_suffix(s, 7));
    malformed("bad algebra reference '" + s + "'");
  }
  return parse_algebra_doc(j);
}

Document parse(const Json& j, const Tolerance&) {
  try {
    switch (detect_kind(j)) {
      case Kind::Algebra:
        return parse_algebra_doc(j);
      case Kind::QFun: {
        SSFA a = parse_algebra_ref(field(j, "source"));
        SSFA b = parse_algebra_ref(field(j, "target"));
        const std::size_t d = parse_size(j, "h_dim");
        CMatrix m = parse_matrix(field(j, "matrix"), b.dim() * d, d * a.dim());
        return QuantumFunction(std::move(a), std::move(b), d, std::move(m));
      }
      case Kind::Family: {
        ProjectorFamily p;
        p.x_size = parse_size(j, "x_size");
        p.y_size = parse_size(j, "y_size");
        p.h_dim = parse_size(j, "h_dim");
        const Json& rows = field(j, "projectors");
        if (!rows.is_array() || rows.size() != p.x_size) malformed("projectors must have x_size rows");
        for (const auto& row : rows) {
          if (!row.is_array() || row.size() != p.y_size) malformed("projector rows must have y_size entries");
          std::vector<CMatrix> out;
          for (const auto& m : row) out.push_back(parse_matrix(m, p.h_dim, p.h_dim));
          p.projectors.push_back(std::move(out));
        }
        return p;
      }
      case Kind::ClassicalGraph: {
        ClassicalGraph g;
        g.vertices = parse_size(j, "vertices");
        g.reflexive = j.value("reflexive", false);
        const Json& edges = field(j, "edges");
        if (!edges.is_array()) malformed("edges must be a list of pairs");
        for (const auto& e : edges) {
          if (!e.is_array() || e.size() != 2) malformed("edges must be a list of pairs");
          const auto v = e[0].get<std::size_t>();
          const auto w = e[1].get<std::size_t>();
          if (v >= g.vertices || w >= g.vertices || v == w) malformed("edge endpoints must be distinct vertices");
          g.edges.emplace_back(std::min(v, w), std::max(v, w));
        }
        return g;
      }
      case Kind::QuantumGraph: {
        SSFA a = parse_algebra_ref(field(j, "algebra"));
        CMatrix g = parse_matrix(field(j, "adjacency"), a.dim(), a.dim());
        return GraphDoc{std::move(a), std::move(g)};
      }
      case Kind::Relation: {
        SSFA a = parse_algebra_ref(field(j, "a"));
        SSFA b = parse_algebra_ref(field(j, "b"));
        const std::size_t n = a.dim() * b.dim();
        CMatrix m = parse_matrix(field(j, "matrix"), n, n);
        return QuantumRelation(std::move(a), std::move(b), std::move(m));
      }
      case Kind::Projection: {
        SSFA a = parse_algebra_ref(field(j, "a"));
        SSFA b = parse_algebra_ref(field(j, "b"));
        CVector p = parse_vector(field(j, "projection"), a.dim() * b.dim());
        return ProjectionDoc{std::move(a), std::move(b), std::move(p)};
      }
      case Kind::OperatorSystem: {
        const std::size_t d = parse_size(j, "h_dim");
        if (j.contains("matrix")) return OperatorSystemProjector{d, parse_matrix(j.at("matrix"), d * d, d * d)};
        const Json& span = j.at("span");
        if (!span.is_array() || span.empty()) malformed("span must be a non-empty list of operators");
        std::vector<CMatrix> ops;
        for (const auto& m : span) ops.push_back(parse_matrix(m, d, d));
        return operator_system_from_span(ops);
      }
    }
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
  malformed("unreachable document kind");
}

Document load_file(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    malformed(path + ": " + e.what());
  }
  return parse(j, tol);
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json algebra_ref(const SSFA& a, const Tolerance& tol) {
  if (is_standard_classical(a, tol)) return "classical:" + std::to_string(a.dim());
  if (is_standard_matrix_algebra(a, tol)) return "matrix:" + std::to_string(algebra_dim_sqrt(a.dim()));
  return to_json(a);
}

Json to_json(const SSFA& a) {
  return Json{{"dim", a.dim()}, {"mult", to_json(a.mult())}, {"unit", vector_to_json(a.unit().col(0))}};
}

Json to_json(const QuantumFunction& f, const Tolerance& tol) {
  return Json{{"source", algebra_ref(f.source(), tol)},
              {"target", algebra_ref(f.target(), tol)},
              {"h_dim", f.h_dim()},
              {"matrix", to_json(f.matrix())}};
}

Json to_json(const ProjectorFamily& p) {
  Json rows = Json::array();
  for (const auto& row : p.projectors) {
    Json out = Json::array();
    for (const auto& m : row) out.push_back(to_json(m));
    rows.push_back(std::move(out));
  }
  return Json{{"x_size", p.x_size}, {"y_size", p.y_size}, {"h_dim", p.h_dim}, {"projectors", std::move(rows)}};
}

Json to_json(const ClassicalGraph& g) {
  Json edges = Json::array();
  for (const auto& [v, w] : g.edges) edges.push_back(Json::array({v, w}));
  return Json{{"vertices", g.vertices}, {"edges", std::move(edges)}, {"reflexive", g.reflexive}};
}

Json to_json(const QuantumGraph& g, const Tolerance& tol) {
  return Json{{"algebra", algebra_ref(g.algebra(), tol)}, {"adjacency", to_json(g.adjacency())}};
}

Json to_json(const QuantumRelation& r, const Tolerance& tol) {
  return Json{{"a", algebra_ref(r.a(), tol)}, {"b", algebra_ref(r.b(), tol)}, {"matrix", to_json(r.matrix())}};
}

Json to_json(const ProjectionDoc& p, const Tolerance& tol) {
  return Json{{"a", algebra_ref(p.a, tol)}, {"b", algebra_ref(p.b, tol)}, {"projection", vector_to_json(p.p)}};
}

Json to_json(const OperatorSystemProjector& osp) {
  return Json{{"h_dim", osp.h_dim}, {"matrix", to_json(osp.matrix)}};
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << dump(j);
}

}  // namespace qset::io
