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

#include "qset/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "qset/generators.hpp"
#include "qset/io.hpp"
#include "qset/semisimple.hpp"

namespace qset::cli {

namespace {

using io::Json;

struct Options {
  Tolerance tol;
  std::uint64_t seed = 0;
  std::string output;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::string> artifacts;
  Json details = Json::object();

  void add(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
  void add(Check c) { checks.push_back(std::move(c)); }
  bool pass() const { return all_pass(checks); }
};

// Failed mathematical preconditions end up as failing checks, not errors.
bool is_verdict_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::TypeMismatch:
      return false;
    default:
      return true;
  }
}

Json tol_json(const Tolerance& tol) { return Json{{"rel", tol.rel}, {"eig_gap", tol.eig_gap}}; }

Json check_json(const Check& c) { return Json{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}}; }

Json report_json(const Report& r, const Options& opt, const std::string& verdict) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  Json out{{"command", r.command}, {"verdict", verdict}, {"checks", std::move(checks)},
           {"artifacts", r.artifacts}, {"tol", tol_json(opt.tol)}};
  if (!r.details.empty()) out["details"] = r.details;
  return out;
}

Check flag(std::string name, bool pass) {
  return Check{std::move(name), pass, pass ? 0.0 : std::numeric_limits<double>::quiet_NaN()};
}

// Emits a document either as an artifact file or inline in the details.
void emit(Report& r, const Options& opt, const Json& doc) {
  if (opt.output.empty()) {
    r.details["result"] = doc;
  } else {
    io::write_file(opt.output, doc);
    r.artifacts.push_back(opt.output);
  }
}

QuantumFunction load_qfun(const std::string& path, const Options& opt) {
  io::Document d = io::load_file(path, opt.tol);
  if (auto* f = std::get_if<QuantumFunction>(&d)) return *f;
  if (auto* p = std::get_if<ProjectorFamily>(&d)) return family_to_qfun(*p, opt.tol);
  throw Error(ErrorKind::TypeMismatch, path + ": expected a quantum function or projector family");
}

QuantumGraph as_graph(const io::Document& d, const Options& opt, const std::string& path) {
  if (auto* g = std::get_if<ClassicalGraph>(&d)) return classical_to_quantum(*g);
  if (auto* g = std::get_if<io::GraphDoc>(&d)) return QuantumGraph(g->algebra, g->adjacency, opt.tol);
  throw Error(ErrorKind::TypeMismatch, path + ": expected a graph");
}

QuantumGraph load_graph(const std::string& path, const Options& opt) {
  return as_graph(io::load_file(path, opt.tol), opt, path);
}

std::optional<ClassicalGraph> load_classical_graph(const std::string& path, const Options& opt) {
  io::Document d = io::load_file(path, opt.tol);
  if (auto* g = std::get_if<ClassicalGraph>(&d)) return *g;
  return std::nullopt;
}

void check_document(Report& r, const io::Document& doc, const Options& opt, bool bijection) {
  const Tolerance& tol = opt.tol;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SSFA>) {
          const SsfaReport s = check_ssfa(v, tol);
          r.add({s.associative, s.unital, s.frobenius, s.special, s.symmetric, s.snake});
          r.details["kind"] = "algebra";
          r.details["commutative"] = s.commutative.pass;
        } else if constexpr (std::is_same_v<T, QuantumFunction>) {
          r.details["kind"] = "qfun";
          const QfunReport q = verify_qfun(v, tol);
          r.add(q.checks());
          if (bijection && q.valid()) r.add(verify_qbij(v, tol).checks());
        } else if constexpr (std::is_same_v<T, ProjectorFamily>) {
          r.details["kind"] = "family";
          r.add(check_ppm_rows(v, tol));
          if (bijection) r.add(check_ppm_columns(v, tol));
        } else if constexpr (std::is_same_v<T, ClassicalGraph>) {
          r.details["kind"] = "classical_graph";
          const QuantumGraph g = classical_to_quantum(v);
          const QGraphReport q = check_qgraph(g.algebra(), g.adjacency(), tol);
          r.add(q.checks());
          r.details["reflexivity"] = to_string(q.reflexivity);
        } else if constexpr (std::is_same_v<T, io::GraphDoc>) {
          r.details["kind"] = "quantum_graph";
          const QGraphReport q = check_qgraph(v.algebra, v.adjacency, tol);
          r.add(q.checks());
          r.details["reflexivity"] = to_string(q.reflexivity);
        } else if constexpr (std::is_same_v<T, QuantumRelation>) {
          r.details["kind"] = "relation";
          const RelationReport q = check_relation(v, tol);
          r.add(q.checks());
          if (q.valid() && same_algebra(v.a(), v.b(), tol)) {
            r.details["symmetric"] = is_symmetric(v, tol);
            r.details["reflexive"] = is_reflexive(v, tol);
          }
        } else if constexpr (std::is_same_v<T, io::ProjectionDoc>) {
          r.details["kind"] = "projection";
          r.add(projection_idempotent(v.a, v.b, v.p, tol));
          r.add(projection_self_adjoint(v.a, v.b, v.p, tol));
        } else if constexpr (std::is_same_v<T, OperatorSystemProjector>) {
          r.details["kind"] = "operator_system";
          r.add(check_operator_system(v, tol).checks());
        }
      },
      doc);
}

io::Json document_json(const io::Document& doc, const Tolerance& tol) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SSFA> || std::is_same_v<T, ProjectorFamily> ||
                      std::is_same_v<T, ClassicalGraph> || std::is_same_v<T, OperatorSystemProjector>) {
          return io::to_json(v);
        } else if constexpr (std::is_same_v<T, io::GraphDoc>) {
          return Json{{"algebra", io::algebra_ref(v.algebra, tol)}, {"adjacency", io::to_json(v.adjacency)}};
        } else {
          return io::to_json(v, tol);
        }
      },
      doc);
}

// ---- commands -------------------------------------------------------------

void cmd_check(Report& r, const Options& opt, const std::string& path, bool no_bijection) {
  check_document(r, io::load_file(path, opt.tol), opt, !no_bijection);
}

void cmd_info(Report& r, const Options& opt, const std::string& path) {
  io::Document d = io::load_file(path, opt.tol);
  const SSFA* a = std::get_if<SSFA>(&d);
  if (a == nullptr) throw Error(ErrorKind::TypeMismatch, path + ": expected an algebra");
  check_document(r, d, opt, true);
  if (!r.pass()) return;
  const WedderburnData w = wedderburn(*a, opt.seed, opt.tol);
  r.details["dim"] = a->dim();
  r.details["blocks"] = w.block_sizes;
  r.details["center_dim"] = w.center_dim;
  Json copyable = Json::array();
  for (const auto& v : copyable_elements(*a, opt.tol, opt.seed)) copyable.push_back(io::vector_to_json(v));
  r.details["copyable"] = std::move(copyable);
}

void cmd_compose(Report& r, const Options& opt, const std::string& gpath, const std::string& fpath) {
  const QuantumFunction g = load_qfun(gpath, opt);
  const QuantumFunction f = load_qfun(fpath, opt);
  const QuantumFunction h = compose(g, f, opt.tol);
  r.add(verify_qfun(h, opt.tol).checks());
  r.details["h_dim"] = h.h_dim();
  emit(r, opt, io::to_json(h, opt.tol));
}

void cmd_dual(Report& r, const Options& opt, const std::string& path) {
  const QuantumFunction f = load_qfun(path, opt);
  const QuantumFunction d = dagger_dual(f, opt.tol);
  r.add(duality_checks(f, d, opt.tol).checks());
  r.add(verify_qbij(d, opt.tol).checks());
  emit(r, opt, io::to_json(d, opt.tol));
}

void cmd_decompose(Report& r, const Options& opt, const std::string& path) {
  const QuantumFunction f = load_qfun(path, opt);
  const Decomposition dec = decompose(f, opt.seed, opt.tol);
  const DecompositionReport rep = check_decomposition(f, dec, opt.tol);
  r.add(rep.checks());
  const bool classical = is_standard_classical(f.source(), opt.tol) && is_standard_classical(f.target(), opt.tol);
  Json parts = Json::array();
  for (const auto& p : dec.parts) {
    Json part{{"h_dim", p.function.h_dim()},
              {"isometry", io::to_json(p.isometry)},
              {"matrix", io::to_json(p.function.matrix())},
              {"simple", is_simple(p.function, opt.tol)}};
    if (classical && p.function.h_dim() == 1) part["classical_map"] = classical_map(p.function, opt.tol);
    parts.push_back(std::move(part));
  }
  r.details["parts"] = std::move(parts);
  r.details["h_dim"] = f.h_dim();
}

void cmd_hom(Report& r, const Options& opt, const std::string& fpath, const std::string& gpath,
             const std::string& hpath) {
  const QuantumFunction f = load_qfun(fpath, opt);
  const HomReport rep = verify_hom(f, load_graph(gpath, opt), load_graph(hpath, opt), opt.tol);
  r.add(rep.checks());
  if (rep.projector_form) r.add(flag("forms_agree", rep.agree));
}

void cmd_iso(Report& r, const Options& opt, const std::string& fpath, const std::string& gpath,
             const std::string& hpath) {
  const QuantumFunction f = load_qfun(fpath, opt);
  const QuantumGraph g = load_graph(gpath, opt);
  const QuantumGraph h = load_graph(hpath, opt);
  const IsoReport rep = verify_iso(f, g, h, opt.tol);
  r.add(rep.iso);
  r.add(flag("dual_consistent", rep.consistent));
  r.details["forward_hom"] = rep.forward_hom.valid();
  r.details["dual_hom"] = rep.dual_hom.valid();
  const auto cg = load_classical_graph(gpath, opt);
  const auto ch = load_classical_graph(hpath, opt);
  if (cg && ch && is_standard_classical(f.source(), opt.tol) && is_standard_classical(f.target(), opt.tol)) {
    const PpmIsoReport ppm = ppm_iso_conditions(qfun_to_family(f, opt.tol), *cg, *ch, opt.tol);
    r.details["cond1"] = check_json(ppm.cond1);
    r.details["cond2"] = check_json(ppm.cond2);
    r.add(flag("ppm_conditions_agree", ppm.agree()));
  }
}

void cmd_convert(Report& r, const Options& opt, const std::string& path, const std::string& to) {
  const Tolerance& tol = opt.tol;
  io::Document d = io::load_file(path, tol);
  auto roundtrip = [&](const CMatrix& a, const CMatrix& b) { r.add(approx_eq(a, b, tol, "roundtrip")); };

  if (auto* fam = std::get_if<ProjectorFamily>(&d)) {
    if (to != "qfun") throw Error(ErrorKind::InvalidArgument, "a projector family converts only to qfun");
    const QuantumFunction f = family_to_qfun(*fam, tol);
    r.add(verify_qfun(f, tol).checks());
    emit(r, opt, io::to_json(f, tol));
    return;
  }
  if (auto* f = std::get_if<QuantumFunction>(&d)) {
    if (to != "family") throw Error(ErrorKind::InvalidArgument, "a quantum function converts only to family");
    const ProjectorFamily fam = qfun_to_family(*f, tol);
    r.add(check_ppm_rows(fam, tol));
    emit(r, opt, io::to_json(fam));
    return;
  }

  // Graph-like documents pass through the quantum graph form.
  std::optional<QuantumGraph> graph;
  std::optional<QuantumRelation> relation;
  if (std::holds_alternative<ClassicalGraph>(d) || std::holds_alternative<io::GraphDoc>(d)) {
    graph = as_graph(d, opt, path);
  } else if (auto* rel = std::get_if<QuantumRelation>(&d)) {
    relation = *rel;
  } else if (auto* p = std::get_if<io::ProjectionDoc>(&d)) {
    relation = from_projection(p->a, p->b, p->p, tol);
    roundtrip(to_projection(*relation), p->p);
  } else if (auto* osp = std::get_if<OperatorSystemProjector>(&d)) {
    r.add(check_operator_system(*osp, tol).checks());
    graph = operator_system_to_graph(*osp, tol);
    roundtrip(graph_to_operator_system(*graph, tol).matrix, osp->matrix);
  } else {
    throw Error(ErrorKind::TypeMismatch, path + ": cannot convert this document kind");
  }

  if (relation && !graph && to != "relation" && to != "projection") {
    r.add(check_relation(*relation, tol).checks());
    graph = relation_to_adjacency(*relation, tol);
    roundtrip(edge_projector(*graph), relation->matrix());
  }
  if (graph && !relation) relation = adjacency_to_relation(*graph);

  if (to == "adjacency") {
    r.add(check_qgraph(graph->algebra(), graph->adjacency(), tol).checks());
    emit(r, opt, io::to_json(*graph, tol));
  } else if (to == "relation") {
    r.add(check_relation(*relation, tol).checks());
    if (graph) roundtrip(relation_to_adjacency(*relation, tol).adjacency(), graph->adjacency());
    emit(r, opt, io::to_json(*relation, tol));
  } else if (to == "projection") {
    const CVector p = to_projection(*relation);
    r.add(projection_idempotent(relation->a(), relation->b(), p, tol));
    r.add(projection_self_adjoint(relation->a(), relation->b(), p, tol));
    roundtrip(from_projection(relation->a(), relation->b(), p, tol).matrix(), relation->matrix());
    emit(r, opt, io::to_json(io::ProjectionDoc{relation->a(), relation->b(), p}, tol));
  } else if (to == "opsys") {
    if (!graph) graph = relation_to_adjacency(*relation, tol);
    const OperatorSystemProjector osp = graph_to_operator_system(*graph, tol);
    r.add(check_operator_system(osp, tol).checks());
    roundtrip(operator_system_to_graph(osp, tol).adjacency(), graph->adjacency());
    emit(r, opt, io::to_json(osp));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown conversion target '" + to + "'");
  }
}

io::Document generate(const std::string& name, std::optional<std::size_t> n, const Options& opt) {
  auto need = [&](std::size_t fallback) { return n.value_or(fallback); };
  if (name == "classical-set") return classical_algebra(need(3));
  if (name == "matrix-algebra") return matrix_algebra(need(2));
  if (name == "kn") return complete_graph(need(4));
  if (name == "cn") return cycle_graph(need(4));
  if (name == "path") return path_graph(need(3));
  if (name == "latin3") return latin3();
  if (name == "qls4") return qls4();
  if (name == "pauli-ueb") return pauli_ueb();
  if (name == "block-ppm") return random_block_ppm(opt.seed);
  throw Error(ErrorKind::InvalidArgument, "unknown generator '" + name + "'");
}

void cmd_generate(Report& r, const Options& opt, const std::string& name, std::optional<std::size_t> n) {
  const io::Document doc = generate(name, n, opt);
  check_document(r, doc, opt, true);
  emit(r, opt, document_json(doc, opt.tol));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quantum sets: quantum functions, bijections, graphs and relations", "qset"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol.rel, "Relative Frobenius tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eig-gap", opt.tol.eig_gap, "Eigenvalue clustering gap")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for all randomized steps");
  app.add_option("-o,--output", opt.output, "Write the produced document to this file");

  Report report;
  std::function<void()> action;
  std::string p1, p2, p3, to, name;
  std::optional<std::size_t> size;
  bool no_bijection = false;

  auto* check = app.add_subcommand("check", "Verify the axioms of any document");
  check->add_option("file", p1)->required();
  check->add_flag("--no-bijection", no_bijection, "Skip the bijection equations for quantum functions");
  check->callback([&] { action = [&] { cmd_check(report, opt, p1, no_bijection); }; });

  auto* info = app.add_subcommand("info", "Block structure and copyable elements of an algebra");
  info->add_option("file", p1)->required();
  info->callback([&] { action = [&] { cmd_info(report, opt, p1); }; });

  auto* comp = app.add_subcommand("compose", "Compose two quantum functions, g after f");
  comp->add_option("g", p1)->required();
  comp->add_option("f", p2)->required();
  comp->callback([&] { action = [&] { cmd_compose(report, opt, p1, p2); }; });

  auto* dual = app.add_subcommand("dual", "Dagger dual of a quantum bijection");
  dual->add_option("file", p1)->required();
  dual->callback([&] { action = [&] { cmd_dual(report, opt, p1); }; });

  auto* dec = app.add_subcommand("decompose", "Split a quantum function into simple parts");
  dec->add_option("file", p1)->required();
  dec->callback([&] { action = [&] { cmd_decompose(report, opt, p1); }; });

  auto* hom = app.add_subcommand("hom", "Quantum graph homomorphism test");
  hom->add_option("qfun", p1)->required();
  hom->add_option("source_graph", p2)->required();
  hom->add_option("target_graph", p3)->required();
  hom->callback([&] { action = [&] { cmd_hom(report, opt, p1, p2, p3); }; });

  auto* iso = app.add_subcommand("iso", "Quantum graph isomorphism test");
  iso->add_option("qfun", p1)->required();
  iso->add_option("source_graph", p2)->required();
  iso->add_option("target_graph", p3)->required();
  iso->callback([&] { action = [&] { cmd_iso(report, opt, p1, p2, p3); }; });

  auto* conv = app.add_subcommand("convert", "Convert between graph, relation, projection and operator system");
  conv->add_option("file", p1)->required();
  conv->add_option("--to", to, "Target form")
      ->required()
      ->check(CLI::IsMember({"relation", "adjacency", "projection", "opsys", "qfun", "family"}));
  conv->callback([&] { action = [&] { cmd_convert(report, opt, p1, to); }; });

  auto* gen = app.add_subcommand("generate", "Emit an example document");
  gen->add_option("name", name)
      ->required()
      ->check(CLI::IsMember(
          {"classical-set", "matrix-algebra", "kn", "cn", "path", "latin3", "qls4", "pauli-ueb", "block-ppm"}));
  gen->add_option("n", size, "Size parameter");
  gen->callback([&] { action = [&] { cmd_generate(report, opt, name, size); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qset: " << e.what() << "\n";
    return 2;
  }

  report.command = app.get_subcommands().front()->get_name();
  try {
    action();
  } catch (const Error& e) {
    if (is_verdict_error(e.kind())) {
      report.add(Check{to_string(e.kind()), false, std::numeric_limits<double>::quiet_NaN()});
      report.details["message"] = e.what();
    } else {
      Json j = report_json(report, opt, "error");
      j["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
      out << io::dump(j);
      err << "qset: " << e.what() << "\n";
      return 2;
    }
  }
  const bool pass = report.pass();
  out << io::dump(report_json(report, opt, pass ? "pass" : "fail"));
  return pass ? 0 : 1;
}

}  // namespace qset::cli
