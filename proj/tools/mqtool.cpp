// mqtool: catalog queries, verification suites, invariants and exporters.
//
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

#include "mq/io.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>

namespace {

using namespace mq;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string out;
};

void emit(const Options& opt, const std::string& body) {
  if (opt.out.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + opt.out + ": " + std::strerror(errno));
  f << body;
  f.close();
  if (!f) throw IoError("cannot write " + opt.out + ": " + std::strerror(errno));
}

void emit_json(const Options& opt, const Json& payload) { emit(opt, envelope(payload).dump(2) + "\n"); }

bool json(const Options& opt) { return opt.format == "json"; }

std::string vector_text(const VectorX<Rational>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v(i));
  return out + ")";
}

// ---------------------------------------------------------------------------
// Queries, shared by the top level and `query`

struct QueryArgs {
  bool count = false;
  std::string kind;
  std::string divisor;
  std::string curve;
  std::string label;
};

void cmd_divisors(const Options& opt, const QueryArgs& a) {
  const auto& divisors = Catalog::get().divisors();
  if (json(opt)) {
    Json j{{"count", divisors.size()}};
    if (!a.count) j["divisors"] = catalog_json()["divisors"];
    emit_json(opt, j);
    return;
  }
  if (a.count) {
    emit(opt, std::to_string(divisors.size()) + "\n");
    return;
  }
  std::string body;
  for (const auto& m : divisors) body += m.text() + "\n";
  emit(opt, body);
}

void cmd_curves(const Options& opt, const QueryArgs& a) {
  const Catalog& cat = Catalog::get();
  std::span<const CurveSymbol> curves = cat.curves();
  if (!a.kind.empty()) {
    if (a.kind == "generators") {
      curves = cat.generators();
    } else {
      const auto k = parse_curve_kind(a.kind);
      if (!k) throw LabelError("unknown curve kind", a.kind);
      curves = cat.curves(*k);
    }
  }
  if (json(opt)) {
    Json list = Json::array();
    if (!a.count)
      for (const auto& c : curves) list.push_back({{"kind", to_string(c.kind())}, {"label", c.label()}});
    Json j{{"count", curves.size()}};
    if (!a.count) j["curves"] = list;
    emit_json(opt, j);
    return;
  }
  if (a.count) {
    emit(opt, std::to_string(curves.size()) + "\n");
    return;
  }
  std::string body;
  for (const auto& c : curves) body += c.label() + "\n";
  emit(opt, body);
}

void cmd_pair(const Options& opt, const QueryArgs& a) {
  const DivisorCombination d = parse_divisor_spec(a.divisor);
  const CurveSymbol c = CurveSymbol::parse(a.curve);
  const Rational value = pair(d, c);
  if (json(opt)) {
    emit_json(opt, {{"divisor", a.divisor}, {"curve", c.label()}, {"value", to_json(value)}});
  } else {
    emit(opt, to_string(value) + "\n");
  }
}

void cmd_project(const Options& opt, const QueryArgs& a) {
  const CurveSymbol c = CurveSymbol::parse(a.label);
  const ProjectedClass p = project(c);
  if (json(opt)) {
    emit_json(opt, {{"curve", c.label()}, {"class", {p.m, p.n}}});
  } else {
    emit(opt, p.text() + "\n");
  }
}

void cmd_orbit(const Options& opt, const QueryArgs& a) {
  const CurveSymbol c = CurveSymbol::parse(a.label);
  const VectorX<Rational> w = collapse(c);
  const VectorX<Rational> rho = quotient().coordinates(w);
  Json j{{"curve", c.label()}, {"collapsed", to_json(w)}, {"rho", to_json(rho)}};
  std::string body;
  if (c.is_generator()) {
    const OrbitTable& t = orbits();
    const int k = t.orbit(c);
    j["orbit"] = kOrbitNames[k];
    j["representative"] = t.representative[k].label();
    j["size"] = t.size[k];
    body += "orbit " + std::string(kOrbitNames[k]) + " size " + std::to_string(t.size[k]) + " representative " +
            t.representative[k].label() + "\n";
  }
  if (json(opt)) {
    emit_json(opt, j);
    return;
  }
  body += "W " + vector_text(w) + "\nrho " + vector_text(rho) + "\n";
  emit(opt, body);
}

void cmd_representatives(const Options& opt, const QueryArgs& a) {
  const CurveSymbol c = CurveSymbol::parse(a.label);
  const auto reps = Catalog::get().representatives(c);
  if (json(opt)) {
    Json list = Json::array();
    for (const auto& r : reps) list.push_back({{"point", r.point.triple.text()}, {"wall", r.wall.text()}});
    emit_json(opt, {{"curve", c.label()}, {"representatives", list}});
    return;
  }
  std::string body;
  for (const auto& r : reps) body += r.point.triple.text() + " " + r.wall.text() + "\n";
  emit(opt, body);
}

void add_queries(CLI::App& parent, const Options& opt, QueryArgs& a) {
  auto* divisors = parent.add_subcommand("divisors", "List the divisor labels");
  divisors->add_flag("--count", a.count, "Print only the number of labels");
  divisors->callback([&] { cmd_divisors(opt, a); });

  auto* curves = parent.add_subcommand("curves", "List curve symbols");
  curves->add_option("--kind", a.kind, "gamma|ell|sigma|phi|sec|generators");
  curves->add_flag("--count", a.count, "Print only the number of symbols");
  curves->callback([&] { cmd_curves(opt, a); });

  auto* pair_cmd = parent.add_subcommand("pair", "Pair a divisor expression with a curve symbol");
  pair_cmd->add_option("--divisor", a.divisor, "<monomial>|Dv..Dz|DD|local:x@xyz")->required();
  pair_cmd->add_option("--curve", a.curve, "Curve label")->required();
  pair_cmd->callback([&] { cmd_pair(opt, a); });

  auto* project_cmd = parent.add_subcommand("project", "Projected class (m,n) of a curve symbol");
  project_cmd->add_option("label", a.label, "Curve label")->required();
  project_cmd->callback([&] { cmd_project(opt, a); });

  auto* orbit = parent.add_subcommand("orbit", "S5 orbit and quotient coordinates of a curve symbol");
  orbit->add_option("label", a.label, "Curve label")->required();
  orbit->callback([&] { cmd_orbit(opt, a); });

  auto* reps = parent.add_subcommand("representatives", "Patch walls realizing a curve symbol");
  reps->add_option("label", a.label, "Curve label")->required();
  reps->callback([&] { cmd_representatives(opt, a); });
}

// ---------------------------------------------------------------------------
// Computations

int cmd_verify(const Options& opt, const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw CLI::ValidationError("--suite", "unknown suite '" + suite_name + "'");
  const VerificationReport report = run_suite(*suite);
  if (json(opt)) {
    emit_json(opt, verification_json(report));
  } else {
    std::string body;
    for (const auto& c : report.checks) {
      body += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.suite + "/" + c.name + "  expected " + c.expected +
              "  actual " + c.actual + "\n";
    }
    body += std::to_string(report.passed()) + " passed, " + std::to_string(report.failed()) + " failed\n";
    emit(opt, body);
  }
  return report.pass() ? 0 : 1;
}

void cmd_ranks(const Options& opt) {
  const Json j = rank_report_json(rank_report());
  if (json(opt)) {
    emit_json(opt, j);
    return;
  }
  std::string body;
  for (const auto& [k, v] : j.items()) body += k + " " + v.dump() + "\n";
  emit(opt, body);
}

void cmd_gv(const Options& opt, const std::string& cls, bool families) {
  const GVResult r = gv(ProjectedClass::parse(cls));
  if (json(opt)) {
    emit_json(opt, gv_json(r, families));
    return;
  }
  std::string body = "gv" + r.projected_class.text() + " = " + std::to_string(r.value) + (r.toric_only ? " (toric only)" : "") + "\n";
  if (families) {
    for (const auto& f : r.families) {
      body += "  " + std::to_string(f.configuration_count) + " x " + f.description + ": moduli " + f.moduli.name +
              " dim " + std::to_string(f.moduli_dimension()) + " e " + std::to_string(f.euler_characteristic()) +
              " -> " + std::to_string(f.contribution()) + "\n";
    }
    for (const auto& n : r.notes) body += "  note: " + n + "\n";
  }
  emit(opt, body);
}

void cmd_gw(const Options& opt, const std::string& cls) {
  const ProjectedClass c = ProjectedClass::parse(cls);
  const Rational value = gw(c);
  if (json(opt)) {
    emit_json(opt, gw_json(c, value));
  } else {
    emit(opt, to_string(value) + "\n");
  }
}

void cmd_fiber(const Options& opt, const std::string& cls, const std::string& mode, std::uint64_t cap, bool list) {
  FiberOptions o;
  o.target = ProjectedClass::parse(cls);
  o.mode = *parse_fiber_mode(mode);
  o.cap = cap;
  o.list = list && o.mode == FiberMode::Multisets;
  const FiberResult r = enumerate_fiber(o);
  if (json(opt)) {
    emit_json(opt, fiber_json(r));
    return;
  }
  std::string body = std::to_string(r.count) + (r.partial ? " (partial: cap reached)" : "") + "\n";
  const auto& curves = Catalog::get().curves();
  for (const auto& ms : r.listing) {
    std::string line;
    for (const auto& [i, mult] : ms) line += (line.empty() ? "" : " + ") + (mult > 1 ? std::to_string(mult) : "") + curves[i].label();
    body += "  " + line + "\n";
  }
  emit(opt, body);
}

void cmd_quotient(const Options& opt) {
  const Json j = quotient_json();
  if (json(opt)) {
    emit_json(opt, j);
    return;
  }
  const QuotientSpace& n = quotient();
  std::string body = "W dimension " + std::to_string(kOrbitCount) + ", collapsed relation rank " +
                     std::to_string(n.relation_rank) + ", dim N " + std::to_string(n.dimension) + "\n";
  const OrbitTable& t = orbits();
  for (int k = 0; k < kOrbitCount; ++k) {
    body += std::string(kOrbitNames[k]) + "  size " + std::to_string(t.size[k]) + "  " + t.representative[k].label() +
            "  rho " + vector_text(n.rho.col(k)) + "\n";
  }
  body += "gamma image rank " + std::to_string(n.gamma_image_rank) + "\n";
  body += std::string("rho(B) == rho(E): ") + (n.identified(3, 6) ? "yes" : "no") + "\n";
  body += std::string("rho(D) == rho(F): ") + (n.identified(5, 7) ? "yes" : "no") + "\n";
  emit(opt, body);
}

void cmd_cone(const Options& opt, bool membership) {
  if (json(opt)) {
    emit_json(opt, cone_json(membership));
    return;
  }
  const SimplicialCone& c = cone_tau();
  const QuotientSpace& n = quotient();
  std::string body = "dual edges (orbit coefficients on 5, 41, 32, 311, 221):\n";
  for (std::size_t k = 0; k < c.dual_edges.size(); ++k) {
    const auto& e = c.dual_edges[k];
    body += "  dual to " + std::string(kOrbitNames[n.basis_orbits[k]]) + "  " + vector_text(e.orbit_coefficients) + "  " +
            e.sign_pattern + (e.effective ? "  effective" : "  not effective") + "\n";
  }
  if (membership) {
    const MoriImageReport m = mori_image_check();
    body += "generators in tau: " + std::to_string(m.generators_inside) + "/" + std::to_string(m.generator_total) + "\n";
    const auto& curves = Catalog::get().curves();
    for (const auto& r : m.rows)
      if (!r.inside) body += "  outside: " + curves[r.catalog_index].label() + "  " + vector_text(r.coordinates) + "\n";
  }
  emit(opt, body);
}

void cmd_export(const Options& opt, const std::string& what, const std::string& point) {
  if (what == "catalog") {
    emit_json(opt, catalog_json());
  } else if (what == "pairing-matrix") {
    emit(opt, pairing_matrix_csv());
  } else if (what == "dual-graph") {
    emit(opt, dual_graph_dot(SingularPoint::parse(point)));
  } else {
    emit_json(opt, quotient_json());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection theory workbench for the resolved mirror quintic", "mqtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--out", opt.out, "Write output to this path instead of stdout");

  QueryArgs qa;
  add_queries(app, opt, qa);
  auto* query = app.add_subcommand("query", "Catalog queries");
  query->require_subcommand(1);
  query->fallthrough();
  add_queries(*query, opt, qa);

  int status = 0;

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite,--suite", suite, "relations|ranks|pairings|gv|quotient|cone|all");
  verify->callback([&] { status = cmd_verify(opt, suite); });

  app.add_subcommand("ranks", "Exact rank report")->callback([&] { cmd_ranks(opt); });

  std::string cls;
  bool families = false;
  auto* gv_cmd = app.add_subcommand("gv", "Genus-0 invariant of a projected class");
  gv_cmd->add_option("--class", cls, "m,n")->required();
  gv_cmd->add_flag("--families", families, "Show the family decomposition");
  gv_cmd->callback([&] { cmd_gv(opt, cls, families); });

  auto* gw_cmd = app.add_subcommand("gw", "Multiple-cover sum of genus-0 invariants");
  gw_cmd->add_option("--class", cls, "m,n")->required();
  gw_cmd->callback([&] { cmd_gw(opt, cls); });

  std::string mode = "multisets";
  std::uint64_t cap = 1'000'000;
  bool list = false;
  auto* fiber = app.add_subcommand("fiber", "Generator multisets over a projected class");
  fiber->add_option("--class", cls, "m,n")->required();
  fiber->add_option("--mode", mode, "multisets|classes")->check(CLI::IsMember({"multisets", "classes"}));
  fiber->add_option("--cap", cap, "Stop after this many multisets")->check(CLI::PositiveNumber);
  fiber->add_flag("--list", list, "List the multisets (multisets mode)");
  fiber->callback([&] { cmd_fiber(opt, cls, mode, cap, list); });

  auto* quotient_cmd = app.add_subcommand("quotient", "The S5 quotient space");
  quotient_cmd->add_flag("--report", "Print the full report (default)");
  quotient_cmd->callback([&] { cmd_quotient(opt); });

  bool membership = false;
  auto* cone = app.add_subcommand("cone", "The cone tau and its dual");
  cone->add_flag("--dual", "Print the dual edges (default)");
  cone->add_flag("--membership", membership, "Add the membership check for every symbol");
  cone->callback([&] { cmd_cone(opt, membership); });

  std::string what;
  std::string point = "x,y,z";
  auto* exp = app.add_subcommand("export", "Write catalog, pairing matrix, dual graph or quotient");
  exp->add_option("what", what, "catalog|pairing-matrix|dual-graph|quotient")
      ->required()
      ->check(CLI::IsMember({"catalog", "pairing-matrix", "dual-graph", "quotient"}));
  exp->add_option("--point", point, "Singular point for dual-graph");
  exp->callback([&] { cmd_export(opt, what, point); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const LabelError& e) {
    std::cerr << "error: " << e.what() << ": '" << e.token() << "'\n";
    return 2;
  } catch (const UnsupportedClassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
