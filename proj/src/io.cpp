#include "mq/io.hpp"

#include <cstdio>
#include <sstream>

namespace mq {

Json to_json(const Rational& q) {
  if (is_integer(q)) {
    try {
      return to_int64(q);
    } catch (const std::overflow_error&) {
    }
  }
  return to_string(q);
}

Json to_json(const VectorX<Rational>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json catalog_json() {
  const Catalog& cat = Catalog::get();
  Json out;
  out["divisors"] = Json::array();
  for (const auto& m : cat.divisors()) out["divisors"].push_back(m.text());
  out["curves"] = Json::array();
  for (const auto& c : cat.curves()) out["curves"].push_back({{"kind", to_string(c.kind())}, {"label", c.label()}});
  return out;
}

std::string catalog_fingerprint() {
  static const std::string fingerprint = [] {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : catalog_json().dump()) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
  }();
  return fingerprint;
}

Json envelope(Json payload) {
  payload["tool_version"] = kToolVersion;
  payload["catalog_fingerprint"] = catalog_fingerprint();
  return payload;
}

std::string pairing_matrix_csv() {
  const Catalog& cat = Catalog::get();
  const MatrixX<std::int64_t> m = pairing_matrix();
  std::ostringstream out;
  out << "curve";
  for (const auto& d : cat.divisors()) out << ',' << d.text();
  out << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << '"' << cat.curves()[static_cast<std::size_t>(i)].label() << '"';
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << ',' << m(i, j);
    out << '\n';
  }
  return out.str();
}

std::string dual_graph_dot(SingularPoint point) {
  const LocalPatch& patch = Catalog::get().patch(point);
  std::ostringstream out;
  out << "graph patch_" << point.triple.text() << " {\n";
  for (const auto& m : patch.regions) out << "  \"" << m.text() << "\";\n";
  auto edges = [&](const std::vector<Wall>& walls, bool boundary) {
    for (const auto& w : walls)
      out << "  \"" << w.first.text() << "\" -- \"" << w.second.text() << "\" [boundary=" << (boundary ? "true" : "false")
          << "];\n";
  };
  edges(patch.interior_walls, false);
  edges(patch.boundary_walls, true);
  out << "}\n";
  return out.str();
}

Json verification_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"checks", checks}, {"passed", report.passed()}, {"failed", report.failed()}, {"pass", report.pass()}};
}

Json rank_report_json(const RankReport& r) {
  return {
      {"ruling_rank", r.ruling_rank},
      {"gamma_relation_rank", r.gamma_relation_rank},
      {"gamma_class_rank", r.gamma_class_rank},
      {"class_rank", r.generator_class_rank},
      {"symbol_class_rank", r.symbol_class_rank},
      {"formal_relation_rank", r.formal_relation_rank},
      {"sigma_rank_increment", r.sigma_rank_increment},
      {"symbol_count", r.symbol_count},
  };
}

Json gv_json(const GVResult& r, bool families) {
  Json out{{"class", {r.projected_class.m, r.projected_class.n}}, {"value", r.value}};
  if (families) {
    Json fs = Json::array();
    for (const auto& f : r.families) {
      fs.push_back({{"description", f.description},
                    {"configuration_count", f.configuration_count},
                    {"moduli", f.moduli.name},
                    {"moduli_dimension", f.moduli_dimension()},
                    {"euler_characteristic", f.euler_characteristic()},
                    {"contribution", f.contribution()}});
    }
    out["families"] = fs;
    out["notes"] = r.notes;
  }
  out["toric_only"] = r.toric_only;
  out["partial"] = false;
  return out;
}

Json gw_json(const ProjectedClass& c, const Rational& value) {
  return {{"class", {c.m, c.n}}, {"value", to_json(value)}, {"toric_only", c.m == 2}, {"partial", false}};
}

Json fiber_json(const FiberResult& r) {
  Json out{{"class", {r.target.m, r.target.n}}, {"mode", to_string(r.mode)}, {"value", r.count}, {"partial", r.partial}};
  if (!r.listing.empty()) {
    const auto& curves = Catalog::get().curves();
    Json list = Json::array();
    for (const auto& ms : r.listing) {
      Json entry = Json::array();
      for (const auto& [i, mult] : ms) entry.push_back({{"curve", curves[i].label()}, {"multiplicity", mult}});
      list.push_back(entry);
    }
    out["multisets"] = list;
  }
  return out;
}

Json quotient_json() {
  const OrbitTable& t = orbits();
  const QuotientSpace& n = quotient();
  Json orbit_list = Json::array();
  for (int k = 0; k < kOrbitCount; ++k) {
    orbit_list.push_back({{"name", kOrbitNames[k]},
                          {"representative", t.representative[k].label()},
                          {"size", t.size[k]},
                          {"rho", to_json(VectorX<Rational>(n.rho.col(k)))}});
  }
  Json basis = Json::array();
  for (int k : n.basis_orbits) basis.push_back(kOrbitNames[k]);
  Json relations = Json::array();
  for (Eigen::Index i = 0; i < n.relation_basis.rows(); ++i)
    relations.push_back(to_json(VectorX<Rational>(n.relation_basis.row(i).transpose())));
  return {{"ambient_dimension", kOrbitCount},
          {"relation_rank", n.relation_rank},
          {"dimension", n.dimension},
          {"basis", basis},
          {"collapsed_relations", relations},
          {"orbits", orbit_list},
          {"gamma_image_rank", n.gamma_image_rank},
          {"identifications", {{{"pair", {"B", "E"}}, {"holds", n.identified(3, 6)}},
                               {{"pair", {"D", "F"}}, {"holds", n.identified(5, 7)}}}}};
}

Json cone_json(bool membership) {
  const SimplicialCone& c = cone_tau();
  const QuotientSpace& n = quotient();
  Json gens = Json::array();
  for (Eigen::Index k = 0; k < c.generators.cols(); ++k)
    gens.push_back({{"orbit", kOrbitNames[n.basis_orbits[k]]}, {"coordinates", to_json(VectorX<Rational>(c.generators.col(k)))}});
  Json edges = Json::array();
  for (std::size_t k = 0; k < c.dual_edges.size(); ++k) {
    const auto& e = c.dual_edges[k];
    edges.push_back({{"dual_to", kOrbitNames[n.basis_orbits[k]]},
                     {"covector", to_json(e.covector)},
                     {"orbit_coefficients", to_json(e.orbit_coefficients)},
                     {"sign_pattern", e.sign_pattern},
                     {"effective", e.effective}});
  }
  Json pairing = Json::array();
  for (Eigen::Index i = 0; i < c.orbit_pairing.rows(); ++i)
    pairing.push_back(to_json(VectorX<Rational>(c.orbit_pairing.row(i).transpose())));
  Json out{{"generators", gens},
           {"divisor_orbits", kDivisorOrbitNames},
           {"orbit_pairing", pairing},
           {"dual_edges", edges},
           {"invariant_kernel_dimension", c.invariant_kernel_dimension}};
  if (membership) {
    const MoriImageReport m = mori_image_check();
    const auto& curves = Catalog::get().curves();
    Json rows = Json::array();
    for (const auto& r : m.rows)
      rows.push_back({{"curve", curves[r.catalog_index].label()}, {"coordinates", to_json(r.coordinates)}, {"inside", r.inside}});
    out["membership"] = {{"generators_inside", m.generators_inside},
                         {"generator_total", m.generator_total},
                         {"symbols_inside", m.symbols_inside},
                         {"routes_agree", m.routes_agree},
                         {"outside", m.outside},
                         {"pass", m.pass},
                         {"rows", rows}};
  }
  return out;
}

DivisorCombination parse_divisor_spec(std::string_view spec) {
  if (spec == "DD") return divisor_DD();
  if (spec.size() == 2 && spec[0] == 'D') {
    if (const auto t = parse_variable(spec[1])) return divisor_Dt(*t);
    throw LabelError("unknown divisor", std::string(spec));
  }
  if (spec.starts_with("local:")) {
    const std::string_view body = spec.substr(6);
    const auto at = body.find('@');
    if (at != 1) throw LabelError("local divisor must be local:<var>@<point>", std::string(spec));
    const auto t = parse_variable(body[0]);
    if (!t) throw LabelError("unknown variable", std::string(body.substr(0, 1)));
    return local_combo(SingularPoint::parse(body.substr(2)), *t);
  }
  std::string_view mono = spec;
  if (mono.starts_with("D_")) mono.remove_prefix(2);
  const Monomial m = Monomial::parse(mono);
  Catalog::get().divisor_index(m);
  return divisor_unit(m);
}

}  // namespace mq
