#include "mq/verify.hpp"

#include "mq/linalg.hpp"
#include "mq/s5_cone.hpp"

#include <algorithm>
#include <array>

namespace mq {

namespace {

std::string text(const std::string& s) { return s; }
std::string text(const char* s) { return s; }
std::string text(bool b) { return b ? "true" : "false"; }
std::string text(const Rational& q) { return to_string(q); }
template <typename T>
  requires std::is_integral_v<T>
std::string text(T v) {
  return std::to_string(v);
}
std::string text(const VectorX<Rational>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v(i));
  return out + ")";
}
std::string text(const ProjectedClass& c) { return c.text(); }

class Recorder {
 public:
  Recorder(VerificationReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  template <typename E, typename A>
  void equal(const std::string& name, const E& expected, const A& actual) {
    report_.checks.push_back({suite_, name, text(expected), text(actual), text(expected) == text(actual)});
  }

  void holds(const std::string& name, const std::string& expected, const std::string& actual, bool pass) {
    report_.checks.push_back({suite_, name, expected, actual, pass});
  }

 private:
  VerificationReport& report_;
  std::string suite_;
};

template <typename Pred>
std::size_t count_if_curves(std::span<const CurveSymbol> curves, Pred pred) {
  return static_cast<std::size_t>(std::count_if(curves.begin(), curves.end(), pred));
}

void relations_suite(VerificationReport& report) {
  Recorder r(report, "relations");
  const RelationSystem& sys = relation_system();
  r.equal("ruling_relations", 180, sys.ruling.size());
  r.equal("fiber_ruling_relations", 120, sys.fiber_ruling.size());
  r.equal("fiber_difference_relations", 80, sys.fiber_difference.size());
  r.equal("section_relations", 20, sys.section.size());
  r.equal("sigma_relations", 20, sys.sigma.size());

  std::size_t nonzero = 0;
  for (const auto* rel : sys.all())
    if (!realize(rel->expression).isZero()) ++nonzero;
  r.equal("relations_realizing_nonzero", 0, nonzero);

  std::size_t hexagons = 0;
  std::size_t nonzero_syzygies = 0;
  for (const auto& m : Catalog::get().divisors()) {
    if (m.support_size() != 3) continue;
    ++hexagons;
    if (!syzygy(m).is_zero()) ++nonzero_syzygies;
  }
  r.equal("syzygies", 60, hexagons);
  r.equal("nonzero_syzygies", 0, nonzero_syzygies);

  const Relation first = ruling_relation(Monomial::parse("x3yz"), Variable::z);
  auto g = [](const char* a, const char* b) { return CurveSymbol::gamma(Monomial::parse(a), Monomial::parse(b)); };
  FormalCurve displayed;
  displayed.add(g("x4y", "x3yz"), 1).add(g("x3y2", "x3yz"), 1).add(g("x3yz", "x3z2"), -1).add(g("x3yz", "x2yz2"), -1);
  r.equal("R^{xy,z}_{x3yz}", displayed.text(), first.expression.text());
}

void ranks_suite(VerificationReport& report) {
  Recorder r(report, "ranks");
  const RankReport k = rank_report();
  r.equal("ruling_rank", 120, k.ruling_rank);
  r.equal("gamma_relation_rank", 200, k.gamma_relation_rank);
  r.equal("gamma_class_rank", 100, k.gamma_class_rank);
  r.equal("class_rank", 101, k.generator_class_rank);
  r.equal("symbol_class_rank", 101, k.symbol_class_rank);
  r.equal("formal_relation_rank", 274, k.formal_relation_rank);
  r.equal("relation_plus_class_rank", k.symbol_count, k.formal_relation_rank + k.symbol_class_rank);
  r.holds("sigma_rank_increment", "<= 14", text(k.sigma_rank_increment), k.sigma_rank_increment <= 14);
}

void pairings_suite(VerificationReport& report) {
  Recorder r(report, "pairings");
  const Catalog& cat = Catalog::get();
  const DivisorCombination dx = divisor_Dt(Variable::x);
  const DivisorCombination dd = divisor_DD();
  const auto gammas = cat.curves(CurveKind::Gamma);
  const auto lines = cat.curves(CurveKind::Line);

  r.equal("Dx.gamma == 0", gammas.size(), count_if_curves(gammas, [&](const auto& c) { return pair(dx, c) == 0; }));
  r.equal("Dx.ell == 1", lines.size(), count_if_curves(lines, [&](const auto& c) { return pair(dx, c) == 1; }));
  r.equal("DD.gamma == 1", gammas.size(), count_if_curves(gammas, [&](const auto& c) { return pair(dd, c) == 1; }));
  r.equal("DD.ell == 0", lines.size(), count_if_curves(lines, [&](const auto& c) { return pair(dd, c) == 0; }));
  r.equal("D^{x,yz}.ell_x", -7, pair(local_combo(SingularPoint::parse("xyz"), Variable::x), CurveSymbol::line(Variable::x)));

  const DivisorCombination diff = divisor_Dt(Variable::v) - dx;
  r.equal("(Dv-Dx).c == 0", cat.curves().size(),
          count_if_curves(cat.curves(), [&](const auto& c) { return pair(diff, c) == 0; }));

  r.equal("project(gamma:x5,x4y)", "(1,0)", project(CurveSymbol::parse("gamma:x5,x4y")));
  r.equal("project(sec:y4z,y3z2)", "(1,3)", project(CurveSymbol::parse("sec:y4z,y3z2")));
  r.equal("project(sigma:y,z)", "(1,4)", project(CurveSymbol::parse("sigma:y,z")));
  r.equal("project(phi:y4z)", "(0,2)", project(CurveSymbol::parse("phi:y4z")));
}

void gv_suite(VerificationReport& report) {
  Recorder r(report, "gv");
  constexpr std::array<std::pair<ProjectedClass, int>, 8> expected{{
      {{0, 1}, 300}, {{0, 2}, -440}, {{1, 0}, 15}, {{1, 1}, -60},
      {{1, 2}, 155}, {{2, 0}, -30}, {{2, 1}, 150}, {{2, 2}, -500},
  }};
  for (const auto& [c, value] : expected) {
    const GVResult g = gv(c);
    r.equal("gv" + c.text(), value, g.value);
  }
  const ConfigurationCounts c = configuration_counts();
  r.equal("hexagons", 60, c.hexagons);
  r.equal("rulings", 220, c.rulings);
  r.equal("point_plane_flags", 30, c.point_plane_flags);
  r.equal("plane_point_pairs", 75, c.plane_point_pairs);
  r.equal("plane_line_pairs", 20, c.plane_line_pairs);
  r.equal("gw(0,2)", "-805/2", gw({0, 2}));
}

void quotient_suite(VerificationReport& report) {
  Recorder r(report, "quotient");
  const OrbitTable& t = orbits();
  const QuotientSpace& n = quotient();
  std::size_t gamma_orbits = 0;
  std::size_t total = 0;
  for (int k = 0; k < kOrbitCount; ++k) {
    total += t.size[k];
    if (k >= 2 && t.size[k] > 0) ++gamma_orbits;
  }
  r.equal("gamma_orbits", 6, gamma_orbits);
  r.equal("orbit_sizes_total", 315, total);
  r.equal("dim_N", 5, n.dimension);
  r.equal("collapsed_relation_rank", 3, n.relation_rank);
  r.equal("gamma_image_rank", 4, n.gamma_image_rank);
  r.equal("rho(B) == rho(E)", true, n.identified(3, 6));
  r.equal("rho(D) == rho(F)", true, n.identified(5, 7));
}

void cone_suite(VerificationReport& report) {
  Recorder r(report, "cone");
  const SimplicialCone& c = cone_tau();
  r.equal("generator_rank", 5, linalg::rank(c.generators));
  r.equal("dual_edges", 5, c.dual_edges.size());
  r.equal("invariant_kernel_dimension", 0, c.invariant_kernel_dimension);

  // Sum of D^t over t: read one coefficient per divisor orbit, divided by the ell-dual edge.
  DivisorCombination sym = DivisorCombination::Zero(kDivisorCount);
  for (Variable t : kAllVariables) sym += divisor_Dt(t);
  VectorX<Rational> ratio(5);
  for (std::size_t i = 0; i < kDivisorCount; ++i) {
    const int j = divisor_orbit(Catalog::get().divisors()[i]);
    ratio(j) = sym(static_cast<Eigen::Index>(i)) / c.dual_edges[0].orbit_coefficients(j);
  }
  r.equal("symmetrized Dx / ell-dual edge", "(5,5,5,5,5)", ratio);
  VectorX<Rational> dd(5);
  dd << 16, 12, 10, 9, 8;
  r.equal("DD pairs (0,1,1,1,1) with tau generators", "(0,1,1,1,1)", VectorX<Rational>(c.orbit_pairing * dd));

  const MoriImageReport m = mori_image_check();
  r.equal("membership_routes_agree", true, m.routes_agree);
  r.holds("generator_images_in_tau", "315/315", text(m.generators_inside) + "/" + text(m.generator_total), m.pass);
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Relations: return "relations";
    case Suite::Ranks: return "ranks";
    case Suite::Pairings: return "pairings";
    case Suite::Gv: return "gv";
    case Suite::Quotient: return "quotient";
    case Suite::Cone: return "cone";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : {Suite::Relations, Suite::Ranks, Suite::Pairings, Suite::Gv, Suite::Quotient, Suite::Cone, Suite::All})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

VerificationReport run_suite(Suite s) {
  VerificationReport report;
  auto run = [&](Suite one) {
    switch (one) {
      case Suite::Relations: relations_suite(report); break;
      case Suite::Ranks: ranks_suite(report); break;
      case Suite::Pairings: pairings_suite(report); break;
      case Suite::Gv: gv_suite(report); break;
      case Suite::Quotient: quotient_suite(report); break;
      case Suite::Cone: cone_suite(report); break;
      case Suite::All: break;
    }
  };
  if (s == Suite::All) {
    for (Suite one : {Suite::Relations, Suite::Ranks, Suite::Pairings, Suite::Gv, Suite::Quotient, Suite::Cone}) run(one);
  } else {
    run(s);
  }
  return report;
}

}  // namespace mq
