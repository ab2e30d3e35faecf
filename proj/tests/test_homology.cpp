#include "mq/homology.hpp"

#include "mq/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace mq;

namespace {

Monomial mono(const char* s) { return Monomial::parse(s); }
CurveSymbol gamma(const char* a, const char* b) { return CurveSymbol::gamma(mono(a), mono(b)); }

std::vector<const Relation*> pointers(const std::vector<Relation>& v) {
  std::vector<const Relation*> out;
  for (const auto& r : v) out.push_back(&r);
  return out;
}

}  // namespace

TEST_CASE("formal curve arithmetic") {
  const FormalCurve a = FormalCurve::of(gamma("x4y", "x4z"));
  const FormalCurve b = FormalCurve::of(CurveSymbol::line(Variable::x), Rational(1, 2));
  FormalCurve c = a + b;
  CHECK(c.coefficient(CurveSymbol::line(Variable::x)) == Rational(1, 2));
  c -= a;
  CHECK(c == b);
  CHECK((c - b).is_zero());
  CHECK((Rational(0) * a).is_zero());
  CHECK((Rational(2) * b).coefficient(CurveSymbol::line(Variable::x)) == 1);
  CHECK(FormalCurve().text() == "0");
  CHECK(realize(a) == linalg::to_rational(curve_vector(gamma("x4y", "x4z"))));
}

TEST_CASE("first displayed ruling relation") {
  const auto rels = relations_relgamma(SingularPoint::parse("xyz"), Variable::z);
  CHECK(rels.size() == 6);
  const Relation r = ruling_relation(mono("x3yz"), Variable::z);
  FormalCurve want;
  want.add(gamma("x4y", "x3yz"), 1).add(gamma("x3y2", "x3yz"), 1);
  want.add(gamma("x3yz", "x3z2"), -1).add(gamma("x3yz", "x2yz2"), -1);
  CHECK(r.expression == want);
  CHECK(r.provenance == "R^{xy,z}_{x3yz}");
  CHECK(std::any_of(rels.begin(), rels.end(), [&](const Relation& x) { return x.expression == want; }));
  CHECK_THROWS_AS(relations_relgamma(SingularPoint::parse("xyz"), Variable::v), std::domain_error);
}

TEST_CASE("emended relation carries a note") {
  const Relation r = ruling_relation(mono("x2y2z"), Variable::z);
  CHECK(r.provenance.find("x2y3") != std::string::npos);
  CHECK(r.expression.coefficient(gamma("x2y3", "x2y2z")) == 1);
}

TEST_CASE("fibre relations") {
  const Relation r = relations_relphi(mono("x4y"), SingularPoint::parse("xyz"));
  FormalCurve want = FormalCurve::of(CurveSymbol::fiber(mono("x4y")));
  want.add(gamma("x4y", "x4z"), -1).add(gamma("x4y", "x3yz"), -1);
  CHECK(r.expression == want);
  CHECK_THROWS_AS(relations_relphi(mono("x4y"), SingularPoint::parse("vwz")), std::domain_error);
  CHECK_THROWS_AS(relations_relphi(mono("x3yz"), SingularPoint::parse("xyz")), std::domain_error);
}

TEST_CASE("section and sigma relations on the yz edge") {
  const auto rels = relations_section_sigma(SingularEdge::make(VariableSet::parse("yz")));
  REQUIRE(rels.size() == 4);
  const Relation& section = rels[0];
  CHECK(section.family == RelationFamily::Section);
  FormalCurve want = FormalCurve::of(CurveSymbol::line(Variable::y));
  want.add(gamma("vy4", "y4z"), 1).add(gamma("wy4", "y4z"), 1).add(gamma("xy4", "y4z"), 1);
  want.add(CurveSymbol::section(mono("y4z"), mono("y3z2")), -1);
  CHECK(section.expression == want);

  const Relation& sigma = rels[1];
  CHECK(sigma.family == RelationFamily::Sigma);
  int negative_gammas = 0;
  for (const auto& [i, q] : sigma.expression.terms())
    if (Catalog::get().curves()[i].kind() == CurveKind::Gamma && q < 0) ++negative_gammas;
  CHECK(negative_gammas == 1);
  CHECK(sigma.expression.coefficient(gamma("xy2z2", "y3z2")) == -1);
  CHECK(sigma.expression.coefficient(CurveSymbol::sigma(Variable::y, Variable::z)) == -1);
}

TEST_CASE("relation system sizes and realizations") {
  const RelationSystem& sys = relation_system();
  CHECK(sys.ruling.size() == 180);
  CHECK(sys.fiber_ruling.size() == 120);
  CHECK(sys.fiber_difference.size() == 80);
  CHECK(sys.section.size() == 20);
  CHECK(sys.sigma.size() == 20);
  for (const auto* r : sys.all()) {
    INFO(r->provenance);
    CHECK(realize(r->expression).isZero());
  }
}

TEST_CASE("syzygies cancel on every hexagon") {
  int hexagons = 0;
  for (const auto& m : Catalog::get().divisors()) {
    if (m.support_size() != 3) continue;
    ++hexagons;
    CHECK(syzygy(m).is_zero());
  }
  CHECK(hexagons == 60);
  CHECK_THROWS_AS(syzygy(mono("x4y")), std::domain_error);
}

TEST_CASE("ranks agree with two independent oracles") {
  const Catalog& cat = Catalog::get();
  const RelationSystem& sys = relation_system();
  const auto gammas = cat.curves(CurveKind::Gamma);

  const auto ruling = relation_matrix(pointers(sys.ruling), gammas);
  CHECK(oracle::rank_mod_p(ruling) == 120);
  CHECK(oracle::rank_rational(ruling) == 120);

  auto gamma_rel = pointers(sys.ruling);
  for (const auto& r : sys.fiber_difference) gamma_rel.push_back(&r);
  const auto gm = relation_matrix(gamma_rel, gammas);
  CHECK(oracle::rank_mod_p(gm) == 200);

  const auto differences = relation_matrix(pointers(sys.fiber_difference), gammas);
  CHECK(oracle::rank_mod_p(differences) == 80);

  const auto all = relation_matrix(sys.all(), cat.curves());
  CHECK(oracle::rank_mod_p(all) == 274);
  CHECK(oracle::rank_rational(all) == 274);

  const MatrixX<std::int64_t> pm = pairing_matrix();
  CHECK(oracle::rank_mod_p(pm.topRows(300)) == 100);
  CHECK(oracle::rank_mod_p(pm.topRows(315)) == 101);
  CHECK(oracle::rank_rational(pm) == 101);

  const RankReport report = rank_report();
  CHECK(report.ruling_rank == 120);
  CHECK(report.gamma_relation_rank == 200);
  CHECK(report.gamma_class_rank == 100);
  CHECK(report.generator_class_rank == 101);
  CHECK(report.symbol_class_rank == 101);
  CHECK(report.formal_relation_rank == 274);
  CHECK(report.sigma_rank_increment == 14);
  CHECK(report.formal_relation_rank + report.symbol_class_rank == 375);
}

TEST_CASE("relation_matrix rejects symbols outside the columns") {
  const RelationSystem& sys = relation_system();
  CHECK_THROWS_AS(relation_matrix(pointers(sys.fiber_ruling), Catalog::get().curves(CurveKind::Gamma)),
                  std::invalid_argument);
}
