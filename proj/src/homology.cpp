#include "mq/homology.hpp"

#include "mq/linalg.hpp"

#include <algorithm>

namespace mq {

namespace {

Monomial binomial(Variable s, int a, Variable t, int b) {
  std::array<int, kVariableCount> e{};
  e[index_of(s)] += a;
  e[index_of(t)] += b;
  return Monomial::from_exponents(e);
}

Monomial trinomial(Variable s, int a, Variable t, int b, Variable u, int c) {
  std::array<int, kVariableCount> e{};
  e[index_of(s)] += a;
  e[index_of(t)] += b;
  e[index_of(u)] += c;
  return Monomial::from_exponents(e);
}

std::string direction_tag(VariableSet edge, Variable vertex, const Monomial& base) {
  return "R^{" + edge.text() + "," + std::string(1, to_char(vertex)) + "}_{" + base.text() + "}";
}

MatrixX<std::int64_t> stacked_vectors(std::span<const CurveSymbol> curves) {
  MatrixX<std::int64_t> m(static_cast<Eigen::Index>(curves.size()), static_cast<Eigen::Index>(kDivisorCount));
  for (std::size_t i = 0; i < curves.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = curve_vector(curves[i]).transpose();
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// FormalCurve

FormalCurve FormalCurve::of(const CurveSymbol& c, const Rational& coefficient) {
  FormalCurve f;
  f.add(c, coefficient);
  return f;
}

void FormalCurve::add_index(std::size_t i, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(i, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalCurve& FormalCurve::add(const CurveSymbol& c, const Rational& coefficient) {
  add_index(Catalog::get().curve_index(c), coefficient);
  return *this;
}

FormalCurve& FormalCurve::operator+=(const FormalCurve& other) {
  for (const auto& [i, q] : other.terms_) add_index(i, q);
  return *this;
}

FormalCurve& FormalCurve::operator-=(const FormalCurve& other) {
  for (const auto& [i, q] : other.terms_) add_index(i, -q);
  return *this;
}

FormalCurve& FormalCurve::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, q] : terms_) q *= s;
  return *this;
}

Rational FormalCurve::coefficient(const CurveSymbol& c) const {
  const auto it = terms_.find(Catalog::get().curve_index(c));
  return it == terms_.end() ? Rational(0) : it->second;
}

VectorX<Rational> FormalCurve::dense() const {
  VectorX<Rational> v = VectorX<Rational>::Zero(static_cast<Eigen::Index>(Catalog::get().curves().size()));
  for (const auto& [i, q] : terms_) v(static_cast<Eigen::Index>(i)) = q;
  return v;
}

std::string FormalCurve::text() const {
  if (terms_.empty()) return "0";
  const auto& curves = Catalog::get().curves();
  std::string out;
  for (const auto& [i, q] : terms_) {
    const bool negative = q < 0;
    const Rational magnitude = negative ? Rational(-q) : q;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude);
    out += "[" + curves[i].label() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relation families

std::string_view to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::Ruling: return "ruling";
    case RelationFamily::FiberRuling: return "fiber_ruling";
    case RelationFamily::FiberDifference: return "fiber_difference";
    case RelationFamily::Section: return "section";
    case RelationFamily::Sigma: return "sigma";
  }
  return "?";
}

Relation ruling_relation(const Monomial& hexagon, Variable vertex) {
  if (hexagon.support_size() != 3) throw std::domain_error(hexagon.text() + " is not a hexagon divisor");
  if (!hexagon.support().contains(vertex)) {
    throw std::domain_error(std::string("vertex ") + to_char(vertex) + " is not a variable of " + hexagon.text());
  }
  const VariableSet edge = hexagon.support().without(vertex);
  FormalCurve f;
  // Fibre reaching the st edge minus the fibre reaching the u vertex.
  for (Variable a : edge.members()) {
    f.add(CurveSymbol::gamma(hexagon, *hexagon.transfer(vertex, a)), 1);
    f.add(CurveSymbol::gamma(hexagon, *hexagon.transfer(a, vertex)), -1);
  }
  std::string provenance = direction_tag(edge, vertex, hexagon);
  if (edge == VariableSet{Variable::x, Variable::y} && vertex == Variable::z &&
      hexagon == trinomial(Variable::x, 2, Variable::y, 2, Variable::z, 1)) {
    provenance += " [emended labels: x^23y^3 read as x2y3, x^1y^2z read as x2y2z]";
  }
  return {std::move(f), RelationFamily::Ruling, std::move(provenance)};
}

std::vector<Relation> relations_relgamma(SingularPoint point, Variable vertex) {
  if (!point.triple.contains(vertex)) {
    throw std::domain_error(std::string("invalid split: ") + to_char(vertex) + " is not in " + point.triple.text());
  }
  std::vector<Relation> out;
  for (const auto& h : Catalog::get().patch(point).hexagons()) out.push_back(ruling_relation(h, vertex));
  return out;
}

Relation relations_relphi(const Monomial& edge_divisor, SingularPoint point) {
  if (edge_divisor.support_size() != 2) throw std::domain_error(edge_divisor.text() + " is not an edge divisor");
  if (!edge_divisor.support().is_subset_of(point.triple)) {
    throw std::domain_error("point " + point.triple.text() + " does not contain the edge of " + edge_divisor.text());
  }
  const VariableSet edge = edge_divisor.support();
  const Variable vertex = point.triple.without(edge.members()[0]).without(edge.members()[1]).members()[0];
  FormalCurve f = FormalCurve::of(CurveSymbol::fiber(edge_divisor));
  for (Variable a : edge.members()) f.add(CurveSymbol::gamma(edge_divisor, *edge_divisor.transfer(a, vertex)), -1);
  return {std::move(f), RelationFamily::FiberRuling, direction_tag(edge, vertex, edge_divisor)};
}

FormalCurve syzygy(const Monomial& hexagon) {
  if (hexagon.support_size() != 3) throw std::domain_error(hexagon.text() + " is not a hexagon divisor");
  FormalCurve total;
  for (Variable u : hexagon.support().members()) total += ruling_relation(hexagon, u).expression;
  return total;
}

std::vector<Relation> relations_section_sigma(SingularEdge edge) {
  std::vector<Relation> out;
  const auto st = edge.pair.members();
  for (auto [s, t] : {std::pair{st[0], st[1]}, std::pair{st[1], st[0]}}) {
    const auto others = edge.pair.complement().members();
    const std::string dir = std::string(1, to_char(s)) + "->" + to_char(t);

    // sec(s^4t, s^3t^2) = ell_s + sum_u gamma(s^4u, s^4t)
    FormalCurve section = FormalCurve::of(CurveSymbol::line(s));
    for (Variable u : others) section.add(CurveSymbol::gamma(binomial(s, 4, u, 1), binomial(s, 4, t, 1)), 1);
    FormalCurve sigma = section;
    const CurveSymbol sec = CurveSymbol::section(binomial(s, 4, t, 1), binomial(s, 3, t, 2));
    section.add(sec, -1);
    out.push_back({std::move(section), RelationFamily::Section, "section " + dir + ": " + sec.label()});

    // sigma_{s,t} = ell_s + sum_u gamma(s^4u, s^4t) + sum_{u != u*} gamma(s^3tu, s^3t^2)
    //               - gamma(s^2t^2u*, s^3t^2), singling out u* = the last remaining variable.
    const Monomial inner = binomial(s, 3, t, 2);
    for (std::size_t k = 0; k + 1 < others.size(); ++k)
      sigma.add(CurveSymbol::gamma(trinomial(s, 3, t, 1, others[k], 1), inner), 1);
    sigma.add(CurveSymbol::gamma(trinomial(s, 2, t, 2, others.back(), 1), inner), -1);
    sigma.add(CurveSymbol::sigma(s, t), -1);
    out.push_back({std::move(sigma), RelationFamily::Sigma,
                   "sigma " + dir + ": singled out " + std::string(1, to_char(others.back()))});
  }
  return out;
}

DivisorVector<Rational> realize(const FormalCurve& f) {
  const auto& curves = Catalog::get().curves();
  DivisorVector<Rational> v = DivisorVector<Rational>::Zero(kDivisorCount);
  for (const auto& [i, q] : f.terms()) {
    const IntersectionVector c = curve_vector(curves[i]);
    for (Eigen::Index j = 0; j < c.size(); ++j)
      if (c(j) != 0) v(j) += q * Rational(c(j));
  }
  return v;
}

// ---------------------------------------------------------------------------
// System and ranks

std::vector<const Relation*> RelationSystem::all() const {
  std::vector<const Relation*> out;
  for (const auto* family : {&ruling, &fiber_ruling, &fiber_difference, &section, &sigma})
    for (const auto& r : *family) out.push_back(&r);
  return out;
}

const RelationSystem& relation_system() {
  static const RelationSystem system = [] {
    RelationSystem s;
    const auto points = all_singular_points();
    for (const auto& p : points)
      for (Variable u : p.triple.members())
        for (auto& r : relations_relgamma(p, u)) s.ruling.push_back(std::move(r));
    for (const auto& m : Catalog::get().divisors()) {
      if (m.support_size() != 2) continue;
      std::vector<Relation> local;
      for (const auto& p : points)
        if (m.support().is_subset_of(p.triple)) local.push_back(relations_relphi(m, p));
      for (std::size_t k = 1; k < local.size(); ++k) {
        s.fiber_difference.push_back({local[0].expression - local[k].expression, RelationFamily::FiberDifference,
                                      local[0].provenance + " - " + local[k].provenance});
      }
      for (auto& r : local) s.fiber_ruling.push_back(std::move(r));
    }
    for (const auto& e : all_singular_edges()) {
      for (auto& r : relations_section_sigma(e)) {
        (r.family == RelationFamily::Section ? s.section : s.sigma).push_back(std::move(r));
      }
    }
    return s;
  }();
  return system;
}

MatrixX<Rational> relation_matrix(const std::vector<const Relation*>& relations,
                                  std::span<const CurveSymbol> columns) {
  const Catalog& cat = Catalog::get();
  std::vector<Eigen::Index> column_of(cat.curves().size(), -1);
  for (std::size_t j = 0; j < columns.size(); ++j) column_of[cat.curve_index(columns[j])] = static_cast<Eigen::Index>(j);
  MatrixX<Rational> m = MatrixX<Rational>::Zero(static_cast<Eigen::Index>(relations.size()),
                                                static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (const auto& [k, q] : relations[i]->expression.terms()) {
      if (column_of[k] < 0) {
        throw std::invalid_argument("relation " + relations[i]->provenance + " involves " + cat.curves()[k].label() +
                                    " outside the requested columns");
      }
      m(static_cast<Eigen::Index>(i), column_of[k]) = q;
    }
  }
  return m;
}

RankReport rank_report() {
  const Catalog& cat = Catalog::get();
  const RelationSystem& sys = relation_system();
  auto pointers = [](const std::vector<Relation>& v) {
    std::vector<const Relation*> out;
    for (const auto& r : v) out.push_back(&r);
    return out;
  };

  RankReport report{};
  const auto gammas = cat.curves(CurveKind::Gamma);
  report.ruling_rank = linalg::rank(relation_matrix(pointers(sys.ruling), gammas));

  auto gamma_relations = pointers(sys.ruling);
  for (const auto& r : sys.fiber_difference) gamma_relations.push_back(&r);
  report.gamma_relation_rank = linalg::rank(relation_matrix(gamma_relations, gammas));

  report.gamma_class_rank = linalg::rank(stacked_vectors(gammas));
  report.generator_class_rank = linalg::rank(stacked_vectors(cat.generators()));
  report.symbol_class_rank = linalg::rank(stacked_vectors(cat.curves()));

  const auto all = sys.all();
  report.formal_relation_rank = linalg::rank(relation_matrix(all, cat.curves()));
  std::vector<const Relation*> without_sigma;
  for (const auto* r : all)
    if (r->family != RelationFamily::Sigma) without_sigma.push_back(r);
  report.sigma_rank_increment = report.formal_relation_rank - linalg::rank(relation_matrix(without_sigma, cat.curves()));
  report.symbol_count = cat.curves().size();
  return report;
}

}  // namespace mq
