#include "mq/intersection.hpp"

#include <algorithm>
#include <array>

namespace mq {

namespace {

constexpr std::array<SelfIntersectionRule, 8> kSelfIntersections{{
    {CurveKind::Gamma, SurfaceRole::Hexagon, -1},
    {CurveKind::Gamma, SurfaceRole::EdgeOuter, -1},
    {CurveKind::Gamma, SurfaceRole::EdgeInner, -1},
    {CurveKind::Line, SurfaceRole::Plane, 1},
    {CurveKind::Line, SurfaceRole::EdgeOuter, -3},
    {CurveKind::Section, SurfaceRole::EdgeOuter, 0},
    {CurveKind::Section, SurfaceRole::EdgeInner, -2},
    {CurveKind::Sigma, SurfaceRole::EdgeInner, -1},
}};

Monomial binomial(Variable s, int a, Variable t, int b) {
  std::array<int, kVariableCount> e{};
  e[index_of(s)] += a;
  e[index_of(t)] += b;
  return Monomial::from_exponents(e);
}

Wall representative_wall(const CurveSymbol& c) {
  struct Visitor {
    Wall operator()(const GammaCurve& g) const { return g.wall; }
    Wall operator()(const SectionCurve& s) const { return s.wall; }
    Wall operator()(const LineCurve& l) const {
      const Variable t = l.s == Variable::v ? Variable::w : Variable::v;
      return Wall::make(Monomial::pure_power(l.s), binomial(l.s, 4, t, 1));
    }
    Wall operator()(const SigmaCurve& s) const {
      return Wall::make(binomial(s.s, 3, s.t, 2), binomial(s.s, 2, s.t, 3));
    }
    Wall operator()(const FiberCurve&) const { throw std::logic_error("fibers have no wall"); }
  };
  return std::visit(Visitor{}, c.payload());
}

}  // namespace

SurfaceRole surface_role(const Monomial& m) {
  const auto parts = m.partition();
  switch (parts.size()) {
    case 1: return SurfaceRole::Plane;
    case 2: return parts[0] == 4 ? SurfaceRole::EdgeOuter : SurfaceRole::EdgeInner;
    default: return SurfaceRole::Hexagon;
  }
}

std::span<const SelfIntersectionRule> self_intersection_table() { return kSelfIntersections; }

int self_intersection(const Wall& wall, const Monomial& surface) {
  if (!wall.involves(surface)) {
    throw std::domain_error(surface.text() + " does not contain wall " + wall.text());
  }
  const CurveKind kind = CurveSymbol::for_wall(wall).kind();
  const SurfaceRole role = surface_role(surface);
  for (const auto& rule : kSelfIntersections)
    if (rule.curve == kind && rule.surface == role) return rule.value;
  throw std::logic_error("no self-intersection rule for wall " + wall.text());
}

IntersectionVector wall_curve_vector(const Wall& wall) {
  const Catalog& cat = Catalog::get();
  IntersectionVector v = IntersectionVector::Zero(kDivisorCount);
  v(cat.divisor_index(wall.first)) += self_intersection(wall, wall.second);
  v(cat.divisor_index(wall.second)) += self_intersection(wall, wall.first);
  for (const auto& patch : cat.patches()) {
    const auto it = patch.completions.find(wall);
    if (it == patch.completions.end()) continue;
    for (const auto& p : it->second) v(cat.divisor_index(p)) += 1;
  }
  return v;
}

IntersectionVector curve_vector(const CurveSymbol& c) {
  const Catalog& cat = Catalog::get();
  if (!cat.contains(c)) throw std::domain_error("unknown curve symbol " + c.label());
  if (const auto* f = std::get_if<FiberCurve>(&c.payload())) {
    // A4 chain: -2 on the ruled surface, +1 on its two neighbours along the edge.
    const auto st = f->m.support().members();
    const Variable s = st[0];
    const Variable t = st[1];
    const int k = f->m.exponent(s);
    IntersectionVector v = IntersectionVector::Zero(kDivisorCount);
    v(cat.divisor_index(f->m)) = -2;
    v(cat.divisor_index(binomial(s, k + 1, t, 4 - k))) += 1;
    v(cat.divisor_index(binomial(s, k - 1, t, 6 - k))) += 1;
    return v;
  }
  return wall_curve_vector(representative_wall(c));
}

MatrixX<std::int64_t> pairing_matrix() {
  const auto& curves = Catalog::get().curves();
  MatrixX<std::int64_t> m(static_cast<Eigen::Index>(curves.size()), static_cast<Eigen::Index>(kDivisorCount));
  for (std::size_t i = 0; i < curves.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = curve_vector(curves[i]).transpose();
  return m;
}

DivisorCombination divisor_unit(const Monomial& m) {
  DivisorCombination d = DivisorCombination::Zero(kDivisorCount);
  d(Catalog::get().divisor_index(m)) = 1;
  return d;
}

DivisorCombination divisor_Dt(Variable t) {
  const auto& divisors = Catalog::get().divisors();
  DivisorCombination d(kDivisorCount);
  for (std::size_t i = 0; i < divisors.size(); ++i) d(i) = divisors[i].exponent(t);
  return d;
}

int partition_weight(const Monomial& m) {
  const auto p = m.partition();
  if (p == std::vector<int>{5}) return 16;
  if (p == std::vector<int>{4, 1}) return 12;
  if (p == std::vector<int>{3, 2}) return 10;
  if (p == std::vector<int>{3, 1, 1}) return 9;
  if (p == std::vector<int>{2, 2, 1}) return 8;
  throw std::logic_error("unexpected partition for " + m.text());
}

DivisorCombination divisor_DD() {
  const auto& divisors = Catalog::get().divisors();
  DivisorCombination d(kDivisorCount);
  for (std::size_t i = 0; i < divisors.size(); ++i) d(i) = partition_weight(divisors[i]);
  return d;
}

DivisorCombination local_combo(SingularPoint point, Variable t) {
  if (!point.triple.contains(t)) {
    throw std::domain_error(std::string("variable ") + to_char(t) + " is not in point " + point.triple.text());
  }
  const Catalog& cat = Catalog::get();
  DivisorCombination d = DivisorCombination::Zero(kDivisorCount);
  for (const auto& m : cat.patch(point).regions) d(cat.divisor_index(m)) = m.exponent(t);
  return d;
}

}  // namespace mq
