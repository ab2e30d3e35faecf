#include "mq/s5_cone.hpp"

#include "mq/linalg.hpp"

#include <algorithm>
#include <map>

namespace mq {

namespace {

Monomial mono(std::string_view text) { return Monomial::parse(text); }

CurveSymbol canonical(const CurveSymbol& c) {
  CurveSymbol best = c;
  for (const auto& p : all_permutations()) best = std::min(best, act(p, c));
  return best;
}

VectorX<Rational> unit(int k, Eigen::Index size = kOrbitCount) {
  VectorX<Rational> e = VectorX<Rational>::Zero(size);
  e(k) = 1;
  return e;
}

/// The relation used to eliminate each fibre and section symbol.
std::map<std::size_t, const Relation*> defining_relations() {
  const RelationSystem& sys = relation_system();
  const Catalog& cat = Catalog::get();
  std::map<std::size_t, const Relation*> out;
  // The first fibre relation of each edge divisor comes from its first patch.
  for (const auto& r : sys.fiber_ruling)
    for (const auto& [i, q] : r.expression.terms())
      if (cat.curves()[i].kind() == CurveKind::Fiber) out.try_emplace(i, &r);
  for (const auto& r : sys.section)
    for (const auto& [i, q] : r.expression.terms())
      if (cat.curves()[i].kind() == CurveKind::Section) out.try_emplace(i, &r);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation() : images_(kAllVariables) {}

Permutation Permutation::from_images(const std::array<Variable, kVariableCount>& images) {
  std::array<bool, kVariableCount> seen{};
  for (Variable s : images) {
    if (seen[index_of(s)]) throw std::invalid_argument("not a permutation");
    seen[index_of(s)] = true;
  }
  Permutation p;
  p.images_ = images;
  return p;
}

Permutation Permutation::transposition(Variable a, Variable b) {
  auto images = kAllVariables;
  std::swap(images[index_of(a)], images[index_of(b)]);
  return from_images(images);
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::array<Variable, kVariableCount> images{};
  for (Variable s : kAllVariables) images[index_of(s)] = p(q(s));
  return Permutation::from_images(images);
}

Permutation Permutation::inverse() const {
  std::array<Variable, kVariableCount> images{};
  for (Variable s : kAllVariables) images[index_of((*this)(s))] = s;
  return from_images(images);
}

std::string Permutation::text() const {
  std::string out;
  for (Variable s : images_) out += to_char(s);
  return out;
}

const std::vector<Permutation>& all_permutations() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    auto images = kAllVariables;
    do {
      out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return perms;
}

Monomial act(const Permutation& p, const Monomial& m) {
  std::array<int, kVariableCount> e{};
  for (Variable s : kAllVariables) e[index_of(p(s))] = m.exponent(s);
  return Monomial::from_exponents(e);
}

Wall act(const Permutation& p, const Wall& w) { return Wall::make(act(p, w.first), act(p, w.second)); }

CurveSymbol act(const Permutation& p, const CurveSymbol& c) {
  struct Visitor {
    const Permutation& p;
    CurveSymbol operator()(const GammaCurve& g) const { return GammaCurve{act(p, g.wall)}; }
    CurveSymbol operator()(const LineCurve& l) const { return CurveSymbol::line(p(l.s)); }
    CurveSymbol operator()(const SigmaCurve& s) const { return CurveSymbol::sigma(p(s.s), p(s.t)); }
    CurveSymbol operator()(const FiberCurve& f) const { return CurveSymbol::fiber(act(p, f.m)); }
    CurveSymbol operator()(const SectionCurve& s) const { return SectionCurve{act(p, s.wall)}; }
  };
  return std::visit(Visitor{p}, c.payload());
}

// ---------------------------------------------------------------------------
// Orbits

int OrbitTable::orbit(const CurveSymbol& generator) const {
  const std::size_t i = Catalog::get().curve_index(generator);
  if (i >= orbit_of.size()) throw std::domain_error(generator.label() + " is not a generator");
  return orbit_of[i];
}

const OrbitTable& orbits() {
  static const OrbitTable table = [] {
    OrbitTable t;
    t.representative = {
        CurveSymbol::line(Variable::x),
        CurveSymbol::sigma(Variable::x, Variable::y),
        CurveSymbol::gamma(mono("x4y"), mono("x4z")),
        CurveSymbol::gamma(mono("x4y"), mono("x3yz")),
        CurveSymbol::gamma(mono("x3y2"), mono("x3yz")),
        CurveSymbol::gamma(mono("x3y2"), mono("x2y2z")),
        CurveSymbol::gamma(mono("x3yz"), mono("x2y2z")),
        CurveSymbol::gamma(mono("x2yz2"), mono("x2y2z")),
    };
    std::map<CurveSymbol, int> id;
    for (int k = 0; k < kOrbitCount; ++k) {
      if (!id.emplace(canonical(t.representative[k]), k).second)
        throw std::logic_error("orbit representatives are not distinct");
    }
    for (const auto& g : Catalog::get().generators()) {
      const auto it = id.find(canonical(g));
      if (it == id.end()) throw std::logic_error("generator " + g.label() + " has no listed orbit");
      t.orbit_of.push_back(it->second);
      ++t.size[it->second];
    }
    return t;
  }();
  return table;
}

VectorX<Rational> collapse(const CurveSymbol& c) {
  if (c.is_generator()) return unit(orbits().orbit(c));
  static const auto defining = defining_relations();
  const std::size_t i = Catalog::get().curve_index(c);
  const Relation* r = defining.at(i);
  const Rational q = r->expression.terms().at(i);
  FormalCurve rest = r->expression;
  rest.add(c, -q);
  // q c + rest = 0
  return collapse(rest) * Rational(-1 / q);
}

VectorX<Rational> collapse(const FormalCurve& f) {
  const auto& curves = Catalog::get().curves();
  VectorX<Rational> w = VectorX<Rational>::Zero(kOrbitCount);
  for (const auto& [i, q] : f.terms()) w += collapse(curves[i]) * q;
  return w;
}

// ---------------------------------------------------------------------------
// Quotient

const QuotientSpace& quotient() {
  static const QuotientSpace space = [] {
    QuotientSpace n;
    const auto relations = relation_system().all();
    MatrixX<Rational> collapsed(static_cast<Eigen::Index>(relations.size()), kOrbitCount);
    for (std::size_t i = 0; i < relations.size(); ++i)
      collapsed.row(static_cast<Eigen::Index>(i)) = collapse(relations[i]->expression).transpose();
    const linalg::Echelon e = linalg::reduced_row_echelon(collapsed);
    n.relation_basis = e.rows;
    n.relation_rank = e.rows.rows();
    n.dimension = kOrbitCount - n.relation_rank;

    const Eigen::Index b = static_cast<Eigen::Index>(n.basis_orbits.size());
    if (n.dimension != b) {
      throw std::logic_error("quotient has dimension " + std::to_string(n.dimension) + ", basis has " + std::to_string(b));
    }
    // Columns: the chosen basis of W/R followed by a basis of R.
    MatrixX<Rational> frame(kOrbitCount, kOrbitCount);
    for (Eigen::Index k = 0; k < b; ++k) frame.col(k) = unit(n.basis_orbits[k]);
    frame.rightCols(n.relation_rank) = n.relation_basis.transpose();
    const auto inv = linalg::inverse(frame);
    if (!inv) throw std::logic_error("chosen orbits do not form a basis of the quotient");
    n.coordinate_map = inv->topRows(b);

    n.rho = n.coordinate_map;  // rho of orbit k is column k
    n.gamma_image_rank = linalg::rank(n.rho.rightCols(6));
    return n;
  }();
  return space;
}

// ---------------------------------------------------------------------------
// Cone

int divisor_orbit(const Monomial& m) {
  const auto p = m.partition();
  if (p == std::vector<int>{5}) return 0;
  if (p == std::vector<int>{4, 1}) return 1;
  if (p == std::vector<int>{3, 2}) return 2;
  if (p == std::vector<int>{3, 1, 1}) return 3;
  return 4;
}

DivisorCombination invariant_divisor(const VectorX<Rational>& orbit_coefficients) {
  if (orbit_coefficients.size() != 5) throw std::invalid_argument("need five divisor-orbit coefficients");
  const auto& divisors = Catalog::get().divisors();
  DivisorCombination d(kDivisorCount);
  for (std::size_t i = 0; i < divisors.size(); ++i) d(i) = orbit_coefficients(divisor_orbit(divisors[i]));
  return d;
}

const SimplicialCone& cone_tau() {
  static const SimplicialCone cone = [] {
    const QuotientSpace& n = quotient();
    const OrbitTable& t = orbits();
    SimplicialCone c;
    const Eigen::Index d = n.dimension;
    c.generators.resize(d, d);
    for (Eigen::Index k = 0; k < d; ++k) c.generators.col(k) = n.rho.col(n.basis_orbits[k]);
    const auto dual = linalg::inverse(c.generators);
    if (!dual) throw std::logic_error("tau generator matrix is singular");
    c.dual = *dual;

    c.orbit_pairing.resize(d, 5);
    for (Eigen::Index i = 0; i < d; ++i) {
      const IntersectionVector g = curve_vector(t.representative[n.basis_orbits[i]]);
      for (int j = 0; j < 5; ++j) c.orbit_pairing(i, j) = pair(invariant_divisor(unit(j, 5)), g);
    }
    c.invariant_kernel_dimension = 5 - linalg::rank(c.orbit_pairing);
    const auto p_inv = linalg::inverse(c.orbit_pairing);
    if (!p_inv) throw std::logic_error("divisor-orbit pairing is singular");

    for (Eigen::Index k = 0; k < d; ++k) {
      DualEdge e;
      e.covector = c.dual.row(k).transpose();
      e.orbit_coefficients = p_inv->col(k);
      e.effective = true;
      for (Eigen::Index j = 0; j < e.orbit_coefficients.size(); ++j) {
        const Rational& q = e.orbit_coefficients(j);
        e.sign_pattern += q > 0 ? '+' : q < 0 ? '-' : '0';
        if (q < 0) e.effective = false;
      }
      c.dual_edges.push_back(std::move(e));
    }
    return c;
  }();
  return cone;
}

MoriImageReport mori_image_check() {
  const Catalog& cat = Catalog::get();
  const QuotientSpace& n = quotient();
  const SimplicialCone& cone = cone_tau();
  std::vector<DivisorCombination> dual_divisors;
  for (const auto& e : cone.dual_edges) dual_divisors.push_back(invariant_divisor(e.orbit_coefficients));

  MoriImageReport report;
  const auto& curves = cat.curves();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    MembershipRow row;
    row.catalog_index = i;
    row.coordinates = cone.coordinates(n.coordinates(curves[i]));
    const IntersectionVector v = curve_vector(curves[i]);
    row.paired_coordinates.resize(static_cast<Eigen::Index>(dual_divisors.size()));
    for (std::size_t k = 0; k < dual_divisors.size(); ++k)
      row.paired_coordinates(static_cast<Eigen::Index>(k)) = pair(dual_divisors[k], v);
    if (row.coordinates != row.paired_coordinates) report.routes_agree = false;
    row.inside = std::all_of(row.coordinates.begin(), row.coordinates.end(), [](const Rational& q) { return q >= 0; });
    if (row.inside) ++report.symbols_inside;
    if (curves[i].is_generator()) {
      ++report.generator_total;
      if (row.inside) {
        ++report.generators_inside;
      } else {
        report.outside.push_back(curves[i].label());
      }
    }
    report.rows.push_back(std::move(row));
  }
  report.pass = report.generators_inside == report.generator_total;
  return report;
}

}  // namespace mq
