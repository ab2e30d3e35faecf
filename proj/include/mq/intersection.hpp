#pragma once

// Numerical classes of curves as pairings with the 105 divisors, and the
// special divisor combinations D^t, the weighted divisor DD, and the local
// combinations over a singular point.

#include "mq/rational.hpp"
#include "mq/toric_model.hpp"

#include <cstdint>

namespace mq {

/// Any vector indexed by the canonical divisor order.
template <typename Scalar>
using DivisorVector = VectorX<Scalar>;

/// Pairings of one curve with every divisor label.
using IntersectionVector = DivisorVector<std::int64_t>;
/// Exact-rational coefficients on every divisor label.
using DivisorCombination = DivisorVector<Rational>;

/// Which surface a wall curve is measured in.
enum class SurfaceRole : std::uint8_t {
  Plane,      // D_{s^5}
  EdgeOuter,  // D_{s^4 t}
  EdgeInner,  // D_{s^3 t^2}
  Hexagon,    // support 3
};

SurfaceRole surface_role(const Monomial& m);

/// Self-intersection of a wall curve inside one of its two containing surfaces.
struct SelfIntersectionRule {
  CurveKind curve;
  SurfaceRole surface;
  int value;
};

/// Every (curve kind, surface role) combination that occurs for wall curves.
std::span<const SelfIntersectionRule> self_intersection_table();

/// (C^2) inside `surface`, where C is the wall curve and `surface` one of its two labels.
int self_intersection(const Wall& wall, const Monomial& surface);

/// Pairing vector of the curve cut out by one wall: C.D_a = (C^2 in D_b),
/// C.D_b = (C^2 in D_a), +1 on every third region over every patch holding the wall.
IntersectionVector wall_curve_vector(const Wall& wall);

/// Numerical class of a catalog symbol; throws std::domain_error for unknown symbols.
IntersectionVector curve_vector(const CurveSymbol& c);

/// Rows: catalog curves in order; columns: divisors in canonical order.
MatrixX<std::int64_t> pairing_matrix();

DivisorCombination divisor_unit(const Monomial& m);
/// D^t: coefficient of D_m is the exponent of t in m.
DivisorCombination divisor_Dt(Variable t);
/// The weight a(m), which depends only on the partition of 5 given by m.
int partition_weight(const Monomial& m);
/// DD = sum a(m) D_m.
DivisorCombination divisor_DD();
/// D^{t, rest}: exponent of t on the 21 regions of the patch over `point`;
/// throws std::domain_error when t is not one of the point's variables.
DivisorCombination local_combo(SingularPoint point, Variable t);

/// Dot product in the canonical divisor index.
template <typename DerivedD, typename DerivedC>
Rational pair(const Eigen::MatrixBase<DerivedD>& divisor, const Eigen::MatrixBase<DerivedC>& curve) {
  if (divisor.size() != curve.size()) throw std::invalid_argument("pair: length mismatch");
  Rational total = 0;
  for (Eigen::Index i = 0; i < divisor.size(); ++i) {
    if (divisor(i) == 0 || curve(i) == 0) continue;
    total += Rational(divisor(i)) * Rational(curve(i));
  }
  return total;
}

inline Rational pair(const DivisorCombination& divisor, const CurveSymbol& c) {
  return pair(divisor, curve_vector(c));
}

}  // namespace mq
