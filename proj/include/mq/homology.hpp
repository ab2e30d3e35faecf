#pragma once

// Formal curve combinations over the 375 catalog symbols, the relation
// families cut out by the rulings and sections of the exceptional surfaces,
// and the exact rank counts of the resulting system.

#include "mq/intersection.hpp"

#include <map>
#include <string>
#include <vector>

namespace mq {

/// Finitely supported exact-rational combination of curve symbols.
class FormalCurve {
 public:
  FormalCurve() = default;
  static FormalCurve of(const CurveSymbol& c, const Rational& coefficient = 1);

  FormalCurve& add(const CurveSymbol& c, const Rational& coefficient);
  FormalCurve& operator+=(const FormalCurve& other);
  FormalCurve& operator-=(const FormalCurve& other);
  FormalCurve& operator*=(const Rational& s);
  friend FormalCurve operator+(FormalCurve a, const FormalCurve& b) { return a += b; }
  friend FormalCurve operator-(FormalCurve a, const FormalCurve& b) { return a -= b; }
  friend FormalCurve operator*(const Rational& s, FormalCurve a) { return a *= s; }

  Rational coefficient(const CurveSymbol& c) const;
  bool is_zero() const { return terms_.empty(); }
  /// Catalog index -> nonzero coefficient.
  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  /// Coefficients in catalog order (length 375).
  VectorX<Rational> dense() const;
  std::string text() const;

  friend bool operator==(const FormalCurve&, const FormalCurve&) = default;

 private:
  void add_index(std::size_t i, const Rational& coefficient);
  std::map<std::size_t, Rational> terms_;
};

enum class RelationFamily : std::uint8_t {
  Ruling,          // two singular fibres of a ruling on a hexagon divisor
  FiberRuling,     // ruling fibre of an edge divisor vs a degenerate fibre in one patch
  FiberDifference, // difference of two FiberRuling relations on one edge divisor
  Section,         // section of the outer edge divisor through ell and gammas
  Sigma,           // middle section through ell and gammas
};

std::string_view to_string(RelationFamily f);

/// expression == 0 in homology.
struct Relation {
  FormalCurve expression;
  RelationFamily family;
  std::string provenance;
};

/// The ruling relation R^{st,u}_h on hexagon h, for the ruling running from the
/// st edge to the u vertex of the patch containing h.
Relation ruling_relation(const Monomial& hexagon, Variable vertex);
/// Six ruling relations over `point` in direction (st, u); throws std::domain_error
/// if `vertex` is not a variable of the point.
std::vector<Relation> relations_relgamma(SingularPoint point, Variable vertex);
/// phi_m minus the two gamma components of its degenerate fibre over `point`;
/// throws std::domain_error unless m is an edge divisor on an edge of the point.
Relation relations_relphi(const Monomial& edge_divisor, SingularPoint point);
/// Sum of the three ruling relations of a hexagon; throws std::domain_error otherwise.
FormalCurve syzygy(const Monomial& hexagon);
/// For each direction s -> t of the edge: the section relation and the sigma relation.
std::vector<Relation> relations_section_sigma(SingularEdge edge);

/// Linear extension of curve_vector.
DivisorVector<Rational> realize(const FormalCurve& f);

/// Every generated relation, grouped by family.
struct RelationSystem {
  std::vector<Relation> ruling;            // 180
  std::vector<Relation> fiber_ruling;      // 120
  std::vector<Relation> fiber_difference;  // 80
  std::vector<Relation> section;           // 20
  std::vector<Relation> sigma;             // 20

  std::vector<const Relation*> all() const;
};

const RelationSystem& relation_system();

/// Rows = relations, columns = the given symbols' coefficients.
MatrixX<Rational> relation_matrix(const std::vector<const Relation*>& relations,
                                  std::span<const CurveSymbol> columns);

struct RankReport {
  Eigen::Index ruling_rank;           // ruling relations on gamma symbols
  Eigen::Index gamma_relation_rank;   // ruling + fibre differences on gamma symbols
  Eigen::Index gamma_class_rank;      // span of the 300 gamma vectors
  Eigen::Index generator_class_rank;  // span of the 315 generator vectors
  Eigen::Index symbol_class_rank;     // span of all 375 symbol vectors
  Eigen::Index formal_relation_rank;  // all relations over all 375 symbols
  Eigen::Index sigma_rank_increment;  // rank added by the sigma relations
  std::size_t symbol_count;
};

RankReport rank_report();

}  // namespace mq
