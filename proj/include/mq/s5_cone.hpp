#pragma once

// The S5 action permuting v,w,x,y,z, the orbit space W of the generators, the
// five-dimensional quotient N, the simplicial cone tau with its dual, and the
// generator-level membership check.

#include "mq/enumeration.hpp"

#include <array>
#include <string>
#include <vector>

namespace mq {

/// A bijection of {v,w,x,y,z}; image[i] is the image of variable i.
class Permutation {
 public:
  Permutation();  // identity
  static Permutation from_images(const std::array<Variable, kVariableCount>& images);
  static Permutation transposition(Variable a, Variable b);

  Variable operator()(Variable s) const { return images_[index_of(s)]; }
  /// (p * q)(s) = p(q(s))
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  Permutation inverse() const;
  std::string text() const;  // images of vwxyz, e.g. "vwzyx"

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<Variable, kVariableCount> images_;
};

/// All 120 permutations, lexicographic by image word.
const std::vector<Permutation>& all_permutations();

Monomial act(const Permutation& p, const Monomial& m);
Wall act(const Permutation& p, const Wall& w);
CurveSymbol act(const Permutation& p, const CurveSymbol& c);

// ---------------------------------------------------------------------------
// Orbits

/// Coordinates of W: ell, sigma, then the six gamma orbits A..F.
inline constexpr int kOrbitCount = 8;
inline constexpr std::array<const char*, kOrbitCount> kOrbitNames{"ell", "sigma", "A", "B", "C", "D", "E", "F"};

struct OrbitTable {
  std::vector<int> orbit_of;                      // per generator, catalog order (315)
  std::vector<CurveSymbol> representative;  // one per orbit id
  std::array<std::size_t, kOrbitCount> size{};

  int orbit(const CurveSymbol& generator) const;
};

/// Representatives with (s,t,u) = (x,y,z): ell_x, sigma_{x,y}, gamma(x4y,x4z),
/// gamma(x4y,x3yz), gamma(x3y2,x3yz), gamma(x3y2,x2y2z), gamma(x3yz,x2y2z),
/// gamma(x2yz2,x2y2z).
const OrbitTable& orbits();

/// Image of any catalog symbol in W. Fibres and sections go through their
/// defining relations (phi over its first patch, the section relation).
VectorX<Rational> collapse(const CurveSymbol& c);
VectorX<Rational> collapse(const FormalCurve& f);

// ---------------------------------------------------------------------------
// Quotient N = W / collapsed relations

struct QuotientSpace {
  MatrixX<Rational> relation_basis;  // rows spanning the collapsed relations, reduced echelon
  Eigen::Index relation_rank = 0;
  Eigen::Index dimension = 0;
  /// Orbit basis elements whose images form the basis of N: ell, A, B, C, D.
  std::array<int, 5> basis_orbits{0, 2, 3, 4, 5};
  /// Column k: rho of orbit k in the basis of N (5 x 8).
  MatrixX<Rational> rho;
  /// W -> N in the chosen basis (5 x 8).
  MatrixX<Rational> coordinate_map;
  Eigen::Index gamma_image_rank = 0;

  /// rho of a vector in W, or of a catalog symbol.
  VectorX<Rational> coordinates(const VectorX<Rational>& w) const { return coordinate_map * w; }
  VectorX<Rational> coordinates(const CurveSymbol& c) const { return coordinates(collapse(c)); }
  bool identified(int orbit_a, int orbit_b) const { return rho.col(orbit_a) == rho.col(orbit_b); }
};

const QuotientSpace& quotient();

// ---------------------------------------------------------------------------
// The cone tau and its dual

/// Divisor orbit sums by partition: {5}, {4,1}, {3,2}, {3,1,1}, {2,2,1}.
inline constexpr std::array<const char*, 5> kDivisorOrbitNames{"5", "41", "32", "311", "221"};
int divisor_orbit(const Monomial& m);
/// S5-invariant combination with the given coefficient on each divisor orbit.
DivisorCombination invariant_divisor(const VectorX<Rational>& orbit_coefficients);

struct DualEdge {
  VectorX<Rational> covector;           // in coordinates dual to the basis of N
  VectorX<Rational> orbit_coefficients; // as an invariant divisor, per divisor orbit
  std::string sign_pattern;             // one of '+', '-', '0' per divisor orbit
  bool effective = false;               // all orbit coefficients >= 0
};

struct SimplicialCone {
  MatrixX<Rational> generators;  // columns: rho(ell), rho(A), rho(B), rho(C), rho(D)
  MatrixX<Rational> dual;        // rows: dual covectors, dual * generators = I
  /// pairing(i, j) = divisor orbit j . generator i
  MatrixX<Rational> orbit_pairing;
  std::vector<DualEdge> dual_edges;
  /// Dimension of the invariant divisor combinations pairing to zero with all generators.
  Eigen::Index invariant_kernel_dimension = 0;

  /// Simplicial coordinates of a point of N.
  VectorX<Rational> coordinates(const VectorX<Rational>& point) const { return dual * point; }
};

/// Throws std::logic_error if the generator matrix or the orbit pairing is singular.
const SimplicialCone& cone_tau();

struct MembershipRow {
  std::size_t catalog_index;
  VectorX<Rational> coordinates;        // from the quotient
  VectorX<Rational> paired_coordinates; // from pairing with the dual-edge divisors
  bool inside = false;
};

struct MoriImageReport {
  std::vector<MembershipRow> rows;  // all 375 symbols
  std::size_t generators_inside = 0;
  std::size_t generator_total = 0;
  std::size_t symbols_inside = 0;
  bool routes_agree = true;
  bool pass = false;  // every generator image lies in tau
  std::vector<std::string> outside;  // labels of generators outside tau
};

MoriImageReport mori_image_check();

}  // namespace mq
