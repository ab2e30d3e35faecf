#pragma once

// The projection onto the (ell, gamma) plane, fibres of the projection over
// the 315 generators, genus-0 invariants by family decomposition, and the
// multiple-cover conversion to Gromov-Witten numbers.

#include "mq/homology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mq {

/// Image of a class under pi: m * ell + n * gamma.
struct ProjectedClass {
  std::int64_t m = 0;
  std::int64_t n = 0;

  /// "m,n" or "(m,n)".
  static ProjectedClass parse(std::string_view text);
  std::string text() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

  friend bool operator==(const ProjectedClass&, const ProjectedClass&) = default;
  friend auto operator<=>(const ProjectedClass&, const ProjectedClass&) = default;
};

/// (pair with D^x, pair with DD); throws std::domain_error if either is not integral.
ProjectedClass project(const DivisorVector<Rational>& v);
ProjectedClass project(const IntersectionVector& v);
ProjectedClass project(const CurveSymbol& c);

// ---------------------------------------------------------------------------
// Fibres of pi over the generators

enum class FiberMode : std::uint8_t { Multisets, Classes };

std::string_view to_string(FiberMode mode);
std::optional<FiberMode> parse_fiber_mode(std::string_view text);

struct FiberOptions {
  ProjectedClass target;
  FiberMode mode = FiberMode::Multisets;
  std::uint64_t cap = 1'000'000;
  bool list = false;  // keep the enumerated multisets (multisets mode)
};

/// One multiset of generators: (catalog index, multiplicity), indices ascending.
using GeneratorMultiset = std::vector<std::pair<std::size_t, int>>;

struct FiberResult {
  ProjectedClass target;
  FiberMode mode = FiberMode::Multisets;
  std::uint64_t count = 0;  // multisets, or distinct classes in classes mode
  bool partial = false;     // the cap was reached before the search finished
  std::vector<GeneratorMultiset> listing;
};

/// Generators grouped by their computed projection, in first-appearance order.
struct ProjectionBlock {
  ProjectedClass projection;
  std::vector<std::size_t> generators;  // catalog indices
};

std::vector<ProjectionBlock> generator_blocks();

/// Multisets of the 315 generators whose projections sum to the target. In
/// multisets mode the count is assembled from block multiplicities and the cap
/// bounds the number counted; in classes mode every multiset is visited, the
/// realized vectors are deduplicated, and the cap bounds the number visited.
/// A negative target gives an empty, complete result.
FiberResult enumerate_fiber(const FiberOptions& options);

// ---------------------------------------------------------------------------
// Genus-0 invariants

/// Moduli of one family of curves: only dimension and Euler characteristic matter.
struct ModuliSpace {
  std::string name;
  int dimension = 0;
  std::int64_t euler = 1;

  static ModuliSpace point() { return {"pt", 0, 1}; }
  static ModuliSpace projective_space(int n);
  /// Blowup at one point: e grows by e(P^{d-1}) - 1.
  static ModuliSpace blowup_at_point(const ModuliSpace& base);
  /// Locally trivial bundle: dimensions add, Euler characteristics multiply.
  static ModuliSpace bundle(const ModuliSpace& fiber, const ModuliSpace& base);
};

struct ContributionFamily {
  std::string description;
  std::int64_t configuration_count = 0;
  ModuliSpace moduli;

  int moduli_dimension() const { return moduli.dimension; }
  std::int64_t euler_characteristic() const { return moduli.euler; }
  /// count * (-1)^dim * e
  std::int64_t contribution() const;
};

struct GVResult {
  ProjectedClass projected_class;
  std::int64_t value = 0;
  std::vector<ContributionFamily> families;
  bool toric_only = false;
  std::vector<std::string> notes;
};

class UnsupportedClassError : public std::domain_error {
 public:
  explicit UnsupportedClassError(const ProjectedClass& c)
      : std::domain_error("no family decomposition for class " + c.text()), target_(c) {}
  const ProjectedClass& target() const { return target_; }

 private:
  ProjectedClass target_;
};

/// Counting inputs read off the catalog.
struct ConfigurationCounts {
  std::int64_t gamma_curves;       // 300
  std::int64_t hexagons;           // 60
  std::int64_t hexagon_rulings;    // 180, three per hexagon
  std::int64_t edge_rulings;       // 40
  std::int64_t rulings;            // 220
  std::int64_t planes;             // 5
  std::int64_t points_per_plane;   // 6
  std::int64_t planes_per_point;   // 3
  std::int64_t lines_per_plane;    // 4
  std::int64_t plane_point_pairs;  // 75
  std::int64_t point_plane_flags;  // 30
  std::int64_t plane_line_pairs;   // 20
};

ConfigurationCounts configuration_counts();

/// Distinct ruling classes of one hexagon divisor: sums of the two gamma walls
/// bounding each triangle at the hexagon, deduplicated by realized vector.
std::vector<IntersectionVector> hexagon_ruling_classes(const Monomial& hexagon);

std::vector<ProjectedClass> supported_gv_classes();
/// Throws UnsupportedClassError outside supported_gv_classes().
GVResult gv(const ProjectedClass& target);
/// sum over k | gcd(m,n) of gv(m/k, n/k) / k^3; throws UnsupportedClassError when
/// any needed class is unsupported.
Rational gw(const ProjectedClass& target);

}  // namespace mq
