#pragma once

// Combinatorial skeleton of the resolved mirror quintic: the five Batyrev
// coordinates, the 105 divisor monomials, the ten singular points and edges,
// the triangulated local patch over each point, and the curve catalog.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace mq {

inline constexpr int kVariableCount = 5;
inline constexpr int kDegree = 5;
inline constexpr std::size_t kDivisorCount = 105;

enum class Variable : std::uint8_t { v = 0, w, x, y, z };

inline constexpr std::array<Variable, kVariableCount> kAllVariables{
    Variable::v, Variable::w, Variable::x, Variable::y, Variable::z};

constexpr int index_of(Variable s) { return static_cast<int>(s); }
char to_char(Variable s);
std::optional<Variable> parse_variable(char c);

/// Malformed curve, divisor or variable label; `token()` is the offending text.
class LabelError : public std::invalid_argument {
 public:
  LabelError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// Subset of {v,w,x,y,z}.
class VariableSet {
 public:
  constexpr VariableSet() = default;
  VariableSet(std::initializer_list<Variable> vars);
  static VariableSet from_bits(std::uint8_t bits) {
    VariableSet s;
    s.bits_ = bits & 0x1F;
    return s;
  }
  static VariableSet parse(std::string_view text);  // "xyz", commas allowed

  bool contains(Variable s) const { return bits_ >> index_of(s) & 1U; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  VariableSet with(Variable s) const { return from_bits(bits_ | 1U << index_of(s)); }
  VariableSet without(Variable s) const { return from_bits(bits_ & ~(1U << index_of(s))); }
  bool is_subset_of(VariableSet other) const { return (bits_ & ~other.bits_) == 0; }
  VariableSet complement() const { return from_bits(~bits_ & 0x1F); }
  std::vector<Variable> members() const;
  std::uint8_t bits() const { return bits_; }
  std::string text() const;

  friend bool operator==(VariableSet, VariableSet) = default;
  // Orders by member list lexicographically, e.g. vwx < vwy < ... < xyz.
  friend std::strong_ordering operator<=>(VariableSet a, VariableSet b);

 private:
  std::uint8_t bits_ = 0;
};

/// Degree-5 monomial in v,w,x,y,z with support of size 1..3: a divisor label.
/// Ordering is ascending lexicographic on the exponent 5-tuple.
class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, kVariableCount>;

  static Monomial from_exponents(const std::array<int, kVariableCount>& e);
  static Monomial pure_power(Variable s);
  /// Parses `([vwxyz][1-5]?)+`, e.g. "x3yz".
  static Monomial parse(std::string_view text);

  int exponent(Variable s) const { return exponents_[index_of(s)]; }
  const Exponents& exponents() const { return exponents_; }
  VariableSet support() const;
  int support_size() const { return support().size(); }
  /// Nonzero exponents in decreasing order: the partition of 5 the monomial determines.
  std::vector<int> partition() const;
  /// Moves one unit of exponent from `from` to `to`; nullopt if that is not a divisor label.
  std::optional<Monomial> transfer(Variable from, Variable to) const;
  std::string text() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  explicit Monomial(const Exponents& e) : exponents_(e) {}
  Exponents exponents_{};
};

struct SingularPoint {
  VariableSet triple;

  static SingularPoint make(VariableSet s);
  static SingularPoint parse(std::string_view text) { return make(VariableSet::parse(text)); }
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
  friend auto operator<=>(const SingularPoint&, const SingularPoint&) = default;
};

struct SingularEdge {
  VariableSet pair;

  static SingularEdge make(VariableSet s);
  friend bool operator==(const SingularEdge&, const SingularEdge&) = default;
  friend auto operator<=>(const SingularEdge&, const SingularEdge&) = default;
};

std::vector<SingularPoint> all_singular_points();
std::vector<SingularEdge> all_singular_edges();

/// Unordered pair of adjacent divisor labels; `first` is the lexicographically larger.
struct Wall {
  Monomial first;
  Monomial second;

  static Wall make(const Monomial& a, const Monomial& b);
  /// True when both labels lie on one singular edge (a non-compact wall in every patch).
  bool on_edge() const;
  bool involves(const Monomial& m) const { return first == m || second == m; }
  const Monomial& other(const Monomial& m) const { return first == m ? second : first; }
  std::string text() const { return first.text() + "," + second.text(); }

  friend bool operator==(const Wall&, const Wall&) = default;
  friend auto operator<=>(const Wall&, const Wall&) = default;
};

/// The triangulated dilated simplex over one singular point.
struct LocalPatch {
  SingularPoint point;
  std::vector<Monomial> regions;  // 21, canonical order
  std::vector<Wall> interior_walls;  // 30
  std::vector<Wall> boundary_walls;  // 15
  std::map<Wall, std::vector<Monomial>> completions;  // wall -> third regions

  bool contains(const Wall& w) const { return completions.contains(w); }
  bool contains(const Monomial& m) const;
  /// Support-3 regions, the hexagons of the dual graph.
  std::vector<Monomial> hexagons() const;
};

std::vector<Monomial> enumerate_divisors();
LocalPatch build_patch(SingularPoint point);
/// Regions completing the triangles on either side of `wall`; throws std::domain_error
/// if the wall does not belong to the patch.
std::vector<Monomial> third_regions(const LocalPatch& patch, const Wall& wall);

// ---------------------------------------------------------------------------
// Curve symbols

enum class CurveKind : std::uint8_t { Gamma, Line, Sigma, Fiber, Section };

inline constexpr std::array<CurveKind, 5> kAllCurveKinds{
    CurveKind::Gamma, CurveKind::Line, CurveKind::Sigma, CurveKind::Fiber, CurveKind::Section};

std::string_view to_string(CurveKind k);
std::optional<CurveKind> parse_curve_kind(std::string_view text);

struct GammaCurve {
  Wall wall;  // interior wall of exactly one patch
  friend auto operator<=>(const GammaCurve&, const GammaCurve&) = default;
};
struct LineCurve {
  Variable s;
  friend auto operator<=>(const LineCurve&, const LineCurve&) = default;
};
struct SigmaCurve {
  Variable s;  // s < t
  Variable t;
  friend auto operator<=>(const SigmaCurve&, const SigmaCurve&) = default;
};
struct FiberCurve {
  Monomial m;  // support 2
  friend auto operator<=>(const FiberCurve&, const FiberCurve&) = default;
};
struct SectionCurve {
  Wall wall;  // (s^4 t, s^3 t^2)
  friend auto operator<=>(const SectionCurve&, const SectionCurve&) = default;
};

class CurveSymbol {
 public:
  using Payload = std::variant<GammaCurve, LineCurve, SigmaCurve, FiberCurve, SectionCurve>;

  template <typename T>
    requires std::is_constructible_v<Payload, T&&>
  CurveSymbol(T&& alternative) : payload_(std::forward<T>(alternative)) {}  // NOLINT(google-explicit-constructor)

  static CurveSymbol gamma(const Monomial& a, const Monomial& b);
  static CurveSymbol line(Variable s) { return LineCurve{s}; }
  static CurveSymbol sigma(Variable s, Variable t);
  static CurveSymbol fiber(const Monomial& m);
  static CurveSymbol section(const Monomial& a, const Monomial& b);
  /// The symbol realized by a wall curve: gamma for interior walls, otherwise the
  /// ell, section or sigma the edge wall represents.
  static CurveSymbol for_wall(const Wall& w);
  /// Label grammar: gamma:<mon>,<mon> | ell:<var> | sigma:<var>,<var> | phi:<mon> |
  /// sec:<mon>,<mon>. A gamma label naming an edge wall resolves to that wall's symbol.
  static CurveSymbol parse(std::string_view label);

  CurveKind kind() const { return static_cast<CurveKind>(payload_.index()); }
  const Payload& payload() const { return payload_; }
  std::string label() const;
  /// Whether this is one of the 315 distinguished generators (gamma, ell, sigma).
  bool is_generator() const;

  friend bool operator==(const CurveSymbol&, const CurveSymbol&) = default;
  friend auto operator<=>(const CurveSymbol&, const CurveSymbol&) = default;

 private:
  Payload payload_;
};

/// A wall of a specific patch.
struct WallSite {
  SingularPoint point;
  Wall wall;
};

/// Immutable catalog of divisors, patches and curve symbols, built once.
class Catalog {
 public:
  static const Catalog& get();

  const std::vector<Monomial>& divisors() const { return divisors_; }
  /// Column index of a divisor label; throws std::domain_error for non-labels.
  std::size_t divisor_index(const Monomial& m) const;

  const std::vector<LocalPatch>& patches() const { return patches_; }
  const LocalPatch& patch(SingularPoint p) const;

  /// All 375 symbols grouped by kind (gamma, ell, sigma, phi, sec).
  const std::vector<CurveSymbol>& curves() const { return curves_; }
  std::span<const CurveSymbol> curves(CurveKind k) const;
  /// The 315 generators: the gamma, ell and sigma blocks.
  std::span<const CurveSymbol> generators() const;
  std::size_t curve_index(const CurveSymbol& c) const;
  bool contains(const CurveSymbol& c) const { return curve_index_.contains(c); }

  /// Every patch wall realizing the symbol (empty for fibers).
  std::vector<WallSite> representatives(const CurveSymbol& c) const;

 private:
  Catalog();

  std::vector<Monomial> divisors_;
  std::vector<int> divisor_lookup_;  // base-6 exponent code -> index or -1
  std::vector<LocalPatch> patches_;
  std::vector<CurveSymbol> curves_;
  std::array<std::size_t, 6> kind_offsets_{};
  std::map<CurveSymbol, std::size_t> curve_index_;
};

/// All 375 curve symbols in catalog order.
std::vector<CurveSymbol> enumerate_curve_symbols();

}  // namespace mq
