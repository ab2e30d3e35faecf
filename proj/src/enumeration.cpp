#include "mq/enumeration.hpp"

#include "mq/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace mq {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw LabelError("malformed class", std::string(whole));
  return value;
}

bool fits(const ProjectedClass& p, const ProjectedClass& remaining) {
  return p.m <= remaining.m && p.n <= remaining.n;
}

ProjectedClass minus(const ProjectedClass& a, const ProjectedClass& b) { return {a.m - b.m, a.n - b.n}; }

/// C(n + k - 1, k), saturating at UINT64_MAX.
std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n + i - 1) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? UINT64_MAX : out;
}

class FiberSearch {
 public:
  FiberSearch(const FiberOptions& options, FiberResult& result)
      : options_(options), result_(result), blocks_(generator_blocks()) {}

  void run() {
    if (options_.mode == FiberMode::Multisets) {
      std::vector<std::uint64_t> k(blocks_.size(), 0);
      block_solutions(0, options_.target, k);
    } else {
      const auto& curves = Catalog::get().curves();
      for (const auto& b : blocks_)
        for (std::size_t i : b.generators) flat_.push_back({i, b.projection, curve_vector(curves[i])});
      visit(0, options_.target, IntersectionVector::Zero(kDivisorCount));
      result_.count = classes_.size();
    }
  }

 private:
  struct Flat {
    std::size_t index;
    ProjectedClass projection;
    IntersectionVector vector;
  };

  bool stopped() const { return result_.partial; }

  // Multisets mode: choose a total multiplicity per block, then count or expand.
  void block_solutions(std::size_t j, const ProjectedClass& remaining, std::vector<std::uint64_t>& k) {
    if (stopped()) return;
    if (j == blocks_.size()) {
      if (remaining != ProjectedClass{}) return;
      std::uint64_t n = 1;
      for (std::size_t b = 0; b < blocks_.size(); ++b) n = saturating_mul(n, multichoose(blocks_[b].generators.size(), k[b]));
      if (options_.list) {
        GeneratorMultiset current;
        expand(0, k, 0, k[0], current);
      } else if (n > options_.cap - result_.count) {
        result_.count = options_.cap;
        result_.partial = true;
      } else {
        result_.count += n;
      }
      return;
    }
    const ProjectedClass p = blocks_[j].projection;
    ProjectedClass rest = remaining;
    for (std::uint64_t c = 0;; ++c) {
      k[j] = c;
      block_solutions(j + 1, rest, k);
      if (!fits(p, rest)) break;
      rest = minus(rest, p);
    }
    k[j] = 0;
  }

  // Expands block multiplicities into explicit multisets, block by block;
  // `left` is what block b still has to place, starting at generator `from`.
  void expand(std::size_t b, const std::vector<std::uint64_t>& k, std::size_t from, std::uint64_t left,
              GeneratorMultiset& current) {
    if (stopped()) return;
    if (left == 0) {
      if (b + 1 < blocks_.size()) {
        expand(b + 1, k, 0, k[b + 1], current);
        return;
      }
      if (result_.count == options_.cap) {
        result_.partial = true;
        return;
      }
      GeneratorMultiset sorted = current;
      std::sort(sorted.begin(), sorted.end());
      result_.listing.push_back(std::move(sorted));
      ++result_.count;
      return;
    }
    const auto& gens = blocks_[b].generators;
    for (std::size_t i = from; i < gens.size(); ++i) {
      for (std::uint64_t mult = 1; mult <= left; ++mult) {
        current.emplace_back(gens[i], static_cast<int>(mult));
        expand(b, k, i + 1, left - mult, current);
        current.pop_back();
        if (stopped()) return;
      }
    }
  }

  // Classes mode: every multiset, tracking its realized vector.
  void visit(std::size_t from, const ProjectedClass& remaining, const IntersectionVector& v) {
    if (stopped()) return;
    if (remaining == ProjectedClass{}) {
      if (visited_ == options_.cap) {
        result_.partial = true;
        return;
      }
      ++visited_;
      classes_.insert(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
      return;
    }
    for (std::size_t i = from; i < flat_.size(); ++i) {
      if (!fits(flat_[i].projection, remaining)) continue;
      visit(i, minus(remaining, flat_[i].projection), v + flat_[i].vector);
      if (stopped()) return;
    }
  }

  const FiberOptions& options_;
  FiberResult& result_;
  std::vector<ProjectionBlock> blocks_;
  std::vector<Flat> flat_;
  std::uint64_t visited_ = 0;
  std::set<std::vector<std::int64_t>> classes_;
};

std::int64_t count_kind(CurveKind k) { return static_cast<std::int64_t>(Catalog::get().curves(k).size()); }

std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

// ---------------------------------------------------------------------------
// Projection

ProjectedClass ProjectedClass::parse(std::string_view text) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw LabelError("class must be m,n", std::string(text));
  return {parse_int(body.substr(0, comma), text), parse_int(body.substr(comma + 1), text)};
}

ProjectedClass project(const DivisorVector<Rational>& v) {
  static const DivisorCombination dx = divisor_Dt(Variable::x);
  static const DivisorCombination dd = divisor_DD();
  return {to_int64(pair(dx, v)), to_int64(pair(dd, v))};
}

ProjectedClass project(const IntersectionVector& v) { return project(DivisorVector<Rational>(linalg::to_rational(v))); }

ProjectedClass project(const CurveSymbol& c) { return project(curve_vector(c)); }

// ---------------------------------------------------------------------------
// Fibres

std::string_view to_string(FiberMode mode) { return mode == FiberMode::Multisets ? "multisets" : "classes"; }

std::optional<FiberMode> parse_fiber_mode(std::string_view text) {
  if (text == "multisets") return FiberMode::Multisets;
  if (text == "classes") return FiberMode::Classes;
  return std::nullopt;
}

std::vector<ProjectionBlock> generator_blocks() {
  const Catalog& cat = Catalog::get();
  std::vector<ProjectionBlock> blocks;
  for (const auto& g : cat.generators()) {
    const ProjectedClass p = project(g);
    if (p == ProjectedClass{} || p.m < 0 || p.n < 0) {
      throw std::logic_error("generator " + g.label() + " projects to " + p.text());
    }
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) { return b.projection == p; });
    if (it == blocks.end()) it = blocks.insert(blocks.end(), {p, {}});
    it->generators.push_back(cat.curve_index(g));
  }
  return blocks;
}

FiberResult enumerate_fiber(const FiberOptions& options) {
  if (options.cap == 0) throw std::invalid_argument("fiber cap must be positive");
  FiberResult result;
  result.target = options.target;
  result.mode = options.mode;
  if (options.target.m < 0 || options.target.n < 0) return result;
  FiberSearch(options, result).run();
  return result;
}

// ---------------------------------------------------------------------------
// Families

ModuliSpace ModuliSpace::projective_space(int n) {
  if (n < 0) throw std::invalid_argument("negative projective dimension");
  return {n == 0 ? "pt" : "P" + std::to_string(n), n, n + 1};
}

ModuliSpace ModuliSpace::blowup_at_point(const ModuliSpace& base) {
  if (base.dimension < 1) throw std::invalid_argument("cannot blow up a point");
  return {"Bl_pt " + base.name, base.dimension, base.euler + base.dimension - 1};
}

ModuliSpace ModuliSpace::bundle(const ModuliSpace& fiber, const ModuliSpace& base) {
  return {fiber.name + "-bundle over " + base.name, fiber.dimension + base.dimension, fiber.euler * base.euler};
}

std::int64_t ContributionFamily::contribution() const {
  const std::int64_t sign = moduli.dimension % 2 == 0 ? 1 : -1;
  return configuration_count * sign * moduli.euler;
}

std::vector<IntersectionVector> hexagon_ruling_classes(const Monomial& hexagon) {
  if (hexagon.support_size() != 3) throw std::domain_error(hexagon.text() + " is not a hexagon divisor");
  const Catalog& cat = Catalog::get();
  const LocalPatch& patch = cat.patch(SingularPoint::make(hexagon.support()));
  std::vector<IntersectionVector> out;
  for (const auto& wall : patch.interior_walls) {
    if (!wall.involves(hexagon)) continue;
    const Monomial& n = wall.other(hexagon);
    for (const auto& p : patch.completions.at(wall)) {
      const IntersectionVector v = curve_vector(CurveSymbol::gamma(hexagon, n)) + curve_vector(CurveSymbol::gamma(hexagon, p));
      if (std::none_of(out.begin(), out.end(), [&](const auto& w) { return w == v; })) out.push_back(v);
    }
  }
  return out;
}

ConfigurationCounts configuration_counts() {
  static const ConfigurationCounts counts = [] {
    const Catalog& cat = Catalog::get();
    ConfigurationCounts c{};
    c.gamma_curves = count_kind(CurveKind::Gamma);
    c.hexagons = 0;
    c.hexagon_rulings = 0;
    for (const auto& m : cat.divisors()) {
      if (m.support_size() != 3) continue;
      ++c.hexagons;
      c.hexagon_rulings += static_cast<std::int64_t>(hexagon_ruling_classes(m).size());
    }
    c.edge_rulings = count_kind(CurveKind::Fiber);
    c.rulings = c.hexagon_rulings + c.edge_rulings;
    c.planes = std::count_if(cat.divisors().begin(), cat.divisors().end(), [](const auto& m) { return m.support_size() == 1; });
    const auto points = all_singular_points();
    const auto edges = all_singular_edges();
    c.points_per_plane = std::count_if(points.begin(), points.end(), [](const auto& p) { return p.triple.contains(Variable::x); });
    c.planes_per_point = points.front().triple.size();
    c.lines_per_plane = std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.pair.contains(Variable::x); });
    c.plane_point_pairs = c.planes * binomial2(c.points_per_plane);
    c.point_plane_flags = static_cast<std::int64_t>(points.size()) * c.planes_per_point;
    c.plane_line_pairs = c.planes * c.lines_per_plane;
    return c;
  }();
  return counts;
}

std::vector<ProjectedClass> supported_gv_classes() {
  return {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
}

GVResult gv(const ProjectedClass& target) {
  const auto supported = supported_gv_classes();
  if (std::find(supported.begin(), supported.end(), target) == supported.end()) throw UnsupportedClassError(target);

  const ConfigurationCounts c = configuration_counts();
  using M = ModuliSpace;
  GVResult r;
  r.projected_class = target;
  auto family = [&](std::string description, std::int64_t count, ModuliSpace moduli) {
    r.families.push_back({std::move(description), count, std::move(moduli)});
  };

  switch (target.m * 10 + target.n) {
    case 1:
      family("rigid gamma curves", c.gamma_curves, M::point());
      break;
    case 2:
      family("pencils of ruling fibres on hexagon divisors (3 per hexagon)", c.hexagon_rulings, M::projective_space(1));
      family("pencils of ruling fibres on edge divisors", c.edge_rulings, M::projective_space(1));
      break;
    case 10:
      family("lines in a plane divisor", c.planes, M::projective_space(2));
      break;
    case 11:
      family("line through a singular point of a plane, glued to the gamma curve there", c.point_plane_flags, M::projective_space(1));
      break;
    case 12:
      family("line through two singular points of a plane", c.plane_point_pairs, M::point());
      family("line in a plane glued to the edge fibre through a point of a singular line", c.plane_line_pairs,
             M::blowup_at_point(M::projective_space(2)));
      r.notes.push_back("a line class meets the gamma curves only at singular points of its plane");
      break;
    case 20:
      family("conics in a plane divisor", c.planes, M::projective_space(5));
      break;
    case 21:
      family("conics through a singular point of a plane", c.point_plane_flags, M::projective_space(4));
      break;
    case 22:
      family("conics through two singular points of a plane", c.plane_point_pairs, M::projective_space(3));
      family("conic in a plane glued to the edge fibre through a point of a singular line", c.plane_line_pairs,
             M::bundle(M::projective_space(4), M::projective_space(1)));
      break;
  }
  for (const auto& f : r.families) r.value += f.contribution();
  r.toric_only = target.m == 2;
  if (r.toric_only) r.notes.push_back("degree 2: only curves supported on the toric boundary are counted");
  return r;
}

Rational gw(const ProjectedClass& target) {
  if (target.m < 0 || target.n < 0 || target == ProjectedClass{}) throw UnsupportedClassError(target);
  const std::int64_t g = std::gcd(target.m, target.n);
  Rational total = 0;
  for (std::int64_t k = 1; k <= g; ++k) {
    if (g % k != 0) continue;
    const GVResult sub = gv({target.m / k, target.n / k});
    total += Rational(sub.value) / Rational(k * k * k);
  }
  return total;
}

}  // namespace mq
