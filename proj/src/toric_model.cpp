#include "mq/toric_model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mq {

namespace {

constexpr std::string_view kVariableChars = "vwxyz";

int exponent_code(const Monomial::Exponents& e) {
  int code = 0;
  for (int i = kVariableCount - 1; i >= 0; --i) code = code * 6 + e[i];
  return code;
}

bool adjacent(const Monomial& a, const Monomial& b) {
  int distance = 0;
  for (Variable s : kAllVariables) distance += std::abs(a.exponent(s) - b.exponent(s));
  return distance == 2;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

char to_char(Variable s) { return kVariableChars[index_of(s)]; }

std::optional<Variable> parse_variable(char c) {
  const auto pos = kVariableChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Variable>(pos);
}

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::initializer_list<Variable> vars) {
  for (Variable s : vars) bits_ |= 1U << index_of(s);
}

VariableSet VariableSet::parse(std::string_view text) {
  VariableSet out;
  for (char c : text) {
    if (c == ',') continue;
    const auto s = parse_variable(c);
    if (!s) throw LabelError("unknown variable '" + std::string(1, c) + "'", std::string(text));
    if (out.contains(*s)) throw LabelError("repeated variable", std::string(text));
    out = out.with(*s);
  }
  return out;
}

int VariableSet::size() const { return std::popcount(bits_); }

std::vector<Variable> VariableSet::members() const {
  std::vector<Variable> out;
  for (Variable s : kAllVariables)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string VariableSet::text() const {
  std::string out;
  for (Variable s : members()) out += to_char(s);
  return out;
}

std::strong_ordering operator<=>(VariableSet a, VariableSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(const std::array<int, kVariableCount>& e) {
  Exponents out{};
  int total = 0;
  int support = 0;
  for (int i = 0; i < kVariableCount; ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
    out[i] = static_cast<std::uint8_t>(e[i]);
    total += e[i];
    support += e[i] > 0;
  }
  if (total != kDegree) throw std::invalid_argument("monomial degree must be 5");
  if (support > 3) throw std::invalid_argument("monomial support must be at most 3");
  return Monomial(out);
}

Monomial Monomial::pure_power(Variable s) {
  Exponents e{};
  e[index_of(s)] = kDegree;
  return Monomial(e);
}

Monomial Monomial::parse(std::string_view text) {
  std::array<int, kVariableCount> e{};
  VariableSet seen;
  std::size_t i = 0;
  if (text.empty()) throw LabelError("empty monomial", std::string(text));
  while (i < text.size()) {
    const auto s = parse_variable(text[i]);
    if (!s || seen.contains(*s)) throw LabelError("malformed monomial", std::string(text));
    seen = seen.with(*s);
    ++i;
    int power = 1;
    if (i < text.size() && text[i] >= '1' && text[i] <= '5') {
      power = text[i] - '0';
      ++i;
    }
    e[index_of(*s)] = power;
  }
  try {
    return from_exponents(e);
  } catch (const std::invalid_argument& err) {
    throw LabelError(err.what(), std::string(text));
  }
}

VariableSet Monomial::support() const {
  VariableSet out;
  for (Variable s : kAllVariables)
    if (exponent(s) > 0) out = out.with(s);
  return out;
}

std::vector<int> Monomial::partition() const {
  std::vector<int> parts;
  for (auto e : exponents_)
    if (e > 0) parts.push_back(e);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::optional<Monomial> Monomial::transfer(Variable from, Variable to) const {
  if (from == to || exponent(from) == 0) return std::nullopt;
  Exponents e = exponents_;
  --e[index_of(from)];
  ++e[index_of(to)];
  Monomial out(e);
  if (out.support_size() > 3) return std::nullopt;
  return out;
}

std::string Monomial::text() const {
  std::string out;
  for (Variable s : kAllVariables) {
    const int e = exponent(s);
    if (e == 0) continue;
    out += to_char(s);
    if (e > 1) out += static_cast<char>('0' + e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Points, edges, walls

SingularPoint SingularPoint::make(VariableSet s) {
  if (s.size() != 3) throw LabelError("a singular point needs three variables", s.text());
  return {s};
}

SingularEdge SingularEdge::make(VariableSet s) {
  if (s.size() != 2) throw LabelError("a singular edge needs two variables", s.text());
  return {s};
}

std::vector<SingularPoint> all_singular_points() {
  std::vector<SingularPoint> out;
  for (unsigned bits = 0; bits < 32; ++bits) {
    const auto s = VariableSet::from_bits(static_cast<std::uint8_t>(bits));
    if (s.size() == 3) out.push_back({s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SingularEdge> all_singular_edges() {
  std::vector<SingularEdge> out;
  for (unsigned bits = 0; bits < 32; ++bits) {
    const auto s = VariableSet::from_bits(static_cast<std::uint8_t>(bits));
    if (s.size() == 2) out.push_back({s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Wall Wall::make(const Monomial& a, const Monomial& b) {
  if (!adjacent(a, b)) throw LabelError("labels are not adjacent", a.text() + "," + b.text());
  const VariableSet span = VariableSet::from_bits(a.support().bits() | b.support().bits());
  if (span.size() > 3) throw LabelError("labels share no patch", a.text() + "," + b.text());
  return a < b ? Wall{b, a} : Wall{a, b};
}

bool Wall::on_edge() const {
  return VariableSet::from_bits(first.support().bits() | second.support().bits()).size() == 2;
}

bool LocalPatch::contains(const Monomial& m) const {
  return std::binary_search(regions.begin(), regions.end(), m);
}

std::vector<Monomial> LocalPatch::hexagons() const {
  std::vector<Monomial> out;
  for (const auto& m : regions)
    if (m.support_size() == 3) out.push_back(m);
  return out;
}

std::vector<Monomial> enumerate_divisors() {
  std::vector<Monomial> out;
  std::array<int, kVariableCount> e{};
  for (e[0] = 0; e[0] <= kDegree; ++e[0])
    for (e[1] = 0; e[0] + e[1] <= kDegree; ++e[1])
      for (e[2] = 0; e[0] + e[1] + e[2] <= kDegree; ++e[2])
        for (e[3] = 0; e[0] + e[1] + e[2] + e[3] <= kDegree; ++e[3]) {
          e[4] = kDegree - e[0] - e[1] - e[2] - e[3];
          if (std::count_if(e.begin(), e.end(), [](int k) { return k > 0; }) <= 3)
            out.push_back(Monomial::from_exponents(e));
        }
  std::sort(out.begin(), out.end());
  return out;
}

LocalPatch build_patch(SingularPoint point) {
  LocalPatch patch{point, {}, {}, {}, {}};
  for (const auto& m : enumerate_divisors())
    if (m.support().is_subset_of(point.triple)) patch.regions.push_back(m);

  const auto vars = point.triple.members();
  for (const auto& m : patch.regions) {
    for (Variable a : vars) {
      for (Variable b : vars) {
        const auto n = m.transfer(a, b);
        if (!n || *n < m) continue;
        const Wall w = Wall::make(m, *n);
        std::vector<Monomial> third;
        for (const auto& p : patch.regions)
          if (p != m && p != *n && adjacent(p, m) && adjacent(p, *n)) third.push_back(p);
        (third.size() == 2 ? patch.interior_walls : patch.boundary_walls).push_back(w);
        patch.completions.emplace(w, std::move(third));
      }
    }
  }
  std::sort(patch.interior_walls.begin(), patch.interior_walls.end());
  std::sort(patch.boundary_walls.begin(), patch.boundary_walls.end());
  return patch;
}

std::vector<Monomial> third_regions(const LocalPatch& patch, const Wall& wall) {
  const auto it = patch.completions.find(wall);
  if (it == patch.completions.end()) {
    throw std::domain_error("wall " + wall.text() + " is not in patch " + patch.point.triple.text());
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Curve symbols

std::string_view to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Gamma: return "gamma";
    case CurveKind::Line: return "ell";
    case CurveKind::Sigma: return "sigma";
    case CurveKind::Fiber: return "phi";
    case CurveKind::Section: return "sec";
  }
  return "?";
}

std::optional<CurveKind> parse_curve_kind(std::string_view text) {
  for (CurveKind k : kAllCurveKinds)
    if (to_string(k) == text) return k;
  return std::nullopt;
}

CurveSymbol CurveSymbol::gamma(const Monomial& a, const Monomial& b) {
  const Wall w = Wall::make(a, b);
  if (w.on_edge()) throw LabelError("gamma needs an interior wall", w.text());
  return GammaCurve{w};
}

CurveSymbol CurveSymbol::sigma(Variable s, Variable t) {
  if (s == t) throw LabelError("sigma needs two distinct variables", std::string{to_char(s), to_char(t)});
  return SigmaCurve{std::min(s, t), std::max(s, t)};
}

CurveSymbol CurveSymbol::fiber(const Monomial& m) {
  if (m.support_size() != 2) throw LabelError("phi needs an edge divisor", m.text());
  return FiberCurve{m};
}

CurveSymbol CurveSymbol::section(const Monomial& a, const Monomial& b) {
  const Wall w = Wall::make(a, b);
  if (!w.on_edge() || for_wall(w).kind() != CurveKind::Section)
    throw LabelError("not a section wall", w.text());
  return SectionCurve{w};
}

CurveSymbol CurveSymbol::for_wall(const Wall& w) {
  if (!w.on_edge()) return GammaCurve{w};
  const auto pair = VariableSet::from_bits(w.first.support().bits() | w.second.support().bits()).members();
  const Variable s = pair[0];
  const Variable t = pair[1];
  const int high = std::max(w.first.exponent(s), w.second.exponent(s));
  switch (high) {
    case 5: return LineCurve{s};
    case 1: return LineCurve{t};
    case 3: return SigmaCurve{s, t};
    default: return SectionCurve{w};
  }
}

CurveSymbol CurveSymbol::parse(std::string_view label) {
  const auto colon = label.find(':');
  if (colon == std::string_view::npos) throw LabelError("curve label needs 'kind:'", std::string(label));
  const auto kind = parse_curve_kind(label.substr(0, colon));
  if (!kind) throw LabelError("unknown curve kind", std::string(label.substr(0, colon)));
  const auto args = split(label.substr(colon + 1), ',');
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw LabelError("wrong number of arguments", std::string(label));
  };
  auto var = [&](std::string_view t) {
    if (t.size() != 1 || !parse_variable(t[0])) throw LabelError("bad variable", std::string(t));
    return *parse_variable(t[0]);
  };
  try {
    switch (*kind) {
      case CurveKind::Gamma: {
        need(2);
        return for_wall(Wall::make(Monomial::parse(args[0]), Monomial::parse(args[1])));
      }
      case CurveKind::Line:
        need(1);
        return line(var(args[0]));
      case CurveKind::Sigma:
        need(2);
        return sigma(var(args[0]), var(args[1]));
      case CurveKind::Fiber:
        need(1);
        return fiber(Monomial::parse(args[0]));
      case CurveKind::Section:
        need(2);
        return section(Monomial::parse(args[0]), Monomial::parse(args[1]));
    }
  } catch (const LabelError& e) {
    throw LabelError(e.what(), e.token().empty() ? std::string(label) : e.token());
  }
  throw LabelError("unreachable", std::string(label));
}

std::string CurveSymbol::label() const {
  struct Visitor {
    std::string operator()(const GammaCurve& g) const { return "gamma:" + g.wall.text(); }
    std::string operator()(const LineCurve& l) const { return std::string("ell:") + to_char(l.s); }
    std::string operator()(const SigmaCurve& s) const {
      return std::string("sigma:") + to_char(s.s) + "," + to_char(s.t);
    }
    std::string operator()(const FiberCurve& f) const { return "phi:" + f.m.text(); }
    std::string operator()(const SectionCurve& s) const { return "sec:" + s.wall.text(); }
  };
  return std::visit(Visitor{}, payload_);
}

bool CurveSymbol::is_generator() const {
  const auto k = kind();
  return k == CurveKind::Gamma || k == CurveKind::Line || k == CurveKind::Sigma;
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<CurveSymbol> enumerate_curve_symbols() {
  std::vector<GammaCurve> gammas;
  std::vector<SectionCurve> sections;
  for (const auto& point : all_singular_points()) {
    const LocalPatch patch = build_patch(point);
    for (const auto& w : patch.interior_walls) gammas.push_back({w});
  }
  for (const auto& edge : all_singular_edges()) {
    const auto st = edge.pair.members();
    for (auto [s, t] : {std::pair{st[0], st[1]}, std::pair{st[1], st[0]}}) {
      std::array<int, kVariableCount> outer{}, inner{};
      outer[index_of(s)] = 4;
      outer[index_of(t)] = 1;
      inner[index_of(s)] = 3;
      inner[index_of(t)] = 2;
      sections.push_back({Wall::make(Monomial::from_exponents(outer), Monomial::from_exponents(inner))});
    }
  }
  std::sort(gammas.begin(), gammas.end());
  std::sort(sections.begin(), sections.end());

  std::vector<CurveSymbol> out;
  for (const auto& g : gammas) out.emplace_back(g);
  for (Variable s : kAllVariables) out.push_back(CurveSymbol::line(s));
  for (Variable s : kAllVariables)
    for (Variable t : kAllVariables)
      if (s < t) out.push_back(CurveSymbol::sigma(s, t));
  for (const auto& m : enumerate_divisors())
    if (m.support_size() == 2) out.push_back(CurveSymbol::fiber(m));
  for (const auto& sec : sections) out.emplace_back(sec);
  return out;
}

Catalog::Catalog() : divisors_(enumerate_divisors()), divisor_lookup_(6 * 6 * 6 * 6 * 6, -1) {
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    divisor_lookup_[exponent_code(divisors_[i].exponents())] = static_cast<int>(i);
  for (const auto& point : all_singular_points()) patches_.push_back(build_patch(point));
  curves_ = enumerate_curve_symbols();
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    curve_index_.emplace(curves_[i], i);
    ++kind_offsets_[static_cast<std::size_t>(curves_[i].kind()) + 1];
  }
  std::partial_sum(kind_offsets_.begin(), kind_offsets_.end(), kind_offsets_.begin());
}

const Catalog& Catalog::get() {
  static const Catalog instance;
  return instance;
}

std::size_t Catalog::divisor_index(const Monomial& m) const {
  const int i = divisor_lookup_[exponent_code(m.exponents())];
  if (i < 0) throw std::domain_error("not a divisor label: " + m.text());
  return static_cast<std::size_t>(i);
}

const LocalPatch& Catalog::patch(SingularPoint p) const {
  for (const auto& patch : patches_)
    if (patch.point == p) return patch;
  throw std::domain_error("no patch for point " + p.triple.text());
}

std::span<const CurveSymbol> Catalog::curves(CurveKind k) const {
  const auto i = static_cast<std::size_t>(k);
  return std::span<const CurveSymbol>(curves_).subspan(kind_offsets_[i], kind_offsets_[i + 1] - kind_offsets_[i]);
}

std::span<const CurveSymbol> Catalog::generators() const {
  return std::span<const CurveSymbol>(curves_).first(kind_offsets_[static_cast<std::size_t>(CurveKind::Fiber)]);
}

std::size_t Catalog::curve_index(const CurveSymbol& c) const {
  const auto it = curve_index_.find(c);
  if (it == curve_index_.end()) throw std::domain_error("unknown curve symbol " + c.label());
  return it->second;
}

std::vector<WallSite> Catalog::representatives(const CurveSymbol& c) const {
  std::vector<WallSite> out;
  if (c.kind() == CurveKind::Fiber) return out;
  for (const auto& patch : patches_)
    for (const auto& [wall, third] : patch.completions)
      if (CurveSymbol::for_wall(wall) == c) out.push_back({patch.point, wall});
  return out;
}

}  // namespace mq
