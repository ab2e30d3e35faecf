#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's elimination, triangulation or enumeration code.

#include "mq/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Tuple = std::array<int, 5>;

/// All degree-5 exponent tuples with support at most 3, ascending lexicographic.
inline std::vector<Tuple> divisor_tuples() {
  std::vector<Tuple> out;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (int c = 0; a + b + c <= 5; ++c)
        for (int d = 0; a + b + c + d <= 5; ++d) {
          const Tuple t{a, b, c, d, 5 - a - b - c - d};
          if (std::count_if(t.begin(), t.end(), [](int e) { return e > 0; }) <= 3) out.push_back(t);
        }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool adjacent(const Tuple& a, const Tuple& b) {
  int plus = 0, minus = 0;
  for (int i = 0; i < 5; ++i) {
    const int d = a[i] - b[i];
    if (d == 1) ++plus;
    else if (d == -1) ++minus;
    else if (d != 0) return false;
  }
  return plus == 1 && minus == 1;
}

/// Lattice points of the dilated triangle over the variables in `triple`.
inline std::vector<Tuple> patch_regions(const std::array<int, 3>& triple) {
  std::vector<Tuple> out;
  for (const auto& t : divisor_tuples()) {
    bool inside = true;
    for (int i = 0; i < 5; ++i)
      if (t[i] > 0 && std::find(triple.begin(), triple.end(), i) == triple.end()) inside = false;
    if (inside) out.push_back(t);
  }
  return out;
}

struct PatchWalls {
  std::vector<std::pair<Tuple, Tuple>> interior;
  std::vector<std::pair<Tuple, Tuple>> boundary;
};

/// A wall lies on the boundary when both ends vanish on a common variable of the triple.
inline PatchWalls patch_walls(const std::array<int, 3>& triple) {
  const auto regions = patch_regions(triple);
  PatchWalls w;
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      const Tuple& a = regions[i];
      const Tuple& b = regions[j];
      if (!adjacent(a, b)) continue;
      bool boundary = false;
      for (int v : triple)
        if (a[v] == 0 && b[v] == 0) boundary = true;
      (boundary ? w.boundary : w.interior).emplace_back(a, b);
    }
  return w;
}

/// Regions of the patch adjacent to both ends of a wall.
inline std::set<Tuple> common_neighbours(const std::array<int, 3>& triple, const Tuple& a, const Tuple& b) {
  std::set<Tuple> out;
  for (const auto& r : patch_regions(triple))
    if (adjacent(r, a) && adjacent(r, b)) out.insert(r);
  return out;
}

/// Rank modulo a large prime; equals the rational rank for these small integer matrices
/// unless the prime divides a maximal minor, which the tests treat as a failure.
template <typename Matrix>
long rank_mod_p(const Matrix& m, std::int64_t p = 2147483629LL) {
  const long rows = static_cast<long>(m.rows());
  const long cols = static_cast<long>(m.cols());
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      const mq::Rational q(m(i, j));
      const mq::BigInt num = boost::multiprecision::numerator(q);
      const mq::BigInt den = boost::multiprecision::denominator(q);
      const std::int64_t n = static_cast<std::int64_t>(((num % p) + p) % p);
      std::int64_t d = static_cast<std::int64_t>(den % p);
      // d^(p-2) mod p
      std::int64_t inv = 1, base = d, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = static_cast<std::int64_t>((__int128)inv * base % p);
        base = static_cast<std::int64_t>((__int128)base * base % p);
        e >>= 1;
      }
      a[i][j] = static_cast<std::int64_t>((__int128)n * inv % p);
    }
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    std::int64_t inv = 1, base = a[r][c], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = static_cast<std::int64_t>((__int128)inv * base % p);
      base = static_cast<std::int64_t>((__int128)base * base % p);
      e >>= 1;
    }
    for (long i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)a[i][c] * inv % p);
      for (long j = c; j < cols; ++j) a[i][j] = static_cast<std::int64_t>(((a[i][j] - (__int128)f * a[r][j]) % p + p) % p);
    }
    ++r;
  }
  return r;
}

/// Plain Gauss-Jordan over Q on a copy, one row at a time.
template <typename Matrix>
long rank_rational(const Matrix& m) {
  std::vector<std::vector<mq::Rational>> a(m.rows(), std::vector<mq::Rational>(m.cols()));
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) a[i][j] = mq::Rational(m(i, j));
  std::vector<std::vector<mq::Rational>> basis;  // reduced rows
  std::vector<long> lead;
  for (auto row : a) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (row[lead[k]] == 0) continue;
      const mq::Rational f = row[lead[k]];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * basis[k][j];
    }
    const auto it = std::find_if(row.begin(), row.end(), [](const mq::Rational& q) { return q != 0; });
    if (it == row.end()) continue;
    const long c = it - row.begin();
    const mq::Rational inv = 1 / row[c];
    for (auto& q : row) q *= inv;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k][c] == 0) continue;
      const mq::Rational f = basis[k][c];
      for (std::size_t j = 0; j < row.size(); ++j) basis[k][j] -= f * row[j];
    }
    basis.push_back(std::move(row));
    lead.push_back(c);
  }
  return static_cast<long>(basis.size());
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) { return k == 0 ? 1 : binomial(n + k - 1, k); }

/// Multisets over five lines (1,0), ten sigmas (1,4) and 300 gammas (0,1) summing to (m,n).
inline std::uint64_t fiber_count_formula(long m, long n) {
  if (m < 0 || n < 0) return 0;
  std::uint64_t total = 0;
  for (long b = 0; b <= m && 4 * b <= n; ++b) total += multichoose(5, m - b) * multichoose(10, b) * multichoose(300, n - 4 * b);
  return total;
}

/// Literal enumeration of multisets: generator i is used 0..k times, in order.
inline std::uint64_t fiber_count_bruteforce(const std::vector<std::pair<long, long>>& projections, long m, long n) {
  std::function<std::uint64_t(std::size_t, long, long)> go = [&](std::size_t i, long rm, long rn) -> std::uint64_t {
    if (rm == 0 && rn == 0) return 1;
    if (i == projections.size()) return 0;
    std::uint64_t total = 0;
    const auto [pm, pn] = projections[i];
    for (long k = 0; rm - k * pm >= 0 && rn - k * pn >= 0; ++k) {
      total += go(i + 1, rm - k * pm, rn - k * pn);
      if (pm == 0 && pn == 0) break;
    }
    return total;
  };
  return go(0, m, n);
}

}  // namespace oracle
