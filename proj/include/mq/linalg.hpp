#pragma once

// Exact linear algebra over Q for Eigen matrices with integer or rational scalars.

#include "mq/rational.hpp"

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace mq::linalg {

using Index = Eigen::Index;

namespace detail {

using RowMajorBig = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
Rational as_rational(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return s;
  } else {
    return Rational(s);
  }
}

template <typename Row>
void make_primitive(Row&& row) {
  BigInt g = 0;
  for (Index j = 0; j < row.size(); ++j) {
    if (row(j) != 0) g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::abs(row(j))));
    if (g == 1) return;
  }
  if (g > 1) {
    for (Index j = 0; j < row.size(); ++j) row(j) /= g;
  }
}

/// Scales every row to a primitive integer row spanning the same line.
template <typename Derived>
RowMajorBig integer_rows(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  RowMajorBig out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      BigInt scale = 1;
      for (Index j = 0; j < a.cols(); ++j) {
        const BigInt d = boost::multiprecision::denominator(a(i, j));
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
      }
      for (Index j = 0; j < a.cols(); ++j) {
        out(i, j) = boost::multiprecision::numerator(a(i, j) * Rational(scale));
      }
    } else {
      for (Index j = 0; j < a.cols(); ++j) out(i, j) = BigInt(a(i, j));
    }
    make_primitive(out.row(i));
  }
  return out;
}

}  // namespace detail

template <typename Derived>
MatrixX<Rational> to_rational(const Eigen::MatrixBase<Derived>& a) {
  MatrixX<Rational> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = detail::as_rational(a(i, j));
  return out;
}

/// Rank over Q by fraction-free elimination: rows stay integral and primitive,
/// and rows with a zero in the pivot column are never touched.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  auto m = detail::integer_rows(a);
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    const Index width = cols - c;
    for (Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const BigInt g = boost::multiprecision::gcd(m(r, c), m(i, c));
      const BigInt keep = m(r, c) / g;
      const BigInt drop = m(i, c) / g;
      for (Index j = c; j < cols; ++j) m(i, j) = keep * m(i, j) - drop * m(r, j);
      detail::make_primitive(m.row(i).tail(width));
    }
    ++r;
  }
  return r;
}

struct Echelon {
  MatrixX<Rational> rows;     // nonzero rows of the reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each row
};

/// Gauss-Jordan reduction over Q.
template <typename Derived>
Echelon reduced_row_echelon(const Eigen::MatrixBase<Derived>& a) {
  MatrixX<Rational> m = to_rational(a);
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index pivot = -1;
    for (Index i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      m.row(i) -= f * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

/// Solves a x = b for square nonsingular a; nullopt when a is singular.
template <typename DerivedA, typename DerivedB>
std::optional<MatrixX<Rational>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  const Index n = a.rows();
  MatrixX<Rational> aug(n, n + b.cols());
  aug.leftCols(n) = to_rational(a);
  aug.rightCols(b.cols()) = to_rational(b);
  const Echelon e = reduced_row_echelon(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return MatrixX<Rational>(e.rows.rightCols(b.cols()));
}

template <typename Derived>
std::optional<MatrixX<Rational>> inverse(const Eigen::MatrixBase<Derived>& a) {
  return solve(a, MatrixX<Rational>::Identity(a.rows(), a.rows()));
}

}  // namespace mq::linalg
