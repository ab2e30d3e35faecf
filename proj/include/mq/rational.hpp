#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mq {

// Expression templates are disabled so the types compose cleanly with Eigen.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Narrows an integral rational to int64; throws if it is not integral or does not fit.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("non-integral value " + q.str());
  const BigInt n = boost::multiprecision::numerator(q);
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN))
    throw std::overflow_error("value out of int64 range: " + n.str());
  return n.convert_to<std::int64_t>();
}

}  // namespace mq
