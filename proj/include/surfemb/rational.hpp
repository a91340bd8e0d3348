// Exact scalar types and the dense matrix aliases used across the library.
#pragma once

#include <cstdint>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace surfemb {

/// Arbitrary-precision rational. Expression templates are off so that the
/// type behaves as a plain value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = std::int64_t;

using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

inline int sign(const Rational& x) { return x.sign(); }

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

/// Floor of x as a machine integer.
inline Integer floor_integer(const Rational& x) {
  using boost::multiprecision::mpz_int;
  mpz_int q;
  mpz_fdiv_q(q.backend().data(), boost::multiprecision::numerator(x).backend().data(),
             boost::multiprecision::denominator(x).backend().data());
  return q.convert_to<Integer>();
}

inline Integer ceil_integer(const Rational& x) { return -floor_integer(-x); }

}  // namespace surfemb
