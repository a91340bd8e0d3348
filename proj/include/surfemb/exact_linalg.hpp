// Exact rank, inertia and unitriangular inversion over the rationals.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "surfemb/rational.hpp"

namespace surfemb {

/// Inertia of a symmetric form: counts of positive, negative and zero
/// diagonal entries after congruence diagonalization.
struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dimension() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t rank_rational(ExactMatrix m);

/// Sylvester inertia by symmetric Gaussian elimination. Throws LinalgError
/// for non-square or non-symmetric input.
Signature signature_symmetric(ExactMatrix m);

/// Inverse of an upper or lower unitriangular integer matrix.
ExactMatrix invert_unitriangular(const ExactMatrix& m);

bool is_integer_matrix(const ExactMatrix& m);
bool is_symmetric(const ExactMatrix& m);

template <typename Derived>
ExactMatrix to_exact(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  return rank_rational(to_exact(m));
}

template <typename Derived>
Signature signature(const Eigen::MatrixBase<Derived>& m) {
  return signature_symmetric(to_exact(m));
}

/// E - E^T.
template <typename Derived>
auto antisymmetrize(const Eigen::MatrixBase<Derived>& e) {
  return (e - e.transpose()).eval();
}

/// E + E^T.
template <typename Derived>
auto symmetrize(const Eigen::MatrixBase<Derived>& e) {
  return (e + e.transpose()).eval();
}

std::string to_string(const Signature& s);

}  // namespace surfemb
