#include "surfemb/exact_linalg.hpp"

#include <utility>

namespace surfemb {

namespace {

void swap_symmetric(ExactMatrix& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  m.row(a).swap(m.row(b));
  m.col(a).swap(m.col(b));
}

}  // namespace

bool is_integer_matrix(const ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

bool is_symmetric(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

std::size_t rank_rational(ExactMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      m.row(i) -= f * m.row(r);
    }
    ++r;
  }
  return static_cast<std::size_t>(r);
}

Signature signature_symmetric(ExactMatrix m) {
  if (m.rows() != m.cols()) throw LinalgError("signature: matrix is not square");
  if (!is_symmetric(m)) throw LinalgError("signature: matrix is not symmetric");

  const Eigen::Index n = m.rows();
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index i = k + 1;
      while (i < n && m(i, i) == 0) ++i;
      if (i < n) {
        swap_symmetric(m, k, i);
      } else {
        Eigen::Index j = k + 1;
        while (j < n && m(k, j) == 0) ++j;
        if (j == n) {
          // Row k vanishes on the trailing block.
          ++sig.n_zero;
          continue;
        }
        // Congruence by row/col k += row/col j; the new diagonal is 2 m(k,j).
        m.row(k) += m.row(j);
        m.col(k) += m.col(j);
      }
    }
    const Rational pivot = m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / pivot;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
    if (sign(pivot) > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
  }
  return sig;
}

ExactMatrix invert_unitriangular(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw LinalgError("invert_unitriangular: matrix is not square");
  if (!is_integer_matrix(m)) throw LinalgError("invert_unitriangular: matrix is not integral");
  const Eigen::Index n = m.rows();
  bool upper = true;
  bool lower = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (m(i, i) != 1) throw LinalgError("invert_unitriangular: diagonal entry is not 1");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j < i && m(i, j) != 0) upper = false;
      if (j > i && m(i, j) != 0) lower = false;
    }
  }
  if (!upper && !lower) throw LinalgError("invert_unitriangular: matrix is not triangular");
  if (!upper) return invert_unitriangular(m.transpose()).transpose();

  // Back substitution, column by column; entries stay integral.
  ExactMatrix inv = ExactMatrix::Identity(n, n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Rational acc = 0;
      for (Eigen::Index k = i + 1; k <= j; ++k) acc += m(i, k) * inv(k, j);
      inv(i, j) = -acc;
    }
  }
  return inv;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," +
         std::to_string(s.n_zero) + ")";
}

}  // namespace surfemb
