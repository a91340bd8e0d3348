#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "surfemb/exact_linalg.hpp"

using namespace surfemb;

namespace {

// Leibniz expansion; only for small matrices.
Rational det_leibniz(const ExactMatrix& m) {
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (Eigen::Index i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const ExactMatrix& m) {
  const Eigen::Index r = m.rows();
  const Eigen::Index c = m.cols();
  for (Eigen::Index k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rsel(static_cast<std::size_t>(r), false), csel(static_cast<std::size_t>(c), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<Eigen::Index> rows, cols;
        for (Eigen::Index i = 0; i < r; ++i)
          if (rsel[i]) rows.push_back(i);
        for (Eigen::Index j = 0; j < c; ++j)
          if (csel[j]) cols.push_back(j);
        if (det_leibniz(m(rows, cols)) != 0) return static_cast<std::size_t>(k);
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// Characteristic polynomial by Faddeev-LeVerrier, then Descartes' rule of
// signs, which is exact for real-rooted polynomials.
Signature signature_by_charpoly(const ExactMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[n] = 1;
  ExactMatrix m = ExactMatrix::Zero(n, n);
  const ExactMatrix id = ExactMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -Rational((a * m).trace()) / Rational(k);
  }
  auto sign_changes = [](const std::vector<Rational>& v) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& x : v) {
      const int s = sign(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  std::size_t zero = 0;
  while (c[zero] == 0) ++zero;
  std::vector<Rational> neg = c;
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  return {sign_changes(c), sign_changes(neg), zero};
}

IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, Eigen::Index n) {
  IntMatrix p = IntMatrix::Identity(n, n);
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    const Eigen::Index i = idx(rng), j = idx(rng);
    if (i == j) continue;
    p.row(i) += coeff(rng) * p.row(j);
  }
  return p;
}

}  // namespace

TEST_CASE("rational helpers round toward the right infinity") {
  CHECK(floor_integer(Rational(7, 2)) == 3);
  CHECK(floor_integer(Rational(-7, 2)) == -4);
  CHECK(ceil_integer(Rational(7, 2)) == 4);
  CHECK(ceil_integer(Rational(-7, 2)) == -3);
  CHECK(floor_integer(Rational(-6)) == -6);
  CHECK(sign(Rational(-1, 3)) == -1);
  CHECK(sign(Rational(0)) == 0);
  CHECK(is_integral(Rational(4, 2)));
  CHECK_FALSE(is_integral(Rational(1, 2)));
}

TEST_CASE("rank of small matrices") {
  IntMatrix a(3, 3);
  a << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(rank(a) == 2);
  CHECK(rank(IntMatrix::Zero(3, 4)) == 0);
  CHECK(rank(IntMatrix::Identity(5, 5)) == 5);
  IntMatrix wide(2, 4);
  wide << 1, 0, 2, 0, 2, 0, 4, 1;
  CHECK(rank(wide) == 2);
  CHECK(rank(IntMatrix(0, 0)) == 0);
}

TEST_CASE("rank agrees with the minors oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Eigen::Index> dim(1, 5);
    const Eigen::Index r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c, -2, 2);
    if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) - 2 * m.row(r - 2);
    CHECK(rank(m) == rank_by_minors(to_exact(m)));
  }
}

TEST_CASE("rank is invariant under unimodular changes of basis") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 6, -3, 3);
    const IntMatrix p = random_unimodular(rng, 4);
    const IntMatrix q = random_unimodular(rng, 6);
    CHECK(rank(m) == rank(IntMatrix(p * m * q)));
  }
}

TEST_CASE("signature of standard forms") {
  IntMatrix hyperbolic(2, 2);
  hyperbolic << 0, 1, 1, 0;
  CHECK(signature(hyperbolic) == Signature{1, 1, 0});

  IntMatrix cartan_a2(2, 2);
  cartan_a2 << 2, -1, -1, 2;
  CHECK(signature(cartan_a2) == Signature{2, 0, 0});

  IntMatrix affine_a1(2, 2);
  affine_a1 << 2, -2, -2, 2;
  CHECK(signature(affine_a1) == Signature{1, 0, 1});

  // Zero diagonal throughout forces the off-diagonal pivot path.
  IntMatrix zero_diag(3, 3);
  zero_diag << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  CHECK(signature(zero_diag) == Signature{1, 2, 0});

  CHECK(signature(IntMatrix::Zero(3, 3)) == Signature{0, 0, 3});
  CHECK(to_string(Signature{4, 2, 0}) == "(4,2,0)");
}

TEST_CASE("signature agrees with the characteristic polynomial oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Eigen::Index> dim(1, 6);
    const Eigen::Index n = dim(rng);
    IntMatrix b = random_matrix(rng, n, n, -2, 2);
    IntMatrix s = b + b.transpose();
    if (trial % 4 == 0) {
      // Rank-deficient: B^T D B with a short B.
      const Eigen::Index k = std::max<Eigen::Index>(1, n / 2);
      const IntMatrix t = random_matrix(rng, k, n, -2, 2);
      const IntMatrix d = random_matrix(rng, k, 1, -2, 2).asDiagonal();
      s = t.transpose() * d * t;
    }
    const Signature got = signature(s);
    CHECK(got == signature_by_charpoly(to_exact(s)));
    CHECK(got.dimension() == static_cast<std::size_t>(n));
    CHECK(got.n_plus + got.n_minus == rank(s));
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix b = random_matrix(rng, 5, 5, -3, 3);
    const IntMatrix s = b + b.transpose();
    const IntMatrix p = random_unimodular(rng, 5);
    CHECK(signature(s) == signature(IntMatrix(p.transpose() * s * p)));
  }
}

TEST_CASE("signature rejects non-symmetric and non-square input") {
  IntMatrix a(2, 2);
  a << 1, 2, 0, 1;
  CHECK_THROWS_AS(signature(a), LinalgError);
  CHECK_THROWS_AS(signature(IntMatrix::Zero(2, 3)), LinalgError);
  CHECK(is_symmetric(to_exact(IntMatrix(a + a.transpose()))));
}

TEST_CASE("unitriangular inverse") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix u = random_matrix(rng, 5, 5, -3, 3).triangularView<Eigen::StrictlyUpper>();
    u.diagonal().setOnes();
    const ExactMatrix inv = invert_unitriangular(to_exact(u));
    CHECK(is_integer_matrix(inv));
    CHECK(to_exact(u) * inv == ExactMatrix::Identity(5, 5));
    const ExactMatrix lower = invert_unitriangular(to_exact(IntMatrix(u.transpose())));
    CHECK(lower * to_exact(IntMatrix(u.transpose())) == ExactMatrix::Identity(5, 5));
  }
}

TEST_CASE("unitriangular inverse rejects bad input") {
  IntMatrix diag2 = IntMatrix::Identity(2, 2);
  diag2(1, 1) = 2;
  CHECK_THROWS_AS(invert_unitriangular(to_exact(diag2)), LinalgError);

  IntMatrix full(2, 2);
  full << 1, 1, 1, 1;
  CHECK_THROWS_AS(invert_unitriangular(to_exact(full)), LinalgError);

  ExactMatrix half = ExactMatrix::Identity(2, 2);
  half(0, 1) = Rational(1, 2);
  CHECK_THROWS_AS(invert_unitriangular(half), LinalgError);
  CHECK_FALSE(is_integer_matrix(half));

  CHECK_THROWS_AS(invert_unitriangular(ExactMatrix::Zero(2, 3)), LinalgError);
}

TEST_CASE("expression helpers") {
  IntMatrix e(2, 2);
  e << 1, -3, 0, 1;
  IntMatrix minus(2, 2), plus(2, 2);
  minus << 0, -3, 3, 0;
  plus << 2, -3, -3, 2;
  CHECK(antisymmetrize(e) == minus);
  CHECK(symmetrize(e) == plus);
  CHECK(rank(antisymmetrize(e)) == 2);
}
