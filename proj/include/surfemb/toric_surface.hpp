// Smooth complete toric surfaces: intersection theory, Riemann-Roch,
// line-bundle cohomology by lattice-point counting, toric blow-ups, and the
// Euler pairing on the numerical Grothendieck group.
#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "surfemb/rational.hpp"

namespace surfemb {

/// Malformed fan or divisor supplied by a caller.
class ToricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold for every valid input failed; signals a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Ray = Eigen::Matrix<Integer, 2, 1>;
/// Torus-invariant divisor: one integer coefficient per ray, in fan order.
using Divisor = IntVector;

struct CohDims {
  Integer h0 = 0;
  Integer h1 = 0;
  Integer h2 = 0;

  Integer euler_characteristic() const { return h0 - h1 + h2; }
  bool is_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }
  friend bool operator==(const CohDims&, const CohDims&) = default;
};

std::string to_string(const CohDims& h);

class ToricSurface {
 public:
  /// Sorts the rays counterclockwise starting from the positive x-axis and
  /// validates smoothness and completeness.
  static ToricSurface from_rays(std::vector<Ray> rays);

  /// Rays taken in the given cyclic order, which must already be
  /// counterclockwise.
  static ToricSurface from_ordered_rays(std::vector<Ray> rays);

  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t ray_count() const { return rays_.size(); }
  std::size_t picard_rank() const { return rays_.size() - 2; }
  const IntVector& self_intersections() const { return self_intersections_; }
  /// D_i . D_j for all pairs of invariant curves.
  const IntMatrix& intersection_matrix() const { return intersections_; }
  const Divisor& canonical() const { return canonical_; }
  bool adjacent(std::size_t i, std::size_t j) const;

  Divisor zero_divisor() const { return Divisor::Zero(static_cast<Eigen::Index>(ray_count())); }
  Divisor ray_divisor(std::size_t i) const;
  /// Pic coordinates on the first rho rays, zero-padded.
  Divisor lift_pic(const std::vector<Integer>& coords) const;
  /// div(chi^m) = sum <m, v_i> D_i, linearly equivalent to zero.
  Divisor principal(const Ray& m) const;

 private:
  explicit ToricSurface(std::vector<Ray> rays);

  std::vector<Ray> rays_;
  IntVector self_intersections_;
  IntMatrix intersections_;
  Divisor canonical_;
};

namespace surfaces {

ToricSurface projective_plane();
/// F_a with rays (1,0), (0,1), (-1,a), (0,-1).
ToricSurface hirzebruch(Integer a);
ToricSurface p1xp1();
ToricSurface bl1p2();
/// Rays (1,0), (0,1), (-1,0), (-1,-1), (0,-1).
ToricSurface bl2p2();
/// Degree-6 del Pezzo: rays (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1).
ToricSurface bl3p2();

/// Resolves names such as "P2", "P1xP1", "F2", "Bl1P2", "Bl2P2", "Bl3P2", "dP6".
ToricSurface by_name(const std::string& name);

/// Start from P2, P1xP1 or F2 and blow up at most max_blowups random walls.
ToricSurface random_surface(std::mt19937_64& rng, std::size_t max_blowups);

}  // namespace surfaces

/// Blow up the torus-fixed point of the cone (v_i, v_{i+1}). The new ray
/// v_i + v_{i+1} gets index i+1; rays after it shift by one.
ToricSurface blow_up(const ToricSurface& s, std::size_t wall);

/// True when the cyclic self-intersection sequences agree up to rotation and
/// reversal, i.e. the surfaces are isomorphic as toric surfaces.
bool equivalent_fans(const ToricSurface& a, const ToricSurface& b);

Integer intersect(const ToricSurface& s, const Divisor& d, const Divisor& e);

/// chi(O(D)) = 1 + (D^2 - K.D)/2.
Integer rr_chi(const ToricSurface& s, const Divisor& d);

/// Number of m in Z^2 with <m, v_i> >= -d_i for every ray.
Integer h0_lattice_points(const ToricSurface& s, const Divisor& d);

/// h0 by lattice points, h2 by Serre duality, h1 from Riemann-Roch.
CohDims cohomology(const ToricSurface& s, const Divisor& d);

/// Class in the numerical Grothendieck group via its Chern character:
/// rank, first Chern class, and ch2 (a half-integer).
struct KClass {
  Integer rank = 0;
  Divisor c1;
  Rational ch2 = 0;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(Integer k, KClass a);
};

KClass kclass_line(const ToricSurface& s, const Divisor& d);
/// Structure sheaf of an effective curve C, from 0 -> O(-C) -> O -> O_C -> 0.
KClass kclass_curve(const ToricSurface& s, const Divisor& c);
KClass kclass_point(const ToricSurface& s);

/// Same rank, same ch2 and numerically equivalent first Chern classes.
bool numerically_equal(const ToricSurface& s, const KClass& x, const KClass& y);

/// chi(x, y) = integral of ch(x)^dual ch(y) td(S).
Integer euler_pairing(const ToricSurface& s, const KClass& x, const KClass& y);

/// Class of x tensor omega; the shift [2] is invisible on classes.
KClass serre_twist(const ToricSurface& s, const KClass& x);

struct KnumGram {
  ExactMatrix gram;
  std::vector<KClass> basis;
  std::vector<std::string> labels;
};

/// Euler matrix on the basis [k_s], [O_{D_1}], ..., [O_{D_rho}], [O_S].
KnumGram knum_gram(const ToricSurface& s);

using ExtDims = std::array<Integer, 3>;

/// Ext^*(O(A), O_C) = H^*(P^1, O(-A.C)) for the invariant curve C = D_ray.
ExtDims ext_line_to_curve(const ToricSurface& s, const Divisor& a, std::size_t ray);

/// Ext^k(O_C, O(A)) = H^{2-k}(P^1, O((K-A).C))^dual.
ExtDims ext_curve_to_line(const ToricSurface& s, std::size_t ray, const Divisor& a);

/// Ext^*(O_C, O_C') for invariant curves that are equal or disjoint. Throws
/// ToricError for two distinct curves that meet.
ExtDims ext_curve_pair(const ToricSurface& s, std::size_t ray, std::size_t other);

}  // namespace surfemb
