#include "surfemb/toric_surface.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "surfemb/exact_linalg.hpp"

namespace surfemb {

namespace {

Integer det(const Ray& a, const Ray& b) { return a.x() * b.y() - a.y() * b.x(); }

std::string ray_str(const Ray& r) {
  return "(" + std::to_string(r.x()) + "," + std::to_string(r.y()) + ")";
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Ray& r) { return (r.y() > 0 || (r.y() == 0 && r.x() > 0)) ? 0 : 1; }

Integer h_p1(Integer degree, int k) {
  if (k == 0) return std::max<Integer>(0, degree + 1);
  return std::max<Integer>(0, -degree - 1);
}

void check_size(const ToricSurface& s, const Divisor& d) {
  if (static_cast<std::size_t>(d.size()) != s.ray_count())
    throw ToricError("divisor has " + std::to_string(d.size()) + " coefficients, fan has " +
                     std::to_string(s.ray_count()) + " rays");
}

}  // namespace

std::string to_string(const CohDims& h) {
  return "(" + std::to_string(h.h0) + "," + std::to_string(h.h1) + "," + std::to_string(h.h2) + ")";
}

ToricSurface::ToricSurface(std::vector<Ray> rays) : rays_(std::move(rays)) {
  const std::size_t n = rays_.size();
  if (n < 3) throw ToricError("a complete fan needs at least 3 rays");
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& r = rays_[i];
    if (std::gcd(r.x(), r.y()) != 1) throw ToricError("ray " + ray_str(r) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == r) throw ToricError("duplicate ray " + ray_str(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& a = rays_[i];
    const Ray& b = rays_[(i + 1) % n];
    const Integer d = det(a, b);
    if (d <= 0)
      throw ToricError("rays " + ray_str(a) + " and " + ray_str(b) +
                       " do not bound a strictly convex counterclockwise cone (fan is not complete)");
    if (d != 1)
      throw ToricError("cone spanned by " + ray_str(a) + " and " + ray_str(b) + " is singular (det " +
                       std::to_string(d) + ")");
  }
  // Consecutive determinants are positive, so the winding number must be one.
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (half_plane(rays_[i]) == 1 && half_plane(rays_[(i + 1) % n]) == 0) ++wraps;
  if (wraps != 1) throw ToricError("rays wind around the origin more than once");

  const auto m = static_cast<Eigen::Index>(n);
  self_intersections_.resize(m);
  intersections_ = IntMatrix::Zero(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& prev = rays_[(i + n - 1) % n];
    const Ray& cur = rays_[i];
    const Ray& next = rays_[(i + 1) % n];
    const Ray sum = prev + next;
    // sum = a * cur; D_i^2 = -a.
    const Integer a = cur.x() != 0 ? sum.x() / cur.x() : sum.y() / cur.y();
    if (sum != a * cur) throw ConsistencyError("wall relation fails at ray " + ray_str(cur));
    const auto ii = static_cast<Eigen::Index>(i);
    self_intersections_(ii) = -a;
    intersections_(ii, ii) = -a;
    intersections_(ii, static_cast<Eigen::Index>((i + 1) % n)) = 1;
    intersections_(static_cast<Eigen::Index>((i + 1) % n), ii) = 1;
  }
  canonical_ = Divisor::Constant(m, -1);
  if (intersect(*this, canonical_, canonical_) + static_cast<Integer>(n) != 12)
    throw ConsistencyError("Noether identity K^2 + #rays = 12 fails");
}

ToricSurface ToricSurface::from_ordered_rays(std::vector<Ray> rays) { return ToricSurface(std::move(rays)); }

ToricSurface ToricSurface::from_rays(std::vector<Ray> rays) {
  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) {
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return det(a, b) > 0;
  });
  return ToricSurface(std::move(rays));
}

bool ToricSurface::adjacent(std::size_t i, std::size_t j) const {
  const std::size_t n = ray_count();
  return i != j && ((i + 1) % n == j || (j + 1) % n == i);
}

Divisor ToricSurface::ray_divisor(std::size_t i) const {
  if (i >= ray_count()) throw ToricError("ray index " + std::to_string(i) + " out of range");
  Divisor d = zero_divisor();
  d(static_cast<Eigen::Index>(i)) = 1;
  return d;
}

Divisor ToricSurface::lift_pic(const std::vector<Integer>& coords) const {
  if (coords.size() != picard_rank())
    throw ToricError("Pic coordinates have length " + std::to_string(coords.size()) + ", Picard rank is " +
                     std::to_string(picard_rank()));
  Divisor d = zero_divisor();
  for (std::size_t i = 0; i < coords.size(); ++i) d(static_cast<Eigen::Index>(i)) = coords[i];
  return d;
}

Divisor ToricSurface::principal(const Ray& m) const {
  Divisor d(static_cast<Eigen::Index>(ray_count()));
  for (std::size_t i = 0; i < ray_count(); ++i) d(static_cast<Eigen::Index>(i)) = m.dot(rays_[i]);
  return d;
}

namespace surfaces {

ToricSurface projective_plane() { return ToricSurface::from_rays({Ray(1, 0), Ray(0, 1), Ray(-1, -1)}); }

ToricSurface hirzebruch(Integer a) {
  if (a < 0) throw ToricError("Hirzebruch index must be non-negative");
  return ToricSurface::from_rays({Ray(1, 0), Ray(0, 1), Ray(-1, a), Ray(0, -1)});
}

ToricSurface p1xp1() { return hirzebruch(0); }
ToricSurface bl1p2() { return hirzebruch(1); }

ToricSurface bl2p2() {
  return ToricSurface::from_rays({Ray(1, 0), Ray(0, 1), Ray(-1, 0), Ray(-1, -1), Ray(0, -1)});
}

ToricSurface bl3p2() {
  return ToricSurface::from_rays({Ray(1, 0), Ray(1, 1), Ray(0, 1), Ray(-1, 0), Ray(-1, -1), Ray(0, -1)});
}

ToricSurface by_name(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  if (key == "p2") return projective_plane();
  if (key == "p1xp1" || key == "f0") return p1xp1();
  if (key == "bl1p2") return bl1p2();
  if (key == "bl2p2") return bl2p2();
  if (key == "bl3p2" || key == "dp6") return bl3p2();
  if (key.size() >= 2 && key.size() <= 6 && key[0] == 'f' &&
      std::all_of(key.begin() + 1, key.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return hirzebruch(std::stoll(key.substr(1)));
  throw ToricError("unknown surface preset '" + name + "'");
}

ToricSurface random_surface(std::mt19937_64& rng, std::size_t max_blowups) {
  std::uniform_int_distribution<int> base_pick(0, 2);
  ToricSurface s = [&] {
    switch (base_pick(rng)) {
      case 0: return projective_plane();
      case 1: return p1xp1();
      default: return hirzebruch(2);
    }
  }();
  std::uniform_int_distribution<std::size_t> count_pick(0, max_blowups);
  const std::size_t count = count_pick(rng);
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> wall_pick(0, s.ray_count() - 1);
    s = blow_up(s, wall_pick(rng));
  }
  return s;
}

}  // namespace surfaces

ToricSurface blow_up(const ToricSurface& s, std::size_t wall) {
  const std::size_t n = s.ray_count();
  if (wall >= n) throw ToricError("wall index " + std::to_string(wall) + " out of range");
  std::vector<Ray> rays = s.rays();
  const Ray added = rays[wall] + rays[(wall + 1) % n];
  rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(wall + 1), added);
  return ToricSurface::from_ordered_rays(std::move(rays));
}

bool equivalent_fans(const ToricSurface& a, const ToricSurface& b) {
  if (a.ray_count() != b.ray_count()) return false;
  const std::size_t n = a.ray_count();
  const IntVector& x = a.self_intersections();
  const IntVector& y = b.self_intersections();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < n; ++i) {
      const auto xi = x(static_cast<Eigen::Index>(i));
      forward = forward && xi == y(static_cast<Eigen::Index>((i + shift) % n));
      backward = backward && xi == y(static_cast<Eigen::Index>((shift + n - i) % n));
    }
    if (forward || backward) return true;
  }
  return false;
}

Integer intersect(const ToricSurface& s, const Divisor& d, const Divisor& e) {
  check_size(s, d);
  check_size(s, e);
  return d.dot(s.intersection_matrix() * e);
}

Integer rr_chi(const ToricSurface& s, const Divisor& d) {
  const Integer twice = intersect(s, d, d) - intersect(s, s.canonical(), d);
  if (twice % 2 != 0) throw ConsistencyError("D^2 - K.D is odd");
  return 1 + twice / 2;
}

Integer h0_lattice_points(const ToricSurface& s, const Divisor& d) {
  check_size(s, d);
  const auto& rays = s.rays();
  const std::size_t n = rays.size();
  auto inside = [&](const Rational& x, const Rational& y) {
    for (std::size_t k = 0; k < n; ++k)
      if (x * rays[k].x() + y * rays[k].y() < -d(static_cast<Eigen::Index>(k))) return false;
    return true;
  };

  // Vertices of the polygon are feasible intersections of two boundary lines.
  std::optional<std::array<Rational, 4>> box;  // xmin, xmax, ymin, ymax
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer dt = det(rays[i], rays[j]);
      if (dt == 0) continue;
      const Integer bi = -d(static_cast<Eigen::Index>(i));
      const Integer bj = -d(static_cast<Eigen::Index>(j));
      const Rational x = Rational(bi * rays[j].y() - bj * rays[i].y()) / dt;
      const Rational y = Rational(rays[i].x() * bj - rays[j].x() * bi) / dt;
      if (!inside(x, y)) continue;
      if (!box) {
        box = std::array<Rational, 4>{x, x, y, y};
      } else {
        auto& b = *box;
        b[0] = std::min(b[0], x);
        b[1] = std::max(b[1], x);
        b[2] = std::min(b[2], y);
        b[3] = std::max(b[3], y);
      }
    }
  }
  if (!box) return 0;

  const auto& b = *box;
  Integer count = 0;
  for (Integer x = ceil_integer(b[0]); x <= floor_integer(b[1]); ++x) {
    for (Integer y = ceil_integer(b[2]); y <= floor_integer(b[3]); ++y) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k)
        ok = x * rays[k].x() + y * rays[k].y() >= -d(static_cast<Eigen::Index>(k));
      count += ok ? 1 : 0;
    }
  }
  return count;
}

CohDims cohomology(const ToricSurface& s, const Divisor& d) {
  CohDims h;
  h.h0 = h0_lattice_points(s, d);
  h.h2 = h0_lattice_points(s, s.canonical() - d);
  h.h1 = h.h0 + h.h2 - rr_chi(s, d);
  if (h.h1 < 0) throw ConsistencyError("negative h^1 from Riemann-Roch");
  return h;
}

KClass& KClass::operator+=(const KClass& o) {
  rank += o.rank;
  c1 += o.c1;
  ch2 += o.ch2;
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  rank -= o.rank;
  c1 -= o.c1;
  ch2 -= o.ch2;
  return *this;
}

KClass operator*(Integer k, KClass a) {
  a.rank *= k;
  a.c1 *= k;
  a.ch2 *= k;
  return a;
}

KClass kclass_line(const ToricSurface& s, const Divisor& d) {
  return {1, d, Rational(intersect(s, d, d)) / 2};
}

KClass kclass_curve(const ToricSurface& s, const Divisor& c) {
  return {0, c, Rational(-intersect(s, c, c)) / 2};
}

KClass kclass_point(const ToricSurface& s) { return {0, s.zero_divisor(), 1}; }

bool numerically_equal(const ToricSurface& s, const KClass& x, const KClass& y) {
  if (x.rank != y.rank || x.ch2 != y.ch2) return false;
  const IntVector diff = s.intersection_matrix() * (x.c1 - y.c1);
  return diff.isZero();
}

Integer euler_pairing(const ToricSurface& s, const KClass& x, const KClass& y) {
  const Divisor mixed = x.rank * y.c1 - y.rank * x.c1;
  const Rational value = Rational(x.rank) * y.ch2 + Rational(y.rank) * x.ch2 -
                         Rational(intersect(s, x.c1, y.c1)) -
                         Rational(intersect(s, s.canonical(), mixed)) / 2 + Rational(x.rank * y.rank);
  if (!is_integral(value)) throw ConsistencyError("Euler pairing is not integral");
  return floor_integer(value);
}

KClass serre_twist(const ToricSurface& s, const KClass& x) {
  const Divisor& k = s.canonical();
  KClass out;
  out.rank = x.rank;
  out.c1 = x.c1 + x.rank * k;
  out.ch2 = x.ch2 + Rational(intersect(s, x.c1, k)) + Rational(x.rank * intersect(s, k, k)) / 2;
  return out;
}

KnumGram knum_gram(const ToricSurface& s) {
  const std::size_t rho = s.picard_rank();
  const IntMatrix numeric = s.intersection_matrix().topRows(static_cast<Eigen::Index>(rho));
  if (rank(numeric) != rho)
    throw ToricError("the first " + std::to_string(rho) + " invariant divisors are numerically dependent");

  KnumGram out;
  out.basis.push_back(kclass_point(s));
  out.labels.push_back("k_s");
  for (std::size_t i = 0; i < rho; ++i) {
    out.basis.push_back(kclass_curve(s, s.ray_divisor(i)));
    out.labels.push_back("O_D" + std::to_string(i + 1));
  }
  out.basis.push_back(kclass_line(s, s.zero_divisor()));
  out.labels.push_back("O_S");

  const auto dim = static_cast<Eigen::Index>(out.basis.size());
  out.gram.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out.gram(i, j) = Rational(euler_pairing(s, out.basis[static_cast<std::size_t>(i)],
                                              out.basis[static_cast<std::size_t>(j)]));
  return out;
}

ExtDims ext_line_to_curve(const ToricSurface& s, const Divisor& a, std::size_t ray) {
  const Integer degree = -intersect(s, a, s.ray_divisor(ray));
  return {h_p1(degree, 0), h_p1(degree, 1), 0};
}

ExtDims ext_curve_to_line(const ToricSurface& s, std::size_t ray, const Divisor& a) {
  const ExtDims dual = ext_line_to_curve(s, a - s.canonical(), ray);
  return {dual[2], dual[1], dual[0]};
}

ExtDims ext_curve_pair(const ToricSurface& s, std::size_t ray, std::size_t other) {
  if (ray >= s.ray_count() || other >= s.ray_count()) throw ToricError("curve index out of range");
  if (ray == other) {
    // Connecting maps vanish: Ext^k(O_C, O_C) = H^0(O_C), H^0(N_C), H^1(N_C).
    const Integer d = s.self_intersections()(static_cast<Eigen::Index>(ray));
    return {1, h_p1(d, 0), h_p1(d, 1)};
  }
  if (s.adjacent(ray, other))
    throw ToricError("Ext between the intersecting curves D_" + std::to_string(ray + 1) + " and D_" +
                     std::to_string(other + 1) + " is not supported");
  return {0, 0, 0};
}

}  // namespace surfemb
