#include "surfemb/collections.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace surfemb {

namespace {

constexpr ExtDims kZeroExt{0, 0, 0};
constexpr ExtDims kPointExt{1, 0, 0};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExtDims to_ext(const CohDims& h) { return {h.h0, h.h1, h.h2}; }

// Visits every point of [-bound, bound]^dim in lexicographic order.
template <typename F>
void for_each_point(std::size_t dim, Integer bound, F&& f) {
  std::vector<Integer> p(dim, -bound);
  while (true) {
    f(p);
    std::size_t k = dim;
    while (k > 0 && p[k - 1] == bound) p[--k] = -bound;
    if (k == 0) return;
    ++p[k - 1];
  }
}

// Memoized cohomology keyed by Pic coordinates.
class CohomologyCache {
 public:
  explicit CohomologyCache(const ToricSurface& s) : s_(s) {}

  const CohDims& operator()(const std::vector<Integer>& pic) {
    auto it = cache_.find(pic);
    if (it == cache_.end()) it = cache_.emplace(pic, cohomology(s_, s_.lift_pic(pic))).first;
    return it->second;
  }

 private:
  const ToricSurface& s_;
  std::map<std::vector<Integer>, CohDims> cache_;
};

std::vector<Integer> negate(std::vector<Integer> v) {
  for (auto& x : v) x = -x;
  return v;
}

std::vector<Integer> minus(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

Collection::Collection(ToricSurface s, std::vector<SheafObject> objs)
    : surface(std::move(s)), objects(std::move(objs)) {
  if (objects.empty()) throw CollectionError("a collection needs at least one object");
  for (const auto& o : objects) {
    std::visit(overloaded{[&](const LineBundle& l) {
                            if (static_cast<std::size_t>(l.divisor.size()) != surface.ray_count())
                              throw CollectionError("line bundle divisor has the wrong length");
                          },
                          [&](const CurveSheaf& c) {
                            if (c.ray >= surface.ray_count())
                              throw CollectionError("curve ray index " + std::to_string(c.ray) +
                                                    " out of range");
                          }},
               o);
  }
}

Collection line_collection_pic(const ToricSurface& s, const std::vector<std::vector<Integer>>& pic) {
  std::vector<SheafObject> objs{LineBundle{s.zero_divisor()}};
  for (const auto& p : pic) objs.emplace_back(LineBundle{s.lift_pic(p)});
  return Collection(s, std::move(objs));
}

ExtDims ext_dims(const Collection& c, std::size_t i, std::size_t j) {
  const ToricSurface& s = c.surface;
  return std::visit(
      overloaded{
          [&](const LineBundle& a, const LineBundle& b) { return to_ext(cohomology(s, b.divisor - a.divisor)); },
          [&](const LineBundle& a, const CurveSheaf& b) { return ext_line_to_curve(s, a.divisor, b.ray); },
          [&](const CurveSheaf& a, const LineBundle& b) { return ext_curve_to_line(s, a.ray, b.divisor); },
          [&](const CurveSheaf& a, const CurveSheaf& b) { return ext_curve_pair(s, a.ray, b.ray); }},
      c.objects.at(i), c.objects.at(j));
}

HomMatrix hom_matrix(const Collection& c) {
  HomMatrix h(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) h(i, j) = ext_dims(c, i, j);
  return h;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::NotExceptional: return "not_exceptional";
    case Violation::BackwardExt: return "backward_ext";
    case Violation::ForwardHigherExt: return "forward_higher_ext";
  }
  return "unknown";
}

VerifyResult verify_collection(const Collection& c, bool strong) {
  VerifyResult r;
  r.homs = hom_matrix(c);
  for (std::size_t i = 0; i < c.size() && !r.witness; ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const ExtDims& e = r.homs(i, j);
      std::optional<Violation> bad;
      if (i == j && e != kPointExt) bad = Violation::NotExceptional;
      if (i > j && e != kZeroExt) bad = Violation::BackwardExt;
      if (i < j && strong && (e[1] != 0 || e[2] != 0)) bad = Violation::ForwardHigherExt;
      if (bad) {
        r.witness = VerifyResult::Witness{i, j, e, *bad};
        break;
      }
    }
  }
  r.ok = !r.witness;
  return r;
}

IntMatrix endo_quiver_dims(const Collection& c) {
  const VerifyResult v = verify_collection(c, true);
  if (!v.ok) throw CollectionError("collection is not strong exceptional");
  const auto n = static_cast<Eigen::Index>(c.size());
  IntMatrix h = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      h(i, j) = v.homs(static_cast<std::size_t>(i), static_cast<std::size_t>(j))[0];
  return h;
}

Quiver endo_quiver(const Collection& c) {
  const IntMatrix h = endo_quiver_dims(c);
  const ExactMatrix arrows = ExactMatrix::Identity(h.rows(), h.cols()) - invert_unitriangular(to_exact(h));
  std::vector<Arrow> list;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) {
      if (sign(arrows(i, j)) < 0)
        throw CollectionError("relations present: Hom dimensions between objects " + std::to_string(i) + " and " +
                              std::to_string(j) + " are too small for a path algebra");
      const Integer count = floor_integer(arrows(i, j));
      list.insert(list.end(), static_cast<std::size_t>(count),
                  Arrow{static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Quiver(c.size(), std::move(list));
}

Triple abc(const Collection& c) {
  if (c.size() != 3) throw CollectionError("abc needs a collection of three objects");
  const IntMatrix h = endo_quiver_dims(c);
  const Integer a = h(0, 1);
  const Integer b = h(1, 2);
  const Integer extra = h(0, 2) - a * b;
  if (extra < 0)
    throw CollectionError("relations present: hom(0,2) = " + std::to_string(h(0, 2)) + " < a*b = " +
                          std::to_string(a * b));
  return {a, b, extra};
}

std::vector<Triple> solve_abc(Integer max_value) {
  std::vector<Triple> out;
  for (Integer a = 0; a <= max_value; ++a)
    for (Integer b = 0; b <= max_value; ++b) {
      const Integer c = a + b - a * b;
      if (c >= 0 && c <= max_value) out.push_back({a, b, c});
    }
  return out;
}

SearchResult search_abc(const ToricSurface& s, Integer a, Integer b, Integer c, Integer bound) {
  SearchResult result;
  if (a < 0 || b < 0 || c < 0) {
    result.diagnostic = "a, b, c must be nonnegative";
    return result;
  }
  if (a + b != a * b + c) {
    result.diagnostic = "no realization exists: a + b = " + std::to_string(a + b) + " but a*b + c = " +
                        std::to_string(a * b + c) + " (line-bundle collections force a + b = ab + c)";
    return result;
  }

  const std::size_t rho = s.picard_rank();
  const CohDims want_d{a, 0, 0};
  const CohDims want_e{a * b + c, 0, 0};
  const CohDims want_diff{b, 0, 0};
  CohomologyCache coh(s);

  std::vector<std::vector<Integer>> ds;
  std::vector<std::vector<Integer>> es;
  for_each_point(rho, bound, [&](const std::vector<Integer>& p) {
    const bool back_zero = coh(negate(p)).is_zero();
    if (!back_zero) return;
    if (coh(p) == want_d) ds.push_back(p);
    if (coh(p) == want_e) es.push_back(p);
  });
  for (const auto& d : ds) {
    for (const auto& e : es) {
      if (coh(minus(e, d)) != want_diff) continue;
      if (!coh(minus(d, e)).is_zero()) continue;
      result.pairs.push_back({d, e});
    }
  }
  return result;
}

std::vector<std::vector<Integer>> search_kronecker(const ToricSurface& s, Integer arrows, Integer bound) {
  std::vector<std::vector<Integer>> out;
  const CohDims want{arrows, 0, 0};
  CohomologyCache coh(s);
  for_each_point(s.picard_rank(), bound, [&](const std::vector<Integer>& p) {
    if (coh(p) == want && coh(negate(p)).is_zero()) out.push_back(p);
  });
  return out;
}

StarReport verify_sn_family(std::size_t n, std::size_t bound) {
  if (n > bound)
    throw CollectionError("star size " + std::to_string(n) + " exceeds the configured bound " +
                          std::to_string(bound));

  // Keep a set of pairwise non-adjacent (-1)-rays. Blowing up a wall with
  // both ends unselected adds one; otherwise trade a selected ray for a fresh
  // one next to it, which frees a wall.
  ToricSurface s = surfaces::projective_plane();
  std::vector<bool> selected(s.ray_count(), false);
  std::size_t blowups = 0;
  auto count = [&] { return static_cast<std::size_t>(std::count(selected.begin(), selected.end(), true)); };
  while (count() < n) {
    const std::size_t rays = s.ray_count();
    std::optional<std::size_t> free_wall;
    for (std::size_t w = 0; w < rays && !free_wall; ++w)
      if (!selected[w] && !selected[(w + 1) % rays]) free_wall = w;
    if (free_wall) {
      s = blow_up(s, *free_wall);
      selected.insert(selected.begin() + static_cast<std::ptrdiff_t>(*free_wall + 1), true);
    } else {
      const auto it = std::find(selected.begin(), selected.end(), true);
      const auto old = static_cast<std::size_t>(it - selected.begin());
      const std::size_t wall = (old + rays - 1) % rays;
      s = blow_up(s, wall);
      selected.insert(selected.begin() + static_cast<std::ptrdiff_t>(wall + 1), true);
      selected[old >= wall + 1 ? old + 1 : old] = false;
    }
    ++blowups;
  }

  StarReport report{n, s, blowups, {}, VerifyResult{}, false, {}};
  for (std::size_t i = 0; i < selected.size(); ++i)
    if (selected[i]) report.exceptional_rays.push_back(i);
  for (std::size_t i : report.exceptional_rays) {
    if (s.self_intersections()(static_cast<Eigen::Index>(i)) != -1)
      throw CollectionError("configuration error: ray " + std::to_string(i) + " is not a (-1)-curve");
    for (std::size_t j : report.exceptional_rays)
      if (s.adjacent(i, j)) throw CollectionError("configuration error: exceptional curves meet");
  }

  std::vector<SheafObject> objs{LineBundle{s.zero_divisor()}};
  for (std::size_t r : report.exceptional_rays) objs.emplace_back(CurveSheaf{r});
  const Collection coll(s, std::move(objs));
  report.verification = verify_collection(coll, true);
  if (!report.verification.ok) {
    const auto& w = *report.verification.witness;
    report.failures.push_back(to_string(w.kind) + " at (" + std::to_string(w.i) + "," + std::to_string(w.j) + ")");
    return report;
  }
  const HomMatrix& h = report.verification.homs;
  for (std::size_t i = 1; i <= n; ++i) {
    if (h(0, i) != kPointExt) report.failures.push_back("Ext(O, O_E" + std::to_string(i) + ") != (1,0,0)");
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j && h(i, j) != kZeroExt)
        report.failures.push_back("Ext(O_E" + std::to_string(i) + ", O_E" + std::to_string(j) + ") != 0");
  }
  if (!(endo_quiver(coll) == quivers::star(n))) report.failures.push_back("endomorphism quiver is not S_n");
  report.matches_star = report.failures.empty();
  return report;
}

Table1Case table1_row(std::size_t row, Integer m) {
  Table1Case t;
  switch (row) {
    case 0: t = {"(0,n,n), n=2m", {0, 2 * m, 2 * m}, m, {0, 1, 0, -1}, {m - 1, m, 1, 0}, false, {}}; break;
    case 1: t = {"(0,n,n), n=2m+1", {0, 2 * m + 1, 2 * m + 1}, m, {1, 0, 0, -1}, {1, 1, m, m - 1}, false, {}}; break;
    case 2: t = {"(n,0,n), n=2m", {2 * m, 0, 2 * m}, m, {0, 1, m, m - 1}, {1, 1, m - 1, m - 1}, false, {}}; break;
    case 3: t = {"(n,0,n), n=2m+1", {2 * m + 1, 0, 2 * m + 1}, m, {0, 1, m, m}, {1, 1, m, m - 1}, false, {}}; break;
    case 4: t = {"(1,n,1), n=2m", {1, 2 * m, 1}, m, {1, 1, 0, -1}, {m, m, 1, 0}, false, {}}; break;
    case 5: t = {"(1,n,1), n=2m+1", {1, 2 * m + 1, 1}, m, {0, 0, 0, 1}, {m, m, 1, 1}, false, {}}; break;
    case 6: t = {"(n,1,1), n=2m", {2 * m, 1, 1}, m, {m - 1, m, 1, 0}, {m - 1, m, 1, 1}, false, {}}; break;
    case 7: t = {"(n,1,1), n=2m+1", {2 * m + 1, 1, 1}, m, {0, 1, m, m}, {1, 1, m, m}, false, {}}; break;
    default: throw CollectionError("table row index out of range");
  }
  return t;
}

std::vector<Table1Case> verify_table1(Integer m_max) {
  if (m_max < 1) throw CollectionError("m_max must be at least 1");
  const ToricSurface s = surfaces::bl3p2();
  std::vector<Table1Case> out;
  for (std::size_t row = 0; row < kTable1Rows; ++row) {
    for (Integer m = 1; m <= m_max; ++m) {
      Table1Case t = table1_row(row, m);
      const Divisor d = s.lift_pic(t.d);
      const Divisor e = s.lift_pic(t.e);
      const auto [a, b, c] = t.abc;
      auto check = [&](const std::string& what, const Divisor& div, const CohDims& want) {
        const CohDims got = cohomology(s, div);
        if (got != want) t.failures.push_back("h(" + what + ") = " + to_string(got) + ", expected " + to_string(want));
      };
      check("-D", -d, {});
      check("-E", -e, {});
      check("D-E", d - e, {});
      check("D", d, {a, 0, 0});
      check("E-D", e - d, {b, 0, 0});
      check("E", e, {a * b + c, 0, 0});
      t.ok = t.failures.empty();
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace surfemb
