#include "surfemb/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace surfemb {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  for (const auto& [s, t] : arrows_) {
    if (s >= vertex_count_ || t >= vertex_count_)
      throw QuiverError("arrow " + std::to_string(s) + "->" + std::to_string(t) +
                        " has an endpoint out of range");
    if (s == t) throw QuiverError("loop at vertex " + std::to_string(s));
  }
  if (topological_order().size() != vertex_count_)
    throw QuiverError("quiver has an oriented cycle");
}

IntMatrix Quiver::adjacency() const {
  const auto n = static_cast<Eigen::Index>(vertex_count_);
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [s, t] : arrows_) a(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) += 1;
  return a;
}

std::vector<Vertex> Quiver::topological_order() const {
  std::vector<std::size_t> indegree(vertex_count_, 0);
  std::vector<std::vector<Vertex>> out(vertex_count_);
  for (const auto& [s, t] : arrows_) {
    ++indegree[t];
    out[s].push_back(t);
  }
  std::vector<Vertex> order;
  std::vector<Vertex> ready;
  for (Vertex v = vertex_count_; v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (Vertex w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return order;
}

bool Quiver::is_sink(Vertex v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.first == v; });
}

bool Quiver::is_source(Vertex v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.second == v; });
}

Quiver Quiver::full_subquiver(const VertexSet& vertices) const {
  std::vector<std::optional<Vertex>> index(vertex_count_);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] >= vertex_count_) throw QuiverError("subquiver vertex out of range");
    index[vertices[k]] = k;
  }
  std::vector<Arrow> arrows;
  for (const auto& [s, t] : arrows_)
    if (index[s] && index[t]) arrows.emplace_back(*index[s], *index[t]);
  return Quiver(vertices.size(), std::move(arrows));
}

Quiver Quiver::relabel(const std::vector<Vertex>& perm) const {
  if (perm.size() != vertex_count_) throw QuiverError("relabel: permutation has wrong size");
  std::vector<Arrow> arrows;
  arrows.reserve(arrows_.size());
  for (const auto& [s, t] : arrows_) arrows.emplace_back(perm.at(s), perm.at(t));
  return Quiver(vertex_count_, std::move(arrows));
}

bool operator==(const Quiver& a, const Quiver& b) {
  return a.vertex_count_ == b.vertex_count_ && a.adjacency() == b.adjacency();
}

namespace quivers {

namespace {

// Star-shaped tree with arms of the given lengths, arrows pointing outward
// from the centre (vertex 0).
Quiver outward_tree(const std::vector<std::size_t>& arms) {
  std::vector<Arrow> arrows;
  Vertex next = 1;
  for (std::size_t len : arms) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < len; ++k) {
      arrows.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Quiver(next, std::move(arrows));
}

}  // namespace

Quiver linear_a(std::size_t n) {
  if (n == 0) throw QuiverError("A_n needs n >= 1");
  std::vector<Arrow> arrows;
  for (Vertex i = 0; i + 1 < n; ++i) arrows.emplace_back(i, i + 1);
  return Quiver(n, std::move(arrows));
}

Quiver dynkin_d(std::size_t n) {
  if (n < 4) throw QuiverError("D_n needs n >= 4");
  return outward_tree({n - 3, 1, 1});
}

Quiver dynkin_e(std::size_t n) {
  if (n < 6 || n > 8) throw QuiverError("E_n needs 6 <= n <= 8");
  return outward_tree({n - 4, 2, 1});
}

Quiver euclidean_a(std::size_t n) {
  if (n == 0) throw QuiverError("affine A_n needs n >= 1");
  std::vector<Arrow> arrows;
  for (Vertex i = 0; i < n; ++i) arrows.emplace_back(i, i + 1);
  arrows.emplace_back(0, n);
  return Quiver(n + 1, std::move(arrows));
}

Quiver euclidean_d(std::size_t n) {
  if (n < 4) throw QuiverError("affine D_n needs n >= 4");
  // Vertices 0,1 hang off 2; chain 2..n-2; vertices n-1, n hang off n-2.
  std::vector<Arrow> arrows{{2, 0}, {2, 1}};
  for (Vertex i = 2; i + 2 < n; ++i) arrows.emplace_back(i, i + 1);
  arrows.emplace_back(n - 2, n - 1);
  arrows.emplace_back(n - 2, n);
  return Quiver(n + 1, std::move(arrows));
}

Quiver euclidean_e(std::size_t n) {
  switch (n) {
    case 6: return outward_tree({2, 2, 2});
    case 7: return outward_tree({3, 3, 1});
    case 8: return outward_tree({5, 2, 1});
    default: throw QuiverError("affine E_n needs 6 <= n <= 8");
  }
}

Quiver kronecker(std::size_t arrows) { return three_vertex(arrows, 0, 0).full_subquiver({0, 1}); }

Quiver star(std::size_t n) { return outward_tree(std::vector<std::size_t>(n, 1)); }

Quiver three_vertex(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Arrow> arrows;
  arrows.insert(arrows.end(), a, Arrow{0, 1});
  arrows.insert(arrows.end(), b, Arrow{1, 2});
  arrows.insert(arrows.end(), c, Arrow{0, 2});
  return Quiver(3, std::move(arrows));
}

}  // namespace quivers

ExactMatrix euler_matrix_simples(const Quiver& q) {
  const IntMatrix a = q.adjacency();
  return to_exact(IntMatrix::Identity(a.rows(), a.cols()) - a);
}

ExactMatrix paths_matrix(const Quiver& q) {
  // In a topological order I - A is upper unitriangular.
  const std::vector<Vertex> order = q.topological_order();
  const ExactMatrix e = euler_matrix_simples(q);
  const ExactMatrix inv = invert_unitriangular(e(order, order));
  ExactMatrix p(e.rows(), e.cols());
  p(order, order) = inv;
  return p;
}

ObstructionReport obstruction_report(const ExactMatrix& euler) {
  if (euler.rows() != euler.cols()) throw LinalgError("Euler matrix must be square");
  ObstructionReport r;
  r.rank_chi_minus = rank_rational(chi_minus(euler));
  r.signature_chi_plus = signature_symmetric(chi_plus(euler));
  r.passes_rank = r.rank_chi_minus <= 2;
  r.passes_signature = r.signature_chi_plus.n_minus <= 2;
  return r;
}

ObstructionReport obstruction_report(const Quiver& q, std::size_t subquiver_bound) {
  ObstructionReport r = obstruction_report(euler_matrix_simples(q));
  if (!r.passes_rank && q.vertex_count() <= subquiver_bound)
    r.forbidden_witness = forbidden_full_subquiver(q, subquiver_bound);
  return r;
}

std::optional<VertexSet> forbidden_full_subquiver(const Quiver& q, std::size_t bound) {
  const std::size_t n = q.vertex_count();
  if (n > bound)
    throw QuiverError("forbidden_full_subquiver: " + std::to_string(n) +
                      " vertices exceeds the bound " + std::to_string(bound));
  const ExactMatrix minus = chi_minus(euler_matrix_simples(q));
  // A skew form on at most 3 vertices has rank <= 2, so start at size 4.
  for (std::size_t k = 4; k <= n; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      VertexSet subset;
      for (Vertex v = 0; v < n; ++v)
        if (mask[v]) subset.push_back(v);
      if (rank_rational(minus(subset, subset)) > 2) return subset;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return std::nullopt;
}

Quiver reflect(const Quiver& q, Vertex v) {
  if (v >= q.vertex_count()) throw QuiverError("reflect: vertex out of range");
  if (!q.is_sink(v) && !q.is_source(v))
    throw QuiverError("reflect: vertex " + std::to_string(v) + " is neither a sink nor a source");
  std::vector<Arrow> arrows = q.arrows();
  for (auto& [s, t] : arrows)
    if (s == v || t == v) std::swap(s, t);
  return Quiver(q.vertex_count(), std::move(arrows));
}

bool hochschild_vertex_bound(const Quiver& q, std::size_t rho) { return q.vertex_count() <= 2 + rho; }

}  // namespace surfemb
