// Acyclic quivers, their Euler forms in the basis of simple modules, and the
// two Euler-form obstructions to embedding D^b(kQ) into a surface.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "surfemb/exact_linalg.hpp"
#include "surfemb/rational.hpp"

namespace surfemb {

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = std::size_t;
using Arrow = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Finite acyclic quiver. Parallel arrows are allowed, loops and oriented
/// cycles are rejected on construction.
class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// A(i,j) = number of arrows i -> j.
  IntMatrix adjacency() const;
  std::vector<Vertex> topological_order() const;

  bool is_sink(Vertex v) const;
  bool is_source(Vertex v) const;

  /// Full subquiver on the given vertices, relabelled 0..k-1 in the given order.
  Quiver full_subquiver(const VertexSet& vertices) const;

  /// Quiver with vertex v renamed to perm[v].
  Quiver relabel(const std::vector<Vertex>& perm) const;

  /// Equality as labelled multigraphs (arrow order is irrelevant).
  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

namespace quivers {

Quiver linear_a(std::size_t n);
/// D_n (n >= 4) with all arrows pointing away from the branch vertex.
Quiver dynkin_d(std::size_t n);
/// E_6, E_7, E_8 with all arrows pointing away from the branch vertex.
Quiver dynkin_e(std::size_t n);
/// Affine A_n on n+1 vertices: path 0 -> 1 -> ... -> n and the arrow 0 -> n.
/// For n = 1 this is the Kronecker quiver with two arrows.
Quiver euclidean_a(std::size_t n);
/// Affine D_n (n >= 4) on n+1 vertices, arrows directed away from vertex 2.
Quiver euclidean_d(std::size_t n);
/// Affine E_6, E_7, E_8.
Quiver euclidean_e(std::size_t n);
Quiver kronecker(std::size_t arrows);
/// Star S_n: centre 0 with one arrow 0 -> i for i = 1..n.
Quiver star(std::size_t n);
/// Q_{a,b,c}: a arrows 0 -> 1, b arrows 1 -> 2, c arrows 0 -> 2.
Quiver three_vertex(std::size_t a, std::size_t b, std::size_t c);

}  // namespace quivers

/// Euler form in the basis of simples: I - A.
ExactMatrix euler_matrix_simples(const Quiver& q);

/// P(i,j) = number of paths i -> j, including the trivial path.
ExactMatrix paths_matrix(const Quiver& q);

template <typename Derived>
ExactMatrix chi_minus(const Eigen::MatrixBase<Derived>& e) {
  return to_exact(antisymmetrize(e));
}

template <typename Derived>
ExactMatrix chi_plus(const Eigen::MatrixBase<Derived>& e) {
  return to_exact(symmetrize(e));
}

struct ObstructionReport {
  std::size_t rank_chi_minus = 0;
  Signature signature_chi_plus;
  bool passes_rank = true;
  bool passes_signature = true;
  std::optional<VertexSet> forbidden_witness;

  bool passes() const { return passes_rank && passes_signature; }
  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

inline constexpr std::size_t kDefaultSubquiverBound = 15;

/// Obstructions for an arbitrary square Euler (Gram) matrix.
ObstructionReport obstruction_report(const ExactMatrix& euler);

/// Obstructions for a quiver; the forbidden-subquiver witness is filled in
/// when the rank test fails and the quiver is within the subset-search bound.
ObstructionReport obstruction_report(const Quiver& q,
                                     std::size_t subquiver_bound = kDefaultSubquiverBound);

/// Smallest vertex subset whose full subquiver has rank(chi^-) > 2.
/// Subsets are scanned by increasing size, lexicographically within a size.
/// Throws QuiverError if vertex_count exceeds the bound.
std::optional<VertexSet> forbidden_full_subquiver(
    const Quiver& q, std::size_t bound = kDefaultSubquiverBound);

/// BGP reflection at a sink or source: reverses every arrow at v.
Quiver reflect(const Quiver& q, Vertex v);

/// Additive bound from HH_0: |Q_0| <= 2 + rho.
bool hochschild_vertex_bound(const Quiver& q, std::size_t rho);

}  // namespace surfemb
