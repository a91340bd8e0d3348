// End-to-end reproduction checks: quiver classification, the explicit
// examples, the divisor table on Bl3P2, the Kronecker and star families, and
// the rank/signature theorems on many toric surfaces.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfemb/json_io.hpp"

namespace surfemb {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  json detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20140527;

/// Worked examples, exposed for tests and the CLI.
namespace examples {
/// The five-vertex Gram matrix with rk chi^- = 2 and a 3-dimensional negative
/// definite subspace for chi^+.
ExactMatrix five_vertex_gram();
/// Four vertices, arrows 0->2, 0->1, 1->3, 1->2, 2->3.
Quiver four_vertex_quiver();
/// <O, O(D1-D3), O(D1), O(D2)> on Bl2P2.
Collection four_vertex_collection();
}  // namespace examples

/// Number of directed paths i -> j (including the trivial one) by DFS.
IntMatrix dfs_path_counts(const Quiver& q);

/// h^*(P1 x P1, O(a, b)) from the Kunneth formula and h^*(P1, O(d)).
CohDims kunneth_p1xp1(Integer a, Integer b);

CriterionResult check_classification();
CriterionResult check_five_vertex();
CriterionResult check_four_vertex();
CriterionResult check_table1(Integer m_max);
CriterionResult check_isolated_220();
CriterionResult check_kronecker();
CriterionResult check_star_family();
CriterionResult check_surface_theorems(std::uint64_t seed = kDefaultSeed);
CriterionResult check_kunneth();
CriterionResult check_constraint_solver();

std::vector<CriterionResult> run_acceptance(Integer m_max = 5, std::uint64_t seed = kDefaultSeed);

}  // namespace surfemb
