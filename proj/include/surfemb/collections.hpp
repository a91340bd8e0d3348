// Exceptional collections of line bundles and invariant-curve structure
// sheaves on toric surfaces: verification, endomorphism quivers at the level
// of dimensions, and searches for three-object realizations of Q_{a,b,c}.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "surfemb/quiver.hpp"
#include "surfemb/toric_surface.hpp"

namespace surfemb {

class CollectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LineBundle {
  Divisor divisor;
};

/// O_C for the invariant curve C = D_ray.
struct CurveSheaf {
  std::size_t ray = 0;
};

using SheafObject = std::variant<LineBundle, CurveSheaf>;

struct Collection {
  ToricSurface surface;
  std::vector<SheafObject> objects;

  Collection(ToricSurface s, std::vector<SheafObject> objs);
  std::size_t size() const { return objects.size(); }
};

/// Convenience: O, O(d_1), O(d_2), ... given in Pic coordinates.
Collection line_collection_pic(const ToricSurface& s, const std::vector<std::vector<Integer>>& pic);

/// Ext^*(E_i, E_j).
ExtDims ext_dims(const Collection& c, std::size_t i, std::size_t j);

/// Ext triples for every ordered pair of objects.
class HomMatrix {
 public:
  HomMatrix() = default;
  explicit HomMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  std::size_t size() const { return n_; }
  ExtDims& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  const ExtDims& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  friend bool operator==(const HomMatrix&, const HomMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtDims> entries_;
};

HomMatrix hom_matrix(const Collection& c);

enum class Violation { NotExceptional, BackwardExt, ForwardHigherExt };

std::string to_string(Violation v);

struct VerifyResult {
  bool ok = false;
  HomMatrix homs;
  struct Witness {
    std::size_t i = 0;
    std::size_t j = 0;
    ExtDims dims{};
    Violation kind = Violation::NotExceptional;
  };
  /// First violated pair in row-major order.
  std::optional<Witness> witness;
};

VerifyResult verify_collection(const Collection& c, bool strong);

/// Forward Hom dimensions (upper triangular, unit diagonal). Requires a
/// strong exceptional collection.
IntMatrix endo_quiver_dims(const Collection& c);

/// Quiver whose path counts reproduce the forward Hom dimensions, i.e.
/// adjacency I - H^{-1}. Throws CollectionError ("relations present") when
/// that matrix has a negative entry.
Quiver endo_quiver(const Collection& c);

using Triple = std::array<Integer, 3>;

/// (a, b, c) for a three-object strong collection: a = hom(0,1), b = hom(1,2),
/// c = hom(0,2) - a b.
Triple abc(const Collection& c);

/// Nonnegative (a, b, c) in [0, max]^3 with a + b = a b + c, lexicographic.
std::vector<Triple> solve_abc(Integer max_value);

inline constexpr Integer kDefaultSearchBound = 3;

struct PicPair {
  std::vector<Integer> d;
  std::vector<Integer> e;
  friend bool operator==(const PicPair&, const PicPair&) = default;
};

struct SearchResult {
  std::vector<PicPair> pairs;
  /// Set when the request was rejected before searching.
  std::optional<std::string> diagnostic;
};

/// All (D, E) with Pic coordinates in [-bound, bound] such that
/// <O, O(D), O(E)> is strong exceptional with abc = (a, b, c).
SearchResult search_abc(const ToricSurface& s, Integer a, Integer b, Integer c,
                        Integer bound = kDefaultSearchBound);

/// All D with Pic coordinates in [-bound, bound] such that <O, O(D)> is a
/// strong exceptional pair with hom(0,1) = arrows: a realization of K_n.
std::vector<std::vector<Integer>> search_kronecker(const ToricSurface& s, Integer arrows,
                                                   Integer bound = kDefaultSearchBound);

inline constexpr std::size_t kDefaultStarBound = 6;

struct StarReport {
  std::size_t n = 0;
  ToricSurface surface;
  std::size_t blowups = 0;
  std::vector<std::size_t> exceptional_rays;
  VerifyResult verification;
  bool matches_star = false;
  std::vector<std::string> failures;

  bool ok() const { return verification.ok && matches_star; }
};

/// Realizes the star quiver S_n as <O, O_{E_1}, ..., O_{E_n}> for pairwise
/// disjoint (-1)-curves E_i on an iterated toric blow-up of P2.
StarReport verify_sn_family(std::size_t n, std::size_t bound = kDefaultStarBound);

struct Table1Case {
  std::string family;
  Triple abc{};
  Integer m = 0;
  std::vector<Integer> d;
  std::vector<Integer> e;
  bool ok = false;
  std::vector<std::string> failures;
};

/// The eight parametrized divisor families on Bl3P2 for 1 <= m <= m_max,
/// each checked with the six cohomology assertions.
std::vector<Table1Case> verify_table1(Integer m_max);

/// Row definitions: family label, abc and (D, E) in Pic coordinates for m.
Table1Case table1_row(std::size_t row, Integer m);
inline constexpr std::size_t kTable1Rows = 8;

}  // namespace surfemb
