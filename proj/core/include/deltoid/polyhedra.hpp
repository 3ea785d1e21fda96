#ifndef DELTOID_POLYHEDRA_HPP
#define DELTOID_POLYHEDRA_HPP

#include "deltoid/deltamatroid.hpp"
#include "deltoid/polyring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace deltoid {

using Point = std::vector<Q>;
using IntPoint = std::vector<std::int64_t>;

/// ⟨x, e_S⟩ with e_ī = −e_i.
Q pairing(const Point &x, const AdmissibleSet &s);
std::int64_t pairing(const IntPoint &x, Mask pos, Mask neg);

/// A B_n generalized permutohedron stored by its support numbers h(S) on the
/// 3ⁿ−1 rays, indexed by ray_index.
class BnPolytope {
public:
  BnPolytope() = default;
  /// Validates that every chain vertex satisfies every ray inequality.
  BnPolytope(int n, std::vector<Q> support);

  static BnPolytope point(const Point &x);
  /// Convex hull of a finite point set; throws InvalidArgument if the hull is not a B_n polytope.
  static BnPolytope hull(int n, const std::vector<Point> &pts);
  static BnPolytope cube(int n);
  static BnPolytope cross_polytope(int n);
  /// Π_{B_n}, the hull of the signed permutations of (n, n−1, …, 1).
  static BnPolytope signed_permutohedron(int n);
  static BnPolytope simplex(const AdmissibleSet &s);
  static BnPolytope of(const DeltaMatroid &d);

  int n() const { return n_; }
  const std::vector<Q> &support() const { return h_; }
  const Q &h(const AdmissibleSet &s) const { return h_[ray_index(s)]; }
  const Q &h(int ray) const { return h_[ray]; }
  bool is_lattice() const;

  /// Maximizer of functionals in C_w: the chain solve ⟨x, e_{S_k}⟩ = h(S_k).
  Point vertex(const SignedPermutation &w) const;
  /// Minimizer of functionals in C_w.
  Point vertex_min(const SignedPermutation &w) const;
  std::vector<Point> vertices() const;
  bool contains(const Point &x) const;

  BnPolytope translate(const Point &t) const;
  BnPolytope dilate(const Q &k) const;
  friend BnPolytope operator+(const BnPolytope &a, const BnPolytope &b);
  friend bool operator==(const BnPolytope &, const BnPolytope &) = default;

private:
  struct Unchecked {};
  BnPolytope(int n, std::vector<Q> support, Unchecked) : n_(n), h_(std::move(support)) {}

  int n_ = 0;
  std::vector<Q> h_;
};

/// The first chain vertex and ray whose inequality fails, if any.
struct SupportViolation {
  SignedPermutation w;
  AdmissibleSet ray;
};
std::optional<SupportViolation> support_violation(int n, const std::vector<Q> &support);

/// Σ c·P over possibly negative integer coefficients; InvalidCombination if not a polytope.
BnPolytope minkowski_combine(int n, const std::vector<std::pair<Z, BnPolytope>> &terms);

struct DeltaDecomposition {
  int n = 0;
  /// c_S indexed by ray_index.
  std::vector<Z> coeff;
  /// Always zero: a translation by e_i is Δ⁰_{i} − Δ⁰_{ī}.
  std::vector<Z> translation;

  Z c(const AdmissibleSet &s) const { return coeff[ray_index(s)]; }
  /// Support numbers of Σ c_S Δ⁰_S + translation.
  std::vector<Q> support() const;
  /// The sets with c_S ≠ 0.
  std::vector<AdmissibleSet> support_sets() const;
};

DeltaDecomposition delta_decompose(const BnPolytope &p);
/// Decomposition from coefficient pairs (S, c_S).
DeltaDecomposition make_decomposition(int n, const std::vector<std::pair<AdmissibleSet, Z>> &c);
/// Σ c_S Δ⁰_S; InvalidCombination if not a polytope.
BnPolytope realize(const DeltaDecomposition &d);
/// c′ with c′_{i} = c_{i} − 1 for i ∈ [n], the decomposition of P − □.
DeltaDecomposition minus_cube(const DeltaDecomposition &d);

/// Number of maximal admissible τ admitting distinct representatives j(i) ∈ S_i.
long signed_transversal_count(const std::vector<AdmissibleSet> &sets);

/// Σ over ordered sequences (S_1..S_n) of |signed transversals| · Π c_{S_i}.
Q volume(const DeltaDecomposition &d);
/// n! · leading Ehrhart coefficient from lattice counts of tP, t = 0..n.
Q volume_oracle(const BnPolytope &p);

enum class PsiConvention { OrderedPsi, Multiset };
/// Lattice-count formula for P − □ in the given convention.
Q lattice_count_formula(const DeltaDecomposition &d, PsiConvention convention);

std::vector<IntPoint> lattice_points(const BnPolytope &p);
/// Lattice points of an arbitrary integer support vector (possibly not a valid polytope).
std::vector<IntPoint> lattice_points_of_support(int n, const std::vector<Q> &support);
std::size_t lattice_count(const BnPolytope &p);

/// Termwise x^d ↦ binom(x, d).
MPoly psi(const MPoly &f);
/// The volume polynomial in variables c1..cm attached to the listed sets.
MPoly volume_polynomial(const std::vector<AdmissibleSet> &sets);

/// P ∩ (m + [0,1]ⁿ), or nullopt if empty.
std::optional<BnPolytope> intersect_with_cube(const BnPolytope &p, const IntPoint &m);

} // namespace deltoid

#endif
