#ifndef DELTOID_SCHUBERT_HPP
#define DELTOID_SCHUBERT_HPP

#include "deltoid/polyhedra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltoid {

/// Ω_S: the lower Gale interval [[n̄], S].
DeltaMatroid standard_schubert(const AdmissibleSet &s);
/// Ω^A_T on [n]: bases B with |B| = |T| and B ≤ T in the dominance order.
Matroid schubert_matroid(int n, Mask t);
/// All 𝔖^B_n images of standard Schubert delta-matroids, deduplicated by feasible family.
std::vector<DeltaMatroid> all_schubert(int n);
bool is_schubert(const DeltaMatroid &d);

/// (m + C) ∩ [0,1]ⁿ for C the negative root cone, via the root-reduction steps.
std::optional<DeltaMatroid> cone_cube_intersect(const IntPoint &m);
/// The reduced vector in {0,1}ⁿ together with the number of steps taken.
struct ConeReduction {
  std::optional<IntPoint> apex;
  int steps = 0;
};
ConeReduction reduce_cone_apex(const IntPoint &m);

struct IndicatorTerm {
  Z coeff;
  IntPoint translation;
  BnPolytope polytope;
};

/// Σ coeff · 1_{translation + polytope}.
struct IndicatorCombination {
  int n = 0;
  std::vector<IndicatorTerm> terms;

  /// Value of the combination at a rational point.
  Z evaluate(const Point &x) const;
};

/// 1_P as a combination of lattice translates of Schubert delta-matroid polytopes.
IndicatorCombination schubert_decompose(const BnPolytope &p);

struct IndicatorVerdict {
  bool grid = true;
  bool random = true;
  bool valuative = true;
  std::size_t grid_points = 0;
  std::string detail;
  bool ok() const { return grid && random && valuative; }
};

/// Compares the combination with 1_target (or with 0) on the grid (1/4n)Zⁿ, at
/// random points of denominator 4n+1, and through lattice counts of tP for t = 1,2,3.
IndicatorVerdict verify_indicator(const IndicatorCombination &comb,
                                  const std::optional<BnPolytope> &target,
                                  unsigned seed = 0);

/// Coloop-free Schubert delta-matroids by cornered rank.
std::vector<long> coloop_free_schubert_census(int n);

} // namespace deltoid

#endif
