#ifndef DELTOID_DELTAMATROID_HPP
#define DELTOID_DELTAMATROID_HPP

#include "deltoid/core.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltoid {

/// A matroid on a labeled ground set. Subsets are masks over label positions.
class Matroid {
public:
  Matroid() = default;
  /// Validates the basis exchange axiom.
  Matroid(std::vector<int> ground, std::vector<Mask> bases);
  static Matroid from_labels(std::vector<int> ground, const std::vector<std::vector<int>> &bases);

  static Matroid uniform(int r, int k);
  static Matroid free(int k) { return uniform(k, k); }
  /// Cycle matroid of a graph on vertices 0..nv-1; ground labels 1..|edges|.
  static Matroid graphic(int nv, const std::vector<std::pair<int, int>> &edges);

  const std::vector<int> &ground() const { return ground_; }
  const std::vector<Mask> &bases() const { return bases_; }
  int size() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }

  bool is_basis(Mask s) const;
  bool is_independent(Mask s) const;
  bool is_spanning(Mask s) const { return rank_of(s) == rank_; }
  int rank_of(Mask s) const;
  int corank(Mask s) const { return rank_ - rank_of(s); }
  int nullity(Mask s) const { return popcount(s) - rank_of(s); }
  std::vector<Mask> independent_sets() const;

  Matroid dual() const;
  Matroid relabeled(std::vector<int> ground) const;
  /// Label position, or -1.
  int position(int label) const;
  Mask mask_of(const std::vector<int> &labels) const;
  std::vector<int> labels_of(Mask s) const;

  /// Max-weight basis by the greedy algorithm.
  Mask greedy_max(const std::vector<Q> &weight) const;

  friend bool operator==(const Matroid &, const Matroid &) = default;

private:
  std::vector<int> ground_;
  std::vector<Mask> bases_;
  int rank_ = 0;
};

Matroid direct_sum(const Matroid &a, const Matroid &b);

/// Raised when a family violates the symmetric exchange axiom.
struct NotADeltaMatroid : InvalidArgument {
  NotADeltaMatroid(const std::string &what, Mask f1, Mask f2, int i)
      : InvalidArgument(what), first(f1), second(f2), element(i) {}
  Mask first, second;
  int element;
};

/// Feasible sets are stored as B ∩ [n] masks, sorted and unique.
class DeltaMatroid {
public:
  DeltaMatroid() : feasible_{0} {}
  DeltaMatroid(int n, std::vector<Mask> feasible);
  /// Skips the exchange check; the family must already be a delta-matroid.
  static DeltaMatroid trusted(int n, std::vector<Mask> feasible);
  static DeltaMatroid from_sets(int n, const std::vector<AdmissibleSet> &sets);

  int n() const { return n_; }
  const std::vector<Mask> &feasible() const { return feasible_; }
  std::vector<AdmissibleSet> feasible_sets() const;
  bool is_feasible(Mask m) const;

  friend bool operator==(const DeltaMatroid &, const DeltaMatroid &) = default;
  friend auto operator<=>(const DeltaMatroid &, const DeltaMatroid &) = default;

private:
  struct Unchecked {};
  DeltaMatroid(int n, std::vector<Mask> feasible, Unchecked);

  int n_ = 0;
  std::vector<Mask> feasible_;
};

/// A witness (F1, F2, i) violating symmetric exchange, if any.
std::optional<NotADeltaMatroid> exchange_violation(int n, const std::vector<Mask> &family);

DeltaMatroid deletion(const DeltaMatroid &d, int i);
DeltaMatroid contraction(const DeltaMatroid &d, int i);
DeltaMatroid projection(const DeltaMatroid &d, int i);
/// Projects away every element of the mask.
DeltaMatroid projection_set(const DeltaMatroid &d, Mask elems);

DeltaMatroid dual(const DeltaMatroid &d);
DeltaMatroid product(const DeltaMatroid &a, const DeltaMatroid &b);
DeltaMatroid twist(const SignedPermutation &w, const DeltaMatroid &d);

int distance(const DeltaMatroid &d, const AdmissibleSet &s);
int distance_mask(const DeltaMatroid &d, Mask s);

DeltaMatroid from_bases(const Matroid &m);
DeltaMatroid from_independents(const Matroid &m);

/// The feasible set minimizing (resp. maximizing) functionals in the open cone C_w.
AdmissibleSet w_min_feasible(const DeltaMatroid &d, const SignedPermutation &w);
AdmissibleSet w_max_feasible(const DeltaMatroid &d, const SignedPermutation &w);
Mask w_min_mask(const DeltaMatroid &d, const SignedPermutation &w);
Mask w_max_mask(const DeltaMatroid &d, const SignedPermutation &w);

Mask loops(const DeltaMatroid &d);
Mask coloops(const DeltaMatroid &d);

struct Cornering {
  SignedPermutation w;
  Matroid matroid;
};
/// Some sign flip w with twist(w, D) = IP(M), if one exists.
std::optional<Cornering> is_cornered(const DeltaMatroid &d);

std::vector<DeltaMatroid> enumerate_deltamatroids(int n);
/// Uniform over delta-matroids on [n, n̄] by rejection from random families (n ≤ 4 by default).
DeltaMatroid random_deltamatroid(int n, std::uint64_t seed);

std::string to_string(const DeltaMatroid &d);

} // namespace deltoid

#endif
