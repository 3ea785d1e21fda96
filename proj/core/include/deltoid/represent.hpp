#ifndef DELTOID_REPRESENT_HPP
#define DELTOID_REPRESENT_HPP

#include "deltoid/deltamatroid.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace deltoid {

/// A matrix over the prime field F_p, entries kept in [0, p).
class FqMatrix {
public:
  FqMatrix() = default;
  FqMatrix(std::int64_t p, int rows, int cols);
  FqMatrix(std::int64_t p, const std::vector<std::vector<std::int64_t>> &rows);

  std::int64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::int64_t v);

  int rank() const;
  /// Whether the square submatrix on the given columns is invertible.
  bool nonsingular_columns(const std::vector<int> &cols) const;
  /// Drops one column.
  FqMatrix without_column(int c) const;
  /// Appends a zero column.
  FqMatrix with_zero_column() const;
  /// Reduced row echelon form with zero rows removed.
  FqMatrix rref() const;

  friend bool operator==(const FqMatrix &, const FqMatrix &) = default;

private:
  std::int64_t p_ = 2;
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Columns are labeled 1..n, 1̄..n̄ and, for type B, a final column 0.
enum class FormType { B, D };

/// q = x₁x_{1̄} + ⋯ + x_nx_{n̄} (+ x₀² for type B) vanishes on the row span.
bool is_isotropic(const FqMatrix &l, FormType type);
/// Feasible sets are the maximal S whose column-selected n×n minor is nonzero.
DeltaMatroid delta_from_isotropic(const FqMatrix &l, FormType type);

/// Every isotropic row space of dimension n, one reduced echelon matrix each.
std::vector<FqMatrix> enumerate_isotropic(std::int64_t p, int n, FormType type);

/// A simple graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Throws InvalidArgument on loops, repeated edges or out-of-range vertices.
  void validate() const;
};

/// The row span of [I_n | A_G] over F₂.
FqMatrix adjacency_matrix_rep(const Graph &g);
DeltaMatroid adjacency_delta(const Graph &g);

/// U°_{r,n}: feasible S ∪ ([n̄]∖S̄) for |S| ≤ r, |S| ≡ r mod 2.
DeltaMatroid circ_uniform(int r, int n);
/// Interlace coefficients of U°_{r,n} from the binomial closed form.
std::vector<Z> circ_uniform_interlace(int r, int n);
/// [[I_r, A | B, 0], [0, 0 | −Aᵀ, I_{n−r}]] over F_p with seeded random A and skew B,
/// redrawn until its delta-matroid is U°_{r,n}; InternalError after 16 draws.
FqMatrix circ_uniform_realization(int r, int n, std::int64_t p = 10007, unsigned seed = 0);

} // namespace deltoid

#endif
