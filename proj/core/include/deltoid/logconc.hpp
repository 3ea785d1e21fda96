#ifndef DELTOID_LOGCONC_HPP
#define DELTOID_LOGCONC_HPP

#include "deltoid/deltamatroid.hpp"
#include "deltoid/polyring.hpp"
#include "deltoid/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltoid {

enum class HomogenizeTarget { Isotropic, Enveloping, Multivariable };

/// Isotropic: u^a v^b ↦ x^a (y−q)^b (y+q)^{n−a−b}.
/// Enveloping: u^a v^b ↦ (2z+x)^a (y−z)^b (y+w)^{n−a−b}.
/// Multivariable: u^I v^b ↦ x^I (y−q)^b (y+q)^{n−|I|−b} over x1..xn.
MPoly homogenize_u(const DeltaMatroid &d, HomogenizeTarget target);

/// Nonnegative, a_k² ≥ a_{k−1}a_{k+1}, no internal zeros. An all-zero sequence passes.
bool is_log_concave_sequence(const std::vector<Q> &a, std::string *why = nullptr);

/// A coefficient slice x_i^k x_j^{d′−k} x^m of a homogeneous polynomial.
struct Slice {
  std::string first, second;
  std::map<std::string, int> rest;
  std::vector<Q> coeffs;
  std::string reason;
};

struct UnbrokenVerdict {
  bool ok = true;
  std::optional<Slice> witness;
};
UnbrokenVerdict is_log_concave_unbroken(const MPoly &f);

/// N(f) = Σ a_m x^m / m!.
MPoly normalization(const MPoly &f);
/// Exchange property on exponent vectors of equal degree.
bool is_m_convex(const std::vector<std::vector<int>> &support);

struct LorentzianVerdict {
  bool ok = true;
  std::string reason;
};
/// Whether N(f) is Lorentzian: nonnegative coefficients, M-convex support and
/// every (d−2)-fold derivative Hessian with at most one positive eigenvalue.
LorentzianVerdict is_denormalized_lorentzian(const MPoly &f);

/// Positive real roots of a real-rooted polynomial, counted by Descartes' rule.
int sign_variations(const std::vector<Q> &coeffs);
/// Characteristic polynomial det(λI − A), lowest degree first.
std::vector<Q> characteristic_polynomial(const std::vector<std::vector<Q>> &a);
/// Number of positive eigenvalues of a symmetric rational matrix.
int positive_eigenvalues(const std::vector<std::vector<Q>> &a);

/// Coefficients of (y+1)ⁿ Int((y−1)/(y+1)) from the interlace coefficients.
std::vector<Q> interlace_transform(const std::vector<Z> &interlace, int n);

/// a_k = #{T ⊆ S : T independent, S spanning, |S − T| = k}.
std::vector<Z> spanning_independent_counts(const Matroid &m);

/// Both homogenizations and the multivariable one pass the Lorentzian test, and
/// each passing polynomial also has a log-concave unbroken array.
Report lorentzian_checks(const DeltaMatroid &d);
/// U_D(2u,−u), (y+1)ⁿ Int_D((y−1)/(y+1)), k!·[u^k]U_D(u,0) and k!·[u^k]U_D(u,−1);
/// for D = P(M) also the a_k cross-check and a_k² ≥ (k+1)/k·a_{k−1}a_{k+1}.
Report corollary_checks(const DeltaMatroid &d, const std::optional<Matroid> &m = std::nullopt);
/// The inequality a_k² ≥ (k+1)/k·a_{k−1}a_{k+1} alone.
Report matroid_inequality(const Matroid &m);

struct FlawlessResult {
  std::size_t scanned = 0;
  std::vector<std::pair<DeltaMatroid, std::vector<Q>>> counterexamples;
};
/// Tests a_i ≤ a_{n−i} for i ≤ n/2 on the coefficients of U_D(2u,−u).
FlawlessResult flawless_scan(const std::vector<DeltaMatroid> &family);

} // namespace deltoid

#endif
