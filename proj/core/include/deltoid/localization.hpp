#ifndef DELTOID_LOCALIZATION_HPP
#define DELTOID_LOCALIZATION_HPP

#include "deltoid/polyhedra.hpp"
#include "deltoid/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltoid {

/// K-side values are Laurent polynomials in T1..Tn; Chow-side values are
/// polynomials in t1..tn, possibly with further parameter variables.
enum class Side { K, Chow };

/// The torus-fixed points of X_{B_n}, in enumerate_group order (n ≤ 5 by default).
const std::vector<SignedPermutation> &fixed_points(int n);
std::size_t fixed_point_index(const SignedPermutation &w);

std::vector<std::string> k_variables(int n);
std::vector<std::string> chow_variables(int n);
/// T_a with T_ā = T_a^{-1}.
MPoly k_var(int a);
/// t_a with t_ā = −t_a.
MPoly chow_var(int a);

/// Tangent weights e_{w(k)} − e_{w(k+1)} (k < n) and e_{w(n)} at w, as exponent vectors.
std::vector<std::vector<int>> tangent_weights(const SignedPermutation &w);

class EqClass {
public:
  EqClass() = default;
  /// Values in fixed_points(n) order.
  EqClass(int n, Side side, std::vector<MPoly> values);
  static EqClass constant(int n, Side side, const MPoly &c);

  int n() const { return n_; }
  Side side() const { return side_; }
  const std::vector<MPoly> &values() const { return values_; }
  const MPoly &at(const SignedPermutation &w) const { return values_[fixed_point_index(w)]; }

  EqClass &operator+=(const EqClass &o);
  EqClass &operator-=(const EqClass &o);
  EqClass &operator*=(const EqClass &o);
  friend EqClass operator+(EqClass a, const EqClass &b) { return a += b; }
  friend EqClass operator-(EqClass a, const EqClass &b) { return a -= b; }
  friend EqClass operator*(EqClass a, const EqClass &b) { return a *= b; }
  friend bool operator==(const EqClass &a, const EqClass &b);

private:
  void check_compatible(const EqClass &o) const;

  int n_ = 0;
  Side side_ = Side::K;
  std::vector<MPoly> values_;
};

/// f_w = T^{−v} for v the vertex minimizing functionals in C_w.
EqClass class_of_polytope(const BnPolytope &p);

/// First failing edge congruence, described in words.
std::optional<std::string> class_violation(const EqClass &f);
bool validate_class(const EqClass &f);

/// (w·f)_{w′} = f_{w^{-1}w′}(T_{w(1)}, …, T_{w(n)}), and likewise on the Chow side.
EqClass act(const SignedPermutation &w, const EqClass &f);
/// T ↦ T^{-1} on the K side; degree-d parts times (−1)^d on the Chow side.
EqClass dual(const EqClass &f);

/// [I_D]_w = Σ_{i∈B_w} T_i.
EqClass iso_class(const DeltaMatroid &d);
/// [Q^E_D]_w = |B̄^max ∩ w([n])| + Σ_{i∈B^max∩w([n])} T_i.
EqClass env_quot(const DeltaMatroid &d);
/// [S^E_D]_w = n − |B̄^max ∩ w([n])| + Σ_{i∈w([n]), i∉B^max} T_i.
EqClass env_sub(const DeltaMatroid &d);
/// [M]_w = n + Σ_{i∈w([n])} T_i.
EqClass box_class(int n);
/// ⊞O(1) with the O(1_∞) linearization on each factor, and its dual ⊞O(−1).
EqClass boxplus_o1(int n);
EqClass boxplus_o_minus1(int n);

/// c^T(f, u) = Π (1 + ⟨m, t⟩u)^a over the terms a·T^m, truncated at t-degree n.
EqClass chern(const EqClass &f, const MPoly &u = MPoly(1));
/// c^T(f, u)^{-1}, truncated at t-degree n.
EqClass segre(const EqClass &f, const MPoly &u = MPoly(1));
/// T_i ↦ 1 + t_i where ε_i(w) = +1 and T_i ↦ (1 − t_i)^{-1} otherwise.
EqClass phi_B(const EqClass &f);
/// T_i ↦ (1 − t_i)^{-1} where ε_i(w) = +1 and T_i ↦ 1 + t_i otherwise.
EqClass zeta_B(const EqClass &f);
/// γ_w = t_{w(1)}, the first Chern class of the cross-polytope bundle.
EqClass gamma_class(int n);
/// h_i = c₁(π_i^* O(1)).
EqClass h_class(int n, int i);
/// Σ_{k≤n} (y·g)^k for a Chow class g.
EqClass geometric(const EqClass &g, const MPoly &y = MPoly(1));

/// Σ_w [deg n part of f_w](t)/Π weights(t), at three generic points that must agree.
/// Parameter variables other than t1..tn survive in the result.
MPoly integrate(const EqClass &f, unsigned seed = 0);
Q integrate_value(const EqClass &f, unsigned seed = 0);
/// Σ_w f_w(T)/Π(1 − T^{−χ}) through the expansion T_i = (1+ε)^{a_i}, three choices of a.
Z euler_char(const EqClass &f);

/// χ = ∫ φ^B(E)·c(⊞O(1)) and χ = ∫ ζ^B(E)·c(⊞O(−1))·(1+γ+⋯+γⁿ).
Report check_hrr(const EqClass &k_class, const std::optional<Z> &chi = std::nullopt);
/// HRR for the line bundle of P(D) (χ by lattice count) and for the tautological classes.
Report check_hrr(const DeltaMatroid &d);
/// ∫ c(S^E, u) c(Q^E, v) = vⁿ Int_D(u/v).
Report check_interlace_integral(const DeltaMatroid &d);
/// U_D(u, v) = ∫ c(⊞O(1), u) c(S^E, v) c(Q^E).
Report check_u_integral(const DeltaMatroid &d);
/// ∫ s(Q^∨, z) c(Q, w) (1 − yγ)^{-1} c(⊞O(1), x) = (y+w)ⁿ U_D((2z+x)/(y+w), (y−z)/(y+w)).
Report check_enveloping_integral(const DeltaMatroid &d);
/// ∫ c(I^∨, q) (1 − yγ)^{-1} Π(1 + x_i h_i) = (y+q)ⁿ U_D(x/(y+q), (y−q)/(y+q)).
Report check_isotropic_integral(const DeltaMatroid &d);
/// The four exterior/symmetric power series identities for [Q^E]^∨ and [S^E]^∨.
Report check_nice_chern(const DeltaMatroid &d, unsigned seed = 0);
/// Restriction to each coordinate X_{B_{n−1}} gives 1 + the class of D(i).
Report check_restriction(const DeltaMatroid &d);
/// Every tautological class validates and [S^E] + [Q^E] = [M].
Report check_classes(const DeltaMatroid &d);

/// All of the above.
Report verify_identities(const DeltaMatroid &d, unsigned seed = 0);

} // namespace deltoid

#endif
