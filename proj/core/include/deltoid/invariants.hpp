#ifndef DELTOID_INVARIANTS_HPP
#define DELTOID_INVARIANTS_HPP

#include "deltoid/deltamatroid.hpp"
#include "deltoid/polyring.hpp"
#include "deltoid/report.hpp"

namespace deltoid {

/// d_D(S) for every maximal S, indexed by S ∩ [n], by breadth-first search on the cube.
std::vector<int> distance_table(const DeltaMatroid &d);

/// Coefficients of Int_D(v); entry k counts S with d_D(S) = k.
std::vector<Z> interlace_coefficients(const DeltaMatroid &d);
MPoly interlace(const DeltaMatroid &d);

/// Σ_I u^{|I|} Int_{D(I)}(v).
MPoly u_poly_explicit(const DeltaMatroid &d);
/// Σ_I u^I Int_{D(I)}(v) in variables u1..un, v.
MPoly u_poly_multi(const DeltaMatroid &d);

enum class Pivot { First, Last };
/// Deletion/contraction/projection recursion with memoization.
MPoly u_poly_recursive(const DeltaMatroid &d, Pivot pivot = Pivot::First);

/// T_M(x, y) by the corank-nullity expansion.
MPoly tutte(const Matroid &m);
/// (u+1)^{n−r} T_M(u+2, (u+v+1)/(u+1)) with the denominators cleared termwise.
MPoly tutte_u_substitution(const Matroid &m);
/// Σ_{T⊆S} u^{|S−T|} v^{corank(S)+nullity(T)}.
MPoly base_polytope_u_formula(const Matroid &m);

/// U_{IP(M)} against the Tutte substitution, U_{P(M)} against the double sum,
/// and the projection-sum identity at a symbolic shift a.
Report check_matroid_identities(const Matroid &m);
/// Σ_I a^{|I|} U_{D(I)}(u,v) = U_D(u+a, v).
Report check_projection_sum(const DeltaMatroid &d);

} // namespace deltoid

#endif
