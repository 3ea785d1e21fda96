#ifndef DELTOID_ENVELOPE_HPP
#define DELTOID_ENVELOPE_HPP

#include "deltoid/polyhedra.hpp"
#include "deltoid/report.hpp"
#include "deltoid/represent.hpp"

#include <optional>
#include <string>

namespace deltoid {

/// Matroids here live on the labels 1..n and −1..−n (the latter standing for ī).
enum class Construction { DirectSum, FreeProduct, FromRepresentation, UserSupplied };
std::string to_string(Construction c);

struct EnvelopeWitness {
  DeltaMatroid delta;
  Matroid matroid;
  Construction construction = Construction::UserSupplied;
};

/// Half-size of a ground set of the form [n, n̄]; InvalidArgument otherwise.
int doubled_size(const Matroid &m);

/// Support numbers of env(P(M)) on all rays, by greedy maximization.
std::vector<Q> env_support(const Matroid &m);
/// Support numbers of env(IP(M)).
std::vector<Q> env_indep_support(const Matroid &m);
/// env(P(M)) = 2P(D) − e_[n].
bool is_enveloping(const Matroid &m, const DeltaMatroid &d);

/// M ⊕ M̄^⊥ for M on [n].
Matroid envelope_base(const Matroid &m);
/// Bases S ∪ T̄ with |S| + |T| = n, S independent in M and T spanning in M^⊥.
Matroid envelope_indep(const Matroid &m);
/// Column matroid of L with the x₀ column dropped; L must be type-B isotropic.
Matroid envelope_from_rep(const FqMatrix &l);

/// Relabels x ↦ w(x).
Matroid act_on_labels(const SignedPermutation &w, const Matroid &m);
/// Witnesses transported along Weyl images, duals, minors and products.
EnvelopeWitness twist_witness(const SignedPermutation &w, const EnvelopeWitness &e);
EnvelopeWitness dual_witness(const EnvelopeWitness &e);
/// M/i∖ī for D/i, or M∖i/ī for D∖i, relabeled onto [n−1].
EnvelopeWitness minor_witness(const EnvelopeWitness &e, int i, bool contract);
EnvelopeWitness product_witness(const EnvelopeWitness &a, const EnvelopeWitness &b);

/// Matroid M on [n] with D = P(M) or D = IP(M), if any.
std::optional<Matroid> as_base_polytope(const DeltaMatroid &d);
std::optional<Matroid> as_indep_polytope(const DeltaMatroid &d);

/// Tries P(M) and IP(M) forms on every Weyl image, then small isotropic
/// subspaces over F₂ and F₃; each result is checked with is_enveloping.
std::optional<EnvelopeWitness> find_envelope(const DeltaMatroid &d);

/// env(IP(M)) = P(D) + □ − e_[n], and the loop/coloop correspondence.
Report check_envelope_lemmas(const EnvelopeWitness &e);

} // namespace deltoid

#endif
