#pragma once

#include "stabmod/complex.hpp"
#include "stabmod/catalog.hpp"

namespace stabmod::homalg {

/// The four-term exact sequence over G24 derived from its dihedral quotient:
///   0 -> R -> Ind_{Q8} R -> Ind_{Q8} R(theta) -> R(theta) -> 0
/// with middle map 1 (x) 1 |-> (c - c^-1) (x) theta, over the exact 3-local
/// rationals.
ChainComplex g24_dihedral_sequence();

/// The three-term complex over N_k resolving the trivial module through the
/// dihedral quotient N_k / D:
///   Ind_{G24} R(theta) -> Ind_{G24} R -> R
/// with left map 1 (x) theta |-> (g - g^-1) (x) 1. Exact over the profinite
/// normalizer; at finite level its homology is a pro-zero tower.
ChainComplex n_level_dihedral_sequence(int k);

/// The g24_dihedral_sequence induced up to N_k, with the middle terms
/// rewritten as the canonical Ind_{Q8}^{N_k} modules through the induction
/// transitivity isomorphism:
///   Ind_{G24} R -> Ind_{Q8} R -> Ind_{Q8} R(theta) -> Ind_{G24} R(theta)
ChainComplex n_level_induced_sequence(int k);

/// Splice of the two previous complexes at Ind_{G24} R(theta):
///   Ind_{G24} R -> Ind_{Q8} R -> Ind_{Q8} R(theta) -> Ind_{G24} R -> R
ChainComplex n_level_spliced_complex(int k);

/// Matrix of the monomial isomorphism
/// Ind_G^N(Ind_H^G X) -> Ind_H^N X for a rank-1 module X over H.
Matrix induction_transitivity_iso(const grp::GroupHom& mid_in_big,
                                  const grp::GroupHom& small_in_mid,
                                  const grp::GroupHom& small_in_big,
                                  const rep::Character& x_char);

}  // namespace stabmod::homalg
