#pragma once

#include <functional>

#include "stabmod/sequences.hpp"

namespace stabmod::homalg {

/// A complex at each level of the quotient tower N_1 <- N_2 <- ..., with
/// transition maps covering the down maps by coinvariants along their
/// kernels. Transitions are validated to be equivariant over the inflated
/// action and to commute with the differentials exactly.
struct TowerComplex {
    grp::Tower tower;
    std::vector<ChainComplex> levels;            // levels[t] over N_{t+1}
    std::vector<std::vector<Matrix>> transitions;  // [t][pos]: level t+1 -> level t
};

/// Per-pair, per-position divisibility certificate: at every position with
/// nonzero lower-level homology, the transition image lies in
/// p^d * (homology at the lower level) + boundaries. This is pro-triviality
/// evidence for the inverse limit of the homology tower, not a claim of
/// profinite exactness.
struct TowerCertificate {
    long divisibility_target = 1;
    std::vector<ExactnessCertificate> level_reports;
    // checked[pair][pos]: true if the position needed (and passed) the
    // divisibility check or was vacuous (zero homology)
    std::vector<std::vector<bool>> divisibility_ok;
    std::vector<std::vector<bool>> vacuous;
    bool all_pass = false;
};

/// Builds the tower of one of the sequence families, k = 1..k_max.
using LevelBuilder = std::function<ChainComplex(int)>;

TowerComplex build_tower_complex(int k_max, const LevelBuilder& builder);

TowerComplex dihedral_sequence_tower(int k_max);
TowerComplex induced_sequence_tower(int k_max);
TowerComplex spliced_complex_tower(int k_max);

TowerCertificate tower_check(const TowerComplex& t, long divisibility_target);

/// Composite-step variant: checks pairs of levels j apart, with composed
/// transitions and divisibility target 3^(d * j) per composite step.
TowerCertificate tower_check_composite(const TowerComplex& t, long d_per_step, int span);

/// Transition matrix Ind_H^{N_{k+1}}(X) -> Ind_H^{N_k}(X) over a down map.
Matrix induced_transition(const grp::GroupHom& down, const grp::GroupHom& emb_hi,
                          const grp::GroupHom& emb_lo, const rep::RepModule& x);

}  // namespace stabmod::homalg
