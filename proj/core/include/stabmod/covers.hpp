#pragma once

#include "stabmod/complex.hpp"
#include "stabmod/simples.hpp"

namespace stabmod::homalg {

using rep::RepModule;
using rep::SimpleInfo;

/// Splitting data for a group with normal Sylow-p subgroup P and
/// p'-complement H, together with the simple F_p[H]-modules. All cover
/// constructions work relative to this context.
struct SplitContext {
    grp::GroupPtr group;
    grp::GroupHom sylow;          // P -> G, normal, full Sylow-p
    grp::GroupHom complement;     // H -> G, |H| = [G : P], H meets P trivially
    grp::GroupHom to_complement;  // G -> H, kills P (the h-part of g = u h)
    std::vector<SimpleInfo> h_simples;

    const SimpleInfo& simple(size_t i) const { return h_simples[i]; }
    size_t simple_count() const { return h_simples.size(); }
};

/// An H-module viewed as a G-module with P acting trivially.
RepModule inflate_simple_to_group(const RepModule& s, const SplitContext& ctx);

SplitContext make_split_context(grp::GroupPtr g, grp::GroupHom sylow, grp::GroupHom complement);
/// For groups of order coprime to 3 (SD16, Q8): P trivial, H the whole group.
SplitContext semisimple_context(const grp::GroupPtr& g);
SplitContext g24_context();
SplitContext n_level_context(int k);

/// Reduction of a module to the residue field F_p (entries reduced mod p;
/// identity on PrimeField modules).
RepModule reduce_mod_p(const RepModule& m);

/// Radical quotient M / (pM + I_P M) as an H-module, with the projection in
/// the chosen quotient coordinates.
struct HeadResult {
    RepModule head_h;           // over H, PrimeField mode
    Matrix projection;          // head coords from module coords (over F_p)
    Matrix section;             // a right inverse of projection
    std::vector<long> isotypic; // normalized multiplicities against h_simples
};
HeadResult head(const RepModule& m, const SplitContext& ctx);

/// Projective cover: P = sum of Ind_H^G of lifted simples matching the head,
/// with the covering map lifted by H-averaging. Works over PrimeField,
/// Truncation, and (for character heads) PLocal coefficients.
struct CoverResult {
    RepModule cover;
    rep::ModuleHom map;             // cover -> M, surjective
    std::vector<long> multiplicities;  // of P_S per simple, in h_simples order
};
CoverResult projective_cover(const RepModule& m, const SplitContext& ctx);

bool is_projective(const RepModule& m, const SplitContext& ctx);

/// Heller translate: kernel of the projective cover map, with the inclusion.
struct HellerResult {
    RepModule omega;
    Matrix inclusion;  // rank(M_cover) x rank(omega), columns form a free basis
};
HellerResult heller(const RepModule& m, const SplitContext& ctx);

/// Multiplicity table of a minimal resolution: rows indexed by degree,
/// columns by the simples of H.
struct MultiplicityTable {
    std::vector<std::string> simple_names;
    std::vector<std::vector<long>> rows;

    bool operator==(const MultiplicityTable&) const = default;
};

struct ResolutionPrefix {
    std::vector<CoverResult> steps;   // steps[r] covers the r-th syzygy
    std::vector<RepModule> syzygies;  // syzygies[r] = Omega^{r+1}(M), after steps[r]
    MultiplicityTable table;
};
ResolutionPrefix minimal_resolution(const RepModule& m, long r_max, const SplitContext& ctx);

/// Stable hom dimension: maps factoring through a projective are exactly the
/// maps factoring through the cover of N. PrimeField mode.
long stable_hom(const RepModule& m, const RepModule& n, const SplitContext& ctx);

}  // namespace stabmod::homalg
