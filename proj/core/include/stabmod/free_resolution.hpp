#pragma once

#include <random>

#include "stabmod/covers.hpp"

namespace stabmod::homalg {

/// Free resolution ... -> F_1 -> F_0 -> M over F_p[G], F_r = F_p[G]^{s_r},
/// built with free covers on generating sets found by seeded random span
/// tests. No radical or projective-cover machinery is involved, so Ext
/// computed from this resolution is independent of the minimal-resolution
/// path. Basis order of F_r: copy-major, element-minor (index i*|G| + g).
struct FreeResolution {
    std::vector<long> gen_counts;  // s_0, s_1, ...
    // chosen_gens[r]: generators of the r-th module-to-cover in its own
    // coordinates (M for r = 0, the (r-1)-st syzygy after that).
    std::vector<Matrix> chosen_gens;
    // kernel_bases[r]: basis of the r-th syzygy inside F_r = F_p[G]^{s_r}.
    std::vector<Matrix> kernel_bases;
};

FreeResolution free_resolution(const rep::RepModule& m, long length, std::mt19937_64& rng);

/// dim_{F_p} H^r(Hom_G(F_*, S)) for r = 0..r_max (raw, unnormalized).
std::vector<long> ext_dims_from_free(const rep::RepModule& m, const rep::RepModule& s, long r_max,
                                     std::mt19937_64& rng);

struct ExtDims {
    long from_minimal = 0;  // multiplicity of P_S in P_r (already normalized)
    long from_free = 0;     // H^r of the Hom complex over the free resolution, / dim End(S)
    bool agree = false;
};

/// Both computations of dim_{End(S)} Ext^r(M, S); flags disagreement.
ExtDims ext_dim(const rep::RepModule& m, size_t simple_index, long r, const SplitContext& ctx,
                uint64_t seed);

/// All degrees at once (cheaper: one resolution each way).
std::vector<ExtDims> ext_dims(const rep::RepModule& m, size_t simple_index, long r_max,
                              const SplitContext& ctx, uint64_t seed);

}  // namespace stabmod::homalg
