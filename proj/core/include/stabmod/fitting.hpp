#pragma once

#include <random>

#include "stabmod/covers.hpp"

namespace stabmod::homalg {

/// Splitting of M under an equivariant endomorphism f into a part where f is
/// invertible and a part where it is nilpotent mod p. Truncation mode.
struct FittingResult {
    Matrix image_basis;   // columns: free basis of im(f^infinity)
    Matrix kernel_basis;  // columns: free basis of ker(f^infinity)
    RepModule image_part;
    RepModule kernel_part;
    Matrix f_on_image;    // invertible
    Matrix f_on_kernel;   // nilpotent mod p
    Matrix recomposition; // [image_basis | kernel_basis], invertible
    long stabilized_at = 0;
    long nilpotency_exponent = 0;  // least n with (f|ker mod p)^n = 0
};

FittingResult fitting(const RepModule& m, const Matrix& f);

/// Generating set of End_G(M) over Z/p^m (or F_p), one matrix per generator.
std::vector<Matrix> endomorphism_generators(const RepModule& m);

struct SummandDescription {
    long rank = 0;
    std::vector<long> head_isotypic;  // against ctx.h_simples
    long end_dim_mod_p = 0;

    auto operator<=>(const SummandDescription&) const = default;
    std::string label(const SplitContext& ctx) const;
};

struct DecompositionReport {
    std::vector<std::pair<SummandDescription, long>> summands;  // with multiplicities
    unsigned precision = 0;
    uint64_t seed = 0;
    bool stable = true;  // rank multiset invariant under random basis change re-runs
    std::vector<long> rank_multiset() const;
};

/// Krull-Schmidt decomposition over Z/p^m (m >= 2) or F_p by idempotent
/// splitting: random endomorphisms, characteristic/minimal polynomial
/// factoring mod p, Newton lifting e <- 3e^2 - 2e^3 to full precision.
/// `stability_rounds` re-runs after random equivariant basis changes.
DecompositionReport ks_decompose(const RepModule& m, const SplitContext& ctx, uint64_t seed,
                                 int stability_rounds = 2);

/// Raw splitting into indecomposable summands (restricted actions).
std::vector<RepModule> split_indecomposable(const RepModule& m, std::mt19937_64& rng);

/// Seeded random module over Z/3^m[G24]: a random direct sum of catalog
/// atoms (characters, the 2-dim simple, small induced modules) conjugated by
/// a random invertible base change. Total rank <= max_rank.
RepModule random_g24_module(RingSpec ring, long max_rank, std::mt19937_64& rng);

/// Conjugated copy of M by a random invertible matrix over its ring.
RepModule random_basis_change(const RepModule& m, std::mt19937_64& rng);

/// Random equivariant endomorphism: a random combination of End generators.
Matrix random_endomorphism(const std::vector<Matrix>& end_gens, const RingSpec& ring,
                           std::mt19937_64& rng);

}  // namespace stabmod::homalg
