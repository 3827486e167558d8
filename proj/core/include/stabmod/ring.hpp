#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace stabmod::exactla {

/// Valuation reported for an exact zero in PLocal mode.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

enum class RingMode { PrimeField, Truncation, PLocal };

/// One of the three coefficient modes: the prime field F_p, the truncation
/// Z/p^m, or the exact p-local rationals (denominators coprime to p).
/// A RingSpec is fixed per matrix; modes never mix implicitly.
struct RingSpec {
    RingMode mode = RingMode::PrimeField;
    unsigned p = 3;
    unsigned m = 1;  // precision exponent, meaningful for Truncation

    static RingSpec prime_field(unsigned p);
    static RingSpec truncation(unsigned p, unsigned m);
    static RingSpec p_local(unsigned p);

    bool is_modular() const { return mode != RingMode::PLocal; }
    /// Exponent e with modulus p^e (1 for PrimeField). Modular modes only.
    unsigned exponent() const;
    mpz_class modulus() const;

    /// Canonical representative: reduced mod p^e in modular modes, lowest
    /// terms with denominator coprime to p in PLocal mode (throws otherwise).
    mpq_class normalize(const mpq_class& v) const;

    /// p-adic valuation. Modular modes cap at exponent() (0 maps to the cap);
    /// PLocal reports kInfiniteValuation for 0.
    long valuation(const mpq_class& v) const;

    bool is_unit(const mpq_class& v) const { return valuation(v) == 0; }
    /// Inverse of a unit (throws on non-units).
    mpq_class unit_inverse(const mpq_class& v) const;

    std::string describe() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

bool is_prime(unsigned n);

/// Largest e with p^e | n (n != 0).
long int_valuation(const mpz_class& n, unsigned p);

/// Checks the PLocalScalar invariant: lowest terms, denominator coprime to p.
bool is_p_local(const mpq_class& v, unsigned p);

mpz_class pow_ui(const mpz_class& base, unsigned long e);

/// Inverse of a mod p^e (a must be a unit).
mpz_class mod_inverse(const mpz_class& a, const mpz_class& modulus);

}  // namespace stabmod::exactla
