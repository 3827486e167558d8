#include "stabmod/ring.hpp"

namespace stabmod::exactla {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingSpec RingSpec::prime_field(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("RingSpec: p must be prime");
    return RingSpec{RingMode::PrimeField, p, 1};
}

RingSpec RingSpec::truncation(unsigned p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("RingSpec: p must be prime");
    if (m < 1) throw std::invalid_argument("RingSpec: precision exponent must be >= 1");
    return RingSpec{RingMode::Truncation, p, m};
}

RingSpec RingSpec::p_local(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("RingSpec: p must be prime");
    return RingSpec{RingMode::PLocal, p, 1};
}

unsigned RingSpec::exponent() const {
    switch (mode) {
        case RingMode::PrimeField: return 1;
        case RingMode::Truncation: return m;
        case RingMode::PLocal:
            throw std::invalid_argument("RingSpec: PLocal mode has no finite exponent");
    }
    throw std::logic_error("RingSpec: bad mode");
}

mpz_class RingSpec::modulus() const { return pow_ui(mpz_class(p), exponent()); }

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long int_valuation(const mpz_class& n, unsigned p) {
    if (n == 0) throw std::invalid_argument("int_valuation: zero input");
    mpz_class q = abs(n), rem;
    long v = 0;
    mpz_class pz(p);
    for (;;) {
        mpz_class quo;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
        if (rem != 0) return v;
        q = quo;
        ++v;
    }
}

bool is_p_local(const mpq_class& v, unsigned p) {
    mpq_class c = v;
    c.canonicalize();
    if (c != v) return false;
    return mpz_divisible_ui_p(v.get_den().get_mpz_t(), p) == 0;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& modulus) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not a unit");
    return r;
}

mpq_class RingSpec::normalize(const mpq_class& v) const {
    mpq_class c = v;
    c.canonicalize();
    if (mode == RingMode::PLocal) {
        if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p) != 0)
            throw std::invalid_argument("RingSpec: denominator divisible by p in PLocal mode");
        return c;
    }
    // Modular modes: the representative is an integer in [0, p^e). A rational
    // input with unit denominator is folded in via the inverse.
    mpz_class mod = modulus();
    mpz_class num = c.get_num(), den = c.get_den();
    mpz_class rep;
    if (den == 1) {
        mpz_fdiv_r(rep.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    } else {
        if (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0)
            throw std::invalid_argument("RingSpec: denominator divisible by p in modular mode");
        mpz_class inv = mod_inverse(den, mod);
        rep = num * inv;
        mpz_fdiv_r(rep.get_mpz_t(), rep.get_mpz_t(), mod.get_mpz_t());
    }
    return mpq_class(rep);
}

long RingSpec::valuation(const mpq_class& v) const {
    if (mode == RingMode::PLocal) {
        if (v == 0) return kInfiniteValuation;
        // Denominator is coprime to p, so only the numerator contributes.
        return int_valuation(v.get_num(), p);
    }
    mpq_class c = normalize(v);
    long cap = exponent();
    if (c == 0) return cap;
    return std::min(cap, int_valuation(c.get_num(), p));
}

mpq_class RingSpec::unit_inverse(const mpq_class& v) const {
    if (!is_unit(v)) throw std::invalid_argument("RingSpec: inverse of a non-unit");
    if (mode == RingMode::PLocal) return mpq_class(1) / v;
    mpq_class c = normalize(v);
    return mpq_class(mod_inverse(c.get_num(), modulus()));
}

std::string RingSpec::describe() const {
    switch (mode) {
        case RingMode::PrimeField: return "F_" + std::to_string(p);
        case RingMode::Truncation:
            return "Z/" + std::to_string(p) + "^" + std::to_string(m);
        case RingMode::PLocal: return "Z_(" + std::to_string(p) + ")";
    }
    return "?";
}

}  // namespace stabmod::exactla
