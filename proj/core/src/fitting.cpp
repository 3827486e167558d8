#include "stabmod/fitting.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "stabmod/catalog.hpp"

namespace stabmod::homalg {

using exactla::diagonalize;
using exactla::Diagonalization;
using exactla::howell_span;
using exactla::RingMode;
using rep::ActionMatrix;
using rep::mul;
using rep::RepModule;

// ---------------------------------------------------------------------------
// polynomials over F_p (coefficients ascending, trimmed)

namespace {

using Poly = std::vector<long>;

long pmod(long a, long p) { return ((a % p) + p) % p; }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = pmod(c[i + j] + a[i] * b[j], p);
    trim(c);
    return c;
}

Poly poly_sub(Poly a, const Poly& b, long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = pmod(a[i] - b[i], p);
    trim(a);
    return a;
}

long inv_mod(long a, long p) {
    a = pmod(a, p);
    for (long x = 1; x < p; ++x)
        if (pmod(a * x, p) == 1) return x;
    throw std::logic_error("inv_mod: not invertible");
}

/// division with remainder: a = q*b + r
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, long p) {
    if (b.empty()) throw std::invalid_argument("poly_divmod: division by zero");
    Poly q;
    long db = degree(b);
    long lead_inv = inv_mod(b.back(), p);
    while (degree(a) >= db) {
        long shift = degree(a) - db;
        long c = pmod(a.back() * lead_inv, p);
        if (static_cast<long>(q.size()) < shift + 1) q.resize(shift + 1, 0);
        q[shift] = pmod(q[shift] + c, p);
        for (long i = 0; i <= db; ++i)
            a[shift + i] = pmod(a[shift + i] - c * b[i], p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& b, long p) { return poly_divmod(a, b, p).second; }

Poly poly_monic(Poly f, long p) {
    if (f.empty()) return f;
    long s = inv_mod(f.back(), p);
    for (auto& c : f) c = pmod(c * s, p);
    return f;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

/// extended gcd: g = s*a + t*b
struct PolyGcdExt {
    Poly g, s, t;
};
PolyGcdExt poly_gcdext(Poly a, Poly b, long p) {
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        long s = inv_mod(a.back(), p);
        for (auto& c : a) c = pmod(c * s, p);
        for (auto& c : s0) c = pmod(c * s, p);
        for (auto& c : t0) c = pmod(c * s, p);
    }
    return {a, s0, t0};
}

Poly poly_powmod(Poly base, mpz_class e, const Poly& mod, long p) {
    Poly out{1};
    base = poly_mod(base, mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) out = poly_mod(poly_mul(out, base, p), mod, p);
        base = poly_mod(poly_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return out;
}

Poly poly_derivative(const Poly& f, long p) {
    Poly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(pmod(static_cast<long>(i) * f[i], p));
    trim(d);
    return d;
}

/// p-th root of f(x) = g(x^p): over F_p coefficients are fixed by Frobenius.
Poly poly_pth_root(const Poly& f, long p) {
    Poly g;
    for (size_t i = 0; i < f.size(); i += static_cast<size_t>(p)) g.push_back(f[i]);
    trim(g);
    return g;
}

void squarefree_factors(const Poly& f, long p, std::vector<Poly>& out);

/// distinct-degree then Cantor-Zassenhaus equal-degree splitting
void factor_squarefree(const Poly& f, long p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degree(f) <= 0) return;
    if (degree(f) == 1) {
        out.push_back(poly_monic(f, p));
        return;
    }
    Poly x{0, 1};
    Poly h = x;  // x^{p^d} mod f
    Poly rest = poly_monic(f, p);
    for (long d = 1; 2 * d <= degree(rest); ++d) {
        h = poly_powmod(h, p, rest, p);
        Poly g = poly_gcd(poly_sub(h, x, p), rest, p);
        if (degree(g) > 0) {
            // g is a product of irreducibles of degree d; split by CZ
            std::vector<Poly> stack{g};
            while (!stack.empty()) {
                Poly cur = stack.back();
                stack.pop_back();
                if (degree(cur) == d) {
                    out.push_back(poly_monic(cur, p));
                    continue;
                }
                for (;;) {
                    Poly r(static_cast<size_t>(degree(cur)), 0);
                    std::uniform_int_distribution<long> dist(0, p - 1);
                    for (auto& c : r) c = dist(rng);
                    trim(r);
                    if (r.empty()) continue;
                    mpz_class e = (exactla::pow_ui(mpz_class(p), static_cast<unsigned long>(d)) - 1) / 2;
                    Poly w = poly_powmod(r, e, cur, p);
                    w = poly_sub(w, Poly{1}, p);
                    Poly gg = poly_gcd(w, cur, p);
                    if (degree(gg) > 0 && degree(gg) < degree(cur)) {
                        stack.push_back(gg);
                        stack.push_back(poly_divmod(cur, gg, p).first);
                        break;
                    }
                }
            }
            rest = poly_divmod(rest, g, p).first;
            h = poly_mod(h, rest, p);
        }
        if (degree(rest) == 0) break;
    }
    if (degree(rest) > 0) out.push_back(poly_monic(rest, p));
}

void squarefree_factors(const Poly& f, long p, std::vector<Poly>& out) {
    // returns the distinct irreducible-free "layers"; callers re-factor
    Poly d = poly_derivative(f, p);
    if (d.empty()) {
        squarefree_factors(poly_pth_root(f, p), p, out);
        return;
    }
    Poly g = poly_gcd(f, d, p);
    Poly sqfree = poly_divmod(f, g, p).first;
    out.push_back(sqfree);
    if (degree(g) > 0) squarefree_factors(g, p, out);
}

/// distinct monic irreducible factors of f with multiplicities
std::vector<std::pair<Poly, long>> poly_factor(const Poly& f, long p, std::mt19937_64& rng) {
    std::vector<Poly> layers;
    squarefree_factors(poly_monic(f, p), p, layers);
    std::vector<Poly> irreducibles;
    for (const Poly& layer : layers) factor_squarefree(layer, p, rng, irreducibles);
    // dedupe
    std::sort(irreducibles.begin(), irreducibles.end());
    irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end()), irreducibles.end());
    std::vector<std::pair<Poly, long>> out;
    for (const Poly& q : irreducibles) {
        long mult = 0;
        Poly rest = f;
        for (;;) {
            auto [quo, rem] = poly_divmod(rest, q, p);
            if (!rem.empty()) break;
            ++mult;
            rest = quo;
        }
        if (mult > 0) out.push_back({q, mult});
    }
    return out;
}

/// minimal polynomial of an F_p matrix: lcm over standard basis vectors of
/// the local dependence polynomials of their Krylov sequences
Poly min_poly(const Matrix& a) {
    const long n = a.rows();
    const long p = a.ring().p;
    Poly m{1};
    for (long seed = 0; seed < n; ++seed) {
        std::vector<std::vector<mpq_class>> rows;  // reduced Krylov vectors
        std::vector<long> pivots;
        std::vector<Poly> combos;  // combos[t](A) e_seed = rows[t]
        Matrix kry(a.ring(), n, 1);
        kry.set(seed, 0, 1);
        Poly local;
        for (long step = 0; step <= n; ++step) {
            std::vector<mpq_class> w(static_cast<size_t>(n));
            for (long i = 0; i < n; ++i) w[static_cast<size_t>(i)] = kry.at(i, 0);
            Poly wpoly(static_cast<size_t>(step) + 1, 0);
            wpoly.back() = 1;  // x^step
            for (size_t t = 0; t < rows.size(); ++t) {
                const mpq_class c = w[static_cast<size_t>(pivots[t])];
                if (c == 0) continue;
                long ci = pmod(c.get_num().get_si(), p);
                for (long i = 0; i < n; ++i)
                    w[static_cast<size_t>(i)] = a.ring().normalize(
                        w[static_cast<size_t>(i)] - c * rows[t][static_cast<size_t>(i)]);
                Poly scaled = combos[t];
                for (auto& cc : scaled) cc = pmod(cc * ci, p);
                wpoly = poly_sub(wpoly, scaled, p);
            }
            long piv = -1;
            for (long i = 0; i < n; ++i)
                if (w[static_cast<size_t>(i)] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                local = wpoly;  // wpoly(A) e_seed = 0, monic of degree `step`
                break;
            }
            mpq_class inv = a.ring().unit_inverse(w[static_cast<size_t>(piv)]);
            long ii = pmod(inv.get_num().get_si(), p);
            for (long i = 0; i < n; ++i)
                w[static_cast<size_t>(i)] = a.ring().normalize(w[static_cast<size_t>(i)] * inv);
            for (auto& cc : wpoly) cc = pmod(cc * ii, p);
            rows.push_back(std::move(w));
            pivots.push_back(piv);
            combos.push_back(std::move(wpoly));
            kry = a * kry;
        }
        if (local.empty()) throw std::logic_error("min_poly: no dependence found");
        Poly g = poly_gcd(m, local, p);
        m = poly_divmod(poly_mul(m, local, p), g, p).first;
        if (degree(m) == n) break;
    }
    return poly_monic(m, p);
}

Matrix poly_eval_matrix(const Poly& f, const Matrix& a) {
    const long n = a.rows();
    Matrix out(a.ring(), n, n);
    Matrix pw = Matrix::identity(a.ring(), n);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) out = out + pw.scaled(mpq_class(f[i]));
        if (i + 1 < f.size()) pw = pw * a;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Matrix> endomorphism_generators(const RepModule& m) {
    const RingSpec ring = m.ring();
    const long r = m.rank();
    std::vector<int> gens = m.group()->generating_set();
    Matrix sys(ring, static_cast<long>(gens.size()) * r * r, r * r);
    long row0 = 0;
    for (int g : gens) {
        Matrix a = m.act_dense(g);
        Matrix block = a.kron(Matrix::identity(ring, r)) -
                       Matrix::identity(ring, r).kron(a.transpose());
        for (long i = 0; i < block.rows(); ++i)
            for (long j = 0; j < block.cols(); ++j)
                if (block.at(i, j) != 0) sys.set_raw(row0 + i, j, block.at(i, j));
        row0 += block.rows();
    }
    Matrix ker = exactla::kernel(sys);
    std::vector<Matrix> out;
    for (long c = 0; c < ker.cols(); ++c) {
        Matrix f(ring, r, r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) f.set(i, j, ker.at(i * r + j, c));
        out.push_back(std::move(f));
    }
    return out;
}

Matrix random_endomorphism(const std::vector<Matrix>& end_gens, const RingSpec& ring,
                           std::mt19937_64& rng) {
    if (end_gens.empty()) throw std::invalid_argument("random_endomorphism: empty generator set");
    mpz_class mod = ring.modulus();
    std::uniform_int_distribution<unsigned long> dist(0, 1ul << 30);
    Matrix out(ring, end_gens[0].rows(), end_gens[0].cols());
    for (const Matrix& e : end_gens) {
        mpz_class c = mpz_class(static_cast<unsigned long>(dist(rng))) % mod;
        out = out + e.scaled(mpq_class(c));
    }
    return out;
}

namespace {

void require_equivariant(const RepModule& m, const Matrix& f, const char* where) {
    if (f.rows() != m.rank() || f.cols() != m.rank())
        throw std::invalid_argument(std::string(where) + ": shape mismatch");
    for (int g : m.group()->generating_set())
        if (!(mul(f, m.act(g)) == mul(m.act(g), f)))
            throw std::invalid_argument(std::string(where) +
                                        ": endomorphism is not equivariant");
}

RepModule submodule_on_basis(const RepModule& ambient, const Matrix& basis) {
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(ambient.group()->order()));
    for (int x = 0; x < ambient.group()->order(); ++x) {
        Matrix moved = mul(ambient.act(x), basis);
        act.push_back(ActionMatrix::from_dense(exactla::solve(basis, moved)));
    }
    return RepModule(ambient.group(), ambient.ring(), basis.cols(), std::move(act));
}

}  // namespace

FittingResult fitting(const RepModule& m, const Matrix& f) {
    if (m.ring().mode != RingMode::Truncation)
        throw std::invalid_argument("fitting: Truncation mode only");
    require_equivariant(m, f, "fitting");
    const long n = m.rank();
    const long cap = n * m.ring().exponent() + 1;

    Matrix power = f;
    Matrix span = howell_span(power.transpose());
    long t = 1;
    for (; t <= cap; ++t) {
        Matrix next = power * f;
        Matrix next_span = howell_span(next.transpose());
        if (next_span == span) break;
        power = std::move(next);
        span = std::move(next_span);
    }
    if (t > cap) throw std::logic_error("fitting: image chain failed to stabilize");

    Diagonalization d = diagonalize(power);
    for (long v : d.valuations)
        if (v != 0) throw std::logic_error("fitting: stabilized power has non-unit pivots");
    long r = d.rank();
    std::vector<long> im_cols, ker_cols;
    for (long j = 0; j < r; ++j) im_cols.push_back(j);
    for (long j = r; j < n; ++j) ker_cols.push_back(j);
    Matrix image_basis = d.U.select_columns(im_cols);
    Matrix kernel_basis = d.Vinv.select_columns(ker_cols);
    Matrix recomposition = Matrix::hstack(image_basis, kernel_basis);
    if (!exactla::is_invertible(recomposition))
        throw std::logic_error("fitting: image and kernel do not recompose");

    RepModule image_part = submodule_on_basis(m, image_basis);
    RepModule kernel_part = submodule_on_basis(m, kernel_basis);
    Matrix f_im = exactla::solve(image_basis, f * image_basis);
    Matrix f_ker = exactla::solve(kernel_basis, f * kernel_basis);
    if (!exactla::is_invertible(f_im))
        throw std::logic_error("fitting: f not invertible on the image part");
    // nilpotency mod p on the kernel part
    Matrix fbar = f_ker.with_ring(RingSpec::prime_field(m.ring().p));
    Matrix pw = Matrix::identity(fbar.ring(), fbar.rows());
    long nil = 0;
    while (!pw.is_zero() && nil <= n) {
        pw = pw * fbar;
        ++nil;
    }
    if (!pw.is_zero()) throw std::logic_error("fitting: f not nilpotent mod p on the kernel part");

    FittingResult out{std::move(image_basis),
                      std::move(kernel_basis),
                      std::move(image_part),
                      std::move(kernel_part),
                      std::move(f_im),
                      std::move(f_ker),
                      std::move(recomposition),
                      t,
                      nil};
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// One splitting attempt: a nontrivial equivariant idempotent from the
/// minimal polynomial of a random endomorphism, Newton-lifted to precision.
std::optional<Matrix> find_idempotent(const RepModule& m, const std::vector<Matrix>& end_gens,
                                      std::mt19937_64& rng) {
    const RingSpec ring = m.ring();
    const long p = ring.p;
    Matrix a = random_endomorphism(end_gens, ring, rng);
    Matrix abar = a.with_ring(RingSpec::prime_field(ring.p));
    Poly mp = min_poly(abar);
    auto factors = poly_factor(mp, p, rng);
    if (factors.size() < 2) return std::nullopt;
    // U = first primary factor, V = the rest; idempotent = (tV)(abar)
    Poly u{1}, v{1};
    for (long i = 0; i < factors[0].second; ++i) u = poly_mul(u, factors[0].first, p);
    for (size_t t = 1; t < factors.size(); ++t)
        for (long i = 0; i < factors[t].second; ++i) v = poly_mul(v, factors[t].first, p);
    PolyGcdExt ext = poly_gcdext(u, v, p);
    if (degree(ext.g) != 0) return std::nullopt;  // not coprime (cannot happen)
    Poly tv = poly_mul(ext.t, v, p);
    // evaluate at the full-precision endomorphism and Newton-lift
    Matrix e = poly_eval_matrix(tv, a);
    const unsigned mexp = ring.exponent();
    for (unsigned iter = 0; iter < mexp + 4; ++iter) {
        Matrix e2 = e * e;
        if (e2 == e) break;
        e = e2.scaled(3) - (e2 * e).scaled(2);
    }
    if (!((e * e) == e)) return std::nullopt;
    if (e.is_zero() || e.is_identity()) return std::nullopt;
    return e;
}

void split_by_idempotent(const RepModule& m, const Matrix& e, RepModule& part0, RepModule& part1) {
    Diagonalization d = diagonalize(e);
    for (long v : d.valuations)
        if (v != 0) throw std::logic_error("split_by_idempotent: non-unit pivot in idempotent");
    long r = d.rank();
    std::vector<long> im_cols, ker_cols;
    for (long j = 0; j < r; ++j) im_cols.push_back(j);
    for (long j = r; j < m.rank(); ++j) ker_cols.push_back(j);
    Matrix b0 = d.U.select_columns(im_cols);
    Matrix b1 = d.Vinv.select_columns(ker_cols);
    part0 = submodule_on_basis(m, b0);
    part1 = submodule_on_basis(m, b1);
}

}  // namespace

std::vector<RepModule> split_indecomposable(const RepModule& m, std::mt19937_64& rng) {
    if (m.rank() == 0) return {};
    // A decomposable module yields a splitting minimal polynomial with
    // probability well above 2/3 per random endomorphism, so two dozen
    // misses certify indecomposability beyond any practical doubt; the
    // stability re-runs would surface a miss as an instability flag anyway.
    constexpr int kAttempts = 24;
    std::vector<Matrix> end_gens = endomorphism_generators(m);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        auto e = find_idempotent(m, end_gens, rng);
        if (!e) continue;
        RepModule part0, part1;
        split_by_idempotent(m, *e, part0, part1);
        if (part0.rank() == 0 || part1.rank() == 0)
            throw std::logic_error("split_indecomposable: degenerate idempotent split");
        std::vector<RepModule> out = split_indecomposable(part0, rng);
        std::vector<RepModule> rest = split_indecomposable(part1, rng);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    return {m};
}

std::string SummandDescription::label(const SplitContext& ctx) const {
    std::ostringstream os;
    os << "rank " << rank << ", head";
    for (size_t i = 0; i < head_isotypic.size(); ++i)
        if (head_isotypic[i] > 0)
            os << " " << ctx.h_simples[i].name
               << (head_isotypic[i] > 1 ? "^" + std::to_string(head_isotypic[i]) : "");
    os << ", dim End mod p = " << end_dim_mod_p;
    return os.str();
}

std::vector<long> DecompositionReport::rank_multiset() const {
    std::vector<long> out;
    for (const auto& [d, mult] : summands)
        for (long i = 0; i < mult; ++i) out.push_back(d.rank);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::pair<SummandDescription, long>> describe_summands(
    const std::vector<RepModule>& parts, const SplitContext& ctx) {
    std::map<SummandDescription, long> counter;
    for (const RepModule& part : parts) {
        SummandDescription d;
        d.rank = part.rank();
        HeadResult h = head(part, ctx);
        d.head_isotypic = h.isotypic;
        RepModule pbar = reduce_mod_p(part);
        d.end_dim_mod_p = static_cast<long>(endomorphism_generators(pbar).size());
        counter[d] += 1;
    }
    return {counter.begin(), counter.end()};
}

}  // namespace

DecompositionReport ks_decompose(const RepModule& m, const SplitContext& ctx, uint64_t seed,
                                 int stability_rounds) {
    const RingSpec ring = m.ring();
    if (ring.mode == RingMode::PLocal)
        throw std::invalid_argument("ks_decompose: use Truncation or PrimeField mode");
    if (ring.mode == RingMode::Truncation && ring.exponent() < 2)
        throw std::invalid_argument("ks_decompose: precision exponent must be >= 2");
    std::mt19937_64 rng(seed);
    DecompositionReport report;
    report.precision = ring.mode == RingMode::Truncation ? ring.exponent() : 1;
    report.seed = seed;
    std::vector<RepModule> parts = split_indecomposable(m, rng);
    report.summands = describe_summands(parts, ctx);
    std::vector<long> base_ranks = report.rank_multiset();
    report.stable = true;
    for (int round = 0; round < stability_rounds; ++round) {
        RepModule conj = random_basis_change(m, rng);
        std::vector<RepModule> parts2 = split_indecomposable(conj, rng);
        std::vector<long> ranks;
        for (const auto& p2 : parts2) ranks.push_back(p2.rank());
        std::sort(ranks.begin(), ranks.end());
        if (ranks != base_ranks) report.stable = false;
    }
    return report;
}

RepModule random_basis_change(const RepModule& m, std::mt19937_64& rng) {
    const RingSpec ring = m.ring();
    const long n = m.rank();
    std::uniform_int_distribution<unsigned long> dist(0, 1ul << 30);
    mpz_class mod = ring.is_modular() ? ring.modulus() : mpz_class(0);
    for (;;) {
        Matrix t(ring, n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                mpz_class c(static_cast<unsigned long>(dist(rng)));
                if (ring.is_modular()) c %= mod;
                else c %= 19;
                t.set(i, j, mpq_class(c));
            }
        if (!exactla::is_invertible(t)) continue;
        Matrix tinv = exactla::inverse(t);
        std::vector<ActionMatrix> act;
        act.reserve(static_cast<size_t>(m.group()->order()));
        for (int x = 0; x < m.group()->order(); ++x)
            act.push_back(ActionMatrix::from_dense(t * mul(m.act(x), tinv)));
        return RepModule(m.group(), ring, n, std::move(act));
    }
}

RepModule random_g24_module(RingSpec ring, long max_rank, std::mt19937_64& rng) {
    const grp::G24Data& d = grp::g24();
    auto q8_simples = rep::simples_q8();
    std::vector<RepModule> atoms;
    // the four characters and the 2-dim simple, inflated from Q8
    SplitContext ctx = g24_context();
    for (size_t i = 0; i < 4; ++i)
        atoms.push_back(inflate_simple_to_group(rep::lift_simple(q8_simples[i], ring), ctx));
    atoms.push_back(inflate_simple_to_group(rep::lift_simple(q8_simples[4], ring), ctx));
    // induced modules
    atoms.push_back(rep::induce(rep::lift_simple(q8_simples[0], ring), d.q8_in));
    atoms.push_back(rep::induce(rep::lift_simple(q8_simples[1], ring), d.q8_in));
    atoms.push_back(rep::induce(rep::trivial_module(d.c3, ring), d.c3_in));

    RepModule sum(d.group, ring, 0,
                  std::vector<ActionMatrix>(24, ActionMatrix::identity(ring, 0)));
    std::uniform_int_distribution<size_t> pick(0, atoms.size() - 1);
    int guard = 0;
    while (sum.rank() < max_rank && guard++ < 64) {
        const RepModule& atom = atoms[pick(rng)];
        if (sum.rank() + atom.rank() > max_rank) continue;
        sum = rep::direct_sum(sum, atom);
        if (sum.rank() == max_rank) break;
        std::uniform_int_distribution<int> stop(0, 3);
        if (sum.rank() > 0 && stop(rng) == 0) break;
    }
    if (sum.rank() == 0) sum = rep::direct_sum(sum, atoms[0]);
    return random_basis_change(sum, rng);
}

}  // namespace stabmod::homalg
