#include "stabmod/normal_form.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace stabmod::exactla {

namespace {

// Row/column elementary operations on D with U, Uinv, V, Vinv kept in sync
// so that A = U * D * V holds throughout.
struct Worker {
    RingSpec ring;
    long rows, cols;
    bool track_u, track_v;
    std::vector<mpq_class> d;
    Matrix U, Uinv, V, Vinv;

    Worker(const Matrix& a, bool tu, bool tv)
        : ring(a.ring()),
          rows(a.rows()),
          cols(a.cols()),
          track_u(tu),
          track_v(tv),
          d(MatrixOps::data(a)),
          U(tu ? Matrix::identity(a.ring(), a.rows()) : Matrix()),
          Uinv(tu ? Matrix::identity(a.ring(), a.rows()) : Matrix()),
          V(tv ? Matrix::identity(a.ring(), a.cols()) : Matrix()),
          Vinv(tv ? Matrix::identity(a.ring(), a.cols()) : Matrix()) {}

    mpq_class& at(long i, long j) { return d[i * cols + j]; }

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long t = 0; t < cols; ++t) std::swap(at(i, t), at(j, t));
        if (!track_u) return;
        for (long t = 0; t < rows; ++t) {
            std::swap(MatrixOps::data(U)[t * rows + i], MatrixOps::data(U)[t * rows + j]);
            std::swap(MatrixOps::data(Uinv)[i * rows + t], MatrixOps::data(Uinv)[j * rows + t]);
        }
    }

    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long t = 0; t < rows; ++t) std::swap(at(t, i), at(t, j));
        if (!track_v) return;
        for (long t = 0; t < cols; ++t) {
            std::swap(MatrixOps::data(V)[i * cols + t], MatrixOps::data(V)[j * cols + t]);
            std::swap(MatrixOps::data(Vinv)[t * cols + i], MatrixOps::data(Vinv)[t * cols + j]);
        }
    }

    // row_t *= s (s a unit)
    void scale_row(long t, const mpq_class& s) {
        mpq_class sinv = ring.unit_inverse(s);
        for (long j = 0; j < cols; ++j)
            if (at(t, j) != 0) at(t, j) = ring.normalize(at(t, j) * s);
        if (!track_u) return;
        for (long i = 0; i < rows; ++i) {
            auto& u = MatrixOps::data(U)[i * rows + t];
            if (u != 0) u = ring.normalize(u * sinv);
            auto& w = MatrixOps::data(Uinv)[t * rows + i];
            if (w != 0) w = ring.normalize(w * s);
        }
    }

    // row_i -= q * row_t
    void add_row(long i, long t, const mpq_class& q) {
        if (q == 0) return;
        for (long j = 0; j < cols; ++j)
            if (at(t, j) != 0) at(i, j) = ring.normalize(at(i, j) - q * at(t, j));
        if (!track_u) return;
        for (long a = 0; a < rows; ++a) {
            // U <- U * (I + q e_{it}): col t += q * col i
            auto& u = MatrixOps::data(U)[a * rows + t];
            const auto& ui = MatrixOps::data(U)[a * rows + i];
            if (ui != 0) u = ring.normalize(u + q * ui);
        }
        for (long a = 0; a < rows; ++a) {
            auto& w = MatrixOps::data(Uinv)[i * rows + a];
            const auto& wt = MatrixOps::data(Uinv)[t * rows + a];
            if (wt != 0) w = ring.normalize(w - q * wt);
        }
    }

    // col_j -= q * col_t
    void add_col(long j, long t, const mpq_class& q) {
        if (q == 0) return;
        for (long i = 0; i < rows; ++i)
            if (at(i, t) != 0) at(i, j) = ring.normalize(at(i, j) - q * at(i, t));
        if (!track_v) return;
        for (long a = 0; a < cols; ++a) {
            // V <- (I + q e_{tj}) V: row t += q * row j
            auto& v = MatrixOps::data(V)[t * cols + a];
            const auto& vj = MatrixOps::data(V)[j * cols + a];
            if (vj != 0) v = ring.normalize(v + q * vj);
        }
        for (long a = 0; a < cols; ++a) {
            auto& w = MatrixOps::data(Vinv)[a * cols + j];
            const auto& wt = MatrixOps::data(Vinv)[a * cols + t];
            if (wt != 0) w = ring.normalize(w - q * wt);
        }
    }

    // Unit row scaling that clears denominators and unit integer content;
    // keeps PLocal entries small during elimination.
    void strip_content(long i, long from_col) {
        if (ring.mode != RingMode::PLocal) return;
        mpz_class den_lcm = 1, num_gcd = 0;
        for (long j = from_col; j < cols; ++j) {
            const mpq_class& v = at(i, j);
            if (v == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        }
        if (num_gcd == 0) return;
        long v = int_valuation(num_gcd, ring.p);
        mpz_class unit_part = num_gcd / pow_ui(mpz_class(ring.p), v);
        mpq_class s(den_lcm, unit_part);
        s.canonicalize();
        if (s == 1) return;
        scale_row(i, s);
    }
};

}  // namespace

Matrix Diagonalization::diagonal(const RingSpec& ring) const {
    Matrix d(ring, rows, cols);
    mpz_class pz(ring.p);
    for (long t = 0; t < rank(); ++t) d.set(t, t, mpq_class(pow_ui(pz, valuations[t])));
    return d;
}

namespace {

// Elimination over Z/p^e in machine words for moduli below 2^31 (products
// stay below 2^62). The generic mpq path handles everything else.
struct SmallWorker {
    long rows, cols;
    long mod, p;
    long e;
    bool track_u, track_v;
    std::vector<long> d, U, Uinv, V, Vinv;  // row-major

    long& at(std::vector<long>& m, long width, long i, long j) { return m[i * width + j]; }

    SmallWorker(const Matrix& a, long mod_, long p_, long e_, bool tu, bool tv)
        : rows(a.rows()), cols(a.cols()), mod(mod_), p(p_), e(e_), track_u(tu), track_v(tv) {
        d.assign(static_cast<size_t>(rows * cols), 0);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j) d[i * cols + j] = a.at(i, j).get_num().get_si();
        if (track_u) {
            U.assign(static_cast<size_t>(rows * rows), 0);
            Uinv = U;
            for (long i = 0; i < rows; ++i) U[i * rows + i] = Uinv[i * rows + i] = 1;
        }
        if (track_v) {
            V.assign(static_cast<size_t>(cols * cols), 0);
            Vinv = V;
            for (long i = 0; i < cols; ++i) V[i * cols + i] = Vinv[i * cols + i] = 1;
        }
    }

    long val(long x) const {
        if (x == 0) return e;
        long v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    }

    long inv_unit(long a) const {
        // extended euclid mod `mod`
        long t = 0, newt = 1, r = mod, newr = a % mod;
        while (newr != 0) {
            long q = r / newr;
            long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw std::domain_error("SmallWorker: inverse of non-unit");
        return ((t % mod) + mod) % mod;
    }

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long t = 0; t < cols; ++t) std::swap(d[i * cols + t], d[j * cols + t]);
        if (!track_u) return;
        for (long t = 0; t < rows; ++t) {
            std::swap(U[t * rows + i], U[t * rows + j]);
            std::swap(Uinv[i * rows + t], Uinv[j * rows + t]);
        }
    }

    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long t = 0; t < rows; ++t) std::swap(d[t * cols + i], d[t * cols + j]);
        if (!track_v) return;
        for (long t = 0; t < cols; ++t) {
            std::swap(V[i * cols + t], V[j * cols + t]);
            std::swap(Vinv[t * cols + i], Vinv[t * cols + j]);
        }
    }

    void scale_row(long t, long s) {
        long sinv = inv_unit(s);
        for (long j = 0; j < cols; ++j) d[t * cols + j] = d[t * cols + j] * s % mod;
        if (!track_u) return;
        for (long i = 0; i < rows; ++i) {
            U[i * rows + t] = U[i * rows + t] * sinv % mod;
            Uinv[t * rows + i] = Uinv[t * rows + i] * s % mod;
        }
    }

    void add_row(long i, long t, long q) {  // row_i -= q * row_t
        if (q == 0) return;
        for (long j = 0; j < cols; ++j)
            d[i * cols + j] = ((d[i * cols + j] - q * d[t * cols + j]) % mod + mod) % mod;
        if (!track_u) return;
        for (long a = 0; a < rows; ++a)
            U[a * rows + t] = (U[a * rows + t] + q * U[a * rows + i]) % mod;
        for (long a = 0; a < rows; ++a)
            Uinv[i * rows + a] = ((Uinv[i * rows + a] - q * Uinv[t * rows + a]) % mod + mod) % mod;
    }

    void add_col(long j, long t, long q) {  // col_j -= q * col_t
        if (q == 0) return;
        for (long i = 0; i < rows; ++i)
            d[i * cols + j] = ((d[i * cols + j] - q * d[i * cols + t]) % mod + mod) % mod;
        if (!track_v) return;
        for (long a = 0; a < cols; ++a)
            V[t * cols + a] = (V[t * cols + a] + q * V[j * cols + a]) % mod;
        for (long a = 0; a < cols; ++a)
            Vinv[a * cols + j] = ((Vinv[a * cols + j] - q * Vinv[a * cols + t]) % mod + mod) % mod;
    }
};

Matrix from_longs(const std::vector<long>& v, RingSpec ring, long rows, long cols) {
    Matrix m(ring, rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (v[i * cols + j] != 0) m.set_raw(i, j, mpq_class(v[i * cols + j]));
    return m;
}

Diagonalization diagonalize_small(const Matrix& a, bool track_u, bool track_v) {
    const RingSpec& ring = a.ring();
    long mod = ring.modulus().get_si();
    SmallWorker w(a, mod, ring.p, ring.exponent(), track_u, track_v);
    std::vector<long> vals;
    long n = std::min(w.rows, w.cols);
    std::vector<long> ppow(static_cast<size_t>(w.e) + 1, 1);
    for (long t = 1; t <= w.e; ++t) ppow[static_cast<size_t>(t)] = ppow[static_cast<size_t>(t - 1)] * ring.p;
    for (long t = 0; t < n; ++t) {
        long best_i = -1, best_j = -1, best_v = w.e;
        for (long i = t; i < w.rows; ++i)
            for (long j = t; j < w.cols; ++j) {
                long x = w.d[i * w.cols + j];
                if (x == 0) continue;
                long v = w.val(x);
                if (best_i < 0 || v < best_v) {
                    best_i = i;
                    best_j = j;
                    best_v = v;
                }
            }
        if (best_i < 0) break;
        w.swap_rows(t, best_i);
        w.swap_cols(t, best_j);
        long pv = ppow[static_cast<size_t>(best_v)];
        long unit = w.d[t * w.cols + t] / pv;
        w.scale_row(t, w.inv_unit(unit));
        for (long i = t + 1; i < w.rows; ++i) {
            long x = w.d[i * w.cols + t];
            if (x != 0) w.add_row(i, t, x / pv);
        }
        for (long j = t + 1; j < w.cols; ++j) {
            long x = w.d[t * w.cols + j];
            if (x != 0) w.add_col(j, t, x / pv);
        }
        vals.push_back(best_v);
    }
    Diagonalization out{track_u ? from_longs(w.U, ring, w.rows, w.rows) : Matrix(),
                        track_u ? from_longs(w.Uinv, ring, w.rows, w.rows) : Matrix(),
                        track_v ? from_longs(w.V, ring, w.cols, w.cols) : Matrix(),
                        track_v ? from_longs(w.Vinv, ring, w.cols, w.cols) : Matrix(),
                        std::move(vals),
                        w.rows,
                        w.cols};
    return out;
}

Diagonalization diagonalize_opts(const Matrix& a, bool track_u, bool track_v) {
    if (a.ring().is_modular() && a.ring().modulus() < (1L << 31))
        return diagonalize_small(a, track_u, track_v);
    Worker w(a, track_u, track_v);
    const RingSpec& ring = w.ring;
    std::vector<long> vals;
    long n = std::min(w.rows, w.cols);
    mpz_class pz(ring.p);
    for (long t = 0; t < n; ++t) {
        long best_i = -1, best_j = -1;
        long best_v = 0;
        for (long i = t; i < w.rows; ++i)
            for (long j = t; j < w.cols; ++j) {
                const mpq_class& e = w.at(i, j);
                if (e == 0) continue;
                long v = ring.valuation(e);
                if (best_i < 0 || v < best_v) {
                    best_i = i;
                    best_j = j;
                    best_v = v;
                }
            }
        if (best_i < 0) break;
        w.swap_rows(t, best_i);
        w.swap_cols(t, best_j);
        mpq_class pv(pow_ui(pz, best_v));
        mpq_class unit = w.at(t, t) / pv;
        if (ring.is_modular()) unit = ring.normalize(unit);
        w.scale_row(t, ring.unit_inverse(unit));
        for (long i = t + 1; i < w.rows; ++i) {
            const mpq_class& e = w.at(i, t);
            if (e == 0) continue;
            mpq_class q = e / pv;
            if (ring.is_modular()) q = ring.normalize(q);
            w.add_row(i, t, q);
        }
        for (long j = t + 1; j < w.cols; ++j) {
            const mpq_class& e = w.at(t, j);
            if (e == 0) continue;
            mpq_class q = e / pv;
            if (ring.is_modular()) q = ring.normalize(q);
            w.add_col(j, t, q);
        }
        if (ring.mode == RingMode::PLocal)
            for (long i = t + 1; i < w.rows; ++i) w.strip_content(i, t + 1);
        vals.push_back(best_v);
    }
    Diagonalization out{std::move(w.U), std::move(w.Uinv), std::move(w.V), std::move(w.Vinv),
                        std::move(vals), w.rows, w.cols};
    return out;
}

}  // namespace

Diagonalization diagonalize(const Matrix& a) { return diagonalize_opts(a, true, true); }

SnfResult snf(const Matrix& a) {
    if (a.ring().mode != RingMode::PLocal)
        throw std::invalid_argument("snf: requires PLocal mode, got " + a.ring().describe());
    Diagonalization d = diagonalize(a);
    return SnfResult{std::move(d.U), std::move(d.V), d.valuations, d.zero_diagonal()};
}

long rank(const Matrix& a) {
    Diagonalization d = diagonalize_opts(a, false, false);
    if (a.ring().is_modular()) {
        long r = 0;
        for (long v : d.valuations)
            if (v == 0) ++r;
        return r;
    }
    return d.rank();
}

Matrix kernel(const Matrix& a) {
    Diagonalization d = diagonalize_opts(a, false, true);
    const RingSpec& ring = a.ring();
    std::vector<long> plain_cols;
    std::vector<std::pair<long, long>> scaled_cols;  // (col index, valuation)
    for (long t = 0; t < d.rank(); ++t) {
        long v = d.valuations[t];
        if (ring.is_modular() && v > 0 && v < static_cast<long>(ring.exponent()))
            scaled_cols.push_back({t, v});
    }
    for (long j = d.rank(); j < a.cols(); ++j) plain_cols.push_back(j);

    long n_gens = static_cast<long>(scaled_cols.size() + plain_cols.size());
    Matrix out(ring, a.cols(), n_gens);
    long g = 0;
    mpz_class pz(ring.p);
    for (auto [t, v] : scaled_cols) {
        mpq_class scale(pow_ui(pz, ring.exponent() - v));
        for (long i = 0; i < a.cols(); ++i) out.set(i, g, d.Vinv.at(i, t) * scale);
        ++g;
    }
    for (long j : plain_cols) {
        for (long i = 0; i < a.cols(); ++i) out.set(i, g, d.Vinv.at(i, j));
        ++g;
    }
    return out;
}

namespace {

std::optional<Matrix> solve_impl(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "solve");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    const RingSpec& ring = a.ring();
    Diagonalization d = diagonalize(a);
    Matrix c = d.Uinv * b;
    long r = d.rank();
    for (long t = r; t < a.rows(); ++t)
        for (long j = 0; j < b.cols(); ++j)
            if (c.at(t, j) != 0) return std::nullopt;
    Matrix w(ring, a.cols(), b.cols());
    mpz_class pz(ring.p);
    for (long t = 0; t < r; ++t) {
        mpq_class pv(pow_ui(pz, d.valuations[t]));
        for (long j = 0; j < b.cols(); ++j) {
            const mpq_class& e = c.at(t, j);
            if (e == 0) continue;
            if (ring.valuation(e) < d.valuations[t]) return std::nullopt;
            w.set(t, j, e / pv);
        }
    }
    return d.Vinv * w;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b) {
    auto x = solve_impl(a, b);
    if (!x) throw std::domain_error("solve: system unsolvable over " + a.ring().describe());
    return *x;
}

bool is_solvable(const Matrix& a, const Matrix& b) { return solve_impl(a, b).has_value(); }

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    Diagonalization d = diagonalize(a);
    if (d.rank() != a.rows() ||
        std::any_of(d.valuations.begin(), d.valuations.end(), [](long v) { return v != 0; }))
        throw std::domain_error("inverse: matrix not invertible over " + a.ring().describe());
    return d.Vinv * d.Uinv;
}

bool is_invertible(const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    Diagonalization d = diagonalize_opts(a, false, false);
    return d.rank() == a.rows() &&
           std::all_of(d.valuations.begin(), d.valuations.end(), [](long v) { return v == 0; });
}

namespace {

using Row = std::vector<mpz_class>;

long leading_col(const Row& r) {
    for (size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return static_cast<long>(j);
    return -1;
}

void reduce_row_mod(Row& r, const mpz_class& mod) {
    for (auto& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
}

void require_modular(const Matrix& a, const char* where) {
    if (!a.ring().is_modular())
        throw std::invalid_argument(std::string(where) + ": requires a modular mode, got " +
                                    a.ring().describe());
}

}  // namespace

Matrix howell_span(const Matrix& a) {
    require_modular(a, "howell_span");
    const RingSpec& ring = a.ring();
    const unsigned p = ring.p;
    const long e = ring.exponent();
    const mpz_class mod = ring.modulus();
    const mpz_class pz(p);

    std::vector<Row> work;
    for (long i = 0; i < a.rows(); ++i) {
        Row r(a.cols());
        for (long j = 0; j < a.cols(); ++j) r[j] = a.at(i, j).get_num();
        reduce_row_mod(r, mod);
        if (leading_col(r) >= 0) work.push_back(std::move(r));
    }

    std::vector<std::pair<long, Row>> pivots;  // (leading col, row), increasing cols
    for (long col = 0; col < a.cols(); ++col) {
        // rows whose leading column is `col`
        std::vector<size_t> cand;
        for (size_t k = 0; k < work.size(); ++k)
            if (leading_col(work[k]) == col) cand.push_back(k);
        if (cand.empty()) continue;
        size_t best = cand[0];
        long best_v = int_valuation(work[best][col], p);
        for (size_t k : cand)
            if (long v = int_valuation(work[k][col], p); v < best_v) {
                best = k;
                best_v = v;
            }
        Row piv = work[best];
        work.erase(work.begin() + static_cast<long>(best));
        mpz_class pv = pow_ui(pz, best_v);
        mpz_class unit = piv[col] / pv;
        mpz_class uinv = mod_inverse(unit, mod);
        for (auto& x : piv) x = (x * uinv) % mod;
        // eliminate `col` from remaining rows with that leading column
        for (auto& s : work) {
            if (s[col] == 0) continue;
            mpz_class q = s[col] / pv;
            for (long j = col; j < a.cols(); ++j) {
                s[j] -= q * piv[j];
                mpz_fdiv_r(s[j].get_mpz_t(), s[j].get_mpz_t(), mod.get_mpz_t());
            }
        }
        std::erase_if(work, [](const Row& r) { return leading_col(r) < 0; });
        if (best_v > 0) {
            // Howell completion: the annihilator shadow of a non-unit pivot
            // stays in the span and leads strictly further right.
            Row shadow = piv;
            mpz_class f = pow_ui(pz, e - best_v);
            for (auto& x : shadow) {
                x *= f;
                mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
            }
            if (leading_col(shadow) >= 0) work.push_back(std::move(shadow));
        }
        pivots.push_back({col, std::move(piv)});
    }

    // back-reduction: entries above a pivot p^v are reduced mod p^v
    for (size_t i = 0; i < pivots.size(); ++i) {
        long c = pivots[i].first;
        long v = int_valuation(pivots[i].second[c], p);
        mpz_class pv = pow_ui(pz, v);
        for (size_t k = 0; k < i; ++k) {
            Row& r = pivots[k].second;
            if (r[c] == 0) continue;
            mpz_class q = r[c] / pv;
            if (q == 0) continue;
            for (long j = c; j < a.cols(); ++j) {
                r[j] -= q * pivots[i].second[j];
                mpz_fdiv_r(r[j].get_mpz_t(), r[j].get_mpz_t(), mod.get_mpz_t());
            }
        }
    }

    Matrix out(ring, static_cast<long>(pivots.size()), a.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (long j = 0; j < a.cols(); ++j) out.set(static_cast<long>(i), j, mpq_class(pivots[i].second[j]));
    return out;
}

Matrix reduce_against_span(const Matrix& span, const Matrix& row) {
    require_modular(span, "reduce_against_span");
    if (row.rows() != 1 || row.cols() != span.cols())
        throw std::invalid_argument("reduce_against_span: expected a single row of matching width");
    const RingSpec& ring = span.ring();
    const mpz_class mod = ring.modulus();
    mpz_class pz(ring.p);
    Row w(span.cols());
    for (long j = 0; j < span.cols(); ++j) w[j] = row.at(0, j).get_num();
    reduce_row_mod(w, mod);
    for (long i = 0; i < span.rows(); ++i) {
        long c = -1;
        for (long j = 0; j < span.cols(); ++j)
            if (span.at(i, j) != 0) {
                c = j;
                break;
            }
        if (c < 0) continue;
        if (w[c] == 0) continue;
        long v = int_valuation(span.at(i, c).get_num(), ring.p);
        long wv = int_valuation(w[c], ring.p);
        if (wv < v) continue;  // cannot be cleared by this pivot
        mpz_class q = w[c] / pow_ui(pz, v);
        for (long j = c; j < span.cols(); ++j) {
            w[j] -= q * span.at(i, j).get_num();
            mpz_fdiv_r(w[j].get_mpz_t(), w[j].get_mpz_t(), mod.get_mpz_t());
        }
    }
    Matrix out(ring, 1, span.cols());
    for (long j = 0; j < span.cols(); ++j) out.set(0, j, mpq_class(w[j]));
    return out;
}

HowellResult howell(const Matrix& a) {
    if (a.ring().mode != RingMode::Truncation)
        throw std::invalid_argument("howell: requires Truncation mode, got " + a.ring().describe());
    Matrix ker = kernel(a);
    // canonicalize the kernel generating set by its row-span form
    Matrix ker_canon = howell_span(ker.transpose()).transpose();
    return HowellResult{howell_span(a), std::move(ker_canon)};
}

std::string HomologyReport::describe() const {
    std::ostringstream os;
    os << "free_rank=" << free_rank << " torsion=[";
    for (size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    os << "]";
    return os.str();
}

HomologyReport homology(const Matrix& d_in, const Matrix& d_out) {
    if (d_in.ring().mode != RingMode::PLocal || d_out.ring().mode != RingMode::PLocal)
        throw std::invalid_argument("homology: requires PLocal mode");
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology: maps not composable");
    if (!(d_out * d_in).is_zero())
        throw std::invalid_argument("homology: composition d_out * d_in is nonzero");

    Diagonalization d = diagonalize_opts(d_out, false, true);
    long r = d.rank();
    long k = d_out.cols() - r;
    Matrix w = d.V * d_in;
    for (long t = 0; t < r; ++t)
        for (long j = 0; j < w.cols(); ++j)
            if (w.at(t, j) != 0)
                throw std::logic_error("homology: image not contained in kernel");
    Matrix y = w.block(r, 0, k, w.cols());
    Diagonalization dy = diagonalize_opts(y, false, false);
    HomologyReport rep;
    rep.free_rank = k - dy.rank();
    for (long v : dy.valuations)
        if (v > 0) rep.torsion.push_back(v);
    std::sort(rep.torsion.begin(), rep.torsion.end());
    return rep;
}

}  // namespace stabmod::exactla
