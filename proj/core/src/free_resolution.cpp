#include "stabmod/free_resolution.hpp"

namespace stabmod::homalg {

using exactla::kernel;
using exactla::RingMode;
using rep::ActionMatrix;
using rep::mul;
using rep::RepModule;

namespace {

/// Span of the G-orbits of the given vectors inside a module with action
/// `act` (dimension of the F_p span of {act(g) v_i}).
long orbit_span_rank(const RepModule& m, const Matrix& vecs) {
    const int n = m.group()->order();
    Matrix all(m.ring(), m.rank(), n * vecs.cols());
    for (int g = 0; g < n; ++g) {
        Matrix moved = mul(m.act(g), vecs);
        for (long i = 0; i < moved.rows(); ++i)
            for (long j = 0; j < moved.cols(); ++j)
                if (moved.at(i, j) != 0)
                    all.set_raw(i, static_cast<long>(g) * vecs.cols() + j, moved.at(i, j));
    }
    return exactla::rank(all);
}

Matrix random_vectors(const RepModule& m, long count, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(0, m.ring().p - 1);
    Matrix v(m.ring(), m.rank(), count);
    for (long i = 0; i < m.rank(); ++i)
        for (long j = 0; j < count; ++j) v.set(i, j, mpq_class(dist(rng)));
    return v;
}

/// Generating set of M as an F_p[G]-module found by random span tests,
/// smallest size first. Correctness never depends on minimality: any
/// generating set yields a valid free cover.
Matrix find_generators(const RepModule& m, std::mt19937_64& rng) {
    constexpr int kTrials = 24;
    for (long s = 1; s <= m.rank(); ++s) {
        for (int t = 0; t < kTrials; ++t) {
            Matrix v = random_vectors(m, s, rng);
            if (orbit_span_rank(m, v) == m.rank()) return v;
        }
    }
    // the full standard basis always generates
    return Matrix::identity(m.ring(), m.rank());
}

/// d : F_p[G]^s -> K, (i, g) |-> act(g) k_i, as a matrix.
Matrix cover_map(const RepModule& k, const Matrix& gens) {
    const int n = k.group()->order();
    const long s = gens.cols();
    Matrix d(k.ring(), k.rank(), s * n);
    for (long i = 0; i < s; ++i) {
        for (int g = 0; g < n; ++g) {
            Matrix moved = mul(k.act(g), gens.select_columns({i}));
            for (long r = 0; r < k.rank(); ++r)
                if (moved.at(r, 0) != 0) d.set_raw(r, i * n + g, moved.at(r, 0));
        }
    }
    return d;
}

/// Free module F_p[G]^s with the (copy-major) left regular action.
RepModule free_module(const grp::GroupPtr& g, RingSpec ring, long s) {
    const int n = g->order();
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::vector<long> row(static_cast<size_t>(s * n));
        for (long i = 0; i < s; ++i)
            for (int y = 0; y < n; ++y)
                row[static_cast<size_t>(i * n + y)] = i * n + g->op(x, y);
        act.push_back(ActionMatrix::monomial(
            ring, std::move(row), std::vector<mpq_class>(static_cast<size_t>(s * n), 1)));
    }
    return RepModule(g, ring, s * n, std::move(act));
}

/// Submodule with the action restricted to a basis of the kernel.
RepModule restrict_to_subspace(const RepModule& ambient, const Matrix& basis) {
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(ambient.group()->order()));
    for (int x = 0; x < ambient.group()->order(); ++x) {
        Matrix moved = mul(ambient.act(x), basis);
        act.push_back(ActionMatrix::from_dense(exactla::solve(basis, moved)));
    }
    return RepModule(ambient.group(), ambient.ring(), basis.cols(), std::move(act));
}

}  // namespace

FreeResolution free_resolution(const RepModule& m, long length, std::mt19937_64& rng) {
    if (m.ring().mode != RingMode::PrimeField)
        throw std::invalid_argument("free_resolution: PrimeField mode only");
    FreeResolution out;
    RepModule current = m;  // the module to cover next
    for (long r = 0; r <= length; ++r) {
        if (current.rank() == 0) {
            out.gen_counts.push_back(0);
            out.chosen_gens.push_back(Matrix(m.ring(), 0, 0));
            out.kernel_bases.push_back(Matrix(m.ring(), 0, 0));
            continue;
        }
        Matrix gens = find_generators(current, rng);
        out.gen_counts.push_back(gens.cols());
        out.chosen_gens.push_back(gens);
        Matrix d = cover_map(current, gens);
        Matrix ker = kernel(d);
        RepModule fr = free_module(m.group(), m.ring(), gens.cols());
        current = restrict_to_subspace(fr, ker);
        out.kernel_bases.push_back(std::move(ker));
    }
    return out;
}

std::vector<long> ext_dims_from_free(const RepModule& m, const RepModule& s, long r_max,
                                     std::mt19937_64& rng) {
    if (!(m.ring() == s.ring()) || m.ring().mode != RingMode::PrimeField)
        throw std::invalid_argument("ext_dims_from_free: PrimeField mode, same ring");
    const int n = m.group()->order();
    const long ds = s.rank();
    FreeResolution res = free_resolution(m, r_max + 1, rng);

    // Hom_G(F_r, S) ~ S^{s_r}; the cochain map  delta_r : S^{s_r} -> S^{s_{r+1}}
    // sends phi to phi o d_{r+1}, where the j-th generator of the (r+1)-st
    // free module maps to the j-th chosen generator of the r-th syzygy
    // written in F_r coordinates (i, g):
    //   (delta phi)_j = sum_{i,g} coord[(i,g), j] * act_S(g) phi_i.
    auto delta = [&](long r) {
        // generators of syzygy r+1 in F_r coordinates
        const Matrix& ker_basis = res.kernel_bases[static_cast<size_t>(r)];
        const Matrix& gens_next = res.chosen_gens[static_cast<size_t>(r + 1)];
        long s_next = res.gen_counts[static_cast<size_t>(r + 1)];
        long s_cur = res.gen_counts[static_cast<size_t>(r)];
        Matrix coords =
            (ker_basis.cols() > 0 && gens_next.cols() > 0)
                ? ker_basis * gens_next
                : Matrix(m.ring(), s_cur * n, s_next);
        Matrix d(m.ring(), ds * s_next, ds * s_cur);
        for (long j = 0; j < s_next; ++j)
            for (long i = 0; i < s_cur; ++i)
                for (int g = 0; g < n; ++g) {
                    const mpq_class& c = coords.at(i * n + g, j);
                    if (c == 0) continue;
                    Matrix ag = s.act_dense(g).scaled(c);
                    for (long a = 0; a < ds; ++a)
                        for (long b = 0; b < ds; ++b)
                            if (ag.at(a, b) != 0)
                                d.set(j * ds + a, i * ds + b, d.at(j * ds + a, i * ds + b) + ag.at(a, b));
                }
        return d;
    };

    std::vector<long> dims;
    Matrix prev_delta(m.ring(), 0, 0);
    for (long r = 0; r <= r_max; ++r) {
        Matrix dr = delta(r);
        long k = dr.cols() - exactla::rank(dr);
        long im_prev = (r == 0) ? 0 : exactla::rank(prev_delta);
        dims.push_back(k - im_prev);
        prev_delta = std::move(dr);
    }
    return dims;
}

ExtDims ext_dim(const RepModule& m, size_t simple_index, long r, const SplitContext& ctx,
                uint64_t seed) {
    return ext_dims(m, simple_index, r, ctx, seed)[static_cast<size_t>(r)];
}

std::vector<ExtDims> ext_dims(const RepModule& m, size_t simple_index, long r_max,
                              const SplitContext& ctx, uint64_t seed) {
    const SimpleInfo& s = ctx.h_simples[simple_index];
    // way 1: multiplicities from the minimal resolution
    ResolutionPrefix res = minimal_resolution(m, r_max, ctx);
    // way 2: Hom-complex cohomology over an independent free resolution;
    // the simple is inflated from H to G through the complement splitting
    RepModule s_on_g = inflate_simple_to_group(s.module, ctx);
    std::mt19937_64 rng(seed);
    std::vector<long> raw = ext_dims_from_free(reduce_mod_p(m), s_on_g, r_max, rng);
    std::vector<ExtDims> out;
    for (long r = 0; r <= r_max; ++r) {
        ExtDims e;
        e.from_minimal = res.table.rows[static_cast<size_t>(r)][simple_index];
        if (raw[static_cast<size_t>(r)] % s.end_dim != 0)
            throw std::logic_error("ext_dims: raw dimension not divisible by dim End(S)");
        e.from_free = raw[static_cast<size_t>(r)] / s.end_dim;
        e.agree = e.from_minimal == e.from_free;
        out.push_back(e);
    }
    return out;
}

}  // namespace stabmod::homalg
