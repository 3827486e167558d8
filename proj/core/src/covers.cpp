#include "stabmod/covers.hpp"

#include <algorithm>

#include "stabmod/catalog.hpp"

namespace stabmod::homalg {

using exactla::diagonalize;
using exactla::Diagonalization;
using exactla::RingMode;
using rep::ActionMatrix;
using rep::hom_space;
using rep::lift_simple;
using rep::ModuleHom;
using rep::mul;

SplitContext make_split_context(grp::GroupPtr g, grp::GroupHom sylow, grp::GroupHom complement) {
    if (!sylow.is_injective() || !complement.is_injective())
        throw std::invalid_argument("SplitContext: embeddings must be injective");
    if (sylow.src->order() * complement.src->order() != g->order())
        throw std::invalid_argument("SplitContext: |P| * |H| != |G|");
    long p_part = 1;
    long n = g->order();
    while (n % 3 == 0) {
        n /= 3;
        p_part *= 3;
    }
    if (sylow.src->order() != p_part)
        throw std::invalid_argument("SplitContext: P is not a full Sylow-3 subgroup");
    if (complement.src->order() % 3 == 0)
        throw std::invalid_argument("SplitContext: complement order divisible by 3");
    if (!grp::is_normal(g, sylow)) throw std::invalid_argument("SplitContext: P not normal");
    std::vector<SimpleInfo> simples = rep::simples_for(complement.src);
    // the h-part map G -> H (a homomorphism because P is normal)
    std::vector<char> in_p(static_cast<size_t>(g->order()), 0);
    for (int u = 0; u < sylow.src->order(); ++u) in_p[static_cast<size_t>(sylow(u))] = 1;
    std::vector<int> toh(static_cast<size_t>(g->order()), -1);
    for (int x = 0; x < g->order(); ++x)
        for (int h = 0; h < complement.src->order(); ++h)
            if (in_p[static_cast<size_t>(g->op(x, g->inverse(complement(h))))]) {
                toh[static_cast<size_t>(x)] = h;
                break;
            }
    for (int v : toh)
        if (v < 0) throw std::logic_error("SplitContext: G != P * H");
    grp::GroupHom to_comp(g, complement.src, std::move(toh));
    return SplitContext{std::move(g), std::move(sylow), std::move(complement), std::move(to_comp),
                        std::move(simples)};
}

RepModule inflate_simple_to_group(const RepModule& s, const SplitContext& ctx) {
    return rep::restrict_along(s, ctx.to_complement);
}

SplitContext semisimple_context(const grp::GroupPtr& g) {
    if (g->order() % 3 == 0)
        throw std::invalid_argument("semisimple_context: order divisible by 3");
    grp::GroupPtr triv = grp::cyclic(1);
    grp::GroupHom sylow(triv, g, {0});
    std::vector<int> idmap(static_cast<size_t>(g->order()));
    for (int i = 0; i < g->order(); ++i) idmap[static_cast<size_t>(i)] = i;
    grp::GroupHom comp(g, g, std::move(idmap));
    return make_split_context(g, std::move(sylow), std::move(comp));
}

SplitContext g24_context() {
    const grp::G24Data& d = grp::g24();
    return make_split_context(d.group, d.sylow, d.complement);
}

SplitContext n_level_context(int k) {
    grp::NLevelData n = grp::n_level(k);
    return make_split_context(n.group, n.sylow, n.complement);
}

RepModule reduce_mod_p(const RepModule& m) {
    RingSpec f = RingSpec::prime_field(m.ring().p);
    if (m.ring().mode == RingMode::PrimeField) return m;
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(m.group()->order()));
    for (int x = 0; x < m.group()->order(); ++x) act.push_back(m.act(x).with_ring(f));
    return RepModule(m.group(), f, m.rank(), std::move(act));
}

namespace {

/// Greedy independent-column selection over a field, leftmost first.
std::vector<long> independent_columns(const Matrix& a) {
    const RingSpec& ring = a.ring();
    std::vector<std::vector<mpq_class>> rows;  // reduced rows so far
    std::vector<long> pivcol_of_row;
    std::vector<long> picked;
    for (long j = 0; j < a.cols(); ++j) {
        std::vector<mpq_class> v(static_cast<size_t>(a.rows()));
        for (long i = 0; i < a.rows(); ++i) v[static_cast<size_t>(i)] = a.at(i, j);
        // reduce against existing rows
        for (size_t t = 0; t < rows.size(); ++t) {
            long pc = pivcol_of_row[t];
            if (v[static_cast<size_t>(pc)] == 0) continue;
            mpq_class f = v[static_cast<size_t>(pc)];
            for (long i = 0; i < a.rows(); ++i)
                v[static_cast<size_t>(i)] =
                    ring.normalize(v[static_cast<size_t>(i)] - f * rows[t][static_cast<size_t>(i)]);
        }
        long piv = -1;
        for (long i = 0; i < a.rows(); ++i)
            if (v[static_cast<size_t>(i)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        mpq_class inv = ring.unit_inverse(v[static_cast<size_t>(piv)]);
        for (long i = 0; i < a.rows(); ++i)
            v[static_cast<size_t>(i)] = ring.normalize(v[static_cast<size_t>(i)] * inv);
        rows.push_back(std::move(v));
        pivcol_of_row.push_back(piv);
        picked.push_back(j);
    }
    return picked;
}

Matrix columns_of(const Matrix& a, const std::vector<long>& idx) { return a.select_columns(idx); }

}  // namespace

HeadResult head(const RepModule& m, const SplitContext& ctx) {
    RepModule mbar = reduce_mod_p(m);
    const RingSpec f = mbar.ring();
    const long n = mbar.rank();
    const grp::GroupPtr& g = ctx.group;
    if (m.group()->order() != g->order()) throw std::invalid_argument("head: group mismatch");

    // radical = span of (act(u) - 1) columns over the Sylow generators
    std::vector<int> pgens;
    for (int u : ctx.sylow.src->generating_set()) pgens.push_back(ctx.sylow(u));
    Matrix stacked(f, n, n * static_cast<long>(std::max<size_t>(pgens.size(), 1)));
    if (!pgens.empty()) {
        long col0 = 0;
        for (int u : pgens) {
            Matrix block = mbar.act_dense(u) - Matrix::identity(f, n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    if (block.at(i, j) != 0) stacked.set_raw(i, col0 + j, block.at(i, j));
            col0 += n;
        }
    }
    std::vector<long> rad_cols = independent_columns(stacked);
    long r = static_cast<long>(rad_cols.size());
    Matrix rad_basis = columns_of(stacked, rad_cols);

    // complete the radical basis to a full basis with standard vectors
    Matrix full = Matrix::hstack(rad_basis, Matrix::identity(f, n));
    std::vector<long> basis_cols = independent_columns(full);
    if (static_cast<long>(basis_cols.size()) != n) throw std::logic_error("head: basis completion failed");
    Matrix t = columns_of(full, basis_cols);
    Matrix tinv = exactla::inverse(t);
    long q = n - r;
    Matrix projection = tinv.block(r, 0, q, n);
    Matrix section = t.block(0, r, n, q);

    // H-action on the quotient coordinates
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(ctx.complement.src->order()));
    for (int h = 0; h < ctx.complement.src->order(); ++h) {
        Matrix conj = tinv * mul(mbar.act(ctx.complement(h)), t);
        // radical must be H-stable
        for (long i = r; i < n; ++i)
            for (long j = 0; j < r; ++j)
                if (conj.at(i, j) != 0)
                    throw std::logic_error("head: radical not stable under the complement");
        act.push_back(ActionMatrix::from_dense(conj.block(r, r, q, q)));
    }
    HeadResult out{RepModule(ctx.complement.src, f, q, std::move(act)), std::move(projection),
                   std::move(section), {}};
    std::vector<RepModule> simple_modules;
    for (const auto& s : ctx.h_simples) simple_modules.push_back(s.module);
    out.isotypic = rep::isotypic_multiplicities(simple_modules, out.head_h);
    return out;
}

CoverResult projective_cover(const RepModule& m, const SplitContext& ctx) {
    const RingSpec ring = m.ring();
    const grp::GroupPtr& g = ctx.group;
    if (m.rank() == 0) {
        RepModule zero(g, ring, 0, std::vector<ActionMatrix>(static_cast<size_t>(g->order()),
                                                             ActionMatrix::identity(ring, 0)));
        return CoverResult{zero, ModuleHom(zero, m, Matrix(ring, 0, 0)),
                           std::vector<long>(ctx.simple_count(), 0)};
    }
    HeadResult hr = head(m, ctx);
    if (hr.head_h.rank() == 0) throw std::logic_error("projective_cover: nonzero module with zero head");

    const int h_order = ctx.complement.src->order();
    const mpq_class h_inv = ring.unit_inverse(mpq_class(h_order));
    std::vector<Matrix> blocks;
    std::vector<RepModule> block_modules;
    std::vector<long> mults(ctx.simple_count(), 0);
    std::vector<int> transversal = grp::cosets(g, ctx.complement);

    for (size_t si = 0; si < ctx.simple_count(); ++si) {
        const SimpleInfo& s = ctx.h_simples[si];
        long m_s = hr.isotypic[si];
        if (m_s == 0) continue;
        mults[si] = m_s;
        // pick m_s embeddings S -> head with jointly independent images
        std::vector<Matrix> hom_basis = hom_space(s.module, hr.head_h);
        std::vector<Matrix> picks;
        Matrix combined(hr.head_h.ring(), hr.head_h.rank(), 0);
        for (const Matrix& eta : hom_basis) {
            if (static_cast<long>(picks.size()) == m_s) break;
            Matrix trial = Matrix::hstack(combined, eta);
            if (exactla::rank(trial) ==
                static_cast<long>(independent_columns(combined).size()) + s.module.rank()) {
                picks.push_back(eta);
                combined = std::move(trial);
            }
        }
        if (static_cast<long>(picks.size()) != m_s)
            throw std::logic_error("projective_cover: could not select independent embeddings");

        RepModule lifted = lift_simple(s, ring);
        RepModule induced = rep::induce(lifted, ctx.complement);
        for (const Matrix& eta : picks) {
            // linear lift of the head embedding, then H-averaging
            Matrix l0 = (hr.section * eta).with_ring(ring);
            Matrix eta_tilde(ring, m.rank(), s.module.rank());
            for (int h = 0; h < h_order; ++h) {
                Matrix term =
                    mul(m.act(ctx.complement(h)), l0 * lifted.act_dense(lifted.group()->inverse(h)));
                eta_tilde = eta_tilde + term;
            }
            eta_tilde = eta_tilde.scaled(h_inv);
            // head compatibility: projection o (eta_tilde mod p) = eta
            Matrix down = hr.projection * eta_tilde.with_ring(hr.head_h.ring());
            if (!(down == eta)) throw std::logic_error("projective_cover: averaged lift lost the head");
            // block of the covering map: columns act(rep_u) * eta_tilde
            Matrix block(ring, m.rank(), static_cast<long>(transversal.size()) * s.module.rank());
            for (size_t u = 0; u < transversal.size(); ++u) {
                Matrix moved = mul(m.act(transversal[u]), eta_tilde);
                for (long i = 0; i < m.rank(); ++i)
                    for (long j = 0; j < s.module.rank(); ++j)
                        if (moved.at(i, j) != 0)
                            block.set_raw(i, static_cast<long>(u) * s.module.rank() + j,
                                          moved.at(i, j));
            }
            blocks.push_back(std::move(block));
            block_modules.push_back(induced);
        }
    }

    RepModule cover(g, ring, 0,
                    std::vector<ActionMatrix>(static_cast<size_t>(g->order()),
                                              ActionMatrix::identity(ring, 0)));
    Matrix psi(ring, m.rank(), 0);
    for (size_t b = 0; b < blocks.size(); ++b) {
        cover = rep::direct_sum(cover, block_modules[b]);
        psi = Matrix::hstack(psi, blocks[b]);
    }
    ModuleHom cover_map(cover, m, std::move(psi));
    // surjectivity = full rank of the residue reduction
    if (exactla::rank(cover_map.mat.with_ring(RingSpec::prime_field(ring.p))) != m.rank())
        throw std::logic_error("projective_cover: covering map not surjective");
    return CoverResult{std::move(cover), std::move(cover_map), std::move(mults)};
}

bool is_projective(const RepModule& m, const SplitContext& ctx) {
    CoverResult c = projective_cover(m, ctx);
    return c.cover.rank() == m.rank();
}

HellerResult heller(const RepModule& m, const SplitContext& ctx) {
    CoverResult c = projective_cover(m, ctx);
    Diagonalization d = diagonalize(c.map.mat);
    if (d.rank() != m.rank() ||
        std::any_of(d.valuations.begin(), d.valuations.end(), [](long v) { return v != 0; }))
        throw std::logic_error("heller: covering map is not a clean surjection of free modules");
    long kdim = c.cover.rank() - m.rank();
    std::vector<long> free_cols;
    for (long j = m.rank(); j < c.cover.rank(); ++j) free_cols.push_back(j);
    Matrix incl = d.Vinv.select_columns(free_cols);
    // restrict the cover action to the kernel
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(ctx.group->order()));
    for (int x = 0; x < ctx.group->order(); ++x) {
        Matrix moved = mul(c.cover.act(x), incl);
        act.push_back(ActionMatrix::from_dense(exactla::solve(incl, moved)));
    }
    RepModule omega(ctx.group, m.ring(), kdim, std::move(act));
    return HellerResult{std::move(omega), std::move(incl)};
}

ResolutionPrefix minimal_resolution(const RepModule& m, long r_max, const SplitContext& ctx) {
    ResolutionPrefix out;
    for (const auto& s : ctx.h_simples) out.table.simple_names.push_back(s.name);
    RepModule current = m;
    for (long r = 0; r <= r_max; ++r) {
        if (current.rank() == 0) {
            out.table.rows.push_back(std::vector<long>(ctx.simple_count(), 0));
            continue;
        }
        CoverResult c = projective_cover(current, ctx);
        out.table.rows.push_back(c.multiplicities);
        HellerResult h = heller(current, ctx);
        out.steps.push_back(std::move(c));
        out.syzygies.push_back(h.omega);
        current = h.omega;
    }
    return out;
}

long stable_hom(const RepModule& m, const RepModule& n, const SplitContext& ctx) {
    if (m.ring().mode != RingMode::PrimeField)
        throw std::invalid_argument("stable_hom: PrimeField mode only");
    std::vector<Matrix> full = hom_space(m, n);
    if (n.rank() == 0) return 0;
    CoverResult cn = projective_cover(n, ctx);
    std::vector<Matrix> through = hom_space(m, cn.cover);
    // rank of {pi o F} inside Hom(m, n)
    Matrix flat(m.ring(), n.rank() * m.rank(), static_cast<long>(through.size()));
    for (size_t t = 0; t < through.size(); ++t) {
        Matrix composed = cn.map.mat * through[t];
        for (long i = 0; i < composed.rows(); ++i)
            for (long j = 0; j < composed.cols(); ++j)
                flat.set(i * m.rank() + j, static_cast<long>(t), composed.at(i, j));
    }
    return static_cast<long>(full.size()) - exactla::rank(flat);
}

}  // namespace stabmod::homalg
