#include "stabmod/sequences.hpp"

#include "stabmod/simples.hpp"

namespace stabmod::homalg {

using exactla::RingMode;
using rep::Character;
using rep::character_module;
using rep::induce;
using rep::ModuleHom;
using rep::RepModule;

namespace {

RingSpec zl() { return RingSpec::p_local(3); }

struct CosetData {
    std::vector<int> reps;
    std::vector<int> coset_of;
    std::vector<int> h_part;
};

CosetData coset_data(const grp::GroupPtr& g, const grp::GroupHom& emb) {
    CosetData t;
    t.reps = grp::cosets(g, emb);
    t.coset_of.assign(static_cast<size_t>(g->order()), -1);
    t.h_part.assign(static_cast<size_t>(g->order()), -1);
    for (size_t i = 0; i < t.reps.size(); ++i)
        for (int h = 0; h < emb.src->order(); ++h) {
            int x = g->op(t.reps[i], emb(h));
            t.coset_of[static_cast<size_t>(x)] = static_cast<int>(i);
            t.h_part[static_cast<size_t>(x)] = h;
        }
    return t;
}

/// Ind_H(X) -> Ind_H(Y) determined by 1 (x) x0 |-> (s - s^-1) (x) y0 for
/// rank-1 X, Y over H given by characters.
Matrix shift_difference_matrix(const grp::GroupPtr& g, const grp::GroupHom& emb,
                               const Character& target_char, int s) {
    CosetData ct = coset_data(g, emb);
    long n = static_cast<long>(ct.reps.size());
    Matrix out(zl(), n, n);
    int sinv = g->inverse(s);
    for (long t = 0; t < n; ++t) {
        int fwd = g->op(ct.reps[static_cast<size_t>(t)], s);
        int bwd = g->op(ct.reps[static_cast<size_t>(t)], sinv);
        long tf = ct.coset_of[static_cast<size_t>(fwd)];
        long tb = ct.coset_of[static_cast<size_t>(bwd)];
        mpq_class cf(target_char(ct.h_part[static_cast<size_t>(fwd)]));
        mpq_class cb(target_char(ct.h_part[static_cast<size_t>(bwd)]));
        out.set(tf, t, out.at(tf, t) + cf);
        out.set(tb, t, out.at(tb, t) - cb);
    }
    return out;
}

/// Ind_H(X) -> X_G for a character X_G of G restricting to X on H:
/// e_t (x) v |-> X_G(rep_t) v.
Matrix counit_matrix(const grp::GroupPtr& g, const grp::GroupHom& emb, const Character& g_char) {
    std::vector<int> reps = grp::cosets(g, emb);
    Matrix out(zl(), 1, static_cast<long>(reps.size()));
    for (size_t t = 0; t < reps.size(); ++t)
        out.set(0, static_cast<long>(t), mpq_class(g_char(reps[t])));
    return out;
}

/// R -> Ind_H(R): 1 |-> sum of the coset basis (the norm section).
Matrix norm_inclusion_matrix(long index) {
    Matrix out(zl(), index, 1);
    for (long t = 0; t < index; ++t) out.set(t, 0, 1);
    return out;
}

Matrix monomial_inverse(const Matrix& m) {
    Matrix out(m.ring(), m.cols(), m.rows());
    for (long j = 0; j < m.cols(); ++j)
        for (long i = 0; i < m.rows(); ++i)
            if (m.at(i, j) != 0) out.set(j, i, m.ring().unit_inverse(m.at(i, j)));
    return out;
}

Character trivial_character(const grp::GroupPtr& g) {
    return Character{g, std::vector<int>(static_cast<size_t>(g->order()), 1)};
}

}  // namespace

Matrix induction_transitivity_iso(const grp::GroupHom& mid_in_big,
                                  const grp::GroupHom& small_in_mid,
                                  const grp::GroupHom& small_in_big,
                                  const Character& x_char) {
    const grp::GroupPtr& big = mid_in_big.dst;
    CosetData outer = coset_data(big, mid_in_big);
    CosetData inner = coset_data(mid_in_big.src, small_in_mid);
    CosetData fine = coset_data(big, small_in_big);
    long no = static_cast<long>(outer.reps.size());
    long ni = static_cast<long>(inner.reps.size());
    Matrix out(zl(), static_cast<long>(fine.reps.size()), no * ni);
    for (long t = 0; t < no; ++t)
        for (long s = 0; s < ni; ++s) {
            int n = big->op(outer.reps[static_cast<size_t>(t)],
                            mid_in_big(inner.reps[static_cast<size_t>(s)]));
            long u = fine.coset_of[static_cast<size_t>(n)];
            int h = fine.h_part[static_cast<size_t>(n)];
            out.set(u, t * ni + s, mpq_class(x_char(h)));
        }
    return out;
}

ChainComplex g24_dihedral_sequence() {
    const grp::G24Data& d = grp::g24();
    const grp::Q8Data& q8 = grp::q8_in_sd16();
    Character theta_h = rep::extend_character(rep::theta_q8());
    Character theta_g = rep::extend_character(rep::theta_g24());

    RepModule m0 = rep::trivial_module(d.group, zl());
    RepModule m1 = induce(rep::trivial_module(q8.group, zl()), d.q8_in);
    RepModule m2 = induce(character_module(theta_h, zl()), d.q8_in);
    RepModule m3 = character_module(theta_g, zl());

    ModuleHom f0(m0, m1, norm_inclusion_matrix(3));
    ModuleHom f1(m1, m2, shift_difference_matrix(d.group, d.q8_in, theta_h, d.c));
    ModuleHom f2(m2, m3, counit_matrix(d.group, d.q8_in, theta_g));
    return ChainComplex({m0, m1, m2, m3}, {std::move(f0), std::move(f1), std::move(f2)});
}

ChainComplex n_level_dihedral_sequence(int k) {
    grp::NLevelData n = grp::n_level(k);
    Character theta_g24_char = rep::extend_character(rep::theta_g24());
    Character triv_g24 = trivial_character(grp::g24().group);

    RepModule m0 = induce(character_module(theta_g24_char, zl()), n.g24_in);
    RepModule m1 = induce(rep::trivial_module(grp::g24().group, zl()), n.g24_in);
    RepModule m2 = rep::trivial_module(n.group, zl());

    ModuleHom f0(m0, m1, shift_difference_matrix(n.group, n.g24_in, triv_g24, n.z));
    ModuleHom f1(m1, m2, counit_matrix(n.group, n.g24_in, trivial_character(n.group)));
    return ChainComplex({m0, m1, m2}, {std::move(f0), std::move(f1)});
}

ChainComplex n_level_induced_sequence(int k) {
    grp::NLevelData n = grp::n_level(k);
    const grp::G24Data& d = grp::g24();
    const grp::Q8Data& q8 = grp::q8_in_sd16();
    ChainComplex base = g24_dihedral_sequence();
    Character theta_h = rep::extend_character(rep::theta_q8());
    grp::GroupHom q8_in_n = grp::compose(n.g24_in, d.q8_in);

    RepModule a0 = induce(base.module(0), n.g24_in);
    RepModule a3 = induce(base.module(3), n.g24_in);
    RepModule b1 = induce(rep::trivial_module(q8.group, zl()), q8_in_n);
    RepModule b2 = induce(character_module(theta_h, zl()), q8_in_n);

    Matrix theta1 =
        induction_transitivity_iso(n.g24_in, d.q8_in, q8_in_n, trivial_character(q8.group));
    Matrix theta2 = induction_transitivity_iso(n.g24_in, d.q8_in, q8_in_n, theta_h);

    Matrix ind0 = rep::induce_hom_matrix(base.map(0).mat, n.g24_in);
    Matrix ind1 = rep::induce_hom_matrix(base.map(1).mat, n.g24_in);
    Matrix ind2 = rep::induce_hom_matrix(base.map(2).mat, n.g24_in);

    ModuleHom f0(a0, b1, theta1 * ind0);
    ModuleHom f1(b1, b2, theta2 * ind1 * monomial_inverse(theta1));
    ModuleHom f2(b2, a3, ind2 * monomial_inverse(theta2));
    return ChainComplex({a0, b1, b2, a3}, {std::move(f0), std::move(f1), std::move(f2)});
}

ChainComplex n_level_spliced_complex(int k) {
    ChainComplex front = n_level_induced_sequence(k);
    ChainComplex back = n_level_dihedral_sequence(k);
    // the joint modules come from the same construction; the spliced
    // differential is the composite through Ind_{G24} R(theta)
    if (front.module(3).rank() != back.module(0).rank())
        throw std::logic_error("n_level_spliced_complex: joint modules differ");
    for (int g = 0; g < front.module(3).group()->order(); ++g)
        if (!rep::equal(front.module(3).act(g), back.module(0).act(g)))
            throw std::logic_error("n_level_spliced_complex: joint modules differ");
    ModuleHom joint(front.module(2), back.module(1), back.map(0).mat * front.map(2).mat);
    return ChainComplex(
        {front.module(0), front.module(1), front.module(2), back.module(1), back.module(2)},
        {front.map(0), front.map(1), std::move(joint), back.map(1)});
}

}  // namespace stabmod::homalg
