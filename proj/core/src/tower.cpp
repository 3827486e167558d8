#include "stabmod/tower.hpp"

#include "stabmod/simples.hpp"

namespace stabmod::homalg {

using rep::Character;
using rep::mul;
using rep::RepModule;

namespace {

RingSpec zl() { return RingSpec::p_local(3); }

mpq_class three_pow(long d) { return mpq_class(exactla::pow_ui(mpz_class(3), d)); }

void validate_transition(const ChainComplex& lo, const ChainComplex& hi,
                         const grp::GroupHom& down, const std::vector<Matrix>& trans) {
    if (static_cast<long>(trans.size()) != lo.length() || lo.length() != hi.length())
        throw std::invalid_argument("TowerComplex: transition family has wrong length");
    for (long pos = 0; pos < lo.length(); ++pos) {
        const Matrix& t = trans[static_cast<size_t>(pos)];
        if (t.rows() != lo.module(pos).rank() || t.cols() != hi.module(pos).rank())
            throw std::invalid_argument("TowerComplex: transition shape mismatch");
        // equivariance over the inflated action: t act_hi(g) = act_lo(down g) t
        for (int g : hi.module(pos).group()->generating_set())
            if (!(mul(t, hi.module(pos).act(g)) == mul(lo.module(pos).act(down(g)), t)))
                throw std::invalid_argument("TowerComplex: transition not equivariant at position " +
                                            std::to_string(pos));
    }
    for (long pos = 0; pos + 1 < lo.length(); ++pos) {
        Matrix lhs = trans[static_cast<size_t>(pos + 1)] * hi.map(pos).mat;
        Matrix rhs = lo.map(pos).mat * trans[static_cast<size_t>(pos)];
        if (!(lhs == rhs))
            throw std::invalid_argument(
                "TowerComplex: transition does not commute with the differential at position " +
                std::to_string(pos));
    }
}

}  // namespace

Matrix induced_transition(const grp::GroupHom& down, const grp::GroupHom& emb_hi,
                          const grp::GroupHom& emb_lo, const RepModule& x) {
    const grp::GroupPtr& hi = down.src;
    const grp::GroupPtr& lo = down.dst;
    std::vector<int> reps_hi = grp::cosets(hi, emb_hi);
    std::vector<int> reps_lo = grp::cosets(lo, emb_lo);
    // coset decomposition tables at the lower level
    std::vector<int> coset_of(static_cast<size_t>(lo->order()), -1);
    std::vector<int> h_part(static_cast<size_t>(lo->order()), -1);
    for (size_t u = 0; u < reps_lo.size(); ++u)
        for (int h = 0; h < emb_lo.src->order(); ++h) {
            int e = lo->op(reps_lo[u], emb_lo(h));
            coset_of[static_cast<size_t>(e)] = static_cast<int>(u);
            h_part[static_cast<size_t>(e)] = h;
        }
    const long rx = x.rank();
    Matrix out(x.ring(), static_cast<long>(reps_lo.size()) * rx,
               static_cast<long>(reps_hi.size()) * rx);
    for (size_t t = 0; t < reps_hi.size(); ++t) {
        int moved = down(reps_hi[t]);
        long u = coset_of[static_cast<size_t>(moved)];
        Matrix ah = x.act_dense(h_part[static_cast<size_t>(moved)]);
        for (long i = 0; i < rx; ++i)
            for (long j = 0; j < rx; ++j)
                if (ah.at(i, j) != 0)
                    out.set_raw(u * rx + i, static_cast<long>(t) * rx + j, ah.at(i, j));
    }
    return out;
}

TowerComplex build_tower_complex(int k_max, const LevelBuilder& builder) {
    if (k_max < 2) throw std::invalid_argument("build_tower_complex: k_max must be >= 2");
    TowerComplex out{grp::tower(k_max), {}, {}};
    for (int k = 1; k <= k_max; ++k) out.levels.push_back(builder(k));
    return out;
}

namespace {

/// Shared transition assembly: each position of the three sequence families
/// is either Ind_H(X) for (H, X) drawn from the catalog or the trivial
/// module; `spec(pos)` returns the embedding pair and the rank-1 module.
struct PositionHandle {
    bool is_trivial = false;
    grp::GroupHom emb_hi;
    grp::GroupHom emb_lo;
    RepModule x;
};

void with_transitions(TowerComplex& t,
                      const std::function<PositionHandle(int pair, long pos)>& spec) {
    for (size_t pair = 0; pair + 1 < t.levels.size(); ++pair) {
        const grp::GroupHom& down = t.tower.down[pair];
        std::vector<Matrix> trans;
        for (long pos = 0; pos < t.levels[pair].length(); ++pos) {
            PositionHandle h = spec(static_cast<int>(pair), pos);
            if (h.is_trivial) {
                trans.push_back(Matrix::identity(zl(), 1));
            } else {
                trans.push_back(induced_transition(down, h.emb_hi, h.emb_lo, h.x));
            }
        }
        validate_transition(t.levels[pair], t.levels[pair + 1], down, trans);
        t.transitions.push_back(std::move(trans));
    }
}

RepModule theta_g24_module() {
    return rep::character_module(rep::theta_g24(), zl());
}

RepModule triv_g24_module() { return rep::trivial_module(grp::g24().group, zl()); }

RepModule theta_q8_module() { return rep::character_module(rep::theta_q8(), zl()); }

RepModule triv_q8_module() { return rep::trivial_module(grp::q8_in_sd16().group, zl()); }

grp::GroupHom q8_in_n(const grp::NLevelData& n) {
    return grp::compose(n.g24_in, grp::g24().q8_in);
}

}  // namespace

TowerComplex dihedral_sequence_tower(int k_max) {
    TowerComplex t = build_tower_complex(k_max, n_level_dihedral_sequence);
    with_transitions(t, [&t](int pair, long pos) {
        const grp::NLevelData& hi = t.tower.levels[static_cast<size_t>(pair + 1)];
        const grp::NLevelData& lo = t.tower.levels[static_cast<size_t>(pair)];
        PositionHandle h{false, hi.g24_in, lo.g24_in, theta_g24_module()};
        if (pos == 1) h.x = triv_g24_module();
        if (pos == 2) h.is_trivial = true;
        return h;
    });
    return t;
}

TowerComplex induced_sequence_tower(int k_max) {
    TowerComplex t = build_tower_complex(k_max, n_level_induced_sequence);
    with_transitions(t, [&t](int pair, long pos) {
        const grp::NLevelData& hi = t.tower.levels[static_cast<size_t>(pair + 1)];
        const grp::NLevelData& lo = t.tower.levels[static_cast<size_t>(pair)];
        switch (pos) {
            case 0: return PositionHandle{false, hi.g24_in, lo.g24_in, triv_g24_module()};
            case 1: return PositionHandle{false, q8_in_n(hi), q8_in_n(lo), triv_q8_module()};
            case 2: return PositionHandle{false, q8_in_n(hi), q8_in_n(lo), theta_q8_module()};
            default: return PositionHandle{false, hi.g24_in, lo.g24_in, theta_g24_module()};
        }
    });
    return t;
}

TowerComplex spliced_complex_tower(int k_max) {
    TowerComplex t = build_tower_complex(k_max, n_level_spliced_complex);
    with_transitions(t, [&t](int pair, long pos) {
        const grp::NLevelData& hi = t.tower.levels[static_cast<size_t>(pair + 1)];
        const grp::NLevelData& lo = t.tower.levels[static_cast<size_t>(pair)];
        switch (pos) {
            case 0: return PositionHandle{false, hi.g24_in, lo.g24_in, triv_g24_module()};
            case 1: return PositionHandle{false, q8_in_n(hi), q8_in_n(lo), triv_q8_module()};
            case 2: return PositionHandle{false, q8_in_n(hi), q8_in_n(lo), theta_q8_module()};
            case 3: return PositionHandle{false, hi.g24_in, lo.g24_in, triv_g24_module()};
            default: return PositionHandle{true, hi.g24_in, lo.g24_in, triv_g24_module()};
        }
    });
    return t;
}

namespace {

TowerCertificate check_with_span(const TowerComplex& t, long d_per_step, int span) {
    if (t.levels.size() < static_cast<size_t>(span) + 1)
        throw std::invalid_argument("tower_check: not enough levels for the requested span");
    TowerCertificate cert;
    cert.divisibility_target = d_per_step * span;
    for (const ChainComplex& c : t.levels) cert.level_reports.push_back(check_exact(c));
    cert.all_pass = true;
    mpq_class scale = three_pow(d_per_step * span);
    for (size_t lo_idx = 0; lo_idx + static_cast<size_t>(span) < t.levels.size(); ++lo_idx) {
        const ChainComplex& lo = t.levels[lo_idx];
        const ChainComplex& hi = t.levels[lo_idx + static_cast<size_t>(span)];
        std::vector<bool> ok, vac;
        for (long pos = 0; pos < lo.length(); ++pos) {
            const exactla::HomologyReport& rep_lo =
                cert.level_reports[lo_idx].reports[static_cast<size_t>(pos)];
            if (rep_lo.exact()) {
                ok.push_back(true);
                vac.push_back(true);
                continue;
            }
            vac.push_back(false);
            // composite transition down through `span` levels
            Matrix trans = t.transitions[lo_idx][static_cast<size_t>(pos)];
            for (int step = 1; step < span; ++step)
                trans = trans * t.transitions[lo_idx + static_cast<size_t>(step)][static_cast<size_t>(pos)];
            Matrix cycles_hi = exactla::kernel(hi.d_out(pos));
            Matrix cycles_lo = exactla::kernel(lo.d_out(pos));
            Matrix image = trans * cycles_hi;
            Matrix target = Matrix::hstack(cycles_lo.scaled(scale), lo.d_in(pos));
            bool pass = exactla::is_solvable(target, image);
            ok.push_back(pass);
            if (!pass) cert.all_pass = false;
        }
        cert.divisibility_ok.push_back(std::move(ok));
        cert.vacuous.push_back(std::move(vac));
    }
    return cert;
}

}  // namespace

TowerCertificate tower_check(const TowerComplex& t, long divisibility_target) {
    return check_with_span(t, divisibility_target, 1);
}

TowerCertificate tower_check_composite(const TowerComplex& t, long d_per_step, int span) {
    if (span < 1) throw std::invalid_argument("tower_check_composite: span must be >= 1");
    return check_with_span(t, d_per_step, span);
}

}  // namespace stabmod::homalg
