#include "stabmod/rep.hpp"

#include <algorithm>

#include "stabmod/catalog.hpp"

namespace stabmod::rep {

using exactla::kernel;
using exactla::RingMode;

ActionMatrix ActionMatrix::from_dense(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("ActionMatrix: not square");
    ActionMatrix out;
    out.n_ = m.rows();
    out.ring_ = m.ring();
    if (m.is_monomial()) {
        out.monomial_ = true;
        out.row_of_.assign(static_cast<size_t>(out.n_), -1);
        out.coef_.assign(static_cast<size_t>(out.n_), mpq_class(0));
        for (long i = 0; i < out.n_; ++i)
            for (long j = 0; j < out.n_; ++j)
                if (m.at(i, j) != 0) {
                    out.row_of_[static_cast<size_t>(j)] = i;
                    out.coef_[static_cast<size_t>(j)] = m.at(i, j);
                }
        for (long j = 0; j < out.n_; ++j)
            if (out.row_of_[static_cast<size_t>(j)] < 0)
                throw std::invalid_argument("ActionMatrix: monomial matrix not invertible");
    } else {
        out.dense_ = std::move(m);
    }
    return out;
}

ActionMatrix ActionMatrix::monomial(RingSpec ring, std::vector<long> row_of,
                                    std::vector<mpq_class> coef) {
    ActionMatrix out;
    out.monomial_ = true;
    out.ring_ = ring;
    out.n_ = static_cast<long>(row_of.size());
    if (coef.size() != row_of.size())
        throw std::invalid_argument("ActionMatrix::monomial: size mismatch");
    std::vector<char> seen(row_of.size(), 0);
    for (size_t j = 0; j < row_of.size(); ++j) {
        long i = row_of[j];
        if (i < 0 || i >= out.n_ || seen[static_cast<size_t>(i)]++)
            throw std::invalid_argument("ActionMatrix::monomial: not a permutation");
        coef[j] = ring.normalize(coef[j]);
        if (coef[j] == 0) throw std::invalid_argument("ActionMatrix::monomial: zero coefficient");
    }
    out.row_of_ = std::move(row_of);
    out.coef_ = std::move(coef);
    return out;
}

ActionMatrix ActionMatrix::identity(RingSpec ring, long n) {
    std::vector<long> row(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) row[static_cast<size_t>(j)] = j;
    return monomial(ring, std::move(row), std::vector<mpq_class>(static_cast<size_t>(n), 1));
}

Matrix ActionMatrix::dense() const {
    if (!monomial_) return dense_;
    Matrix m(ring_, n_, n_);
    for (long j = 0; j < n_; ++j)
        m.set_raw(row_of_[static_cast<size_t>(j)], j, coef_[static_cast<size_t>(j)]);
    return m;
}

ActionMatrix compose(const ActionMatrix& a, const ActionMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ActionMatrix::compose: size mismatch");
    if (a.monomial_ && b.monomial_) {
        std::vector<long> row(static_cast<size_t>(a.n_));
        std::vector<mpq_class> coef(static_cast<size_t>(a.n_));
        for (long j = 0; j < a.n_; ++j) {
            long mid = b.row_of_[static_cast<size_t>(j)];
            row[static_cast<size_t>(j)] = a.row_of_[static_cast<size_t>(mid)];
            coef[static_cast<size_t>(j)] = a.ring_.normalize(
                a.coef_[static_cast<size_t>(mid)] * b.coef_[static_cast<size_t>(j)]);
        }
        return ActionMatrix::monomial(a.ring_, std::move(row), std::move(coef));
    }
    return ActionMatrix::from_dense(a.dense() * b.dense());
}

bool equal(const ActionMatrix& a, const ActionMatrix& b) {
    if (a.n_ != b.n_) return false;
    if (a.monomial_ && b.monomial_) return a.row_of_ == b.row_of_ && a.coef_ == b.coef_;
    return a.dense() == b.dense();
}

/// c == a*b without building the composite; the workhorse of the exhaustive
/// monomial action audit.
static bool composed_equals(const ActionMatrix& a, const ActionMatrix& b, const ActionMatrix& c) {
    if (!(a.is_monomial() && b.is_monomial() && c.is_monomial()))
        return equal(compose(a, b), c);
    const long n = a.size();
    for (long j = 0; j < n; ++j) {
        long mid = b.row_of(j);
        if (c.row_of(j) != a.row_of(mid)) return false;
    }
    mpq_class prod;
    for (long j = 0; j < n; ++j) {
        long mid = b.row_of(j);
        const mpq_class& x = a.coef(mid);
        const mpq_class& y = b.coef(j);
        // fast path: +-1 coefficients, the overwhelmingly common case
        if ((x == 1 || x == -1) && (y == 1 || y == -1)) {
            mpq_class want = (x == y) ? mpq_class(1) : mpq_class(-1);
            if (c.coef(j) != a.ring().normalize(want)) return false;
        } else {
            prod = a.ring().normalize(x * y);
            if (c.coef(j) != prod) return false;
        }
    }
    return true;
}

Matrix mul(const ActionMatrix& a, const Matrix& m) {
    if (a.size() != m.rows()) throw std::invalid_argument("ActionMatrix::mul: size mismatch");
    if (!a.monomial_) return a.dense_ * m;
    Matrix out(m.ring(), m.rows(), m.cols());
    for (long j = 0; j < a.n_; ++j) {
        long i = a.row_of_[static_cast<size_t>(j)];
        const mpq_class& c = a.coef_[static_cast<size_t>(j)];
        for (long t = 0; t < m.cols(); ++t)
            if (m.at(j, t) != 0) out.set(i, t, c * m.at(j, t));
    }
    return out;
}

Matrix mul(const Matrix& m, const ActionMatrix& a) {
    if (m.cols() != a.size()) throw std::invalid_argument("ActionMatrix::mul: size mismatch");
    if (!a.monomial_) return m * a.dense_;
    Matrix out(m.ring(), m.rows(), m.cols());
    for (long j = 0; j < a.n_; ++j) {
        long i = a.row_of_[static_cast<size_t>(j)];
        const mpq_class& c = a.coef_[static_cast<size_t>(j)];
        for (long t = 0; t < m.rows(); ++t)
            if (m.at(t, i) != 0) out.set(t, j, c * m.at(t, i));
    }
    return out;
}

ActionMatrix ActionMatrix::transposed() const {
    if (!monomial_) return from_dense(dense_.transpose());
    std::vector<long> row(static_cast<size_t>(n_));
    std::vector<mpq_class> coef(static_cast<size_t>(n_));
    for (long j = 0; j < n_; ++j) {
        long i = row_of_[static_cast<size_t>(j)];
        row[static_cast<size_t>(i)] = j;
        coef[static_cast<size_t>(i)] = coef_[static_cast<size_t>(j)];
    }
    return monomial(ring_, std::move(row), std::move(coef));
}

ActionMatrix ActionMatrix::scaled(const mpq_class& c) const {
    if (!monomial_) return from_dense(dense_.scaled(c));
    std::vector<mpq_class> coef = coef_;
    for (auto& x : coef) x = ring_.normalize(x * c);
    return monomial(ring_, row_of_, std::move(coef));
}

ActionMatrix kron(const ActionMatrix& a, const ActionMatrix& b) {
    if (a.monomial_ && b.monomial_) {
        long n = a.n_ * b.n_;
        std::vector<long> row(static_cast<size_t>(n));
        std::vector<mpq_class> coef(static_cast<size_t>(n));
        for (long ja = 0; ja < a.n_; ++ja)
            for (long jb = 0; jb < b.n_; ++jb) {
                long j = ja * b.n_ + jb;
                row[static_cast<size_t>(j)] =
                    a.row_of_[static_cast<size_t>(ja)] * b.n_ + b.row_of_[static_cast<size_t>(jb)];
                coef[static_cast<size_t>(j)] = a.ring_.normalize(
                    a.coef_[static_cast<size_t>(ja)] * b.coef_[static_cast<size_t>(jb)]);
            }
        return ActionMatrix::monomial(a.ring_, std::move(row), std::move(coef));
    }
    return ActionMatrix::from_dense(a.dense().kron(b.dense()));
}

ActionMatrix ActionMatrix::with_ring(RingSpec ring) const {
    if (monomial_) {
        std::vector<mpq_class> coef = coef_;
        for (auto& c : coef) c = ring.normalize(c);
        return monomial(ring, row_of_, std::move(coef));
    }
    return from_dense(dense_.with_ring(ring));
}

namespace {

void audit_action(const GroupPtr& group, long rank, const std::vector<ActionMatrix>& act,
                  bool all_monomial) {
    const int n = group->order();
    ActionMatrix id = ActionMatrix::identity(act[0].ring(), rank);
    if (!equal(act[0], id)) throw ActionAuditError(0, 0);

    if (all_monomial) {
        // sign-monomial fast lane: permutations plus +-1 coefficients cover
        // every permutation-type module; the audit is pure integer work
        bool signs_only = true;
        std::vector<std::vector<int8_t>> sign(static_cast<size_t>(n));
        const mpq_class minus_one = act[0].ring().normalize(mpq_class(-1));
        for (int x = 0; x < n && signs_only; ++x) {
            sign[static_cast<size_t>(x)].resize(static_cast<size_t>(rank));
            for (long j = 0; j < rank; ++j) {
                const mpq_class& c = act[static_cast<size_t>(x)].coef(j);
                if (c == 1)
                    sign[static_cast<size_t>(x)][static_cast<size_t>(j)] = 1;
                else if (c == minus_one)
                    sign[static_cast<size_t>(x)][static_cast<size_t>(j)] = -1;
                else
                    signs_only = false;
            }
        }
        if (signs_only) {
            for (int x = 0; x < n; ++x) {
                const ActionMatrix& ax = act[static_cast<size_t>(x)];
                const auto& sx = sign[static_cast<size_t>(x)];
                for (int y = 0; y < n; ++y) {
                    const ActionMatrix& ay = act[static_cast<size_t>(y)];
                    const auto& sy = sign[static_cast<size_t>(y)];
                    const ActionMatrix& axy = act[static_cast<size_t>(group->op(x, y))];
                    const auto& sxy = sign[static_cast<size_t>(group->op(x, y))];
                    for (long j = 0; j < rank; ++j) {
                        long mid = ay.row_of(j);
                        if (axy.row_of(j) != ax.row_of(mid) ||
                            sxy[static_cast<size_t>(j)] !=
                                sx[static_cast<size_t>(mid)] * sy[static_cast<size_t>(j)])
                            throw ActionAuditError(x, y);
                    }
                }
            }
            return;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!composed_equals(act[static_cast<size_t>(x)], act[static_cast<size_t>(y)],
                                     act[static_cast<size_t>(group->op(x, y))]))
                    throw ActionAuditError(x, y);
        return;
    }
    double cost = static_cast<double>(n) * n * rank * rank * rank;
    if (cost <= 2e8) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!composed_equals(act[static_cast<size_t>(x)], act[static_cast<size_t>(y)],
                                     act[static_cast<size_t>(group->op(x, y))]))
                    throw ActionAuditError(x, y);
        return;
    }
    // (g, y) over a generating set plus act(id) = I proves all pairs.
    for (int g : group->generating_set())
        for (int y = 0; y < n; ++y)
            if (!composed_equals(act[static_cast<size_t>(g)], act[static_cast<size_t>(y)],
                                 act[static_cast<size_t>(group->op(g, y))]))
                throw ActionAuditError(g, y);
}

}  // namespace

RepModule::RepModule(GroupPtr group, RingSpec ring, long rank, std::vector<ActionMatrix> act) {
    if (!group) throw std::invalid_argument("RepModule: null group");
    if (static_cast<int>(act.size()) != group->order())
        throw std::invalid_argument("RepModule: need one action matrix per element");
    bool mono = true;
    for (const auto& a : act) {
        if (a.size() != rank) throw std::invalid_argument("RepModule: action size != rank");
        if (!(a.ring() == ring)) throw std::invalid_argument("RepModule: action ring mismatch");
        mono = mono && a.is_monomial();
    }
    audit_action(group, rank, act, mono);
    impl_ = std::make_shared<Impl>(Impl{std::move(group), ring, rank, std::move(act), mono});
}

Character extend_character(const CharacterData& data) {
    const GroupPtr& g = data.group;
    std::vector<int> gen_idx;
    std::vector<int> gen_val;
    for (const auto& [name, v] : data.values) {
        if (v != 1 && v != -1) throw std::invalid_argument("extend_character: values must be +-1");
        gen_idx.push_back(g->generator(name));
        gen_val.push_back(v);
    }
    std::vector<int> values(static_cast<size_t>(g->order()), 0);
    values[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g->order(); ++x) {
            if (values[static_cast<size_t>(x)] == 0) continue;
            for (size_t t = 0; t < gen_idx.size(); ++t) {
                int y = g->op(x, gen_idx[t]);
                int v = values[static_cast<size_t>(x)] * gen_val[t];
                if (values[static_cast<size_t>(y)] == 0) {
                    values[static_cast<size_t>(y)] = v;
                    changed = true;
                } else if (values[static_cast<size_t>(y)] != v) {
                    throw std::invalid_argument(
                        "extend_character: values do not extend to a homomorphism");
                }
            }
        }
    }
    for (int v : values)
        if (v == 0)
            throw std::invalid_argument("extend_character: generators do not generate the group");
    for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y)
            if (values[static_cast<size_t>(g->op(x, y))] !=
                values[static_cast<size_t>(x)] * values[static_cast<size_t>(y)])
                throw std::invalid_argument("extend_character: not multiplicative");
    return Character{g, std::move(values)};
}

RepModule character_module(const Character& chi, RingSpec ring) {
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(chi.group->order()));
    for (int x = 0; x < chi.group->order(); ++x)
        act.push_back(ActionMatrix::monomial(ring, {0}, {mpq_class(chi(x))}));
    return RepModule(chi.group, ring, 1, std::move(act));
}

RepModule character_module(const CharacterData& data, RingSpec ring) {
    return character_module(extend_character(data), ring);
}

CharacterData chi_sd16() {
    return CharacterData{grp::sd16().group, {{"omega", -1}, {"phi", -1}}};
}

CharacterData theta_q8() { return CharacterData{grp::q8_in_sd16().group, {{"i", 1}, {"j", -1}}}; }

CharacterData theta_g24() {
    return CharacterData{grp::g24().group, {{"c", 1}, {"i", 1}, {"j", -1}}};
}

RepModule trivial_module(const GroupPtr& g, RingSpec ring) {
    std::vector<ActionMatrix> act(static_cast<size_t>(g->order()), ActionMatrix::identity(ring, 1));
    return RepModule(g, ring, 1, std::move(act));
}

RepModule regular_module(const GroupPtr& g, RingSpec ring) {
    const int n = g->order();
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::vector<long> row(static_cast<size_t>(n));
        for (int y = 0; y < n; ++y) row[static_cast<size_t>(y)] = g->op(x, y);
        act.push_back(ActionMatrix::monomial(ring, std::move(row),
                                             std::vector<mpq_class>(static_cast<size_t>(n), 1)));
    }
    return RepModule(g, ring, n, std::move(act));
}

namespace {

struct CosetTable {
    std::vector<int> reps;
    std::vector<int> coset_of;
    std::vector<int> h_part;
};

CosetTable coset_table(const GroupPtr& g, const GroupHom& emb) {
    CosetTable t;
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

}  // namespace

RepModule induce(const RepModule& m, const GroupHom& embedding) {
    if (m.group()->order() != embedding.src->order())
        throw std::invalid_argument("induce: module group is not the embedding source");
    if (!embedding.is_injective()) throw std::invalid_argument("induce: not an embedding");
    const GroupPtr& g = embedding.dst;
    CosetTable ct = coset_table(g, embedding);
    const long index = static_cast<long>(ct.reps.size());
    const long r = m.rank();
    const long big = index * r;
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(g->order()));
    bool mono = m.all_monomial();
    for (int x = 0; x < g->order(); ++x) {
        if (mono) {
            std::vector<long> row(static_cast<size_t>(big));
            std::vector<mpq_class> coef(static_cast<size_t>(big));
            for (long t = 0; t < index; ++t) {
                int moved = g->op(x, ct.reps[static_cast<size_t>(t)]);
                long s = ct.coset_of[static_cast<size_t>(moved)];
                const ActionMatrix& ah = m.act(ct.h_part[static_cast<size_t>(moved)]);
                for (long jj = 0; jj < r; ++jj) {
                    row[static_cast<size_t>(t * r + jj)] = s * r + ah.row_of(jj);
                    coef[static_cast<size_t>(t * r + jj)] = ah.coef(jj);
                }
            }
            act.push_back(ActionMatrix::monomial(m.ring(), std::move(row), std::move(coef)));
        } else {
            Matrix big_m(m.ring(), big, big);
            for (long t = 0; t < index; ++t) {
                int moved = g->op(x, ct.reps[static_cast<size_t>(t)]);
                long s = ct.coset_of[static_cast<size_t>(moved)];
                Matrix ah = m.act_dense(ct.h_part[static_cast<size_t>(moved)]);
                for (long ii = 0; ii < r; ++ii)
                    for (long jj = 0; jj < r; ++jj)
                        if (ah.at(ii, jj) != 0)
                            big_m.set_raw(s * r + ii, t * r + jj, ah.at(ii, jj));
            }
            act.push_back(ActionMatrix::from_dense(std::move(big_m)));
        }
    }
    return RepModule(g, m.ring(), big, std::move(act));
}

Matrix induce_hom_matrix(const Matrix& f, const GroupHom& embedding) {
    std::vector<int> reps = grp::cosets(embedding.dst, embedding);
    Matrix id = Matrix::identity(f.ring(), static_cast<long>(reps.size()));
    return id.kron(f);
}

RepModule restrict_along(const RepModule& m, const GroupHom& hom) {
    if (m.group()->order() != hom.dst->order())
        throw std::invalid_argument("restrict_along: module group is not the hom target");
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(hom.src->order()));
    for (int x = 0; x < hom.src->order(); ++x) act.push_back(m.act(hom(x)));
    return RepModule(hom.src, m.ring(), m.rank(), std::move(act));
}

RepModule twist(const RepModule& m, const Character& chi) {
    if (m.group()->order() != chi.group->order())
        throw std::invalid_argument("twist: group mismatch");
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(m.group()->order()));
    for (int x = 0; x < m.group()->order(); ++x) act.push_back(m.act(x).scaled(mpq_class(chi(x))));
    return RepModule(m.group(), m.ring(), m.rank(), std::move(act));
}

RepModule tensor(const RepModule& a, const RepModule& b) {
    if (a.group()->order() != b.group()->order() || !(a.ring() == b.ring()))
        throw std::invalid_argument("tensor: group/ring mismatch");
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(a.group()->order()));
    for (int x = 0; x < a.group()->order(); ++x) act.push_back(kron(a.act(x), b.act(x)));
    return RepModule(a.group(), a.ring(), a.rank() * b.rank(), std::move(act));
}

RepModule dual(const RepModule& m) {
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(m.group()->order()));
    for (int x = 0; x < m.group()->order(); ++x)
        act.push_back(m.act(m.group()->inverse(x)).transposed());
    return RepModule(m.group(), m.ring(), m.rank(), std::move(act));
}

RepModule direct_sum(const RepModule& a, const RepModule& b) {
    if (a.group()->order() != b.group()->order() || !(a.ring() == b.ring()))
        throw std::invalid_argument("direct_sum: group/ring mismatch");
    const long ra = a.rank(), rb = b.rank();
    std::vector<ActionMatrix> act;
    act.reserve(static_cast<size_t>(a.group()->order()));
    for (int x = 0; x < a.group()->order(); ++x) {
        const ActionMatrix& ax = a.act(x);
        const ActionMatrix& bx = b.act(x);
        if (ax.is_monomial() && bx.is_monomial()) {
            std::vector<long> row(static_cast<size_t>(ra + rb));
            std::vector<mpq_class> coef(static_cast<size_t>(ra + rb));
            for (long j = 0; j < ra; ++j) {
                row[static_cast<size_t>(j)] = ax.row_of(j);
                coef[static_cast<size_t>(j)] = ax.coef(j);
            }
            for (long j = 0; j < rb; ++j) {
                row[static_cast<size_t>(ra + j)] = ra + bx.row_of(j);
                coef[static_cast<size_t>(ra + j)] = bx.coef(j);
            }
            act.push_back(ActionMatrix::monomial(a.ring(), std::move(row), std::move(coef)));
        } else {
            Matrix m(a.ring(), ra + rb, ra + rb);
            Matrix da = ax.dense(), db = bx.dense();
            for (long i = 0; i < ra; ++i)
                for (long j = 0; j < ra; ++j)
                    if (da.at(i, j) != 0) m.set_raw(i, j, da.at(i, j));
            for (long i = 0; i < rb; ++i)
                for (long j = 0; j < rb; ++j)
                    if (db.at(i, j) != 0) m.set_raw(ra + i, ra + j, db.at(i, j));
            act.push_back(ActionMatrix::from_dense(std::move(m)));
        }
    }
    return RepModule(a.group(), a.ring(), ra + rb, std::move(act));
}

std::vector<Matrix> hom_space(const RepModule& m, const RepModule& n) {
    if (m.group()->order() != n.group()->order() || !(m.ring() == n.ring()))
        throw std::invalid_argument("hom_space: group/ring mismatch");
    if (m.ring().mode == RingMode::Truncation)
        throw std::invalid_argument(
            "hom_space: Truncation mode unsupported (solution modules need not be free)");
    const RingSpec ring = m.ring();
    const long rm = m.rank(), rn = n.rank();
    std::vector<int> gens = m.group()->generating_set();
    // Unknown F is rn x rm with F act_m(g) = act_n(g) F; row-major vec gives
    // blocks act_n(g) kron I - I kron act_m(g)^T.
    Matrix sys(ring, static_cast<long>(gens.size()) * rn * rm, rn * rm);
    long row0 = 0;
    for (int g : gens) {
        Matrix a = n.act_dense(g);
        Matrix bt = m.act_dense(g).transpose();
        Matrix block =
            a.kron(Matrix::identity(ring, rm)) - Matrix::identity(ring, rn).kron(bt);
        for (long i = 0; i < block.rows(); ++i)
            for (long j = 0; j < block.cols(); ++j)
                if (block.at(i, j) != 0) sys.set_raw(row0 + i, j, block.at(i, j));
        row0 += block.rows();
    }
    Matrix ker = kernel(sys);
    std::vector<Matrix> basis;
    for (long c = 0; c < ker.cols(); ++c) {
        Matrix f(ring, rn, rm);
        for (long i = 0; i < rn; ++i)
            for (long j = 0; j < rm; ++j) f.set(i, j, ker.at(i * rm + j, c));
        basis.push_back(std::move(f));
    }
    return basis;
}

long hom_dim(const RepModule& m, const RepModule& n) {
    return static_cast<long>(hom_space(m, n).size());
}

ModuleHom::ModuleHom(RepModule src_, RepModule dst_, Matrix mat_)
    : src(std::move(src_)), dst(std::move(dst_)), mat(std::move(mat_)) {
    if (src.group()->order() != dst.group()->order() || !(src.ring() == dst.ring()))
        throw std::invalid_argument("ModuleHom: group/ring mismatch");
    if (mat.rows() != dst.rank() || mat.cols() != src.rank())
        throw std::invalid_argument("ModuleHom: matrix shape mismatch");
    // intertwining on a generating set proves it for every element
    for (int g : src.group()->generating_set())
        if (!(mul(mat, src.act(g)) == mul(dst.act(g), mat)))
            throw std::invalid_argument("ModuleHom: fails to intertwine at element " +
                                        std::to_string(g));
}

MultiplicityResult multiplicity(const RepModule& simple, const RepModule& v) {
    const GroupPtr& g = simple.group();
    if (g->order() != v.group()->order() || !(simple.ring() == v.ring()))
        throw std::invalid_argument("multiplicity: group/ring mismatch");
    const RingSpec ring = simple.ring();
    if (ring.mode != RingMode::PrimeField)
        throw std::invalid_argument("multiplicity: requires PrimeField mode");
    if (g->order() % ring.p == 0)
        throw std::invalid_argument("multiplicity: p divides the group order");

    // rank of the averaging projector T |-> (1/|G|) sum act_b(x) T act_a(x)^-1
    // on Hom(a, b), row-major vec.
    auto projector_rank = [&](const RepModule& a, const RepModule& b) {
        const long na = a.rank(), nb = b.rank();
        Matrix proj(ring, na * nb, na * nb);
        for (int x = 0; x < g->order(); ++x) {
            Matrix bv = b.act_dense(x);
            Matrix ainv_t = a.act_dense(a.group()->inverse(x)).transpose();
            proj = proj + bv.kron(ainv_t);
        }
        proj = proj.scaled(ring.unit_inverse(mpq_class(g->order())));
        return exactla::rank(proj);
    };
    MultiplicityResult out;
    out.hom_dim = projector_rank(simple, v);
    out.end_dim = projector_rank(simple, simple);
    if (out.end_dim <= 0 || out.hom_dim % out.end_dim != 0)
        throw std::logic_error("multiplicity: Hom dimension not divisible by End dimension");
    out.normalized = out.hom_dim / out.end_dim;
    return out;
}

std::vector<long> isotypic_multiplicities(const std::vector<RepModule>& simples,
                                          const RepModule& v) {
    std::vector<long> out;
    out.reserve(simples.size());
    for (const auto& s : simples) out.push_back(multiplicity(s, v).normalized);
    return out;
}

}  // namespace stabmod::rep
