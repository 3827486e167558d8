#include "stabmod/cohoring.hpp"

#include <algorithm>

#include "stabmod/catalog.hpp"

namespace stabmod::cohoring {

using homalg::MultiplicityTable;
using rep::ActionMatrix;

namespace {

int mod3(int c) { return ((c % 3) + 3) % 3; }

RingSpec f3() { return RingSpec::prime_field(3); }

}  // namespace

GradedElement GradedElement::monomial(Monomial m, int coeff) {
    GradedElement out(m.degree());
    out.add_term(m, coeff);
    return out;
}

GradedElement GradedElement::unit() {
    GradedElement out(0);
    out.add_term(Monomial{1, 0, 0, 0}, 1);
    out.add_term(Monomial{2, 0, 0, 0}, 1);
    return out;
}

int GradedElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void GradedElement::add_term(Monomial m, int coeff) {
    coeff = mod3(coeff);
    if (coeff == 0) return;
    if (!terms_.empty() && m.degree() != degree_)
        throw std::invalid_argument("GradedElement: mixed degrees");
    if (terms_.empty()) degree_ = m.degree();
    int& c = terms_[m];
    c = mod3(c + coeff);
    if (c == 0) terms_.erase(m);
}

GradedElement GradedElement::operator+(const GradedElement& rhs) const {
    GradedElement out = *this;
    if (out.terms_.empty()) out.degree_ = rhs.degree_;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

GradedElement GradedElement::operator-(const GradedElement& rhs) const {
    GradedElement out = *this;
    if (out.terms_.empty()) out.degree_ = rhs.degree_;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

GradedElement GradedElement::scaled(int c) const {
    GradedElement out(degree_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

GradedElement multiply(const GradedElement& u, const GradedElement& v) {
    GradedElement out(u.degree() + v.degree());
    for (const auto& [m1, c1] : u.terms())
        for (const auto& [m2, c2] : v.terms()) {
            if (m1.comp != m2.comp) continue;    // product algebra: cross terms vanish
            if (m1.x && m2.x) continue;          // x^2 = 0
            if (m1.a && m2.a) continue;          // a^2 = 0
            int sign = (m1.a && m2.x) ? -1 : 1;  // move a past x
            Monomial m{m1.comp, m1.y + m2.y, m1.x | m2.x, m1.a | m2.a};
            out.add_term(m, c1 * c2 * sign);
        }
    return out;
}

namespace {

/// omega and phi swap components; the generator sign is uniform across the
/// letters of a monomial, so the total sign is base^(y + x + a).
GradedElement apply_generator(const GradedElement& u, bool omega) {
    GradedElement out(u.degree());
    for (const auto& [m, c] : u.terms()) {
        int letters = m.y + m.x + m.a;
        int base = omega ? (m.comp == 1 ? 1 : -1) : -1;
        int sign = 1;
        for (int t = 0; t < letters; ++t) sign *= base;
        out.add_term(Monomial{3 - m.comp, m.y, m.x, m.a}, c * sign);
    }
    return out;
}

}  // namespace

GradedElement sd16_action(int g, const GradedElement& u) {
    // catalog encoding: index = a + 8b for omega^a phi^b
    int a = g % 8, b = g / 8;
    GradedElement out = u;
    for (int t = 0; t < b; ++t) out = apply_generator(out, false);
    for (int t = 0; t < a; ++t) out = apply_generator(out, true);
    return out;
}

GradedElement rho(const GradedElement& u) {
    GradedElement out(u.degree());
    for (const auto& [m, c] : u.terms())
        if (m.a == 0) out.add_term(m, c);
    return out;
}

namespace {

std::vector<Monomial> monomials_of_degree(int d, bool with_a) {
    std::vector<Monomial> out;
    for (int comp = 1; comp <= 2; ++comp)
        for (int x = 0; x <= 1; ++x)
            for (int a = 0; a <= (with_a ? 1 : 0); ++a) {
                int rest = d - x - a;
                if (rest < 0 || rest % 2 != 0) continue;
                out.push_back(Monomial{comp, rest / 2, x, a});
            }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix coords_of(const std::vector<GradedElement>& elems, const std::vector<Monomial>& basis) {
    Matrix m(f3(), static_cast<long>(basis.size()), static_cast<long>(elems.size()));
    for (size_t j = 0; j < elems.size(); ++j)
        for (size_t i = 0; i < basis.size(); ++i)
            m.set(static_cast<long>(i), static_cast<long>(j), mpq_class(elems[j].coeff(basis[i])));
    return m;
}

/// greedy independent columns over F_3, returning the chosen indices
std::vector<long> independent(const Matrix& a) {
    std::vector<std::vector<mpq_class>> rows;
    std::vector<long> pivots, picked;
    for (long j = 0; j < a.cols(); ++j) {
        std::vector<mpq_class> v(static_cast<size_t>(a.rows()));
        for (long i = 0; i < a.rows(); ++i) v[static_cast<size_t>(i)] = a.at(i, j);
        for (size_t t = 0; t < rows.size(); ++t) {
            const mpq_class f = v[static_cast<size_t>(pivots[t])];
            if (f == 0) continue;
            for (long i = 0; i < a.rows(); ++i)
                v[static_cast<size_t>(i)] =
                    f3().normalize(v[static_cast<size_t>(i)] - f * rows[t][static_cast<size_t>(i)]);
        }
        long piv = -1;
        for (long i = 0; i < a.rows(); ++i)
            if (v[static_cast<size_t>(i)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        mpq_class inv = f3().unit_inverse(v[static_cast<size_t>(piv)]);
        for (long i = 0; i < a.rows(); ++i)
            v[static_cast<size_t>(i)] = f3().normalize(v[static_cast<size_t>(i)] * inv);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        picked.push_back(j);
    }
    return picked;
}

/// SD16 representation on the span of the given ambient-coordinate basis.
RepModule rep_on_subspace(const std::vector<Monomial>& ambient, const Matrix& basis) {
    const grp::Sd16& s = grp::sd16();
    std::vector<ActionMatrix> act;
    act.reserve(16);
    for (int g = 0; g < 16; ++g) {
        Matrix amb(f3(), static_cast<long>(ambient.size()), static_cast<long>(ambient.size()));
        for (size_t j = 0; j < ambient.size(); ++j) {
            GradedElement img = sd16_action(g, GradedElement::monomial(ambient[j]));
            for (size_t i = 0; i < ambient.size(); ++i)
                amb.set(static_cast<long>(i), static_cast<long>(j),
                        mpq_class(img.coeff(ambient[i])));
        }
        Matrix moved = amb * basis;
        act.push_back(ActionMatrix::from_dense(exactla::solve(basis, moved)));
    }
    return RepModule(s.group, f3(), basis.cols(), std::move(act));
}

}  // namespace

CohomologyLedger::CohomologyLedger(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 3) throw std::invalid_argument("CohomologyLedger: max degree must be >= 3");
    simples_ = rep::simples_sd16();

    // action audit: the defining relations hold on every monomial up to D
    for (int d = 0; d <= max_degree_; ++d)
        for (const Monomial& m : monomials_of_degree(d, true)) {
            GradedElement e = GradedElement::monomial(m);
            GradedElement w = e;
            for (int t = 0; t < 8; ++t) w = apply_generator(w, true);
            if (!(w == e)) throw std::logic_error("CohomologyLedger: omega^8 != id");
            GradedElement f = apply_generator(apply_generator(e, false), false);
            if (!(f == e)) throw std::logic_error("CohomologyLedger: phi^2 != id");
            GradedElement lhs = apply_generator(sd16_action(grp::sd16().omega, e), false);
            GradedElement rhs = sd16_action(grp::sd16().group->power(grp::sd16().omega, 3),
                                            apply_generator(e, false));
            if (!(lhs == rhs)) throw std::logic_error("CohomologyLedger: phi omega != omega^3 phi");
        }

    ambient_.resize(static_cast<size_t>(max_degree_) + 1);
    target_.resize(static_cast<size_t>(max_degree_) + 1);
    for (int d = 0; d <= max_degree_; ++d) {
        for (const Monomial& m : monomials_of_degree(d, true))
            ambient_[static_cast<size_t>(d)].push_back(GradedElement::monomial(m));
        for (const Monomial& m : monomials_of_degree(d, false))
            target_[static_cast<size_t>(d)].push_back(GradedElement::monomial(m));
    }

    // the seven generators; the unit is adjoined as the degree-0 basis
    std::vector<GradedElement> gens;
    gens.push_back(GradedElement::monomial(Monomial{1, 0, 1, 0}));  // x_1
    gens.push_back(GradedElement::monomial(Monomial{2, 0, 1, 0}));  // x_2
    gens.push_back(GradedElement::monomial(Monomial{1, 1, 0, 0}));  // y_1
    gens.push_back(GradedElement::monomial(Monomial{2, 1, 0, 0}));  // y_2
    gens.push_back(GradedElement::monomial(Monomial{1, 0, 1, 1}) -
                   GradedElement::monomial(Monomial{2, 0, 1, 1}));  // x1 a1 - x2 a2
    gens.push_back(GradedElement::monomial(Monomial{1, 1, 0, 1}));  // y1 a1
    gens.push_back(GradedElement::monomial(Monomial{2, 1, 0, 1}));  // y2 a2

    sub_.resize(static_cast<size_t>(max_degree_) + 1);
    sub_[0].push_back(GradedElement::unit());
    for (int d = 1; d <= max_degree_; ++d) {
        std::vector<GradedElement> candidates;
        for (const GradedElement& g : gens) {
            int dg = g.degree();
            if (dg > d) continue;
            for (const GradedElement& b : sub_[static_cast<size_t>(d - dg)])
                candidates.push_back(multiply(b, g));
        }
        std::vector<Monomial> amb = monomials_of_degree(d, true);
        Matrix coords = coords_of(candidates, amb);
        for (long j : independent(coords))
            sub_[static_cast<size_t>(d)].push_back(candidates[static_cast<size_t>(j)]);
        // closure under the action
        for (const GradedElement& b : sub_[static_cast<size_t>(d)])
            for (int g : {grp::sd16().omega, grp::sd16().phi}) {
                std::vector<GradedElement> with_extra = sub_[static_cast<size_t>(d)];
                with_extra.push_back(sd16_action(g, b));
                if (independent(coords_of(with_extra, amb)).size() !=
                    sub_[static_cast<size_t>(d)].size())
                    throw std::logic_error("CohomologyLedger: subalgebra not action-stable");
            }
    }

    std::vector<RepModule> simple_modules;
    for (const auto& s : simples_) simple_modules.push_back(s.module);
    for (int d = 0; d <= max_degree_; ++d) {
        DegreeLedgerRow row;
        row.degree = d;
        row.normative = d <= 3;
        const auto& sub = sub_[static_cast<size_t>(d)];
        std::vector<Monomial> amb = monomials_of_degree(d, true);
        std::vector<Monomial> tgt = monomials_of_degree(d, false);
        row.dim_subalgebra = static_cast<long>(sub.size());
        row.dim_target = static_cast<long>(tgt.size());

        std::vector<GradedElement> images;
        for (const GradedElement& b : sub) images.push_back(rho(b));
        Matrix rho_mat = coords_of(images, tgt);
        long rk = exactla::rank(rho_mat);
        row.dim_image = rk;
        row.dim_kernel = row.dim_subalgebra - rk;
        row.dim_cokernel = row.dim_target - rk;

        Matrix ker_combos = exactla::kernel(rho_mat);
        Matrix sub_coords = coords_of(sub, amb);
        Matrix ker_basis = sub_coords * ker_combos;
        if (ker_basis.cols() > 0) {
            RepModule ker_rep = rep_on_subspace(amb, ker_basis);
            row.kernel_isotypic = rep::isotypic_multiplicities(simple_modules, ker_rep);
        } else {
            row.kernel_isotypic.assign(simples_.size(), 0);
        }

        if (row.dim_cokernel > 0) {
            Matrix img_basis = rho_mat.select_columns(independent(rho_mat));
            Matrix full = Matrix::hstack(img_basis, Matrix::identity(f3(), row.dim_target));
            std::vector<long> chosen = independent(full);
            Matrix t = full.select_columns(chosen);
            Matrix tinv = exactla::inverse(t);
            Matrix proj = tinv.block(rk, 0, row.dim_cokernel, row.dim_target);
            Matrix section = t.block(0, rk, row.dim_target, row.dim_cokernel);
            std::vector<ActionMatrix> act;
            for (int g = 0; g < 16; ++g) {
                Matrix tm(f3(), row.dim_target, row.dim_target);
                for (size_t j = 0; j < tgt.size(); ++j) {
                    GradedElement img = sd16_action(g, GradedElement::monomial(tgt[j]));
                    for (size_t i = 0; i < tgt.size(); ++i)
                        tm.set(static_cast<long>(i), static_cast<long>(j),
                               mpq_class(img.coeff(tgt[i])));
                }
                act.push_back(ActionMatrix::from_dense(proj * tm * section));
            }
            RepModule coker_rep(grp::sd16().group, f3(), row.dim_cokernel, std::move(act));
            row.cokernel_isotypic = rep::isotypic_multiplicities(simple_modules, coker_rep);
        } else {
            row.cokernel_isotypic.assign(simples_.size(), 0);
        }

        long ker_dim_check = 0, coker_dim_check = 0;
        for (size_t s = 0; s < simples_.size(); ++s) {
            ker_dim_check += row.kernel_isotypic[s] * simple_modules[s].rank();
            coker_dim_check += row.cokernel_isotypic[s] * simple_modules[s].rank();
        }
        if (ker_dim_check != row.dim_kernel || coker_dim_check != row.dim_cokernel)
            throw std::logic_error("CohomologyLedger: isotypic dimensions do not add up");
        rows_.push_back(std::move(row));
    }
}

const std::vector<GradedElement>& CohomologyLedger::subalgebra_basis(int d) const {
    return sub_.at(static_cast<size_t>(d));
}

const std::vector<GradedElement>& CohomologyLedger::ambient_basis(int d) const {
    return ambient_.at(static_cast<size_t>(d));
}

const std::vector<GradedElement>& CohomologyLedger::target_basis(int d) const {
    return target_.at(static_cast<size_t>(d));
}

MultiplicityTable n1_multiplicity_table(const CohomologyLedger& ledger, int r_max) {
    if (r_max + 1 > ledger.max_degree())
        throw std::invalid_argument("n1_multiplicity_table: ledger degree bound too small");
    const auto& simples = ledger.simples();
    MultiplicityTable table;
    for (const auto& s : simples) table.simple_names.push_back(s.name);
    for (int r = 0; r <= r_max; ++r) {
        const DegreeLedgerRow& row_r = ledger.rows()[static_cast<size_t>(r)];
        const DegreeLedgerRow& row_r1 = ledger.rows()[static_cast<size_t>(r + 1)];
        std::vector<long> out(simples.size(), 0);
        for (size_t s = 0; s < simples.size(); ++s) {
            size_t sdual = rep::dual_simple_index(simples, s);
            out[s] = row_r.cokernel_isotypic[sdual] + row_r1.kernel_isotypic[sdual];
        }
        table.rows.push_back(std::move(out));
    }
    return table;
}

}  // namespace stabmod::cohoring
