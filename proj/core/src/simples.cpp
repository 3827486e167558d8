#include "stabmod/simples.hpp"

#include <queue>

#include "stabmod/catalog.hpp"

namespace stabmod::rep {

using exactla::mod_inverse;
using exactla::pow_ui;
using exactla::RingMode;

RepModule module_from_generator_actions(
    const GroupPtr& g, RingSpec ring, long rank,
    const std::vector<std::pair<std::string, Matrix>>& gen_acts) {
    std::vector<int> gen_idx;
    std::vector<ActionMatrix> gen_mat;
    for (const auto& [name, m] : gen_acts) {
        if (m.rows() != rank || m.cols() != rank)
            throw std::invalid_argument("module_from_generator_actions: matrix shape mismatch");
        gen_idx.push_back(g->generator(name));
        gen_mat.push_back(ActionMatrix::from_dense(m.with_ring(ring)));
    }
    std::vector<ActionMatrix> act(static_cast<size_t>(g->order()));
    std::vector<char> have(static_cast<size_t>(g->order()), 0);
    act[0] = ActionMatrix::identity(ring, rank);
    have[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (size_t t = 0; t < gen_idx.size(); ++t) {
            int y = g->op(x, gen_idx[t]);
            if (have[static_cast<size_t>(y)]) continue;
            act[static_cast<size_t>(y)] = compose(act[static_cast<size_t>(x)], gen_mat[t]);
            have[static_cast<size_t>(y)] = 1;
            bfs.push(y);
        }
    }
    for (char h : have)
        if (!h)
            throw std::invalid_argument(
                "module_from_generator_actions: generators do not generate the group");
    return RepModule(g, ring, rank, std::move(act));
}

namespace {

RingSpec f3() { return RingSpec::prime_field(3); }

Matrix f9_mult_gen_power(int t) {
    // multiplication by (1+u)^t on the basis {1, u} of F_9 = F_3[u]/(u^2+1)
    RingSpec ring = f3();
    Matrix m = Matrix::from_rows(ring, {{1, -1}, {1, 1}});
    Matrix out = Matrix::identity(ring, 2);
    for (int s = 0; s < t; ++s) out = out * m;
    return out;
}

Matrix f9_frobenius() { return Matrix::from_rows(f3(), {{1, 0}, {0, -1}}); }

}  // namespace

std::vector<SimpleInfo> simples_sd16() {
    const grp::Sd16& s = grp::sd16();
    std::vector<SimpleInfo> out;
    auto chr = [&](const std::string& name, int on_omega, int on_phi) {
        CharacterData d{s.group, {{"omega", on_omega}, {"phi", on_phi}}};
        out.push_back(SimpleInfo{name, character_module(d, f3()), 1});
    };
    chr("triv", 1, 1);
    chr("chi", -1, -1);
    chr("chi_omega", -1, 1);
    chr("chi_phi", 1, -1);
    for (int t : {1, 2, 5}) {
        RepModule m = module_from_generator_actions(
            s.group, f3(), 2, {{"omega", f9_mult_gen_power(t)}, {"phi", f9_frobenius()}});
        out.push_back(SimpleInfo{"u" + std::to_string(t), std::move(m), 1});
    }
    return out;
}

std::vector<SimpleInfo> simples_q8() {
    const grp::Q8Data& q = grp::q8_in_sd16();
    std::vector<SimpleInfo> out;
    auto chr = [&](const std::string& name, int on_i, int on_j) {
        CharacterData d{q.group, {{"i", on_i}, {"j", on_j}}};
        out.push_back(SimpleInfo{name, character_module(d, f3()), 1});
    };
    chr("triv", 1, 1);
    chr("theta", 1, -1);
    chr("alpha", -1, 1);
    chr("beta", -1, -1);
    Matrix mi = Matrix::from_rows(f3(), {{0, -1}, {1, 0}});
    Matrix mj = Matrix::from_rows(f3(), {{1, 1}, {1, -1}});
    out.push_back(SimpleInfo{
        "w2", module_from_generator_actions(q.group, f3(), 2, {{"i", mi}, {"j", mj}}), 1});
    return out;
}

std::vector<SimpleInfo> simples_for(const GroupPtr& h) {
    if (h->order() == 1) {
        return {SimpleInfo{"triv", trivial_module(h, f3()), 1}};
    }
    if (h->order() % 3 == 0)
        throw std::invalid_argument("simples_for: complement order divisible by 3");
    if (h->order() == 2) {
        std::vector<SimpleInfo> out{SimpleInfo{"triv", trivial_module(h, f3()), 1}};
        Matrix sgn = Matrix::from_rows(f3(), {{-1}});
        std::vector<ActionMatrix> act{ActionMatrix::identity(f3(), 1),
                                      ActionMatrix::from_dense(sgn)};
        out.push_back(SimpleInfo{"sgn", RepModule(h, f3(), 1, std::move(act)), 1});
        return out;
    }
    if (h->order() == 4 && h->has_generator("t") && h->order_of(h->generator("t")) == 4) {
        // cyclic of order 4: two characters and one 2-dimensional simple
        std::vector<SimpleInfo> out;
        out.push_back(SimpleInfo{"triv", trivial_module(h, f3()), 1});
        out.push_back(
            SimpleInfo{"sgn", character_module(CharacterData{h, {{"t", -1}}}, f3()), 1});
        Matrix rot = Matrix::from_rows(f3(), {{0, -1}, {1, 0}});
        out.push_back(SimpleInfo{
            "r2", module_from_generator_actions(h, f3(), 2, {{"t", rot}}), 1});
        return out;
    }
    if (h->order() == 8 && h->has_generator("i") && h->has_generator("j")) return simples_q8();
    if (h->order() == 16 && h->has_generator("omega") && h->has_generator("phi"))
        return simples_sd16();
    throw std::invalid_argument("simples_for: no simple catalog for this complement (order " +
                                std::to_string(h->order()) + ")");
}

mpz_class sqrt_minus_two_mod_3m(unsigned m) {
    mpz_class mod = pow_ui(mpz_class(3), m);
    mpz_class a = 1;
    for (unsigned iter = 0; iter < 4 * m + 8; ++iter) {
        mpz_class f = (a * a + 2) % mod;
        if (f == 0) return a;
        mpz_class deriv = (2 * a) % mod;
        a = (a - f * mod_inverse(deriv, mod)) % mod;
        if (a < 0) a += mod;
    }
    throw std::logic_error("sqrt_minus_two_mod_3m: Hensel iteration failed to converge");
}

namespace {

Matrix matrix_pow_mod(Matrix base, mpz_class e, const RingSpec& ring) {
    Matrix out = Matrix::identity(ring, base.rows());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

}  // namespace

RepModule lift_simple(const SimpleInfo& s, RingSpec target) {
    const GroupPtr& h = s.module.group();
    if (target.mode == RingMode::PrimeField) return s.module;
    if (s.module.rank() == 1) {
        // character values are +-1 and lift exactly to any mode
        std::vector<ActionMatrix> act;
        act.reserve(static_cast<size_t>(h->order()));
        for (int x = 0; x < h->order(); ++x) {
            mpq_class v = s.module.act(x).coef(0) == 1 ? 1 : -1;
            act.push_back(ActionMatrix::monomial(target, {0}, {v}));
        }
        return RepModule(h, target, 1, std::move(act));
    }
    if (target.mode == RingMode::PLocal)
        throw std::invalid_argument(
            "lift_simple: 2-dimensional simples need 3-adic entries; no exact p-local lift (" +
            s.name + ")");
    const unsigned m = target.exponent();
    if (h->order() == 8 && h->has_generator("i") && h->has_generator("j")) {
        // quaternion 2-dim: I^2 = J^2 = -1, IJI^-1 = J^-1 with
        // J = [[a,1],[1,-a]], a^2 = -2 (Hensel).
        mpz_class a = sqrt_minus_two_mod_3m(m);
        Matrix mi = Matrix::from_rows(target, {{0, -1}, {1, 0}});
        Matrix mj = Matrix::from_rows(target, {{mpq_class(a), 1}, {1, mpq_class(-a)}});
        return module_from_generator_actions(h, target, 2, {{"i", mi}, {"j", mj}});
    }
    if (h->order() == 16 && h->has_generator("omega") && h->has_generator("phi")) {
        // Teichmueller lift: raise an integer lift of the order-8 generator
        // action to the power 9^m (1 mod 8, kills the defect mod 3^m).
        int t = 0;
        if (s.name == "u1") t = 1;
        if (s.name == "u2") t = 2;
        if (s.name == "u5") t = 5;
        if (t == 0) throw std::invalid_argument("lift_simple: unknown sd16 simple " + s.name);
        Matrix base = Matrix::from_rows(target, {{1, -1}, {1, 1}});
        mpz_class e = pow_ui(mpz_class(9), m) * t;
        Matrix momega = matrix_pow_mod(base, e, target);
        Matrix mphi = Matrix::from_rows(target, {{1, 0}, {0, -1}});
        return module_from_generator_actions(h, target, 2, {{"omega", momega}, {"phi", mphi}});
    }
    if (h->order() == 4 && h->has_generator("t")) {
        Matrix rot = Matrix::from_rows(target, {{0, -1}, {1, 0}});
        return module_from_generator_actions(h, target, 2, {{"t", rot}});
    }
    throw std::invalid_argument("lift_simple: no lift recipe for " + s.name);
}

size_t dual_simple_index(const std::vector<SimpleInfo>& simples, size_t idx) {
    RepModule d = dual(simples[idx].module);
    for (size_t j = 0; j < simples.size(); ++j)
        if (hom_dim(d, simples[j].module) > 0) return j;
    throw std::logic_error("dual_simple_index: dual not found in list");
}

}  // namespace stabmod::rep
