#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stabmod/catalog.hpp"
#include "stabmod/simples.hpp"

using namespace stabmod;
using namespace stabmod::rep;
using exactla::Matrix;
using exactla::RingSpec;

namespace {
RingSpec f3() { return RingSpec::prime_field(3); }
RingSpec zl() { return RingSpec::p_local(3); }
}  // namespace

TEST_CASE("character modules") {
    Character chi = extend_character(chi_sd16());
    const grp::Sd16& s = grp::sd16();
    CHECK(chi(s.phi) == -1);
    CHECK(chi(s.omega) == -1);
    CHECK(chi(s.group->power(s.omega, 4)) == 1);

    Character theta = extend_character(theta_q8());
    const grp::Q8Data& q = grp::q8_in_sd16();
    CHECK(theta(q.group->generator("i")) == 1);
    CHECK(theta(q.group->generator("j")) == -1);

    SUBCASE("values that do not extend are rejected") {
        grp::GroupPtr c3 = grp::cyclic(3);
        CHECK_THROWS_AS(extend_character(CharacterData{c3, {{"t", -1}}}), std::invalid_argument);
    }
    SUBCASE("theta inflates to g24 through the quotient") {
        Character theta24 = extend_character(theta_g24());
        const grp::G24Data& d = grp::g24();
        for (int x = 0; x < 24; ++x) CHECK(theta24(x) == q.theta[d.to_q8(x)]);
    }
}

TEST_CASE("module audit failures name the offending pair") {
    grp::GroupPtr c3 = grp::cyclic(3);
    std::vector<ActionMatrix> act;
    act.push_back(ActionMatrix::identity(f3(), 1));
    act.push_back(ActionMatrix::monomial(f3(), {0}, {mpq_class(1)}));
    act.push_back(ActionMatrix::monomial(f3(), {0}, {mpq_class(-1)}));  // corrupt
    try {
        RepModule bad(c3, f3(), 1, std::move(act));
        FAIL("expected audit error");
    } catch (const ActionAuditError& e) {
        CHECK(e.g >= 0);
        CHECK(e.h >= 0);
    }
}

TEST_CASE("induction basics") {
    const grp::G24Data& d = grp::g24();
    RepModule trivial_q8 = trivial_module(grp::q8_in_sd16().group, zl());

    SUBCASE("rank equals the index") {
        RepModule ind = induce(trivial_q8, d.q8_in);
        CHECK(ind.rank() == 3);
        CHECK(ind.all_monomial());
    }
    SUBCASE("inducing along the identity embedding returns the module") {
        grp::SubgroupResult whole =
            subgroup_generated(d.group, {d.c, d.i, d.j}, {"c", "i", "j"});
        RepModule m = character_module(theta_g24(), zl());
        RepModule m_on_sub = restrict_along(m, whole.embedding);
        RepModule ind = induce(m_on_sub, whole.embedding);
        CHECK(ind.rank() == m.rank());
        for (int x = 0; x < 24; ++x) CHECK(equal(ind.act(x), m.act(x)));
    }
}

TEST_CASE("Frobenius reciprocity on small instances") {
    const grp::G24Data& d = grp::g24();
    const grp::Q8Data& q = grp::q8_in_sd16();
    std::vector<RepModule> h_modules = {
        trivial_module(q.group, f3()),
        character_module(theta_q8(), f3()),
        simples_q8()[4].module,  // the 2-dimensional simple
    };
    std::vector<RepModule> g_modules = {
        trivial_module(d.group, f3()),
        character_module(theta_g24(), f3()),
    };
    for (const auto& m : h_modules)
        for (const auto& v : g_modules) {
            long lhs = hom_dim(induce(m, d.q8_in), v);
            long rhs = hom_dim(m, restrict_along(v, d.q8_in));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("hom spaces over sd16") {
    auto chi = character_module(chi_sd16(), f3());
    auto triv = trivial_module(grp::sd16().group, f3());
    CHECK(hom_dim(chi, chi) == 1);
    CHECK(hom_dim(chi, triv) == 0);
    SUBCASE("truncation mode is rejected") {
        auto chi9 = character_module(chi_sd16(), RingSpec::truncation(3, 2));
        CHECK_THROWS_AS(hom_space(chi9, chi9), std::invalid_argument);
    }
    SUBCASE("frobenius-reciprocity oracle for the g24 example") {
        const grp::G24Data& d = grp::g24();
        auto triv_q8 = trivial_module(grp::q8_in_sd16().group, f3());
        CHECK(hom_dim(induce(triv_q8, d.q8_in), trivial_module(d.group, f3())) == 1);
    }
}

TEST_CASE("standard functors") {
    auto triv = trivial_module(grp::sd16().group, zl());
    Character chi = extend_character(chi_sd16());
    RepModule m = induce(trivial_module(grp::q8_in_sd16().group, zl()),
                         grp::GroupHom(grp::q8_in_sd16().embedding_in_sd16));

    SUBCASE("twist twice by chi is the identity") {
        RepModule tw = twist(twist(m, chi), chi);
        for (int x = 0; x < 16; ++x) CHECK(equal(tw.act(x), m.act(x)));
    }
    SUBCASE("dual of trivial is trivial; dual is an involution on matrices") {
        RepModule dd = dual(dual(m));
        for (int x = 0; x < 16; ++x) CHECK(equal(dd.act(x), m.act(x)));
        RepModule dt = dual(triv);
        for (int x = 0; x < 16; ++x) CHECK(equal(dt.act(x), triv.act(x)));
    }
    SUBCASE("twists preserve rank, including on induced modules over n_level") {
        grp::NLevelData n1 = grp::n_level(1);
        RepModule ind = induce(trivial_module(grp::g24().group, zl()), n1.g24_in);
        Character theta_n = extend_character(
            CharacterData{n1.group, {{"c", 1}, {"g", 1}, {"i", 1}, {"j", -1}}});
        CHECK(twist(ind, theta_n).rank() == ind.rank());
    }
    SUBCASE("tensor is Kronecker on actions") {
        RepModule t = tensor(m, m);
        CHECK(t.rank() == 4);
        for (int x : {1, 8}) CHECK(t.act_dense(x) == m.act_dense(x).kron(m.act_dense(x)));
    }
}

TEST_CASE("multiplicity via the averaging idempotent") {
    auto simples = simples_sd16();
    const auto& chi = simples[1];
    RepModule reg = regular_module(grp::sd16().group, f3());

    SUBCASE("trivial appears once in the regular module") {
        CHECK(multiplicity(simples[0].module, reg).normalized == 1);
    }
    SUBCASE("chi + chi has multiplicity 2") {
        RepModule two = direct_sum(chi.module, chi.module);
        CHECK(multiplicity(chi.module, two).normalized == 2);
        // additivity over direct sums
        RepModule mixed = direct_sum(chi.module, simples[0].module);
        CHECK(multiplicity(chi.module, mixed).normalized == 1);
    }
    SUBCASE("sum over simples of multiplicity * dim = 16 for the regular module") {
        long total = 0;
        for (const auto& s : simples)
            total += multiplicity(s.module, reg).normalized * s.module.rank();
        CHECK(total == 16);
    }
    SUBCASE("p dividing the group order is rejected") {
        auto triv_c3 = trivial_module(grp::cyclic(3), f3());
        CHECK_THROWS_AS(multiplicity(triv_c3, triv_c3), std::invalid_argument);
    }
}

TEST_CASE("the seven simple sd16 modules") {
    auto simples = simples_sd16();
    REQUIRE(simples.size() == 7);

    SUBCASE("dims are 1,1,1,1,2,2,2 and sum of squares is 16") {
        std::vector<long> dims;
        long sq = 0;
        for (const auto& s : simples) {
            dims.push_back(s.module.rank());
            sq += s.module.rank() * s.module.rank();
        }
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<long>{1, 1, 1, 1, 2, 2, 2});
        CHECK(sq == 16);
    }
    SUBCASE("chi is present with chi(omega) = chi(phi) = -1") {
        const grp::Sd16& s = grp::sd16();
        const RepModule& chi = simples[1].module;
        CHECK(simples[1].name == "chi");
        CHECK(chi.act(s.omega).coef(0) == f3().normalize(mpq_class(-1)));
        CHECK(chi.act(s.phi).coef(0) == f3().normalize(mpq_class(-1)));
    }
    SUBCASE("pairwise hom pattern: End recorded per simple, cross-Homs zero") {
        for (size_t a = 0; a < simples.size(); ++a)
            for (size_t b = 0; b < simples.size(); ++b) {
                long d = hom_dim(simples[a].module, simples[b].module);
                if (a == b) {
                    CHECK(d == simples[a].end_dim);
                } else {
                    CHECK(d == 0);
                }
            }
    }
    SUBCASE("multiplicity in the regular module is dim/end_dim") {
        RepModule reg = regular_module(grp::sd16().group, f3());
        for (const auto& s : simples) {
            auto mr = multiplicity(s.module, reg);
            CHECK(mr.end_dim == s.end_dim);
            CHECK(mr.normalized == s.module.rank() / s.end_dim);
        }
    }
    SUBCASE("duals stay within the list") {
        // characters are self-dual; u1 and u5 are swapped; u2 is self-dual
        CHECK(dual_simple_index(simples, 0) == 0);
        CHECK(dual_simple_index(simples, 1) == 1);
        CHECK(dual_simple_index(simples, 4) == 6);
        CHECK(dual_simple_index(simples, 5) == 5);
        CHECK(dual_simple_index(simples, 6) == 4);
    }
}

TEST_CASE("q8 simples and lifts") {
    auto simples = simples_q8();
    REQUIRE(simples.size() == 5);
    long sq = 0;
    for (const auto& s : simples) sq += s.module.rank() * s.module.rank();
    CHECK(sq == 8);

    SUBCASE("2-dimensional simple lifts to Z/3^m") {
        for (unsigned m : {2u, 4u, 8u}) {
            RingSpec zt = RingSpec::truncation(3, m);
            RepModule w = lift_simple(simples[4], zt);
            CHECK(w.rank() == 2);
            // reduction mod 3 agrees with the residue module
            for (int x = 0; x < 8; ++x)
                CHECK(w.act_dense(x).with_ring(f3()) == simples[4].module.act_dense(x));
        }
    }
    SUBCASE("2-dimensional simple has no exact p-local lift") {
        CHECK_THROWS_AS(lift_simple(simples[4], zl()), std::invalid_argument);
    }
    SUBCASE("characters lift to every mode") {
        RepModule t = lift_simple(simples[1], zl());
        CHECK(t.rank() == 1);
    }
    SUBCASE("sd16 2-dim simples lift by Teichmueller powering") {
        auto s16 = simples_sd16();
        RingSpec zt = RingSpec::truncation(3, 6);
        for (size_t idx : {4u, 5u, 6u}) {
            RepModule l = lift_simple(s16[idx], zt);
            for (int x = 0; x < 16; ++x)
                CHECK(l.act_dense(x).with_ring(f3()) == s16[idx].module.act_dense(x));
        }
    }
}

TEST_CASE("hom spaces over exact p-local coefficients") {
    auto triv = trivial_module(grp::sd16().group, zl());
    auto chi = character_module(chi_sd16(), zl());
    CHECK(hom_dim(chi, chi) == 1);
    CHECK(hom_dim(chi, triv) == 0);
    RepModule ind = induce(trivial_module(grp::q8_in_sd16().group, zl()),
                           grp::GroupHom(grp::q8_in_sd16().embedding_in_sd16));
    CHECK(hom_dim(triv, ind) == 1);
}

TEST_CASE("sqrt(-2) mod 3^m") {
    for (unsigned m : {1u, 2u, 5u, 8u, 10u}) {
        mpz_class a = sqrt_minus_two_mod_3m(m);
        mpz_class mod = exactla::pow_ui(mpz_class(3), m);
        CHECK((a * a + 2) % mod == 0);
    }
}
