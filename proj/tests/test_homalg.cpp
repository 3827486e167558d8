#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabmod/catalog.hpp"
#include "stabmod/fitting.hpp"
#include "stabmod/free_resolution.hpp"

using namespace stabmod;
using namespace stabmod::homalg;
using exactla::Matrix;
using exactla::RingSpec;
using rep::RepModule;

namespace {

RingSpec f3() { return RingSpec::prime_field(3); }

// Invariant-theory oracle: dimensions of the fixed subspace of
// F_3[y] tensor E(x) (deg y = 2, deg x = 1) under x -> -x, y -> -y,
// counted degree by degree.
long invariant_theory_dim(long r) {
    long count = 0;
    for (long b = 0; b <= 1; ++b) {
        if ((r - b) % 2 != 0 || r - b < 0) continue;
        long t = (r - b) / 2;
        if ((t + b) % 2 == 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("projective covers") {
    SplitContext g24 = g24_context();
    SUBCASE("cover of the trivial module over g24 is the induced module of rank 3") {
        RepModule triv = rep::trivial_module(g24.group, f3());
        CoverResult c = projective_cover(triv, g24);
        CHECK(c.cover.rank() == 3);
        // multiplicities: one copy of the trivial projective, nothing else
        CHECK(c.multiplicities == std::vector<long>{1, 0, 0, 0, 0});
        // indecomposability oracle: the endomorphism ring is local, i.e.
        // every endomorphism is either invertible or nilpotent (enumerated
        // over the whole 2-dimensional End space)
        std::vector<Matrix> end_basis = rep::hom_space(c.cover, c.cover);
        REQUIRE(end_basis.size() == 2);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Matrix f = end_basis[0].scaled(a) + end_basis[1].scaled(b);
                Matrix pw = f * f * f;  // rank 3: nilpotency order <= 3
                CHECK((exactla::is_invertible(f) || pw.is_zero()));
            }
        // surjectivity is audited in the constructor; double-check the rank
        CHECK(exactla::rank(c.map.mat) == 1);
    }
    SUBCASE("covers and resolutions over Z/3^m match the residue pattern") {
        RingSpec z9 = RingSpec::truncation(3, 2);
        RepModule triv9 = rep::trivial_module(g24.group, z9);
        CoverResult c = projective_cover(triv9, g24);
        CHECK(c.cover.rank() == 3);
        HellerResult h = heller(triv9, g24);
        CHECK(h.omega.rank() == 2);
        CHECK((c.map.mat * h.inclusion).is_zero());
        ResolutionPrefix res9 = minimal_resolution(triv9, 3, g24);
        ResolutionPrefix res3 = minimal_resolution(rep::trivial_module(g24.group, f3()), 3, g24);
        CHECK(res9.table == res3.table);
    }
    SUBCASE("semisimple case: cover of chi over sd16 is chi itself") {
        SplitContext sd = semisimple_context(grp::sd16().group);
        RepModule chi = rep::character_module(rep::chi_sd16(), f3());
        CoverResult c = projective_cover(chi, sd);
        CHECK(c.cover.rank() == 1);
        CHECK(is_projective(chi, sd));
    }
    SUBCASE("cover of the regular module is itself") {
        RepModule reg = rep::regular_module(g24.group, f3());
        CoverResult c = projective_cover(reg, g24);
        CHECK(c.cover.rank() == 24);
        CHECK(is_projective(reg, g24));
    }
    SUBCASE("trivial module over g24 is not projective") {
        CHECK_FALSE(is_projective(rep::trivial_module(g24.group, f3()), g24));
    }
    SUBCASE("induced module over n_level(1) is projective") {
        SplitContext n1 = n_level_context(1);
        grp::NLevelData nd = grp::n_level(1);
        RepModule ind =
            rep::induce(rep::trivial_module(grp::q8_in_sd16().group, f3()), nd.q8_in);
        CHECK(is_projective(ind, n1));
    }
}

TEST_CASE("minimal resolutions and the multiplicity table") {
    SUBCASE("trivial module over sd16: P_0 only") {
        SplitContext sd = semisimple_context(grp::sd16().group);
        RepModule triv = rep::trivial_module(sd.group, f3());
        ResolutionPrefix res = minimal_resolution(triv, 3, sd);
        CHECK(res.table.rows[0][0] == 1);
        for (long r = 1; r <= 3; ++r)
            for (long v : res.table.rows[static_cast<size_t>(r)]) CHECK(v == 0);
    }
    SUBCASE("trivial module over q8 at p = 3: P_0 only") {
        SplitContext q8 = semisimple_context(grp::q8_in_sd16().group);
        RepModule triv = rep::trivial_module(q8.group, f3());
        ResolutionPrefix res = minimal_resolution(triv, 2, q8);
        CHECK(res.table.rows[0][0] == 1);
        for (long v : res.table.rows[1]) CHECK(v == 0);
    }
    SUBCASE("trivial module over g24: P_triv multiplicities follow the oracle") {
        SplitContext g24 = g24_context();
        RepModule triv = rep::trivial_module(g24.group, f3());
        ResolutionPrefix res = minimal_resolution(triv, 4, g24);
        // column 0 is the trivial simple
        for (long r = 0; r <= 4; ++r)
            CHECK(res.table.rows[static_cast<size_t>(r)][0] == invariant_theory_dim(r));
        // frozen expected pattern from the oracle
        CHECK(invariant_theory_dim(0) == 1);
        CHECK(invariant_theory_dim(1) == 0);
        CHECK(invariant_theory_dim(2) == 0);
        CHECK(invariant_theory_dim(3) == 1);
        CHECK(invariant_theory_dim(4) == 1);
        // each step is a single indecomposable projective here: row sums 1
        for (long r = 0; r <= 4; ++r) {
            long sum = 0;
            for (long v : res.table.rows[static_cast<size_t>(r)]) sum += v;
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("heller translates and stable homs") {
    SplitContext g24 = g24_context();
    RepModule triv = rep::trivial_module(g24.group, f3());

    SUBCASE("omega of a projective is zero") {
        RepModule proj =
            rep::induce(rep::trivial_module(grp::q8_in_sd16().group, f3()), grp::g24().q8_in);
        HellerResult h = heller(proj, g24);
        CHECK(h.omega.rank() == 0);
    }
    SUBCASE("stable_hom(P, M) = 0 for projective P") {
        RepModule proj =
            rep::induce(rep::trivial_module(grp::q8_in_sd16().group, f3()), grp::g24().q8_in);
        CHECK(stable_hom(proj, triv, g24) == 0);
        CHECK(stable_hom(triv, triv, g24) == 1);
    }
    SUBCASE("omega^4(trivial) over g24 is trivial, certified by a rank-1 invertible intertwiner") {
        RepModule cur = triv;
        std::vector<long> omega_ranks;
        for (int s = 0; s < 4; ++s) {
            cur = heller(cur, g24).omega;
            omega_ranks.push_back(cur.rank());
        }
        CHECK(omega_ranks == std::vector<long>{2, 1, 2, 1});
        CHECK(cur.rank() == 1);
        std::vector<Matrix> inter = rep::hom_space(cur, triv);
        REQUIRE(inter.size() == 1);
        CHECK(exactla::is_invertible(inter[0]));
    }
}

TEST_CASE("ext dimensions computed two independent ways") {
    SplitContext g24 = g24_context();
    RepModule triv = rep::trivial_module(g24.group, f3());

    SUBCASE("Ext^r(triv, triv) over g24 = 1,0,0,1,1") {
        auto dims = ext_dims(triv, 0, 4, g24, 987654321);
        std::vector<long> got_min, got_free;
        for (const auto& e : dims) {
            got_min.push_back(e.from_minimal);
            got_free.push_back(e.from_free);
            CHECK(e.agree);
        }
        CHECK(got_min == std::vector<long>{1, 0, 0, 1, 1});
        CHECK(got_free == std::vector<long>{1, 0, 0, 1, 1});
    }
    SUBCASE("Ext^r(triv, theta) over g24 = 0,1,1,0,0") {
        auto dims = ext_dims(triv, 1, 4, g24, 13);
        std::vector<long> got;
        for (const auto& e : dims) {
            CHECK(e.agree);
            got.push_back(e.from_minimal);
        }
        CHECK(got == std::vector<long>{0, 1, 1, 0, 0});
    }
    SUBCASE("over sd16 higher Ext vanishes for every simple") {
        SplitContext sd = semisimple_context(grp::sd16().group);
        RepModule triv16 = rep::trivial_module(sd.group, f3());
        for (size_t s = 0; s < sd.simple_count(); ++s) {
            auto dims = ext_dims(triv16, s, 2, sd, 5);
            CHECK(dims[0].agree);
            for (long r = 1; r <= 2; ++r) {
                CHECK(dims[static_cast<size_t>(r)].from_minimal == 0);
                CHECK(dims[static_cast<size_t>(r)].agree);
            }
        }
    }
}

TEST_CASE("fitting decomposition") {
    RingSpec z81 = RingSpec::truncation(3, 4);
    SplitContext g24 = g24_context();
    RepModule m = rep::direct_sum(
        rep::character_module(rep::theta_g24(), z81).valid()
            ? rep::character_module(rep::theta_g24(), z81)
            : rep::trivial_module(g24.group, z81),
        rep::trivial_module(g24.group, z81));

    SUBCASE("identity endomorphism: everything is image") {
        FittingResult r = fitting(m, Matrix::identity(z81, 2));
        CHECK(r.image_basis.cols() == 2);
        CHECK(r.kernel_basis.cols() == 0);
    }
    SUBCASE("3 * identity is topologically nilpotent: everything is kernel") {
        FittingResult r = fitting(m, Matrix::scalar(z81, 2, 3));
        CHECK(r.image_basis.cols() == 0);
        CHECK(r.kernel_basis.cols() == 2);
        CHECK(r.nilpotency_exponent >= 1);
    }
    SUBCASE("diag(unit, 3) splits ranks (1,1)") {
        Matrix f(z81, 2, 2);
        f.set(0, 0, 1);
        f.set(1, 1, 3);
        FittingResult r = fitting(m, f);
        CHECK(r.image_basis.cols() == 1);
        CHECK(r.kernel_basis.cols() == 1);
        CHECK(exactla::is_invertible(r.recomposition));
        CHECK(exactla::is_invertible(r.f_on_image));
    }
    SUBCASE("non-equivariant endomorphisms are rejected") {
        RepModule ind = rep::induce(rep::trivial_module(grp::q8_in_sd16().group, z81),
                                    grp::g24().q8_in);
        Matrix f(z81, 3, 3);
        f.set(0, 1, 1);
        CHECK_THROWS_AS(fitting(ind, f), std::invalid_argument);
    }
}

TEST_CASE("krull-schmidt decomposition") {
    SUBCASE("regular F3[sd16] splits into 7 types with the right multiplicities") {
        SplitContext sd = semisimple_context(grp::sd16().group);
        RepModule reg = rep::regular_module(sd.group, f3());
        DecompositionReport rep_report = ks_decompose(reg, sd, 20240612, 1);
        CHECK(rep_report.summands.size() == 7);
        CHECK(rep_report.stable);
        long total = 0;
        for (const auto& [desc, mult] : rep_report.summands) {
            total += desc.rank * mult;
            // multiplicity of each simple summand = dim / dim End
            CHECK(mult == desc.rank);
        }
        CHECK(total == 16);
    }
    SUBCASE("P + P gives one type with multiplicity 2") {
        SplitContext g24 = g24_context();
        RingSpec z9 = RingSpec::truncation(3, 2);
        RepModule p = rep::induce(rep::trivial_module(grp::q8_in_sd16().group, z9),
                                  grp::g24().q8_in);
        RepModule pp = rep::direct_sum(p, p);
        DecompositionReport r = ks_decompose(pp, g24, 777, 2);
        REQUIRE(r.summands.size() == 1);
        CHECK(r.summands[0].second == 2);
        CHECK(r.summands[0].first.rank == 3);
        CHECK(r.stable);
    }
    SUBCASE("rank-8 induced module: ranks invariant across basis changes") {
        SplitContext g24 = g24_context();
        RingSpec z81 = RingSpec::truncation(3, 4);
        const grp::G24Data& d = grp::g24();
        RepModule ind = rep::induce(rep::trivial_module(d.c3, z81), d.c3_in);
        CHECK(ind.rank() == 8);
        DecompositionReport r = ks_decompose(ind, g24, 31415, 3);
        CHECK(r.stable);
        long total = 0;
        for (const auto& [desc, mult] : r.summands) total += desc.rank * mult;
        CHECK(total == 8);
    }
    SUBCASE("PLocal mode is rejected") {
        SplitContext g24 = g24_context();
        RepModule triv = rep::trivial_module(g24.group, RingSpec::p_local(3));
        CHECK_THROWS_AS(ks_decompose(triv, g24, 1, 0), std::invalid_argument);
    }
}

TEST_CASE("random g24 modules decompose stably") {
    SplitContext g24 = g24_context();
    RingSpec z9 = RingSpec::truncation(3, 2);
    std::mt19937_64 rng(20240725);
    for (int t = 0; t < 3; ++t) {
        RepModule m = random_g24_module(z9, 8, rng);
        CHECK(m.rank() <= 8);
        DecompositionReport r = ks_decompose(m, g24, 1000 + t, 2);
        CHECK(r.stable);
        long total = 0;
        for (const auto& [desc, mult] : r.summands) total += desc.rank * mult;
        CHECK(total == m.rank());
    }
}
