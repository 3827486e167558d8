#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabmod/catalog.hpp"

using namespace stabmod::grp;

TEST_CASE("semidihedral group of order 16") {
    const Sd16& s = sd16();
    const GroupPtr& g = s.group;
    CHECK(g->order() == 16);
    CHECK(g->order_of(s.omega) == 8);
    CHECK(g->order_of(s.phi) == 2);

    // phi * omega * phi^-1 = omega^3
    int conj = g->conjugate(s.phi, s.omega);
    CHECK(conj == g->power(s.omega, 3));

    SUBCASE("center is {1, omega^4} by brute scan") {
        std::vector<int> z = g->center();
        CHECK(z == std::vector<int>{0, g->power(s.omega, 4)});
    }
}

TEST_CASE("quaternion subgroup of sd16") {
    const Q8Data& q = q8_in_sd16();
    CHECK(q.group->order() == 8);
    CHECK(q.embedding_in_sd16.is_injective());

    const Sd16& s = sd16();
    // (omega*phi)^2 = omega^4, multiplied in the table
    int i_elt = s.group->op(s.omega, s.phi);
    CHECK(s.group->op(i_elt, i_elt) == s.group->power(s.omega, 4));

    SUBCASE("exactly one element of order 2 in the image") {
        int count = 0;
        for (int x : q.embedding_in_sd16.image())
            if (s.group->order_of(x) == 2) ++count;
        CHECK(count == 1);
    }
    SUBCASE("theta character values") {
        CHECK(q.theta[q.group->generator("i")] == 1);
        CHECK(q.theta[q.group->generator("j")] == -1);
        // extends multiplicatively
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y)
                CHECK(q.theta[q.group->op(x, y)] == q.theta[x] * q.theta[y]);
    }
}

TEST_CASE("g24 = C3 semidirect Q8") {
    const G24Data& d = g24();
    const GroupPtr& g = d.group;
    CHECK(g->order() == 24);
    CHECK(is_normal(g, d.c3_in));

    SUBCASE("conjugation of c by j inverts, by i fixes") {
        CHECK(g->conjugate(d.j, d.c) == g->inverse(d.c));
        CHECK(g->conjugate(d.i, d.c) == d.c);
    }
    SUBCASE("quotient by <i> is dihedral of order 6") {
        SubgroupResult sub = subgroup_generated(g, {d.i}, {"i"});
        CHECK(sub.subgroup->order() == 4);
        QuotientResult q = quotient(g, sub.embedding);
        CHECK(q.quotient->order() == 6);
        CHECK(is_dihedral_of(q.quotient, 3));
    }
    SUBCASE("quotient map to q8 kills exactly C3") {
        CHECK(d.to_q8.is_surjective());
        CHECK(d.to_q8.kernel() == std::vector<int>{0, 8, 16});
    }
    SUBCASE("embeddings compose with the shared q8") {
        CHECK(d.q8_in.is_injective());
        CHECK(compose(d.to_q8, d.q8_in).map == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    }
}

TEST_CASE("n_level structure") {
    SUBCASE("k=1 has order 72") { CHECK(n_level(1).group->order() == 72); }
    SUBCASE("k < 1 is an error") { CHECK_THROWS_AS(n_level(0), std::invalid_argument); }

    NLevelData n2 = n_level(2);
    const GroupPtr& g = n2.group;
    CHECK(g->order() == 216);

    SUBCASE("D = <c, i> is normal of order 12") {
        CHECK(n2.d_in.src->order() == 12);
        CHECK(is_normal(g, n2.d_in));
    }
    SUBCASE("N_k / D is dihedral over C_{3^k}") {
        QuotientResult q = quotient(g, n2.d_in);
        CHECK(q.quotient->order() == 18);
        CHECK(is_dihedral_of(q.quotient, 9));
    }
    SUBCASE("j inverts both cyclic factors, i fixes them") {
        CHECK(g->conjugate(n2.j, n2.c) == g->inverse(n2.c));
        CHECK(g->conjugate(n2.j, n2.z) == g->inverse(n2.z));
        CHECK(g->conjugate(n2.i, n2.c) == n2.c);
        CHECK(g->conjugate(n2.i, n2.z) == n2.z);
    }
    SUBCASE("relations from the ambient semidihedral group hold verbatim") {
        // (i)^2 = (j)^2 = the central involution; i j i^-1 = j^-1
        int ii = g->op(n2.i, n2.i), jj = g->op(n2.j, n2.j);
        CHECK(ii == jj);
        CHECK(g->order_of(ii) == 2);
        CHECK(g->conjugate(n2.i, n2.j) == g->inverse(n2.j));
    }
    SUBCASE("sylow subgroup is normal with q8 complement") {
        CHECK(n2.sylow.src->order() == 27);
        CHECK(is_normal(g, n2.sylow));
        CHECK(n2.complement.src->order() == 8);
    }
}

TEST_CASE("tower of quotients") {
    Tower t = tower(3);
    REQUIRE(t.levels.size() == 3);
    REQUIRE(t.down.size() == 2);
    CHECK(t.levels[0].group->order() == 72);
    CHECK(t.levels[1].group->order() == 216);
    CHECK(t.levels[2].group->order() == 648);

    SUBCASE("down maps are surjective with kernel of order 3 in the cyclic factor") {
        for (size_t i = 0; i < t.down.size(); ++i) {
            const GroupHom& d = t.down[i];
            CHECK(d.is_surjective());
            std::vector<int> ker = d.kernel();
            CHECK(ker.size() == 3);
            // kernel elements are (0, b, 1) triples: fixed by conjugation by c and i
            const NLevelData& hi = t.levels[i + 1];
            for (int x : ker) {
                CHECK(hi.group->op(hi.c, x) == hi.group->op(x, hi.c));
                CHECK(hi.group->op(hi.i, x) == hi.group->op(x, hi.i));
            }
        }
    }
    SUBCASE("down fixes the C3 and Q8 factors pointwise") {
        for (size_t i = 0; i < t.down.size(); ++i) {
            const NLevelData& hi = t.levels[i + 1];
            const NLevelData& lo = t.levels[i];
            const GroupHom& d = t.down[i];
            for (int x = 0; x < 3; ++x) CHECK(d(hi.c3_in(x)) == lo.c3_in(x));
            for (int x = 0; x < 8; ++x) CHECK(d(hi.q8_in(x)) == lo.q8_in(x));
            for (int x = 0; x < 24; ++x) CHECK(d(hi.g24_in(x)) == lo.g24_in(x));
        }
    }
    SUBCASE("composite of two steps equals the two single steps") {
        Tower t4 = tower(3);
        GroupHom two_step = compose(t4.down[0], t4.down[1]);  // N_3 -> N_1
        for (int x = 0; x < t4.levels[2].group->order(); ++x)
            CHECK(two_step(x) == t4.down[0](t4.down[1](x)));
    }
    SUBCASE("k_max < 2 is an error") { CHECK_THROWS_AS(tower(1), std::invalid_argument); }
}

TEST_CASE("cosets give deterministic transversals") {
    const G24Data& d = g24();
    SUBCASE("cosets(G, G) = [identity]") {
        SubgroupResult whole = subgroup_generated(d.group, {d.c, d.i, d.j}, {"c", "i", "j"});
        CHECK(cosets(d.group, whole.embedding) == std::vector<int>{0});
    }
    SUBCASE("cosets(G24, Q8) = {1, c, c^2}") {
        std::vector<int> reps = cosets(d.group, d.q8_in);
        CHECK(reps == std::vector<int>{0, d.c, d.group->op(d.c, d.c)});
    }
    SUBCASE("cosets(N1, G24) has 3 elements starting at the identity") {
        NLevelData n1 = n_level(1);
        std::vector<int> reps = cosets(n1.group, n1.g24_in);
        CHECK(reps.size() == 3);
        CHECK(reps[0] == 0);
    }
    SUBCASE("invalid embedding is an error") {
        // non-injective "embedding": quotient projection
        QuotientResult q = quotient(d.group, d.c3_in);
        CHECK_THROWS_AS(cosets(q.quotient, GroupHom(d.group, q.quotient, q.projection.map)),
                        std::invalid_argument);
    }
}

TEST_CASE("the deepest level in scope") {
    NLevelData n4 = n_level(4);
    CHECK(n4.group->order() == 1944);
    CHECK(is_normal(n4.group, n4.sylow));
    CHECK(n4.group->conjugate(n4.j, n4.z) == n4.group->inverse(n4.z));
    CHECK_THROWS_AS(n_level(5), std::invalid_argument);
    Tower t4 = tower(4);
    CHECK(t4.down.back().is_surjective());
    CHECK(t4.down.back().kernel().size() == 3);
}

TEST_CASE("bad tables are rejected") {
    // order-3 table with wrong associativity: x*y = y is not a group
    std::vector<int> bad{0, 1, 2, 1, 0, 1, 2, 1, 0};
    CHECK_THROWS(FiniteGroup(std::move(bad), {}));
    std::vector<int> not_square{0, 1, 1, 0, 0};
    CHECK_THROWS_AS(FiniteGroup(std::move(not_square), {}), std::invalid_argument);
}
