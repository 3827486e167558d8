#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabmod/catalog.hpp"
#include "stabmod/scenarios.hpp"
#include "stabmod/sequences.hpp"
#include "stabmod/simples.hpp"

using namespace stabmod;
using exactla::Matrix;
using exactla::RingSpec;

TEST_CASE("ring and matrix round-trips") {
    for (RingSpec ring : {RingSpec::prime_field(3), RingSpec::truncation(3, 8),
                          RingSpec::p_local(3)}) {
        CHECK(io::ring_from_json(io::ring_to_json(ring)) == ring);
    }
    Matrix m(RingSpec::p_local(3), 2, 3);
    m.set(0, 0, mpq_class(22, 7));
    m.set(1, 2, mpq_class(-5, 4));
    Matrix back = io::matrix_from_json(io::matrix_to_json(m));
    CHECK(back == m);
}

TEST_CASE("builtin groups serialize by constructor name") {
    io::json j = io::group_to_json(grp::sd16().group);
    CHECK(j.at("kind") == "builtin");
    CHECK(j.at("name") == "sd16");
    CHECK_FALSE(j.contains("mult"));
    CHECK(io::group_from_json(j)->order() == 16);

    io::json jn = io::group_to_json(grp::n_level(2).group);
    CHECK(jn.at("name") == "n_level");
    CHECK(jn.at("k") == 2);

    // a custom group falls back to the raw table
    grp::GroupPtr klein = grp::quotient(grp::sd16().group,
                                        grp::subgroup_generated(grp::sd16().group,
                                                                {grp::sd16().group->op(
                                                                    grp::sd16().omega,
                                                                    grp::sd16().omega)},
                                                                {"w2"}).embedding)
                              .quotient;
    io::json jk = io::group_to_json(klein);
    CHECK(jk.at("kind") == "table");
    CHECK(io::group_from_json(jk)->order() == klein->order());
}

TEST_CASE("module round-trip reproduces the action matrices") {
    const grp::G24Data& d = grp::g24();
    rep::RepModule ind = rep::induce(
        rep::character_module(rep::theta_q8(), RingSpec::p_local(3)), d.q8_in);
    io::json j = io::module_to_json(ind);
    rep::RepModule back = io::module_from_json(j);
    CHECK(back.rank() == ind.rank());
    for (int g = 0; g < 24; ++g) CHECK(back.act_dense(g) == ind.act_dense(g));
}

TEST_CASE("corrupted module entries fail the audit with the offending pair") {
    const grp::G24Data& d = grp::g24();
    rep::RepModule ind =
        rep::induce(rep::trivial_module(grp::q8_in_sd16().group, RingSpec::p_local(3)), d.q8_in);
    io::json j = io::module_to_json(ind);
    // corrupt one generator entry
    j["generator_actions"][0]["matrix"]["entries"][0][0] = "7";
    bool threw = false;
    try {
        io::module_from_json(j);
    } catch (const rep::ActionAuditError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("pair") != std::string::npos);
    } catch (const std::invalid_argument&) {
        threw = true;  // monomial structure violations surface earlier
    }
    CHECK(threw);
}

TEST_CASE("complex round-trip preserves exactness") {
    homalg::ChainComplex c = homalg::g24_dihedral_sequence();
    io::json j = io::complex_to_json(c);
    homalg::ChainComplex back = io::complex_from_json(j);
    CHECK(homalg::check_exact(back).exact);
}

TEST_CASE("scenario reports") {
    SUBCASE("unknown scenario is rejected before any output") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "unknown-name";
        cfg.out_path = "/tmp/stabmod_should_not_exist.json";
        std::remove(cfg.out_path.c_str());
        CHECK_THROWS_AS(scenarios::run(cfg), std::invalid_argument);
        std::ifstream probe(cfg.out_path);
        CHECK_FALSE(probe.good());
    }
    SUBCASE("wrong prime is rejected") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "sequence-d6";
        cfg.p = 5;
        CHECK_THROWS_AS(scenarios::run(cfg), std::invalid_argument);
    }
    SUBCASE("k > 4 is refused with a message") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "sequence-1-tower";
        cfg.tower_max_k = 5;
        CHECK_THROWS_WITH_AS(scenarios::run(cfg),
                             "run: tower_max_k > 4 exceeds desk scale, refusing",
                             std::invalid_argument);
    }
    SUBCASE("degenerate numeric bounds are refused") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "krull-schmidt-suite";
        cfg.precision = 1;
        CHECK_THROWS_AS(scenarios::run(cfg), std::invalid_argument);
        cfg.precision = 8;
        cfg.max_degree = 2;
        CHECK_THROWS_AS(scenarios::run(cfg), std::invalid_argument);
        cfg.max_degree = 6;
        cfg.tower_max_k = 1;
        CHECK_THROWS_AS(scenarios::run(cfg), std::invalid_argument);
    }
    SUBCASE("reports are byte-identical across two runs with the same seed") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "sd16-simples";
        cfg.seed = 424242;
        scenarios::Report a = scenarios::run(cfg);
        scenarios::Report b = scenarios::run(cfg);
        CHECK(scenarios::report_to_json(a).dump(2) == scenarios::report_to_json(b).dump(2));
        CHECK(a.overall);
    }
    SUBCASE("every check carries a provenance tag") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "sequence-d6";
        scenarios::Report r = scenarios::run(cfg);
        for (const auto& c : r.checks)
            CHECK((c.provenance == "paper" || c.provenance == "trivial" ||
                   c.provenance == "derived"));
    }
    SUBCASE("report round-trip") {
        scenarios::ScenarioConfig cfg;
        cfg.name = "sequence-d6";
        scenarios::Report r = scenarios::run(cfg);
        scenarios::Report back = scenarios::report_from_json(scenarios::report_to_json(r));
        CHECK(scenarios::report_to_json(back) == scenarios::report_to_json(r));
    }
}
