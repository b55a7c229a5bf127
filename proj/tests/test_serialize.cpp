#include <doctest.h>

#include <random>

#include "cdq/matching.hpp"
#include "cdq/serialize.hpp"

using namespace cdq;

TEST_CASE("paulisum json round trip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint64_t> mask(0, 31);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        PauliSum s(5);
        for (int k = 0; k < 6; ++k)
            s.add_term(mask(rng), mask(rng), cplx(coeff(rng), coeff(rng)));
        if (s.empty()) continue;
        PauliSum back = paulisum_from_json(paulisum_to_json(s));
        CHECK(back.n_qubits() == 5);
        PauliSum diff = back - s;
        diff.prune(1e-12);
        CHECK(diff.empty());
    }
}

TEST_CASE("term string round trip") {
    PauliTerm t = PauliTerm::from_string("XIZYZ");
    CHECK(t.to_string() == "XIZYZ");
    CHECK_THROWS_AS((void)PauliTerm::from_string("XQ"), validation_error);
}

TEST_CASE("instance json round trip") {
    auto ring = instance_from_json(R"({"kind":"ising_ring","N":8})");
    CHECK(ring.kind == InstanceKind::IsingRing);
    CHECK(ring.n_qubits == 8);
    auto two = instance_from_json(instance_to_json(build_two_level()));
    CHECK(two.kind == InstanceKind::TwoLevel);
    auto mc = instance_from_json(R"({"kind":"maxcut","edges":[[0,1],[1,2],[0,2]]})");
    CHECK(mc.obj_max == doctest::Approx(2.0));
    CHECK((instance_from_json(instance_to_json(mc)).objective - mc.objective).empty());
    CHECK_THROWS_AS((void)instance_from_json(R"({"kind":"bogus"})"), validation_error);
}

TEST_CASE("schedule json round trip") {
    auto lin = schedule_from_json(R"({"T":2.5,"lambda":{"form":"linear"},"s":{"form":"sin","s0":-0.05}})");
    CHECK(lin.T() == doctest::Approx(2.5));
    CHECK(lin.s(1.25) == doctest::Approx(-0.05));
    auto back = schedule_from_json(schedule_to_json(lin));
    CHECK(back.lambda(1.0) == doctest::Approx(lin.lambda(1.0)));
    CHECK(back.s(0.7) == doctest::Approx(lin.s(0.7)));

    auto pw = schedule_from_json(
        R"({"T":3.0,"lambda":{"form":"pchip","knots":[[0,0],[0.5,0.7],[1,1]]},"s":{"form":"cubic","a":-0.1,"b":0.02}})");
    CHECK(pw.lambda(1.5) == doctest::Approx(0.7));
    auto back2 = schedule_from_json(schedule_to_json(pw));
    for (double t : {0.3, 1.1, 2.9})
        CHECK(back2.lambda(t) == doctest::Approx(pw.lambda(t)).epsilon(1e-12));

    auto pow = schedule_from_json(R"({"T":1.0,"lambda":{"form":"power","r":2.0},"s":{"form":"zero"}})");
    CHECK(pow.lambda(0.5) == doctest::Approx(0.5));
}

TEST_CASE("report json carries the full angle set") {
    auto inst = build_ising_ring(8);
    MatcherConfig cfg;
    cfg.orders = {2, 1};
    auto rep = derive_angles(inst, Schedule::linear(1.0), 4, cfg);
    std::string j = report_to_json(rep, config_digest("test"), 42);
    CHECK(j.find("\"p\": 4") != std::string::npos);
    CHECK(j.find("equivalent_T") != std::string::npos);
    CHECK(j.find("config_digest") != std::string::npos);
    std::string csv = angles_to_csv(rep.angles);
    CHECK(csv.find("q,gamma,beta,tau,step_error") == 0);
}

TEST_CASE("config digest is stable") {
    CHECK(config_digest("abc") == config_digest("abc"));
    CHECK(config_digest("abc") != config_digest("abd"));
}
