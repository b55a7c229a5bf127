#include <doctest.h>

#include <cmath>

#include "cdq/agp.hpp"
#include "cdq/matching.hpp"

using namespace cdq;

TEST_CASE("closed-form step arithmetic") {
    auto st = closed_form_step(0.5, 1.0, 0.0, -0.01);
    CHECK(st.tau == doctest::Approx(0.08));
    CHECK(st.gamma == doctest::Approx(0.04));
    CHECK(st.beta == doctest::Approx(0.04));

    auto st2 = closed_form_step(0.25, 1.0, 0.0, -0.01);
    CHECK(st2.tau == doctest::Approx(0.10667).epsilon(1e-4));
    CHECK(st2.gamma == doctest::Approx(0.02667).epsilon(1e-3));
    CHECK(st2.beta == doctest::Approx(0.08).epsilon(1e-4));

    CHECK_THROWS_AS((void)closed_form_step(0.5, 1.0, 0.02, -0.01), numeric_error);
    CHECK_THROWS_AS((void)closed_form_step(1e-5, 1.0, 0.0, -0.01), validation_error);
}

TEST_CASE("validity criteria arithmetic") {
    auto inst = build_two_level();
    auto tiny = validity_check(0.01, 0.01, 0.5, 1.0, 0.0, -0.2, inst);
    CHECK(tiny.bch_ok);
    CHECK(tiny.magnus_ok);
    auto big = validity_check(1.5, 1.5, 0.5, 1.0, 0.0, -0.2, inst);
    CHECK_FALSE(big.bch_ok);
    // edge of the protocol: closed-form step angles blow up
    auto st = closed_form_step(0.02, 2.0, -0.05, -0.25);
    auto edge = validity_check(st.gamma, st.beta, 0.02, 2.0, -0.05, -0.25, inst);
    CHECK_FALSE(edge.bch_ok);
}

TEST_CASE("two-level p=1 matching at orders (3,2): pinned exact-zero point") {
    auto inst = build_two_level();
    MatcherConfig cfg;
    cfg.orders = {3, 2};
    cfg.t_lo = 0.1;
    cfg.t_hi = 10.0;
    auto rep = derive_angles(inst, Schedule::linear(1.0), 1, cfg);
    REQUIRE(rep.angles.p == 1);
    // frozen by the dense-matrix-validated reference computation: the
    // (gamma, beta, T) system has an exact zero at T = 0.9746,
    // gamma = beta = 0.25207 pi
    CHECK(rep.angles.gammas[0] / M_PI == doctest::Approx(0.25207).epsilon(2e-3));
    CHECK(rep.angles.betas[0] / M_PI == doctest::Approx(0.25207).epsilon(2e-3));
    CHECK(rep.schedule.T() == doctest::Approx(0.9746).epsilon(3e-3));
    CHECK(rep.angles.step_errors[0] < 1e-6);
    CHECK(rep.angles.equivalent_T ==
          doctest::Approx(rep.angles.taus[0]).epsilon(1e-12));
}

TEST_CASE("two-level p=1 at orders (5,3) converges toward pi/4") {
    auto inst = build_two_level();
    MatcherConfig cfg;
    cfg.orders = {5, 3};
    cfg.t_lo = 0.1;
    cfg.t_hi = 10.0;
    auto rep = derive_angles(inst, Schedule::linear(1.0), 1, cfg);
    CHECK(std::abs(rep.angles.gammas[0] - M_PI / 4) < 5e-3 * M_PI);
    CHECK(std::abs(rep.angles.betas[0] - M_PI / 4) < 5e-3 * M_PI);
    CHECK(rep.angles.step_errors[0] < 1e-5);
}

TEST_CASE("forward matching at orders (2,1) reproduces the closed-form step") {
    auto inst = build_ising_ring(8);
    // at lowest orders the per-step optimum is the closed-form solution;
    // check a single interior step against it
    AlphaFunction af = matching_alpha(inst);
    AlphaFn fn = [af](double l) { return af(l); };
    Schedule sched = Schedule::linear(40.0);
    MatchContext ctx(inst.match_h_target, inst.match_h_simple, fn);
    double t0 = 20.0;
    double lbar0 = sched.lambda(t0);
    auto seed = closed_form_step(lbar0, sched.lambda_dot(t0), 0.0, af(lbar0));
    // iterate the interval-consistent closed form
    double tau = seed.tau;
    for (int it = 0; it < 40; ++it) {
        double lm = sched.lambda(t0 + tau / 2);
        auto cf = closed_form_step(lm, sched.lambda_dot(t0 + tau / 2), 0.0, af(lm));
        tau = cf.tau;
    }
    double lm = sched.lambda(t0 + tau / 2);
    auto cf = closed_form_step(lm, sched.lambda_dot(t0 + tau / 2), 0.0, af(lm));
    // the (2,1) objective is minimized at the closed-form point
    auto cz = ctx.bch_coeffs(cf.gamma, cf.beta, 2);
    auto cw = ctx.magnus_coeffs(sched, t0, cf.tau, 1);
    double e_cf = ctx.diff_norm(cz, cw) / cf.tau;
    CHECK(e_cf < 2e-4);
    // perturbations only increase the error
    for (double d : {-0.02, 0.02}) {
        auto cz2 = ctx.bch_coeffs(cf.gamma * (1 + d), cf.beta, 2);
        CHECK(ctx.diff_norm(cz2, cw) / cf.tau > e_cf);
    }
}

TEST_CASE("derived angle sequences are smooth on linear schedules") {
    auto inst = build_ising_ring(10);
    MatcherConfig cfg;
    auto rep = derive_angles(inst, Schedule::linear(1.0), 8, cfg);
    REQUIRE(rep.angles.p == 8);
    for (double tau : rep.angles.taus) CHECK(tau > 0.0);
    double sum = 0;
    for (double tau : rep.angles.taus) sum += tau;
    CHECK(rep.angles.equivalent_T == doctest::Approx(sum).epsilon(1e-12));

    // max adjacent difference <= 3x mean adjacent difference over the steps
    // whose interval midpoint sits in lambda in [0.2, 0.8]; the matched step
    // size diverges like 1/(lambda(1-lambda)) at the protocol edges, where
    // the perturbative criteria break anyway
    std::vector<std::size_t> interior;
    double t0 = 0.0;
    for (std::size_t q = 0; q < rep.angles.taus.size(); ++q) {
        double lmid = rep.schedule.lambda(t0 + 0.5 * rep.angles.taus[q]);
        if (lmid >= 0.2 && lmid <= 0.8) interior.push_back(q);
        t0 += rep.angles.taus[q];
    }
    REQUIRE(interior.size() >= 4);
    auto smooth = [&](const std::vector<double>& v) {
        double mx = 0, mean = 0;
        int cnt = 0;
        for (std::size_t k = 1; k < interior.size(); ++k) {
            if (interior[k] != interior[k - 1] + 1) continue;
            double d = std::abs(v[interior[k]] - v[interior[k] - 1]);
            mx = std::max(mx, d);
            mean += d;
            ++cnt;
        }
        mean /= cnt;
        return std::pair{mx, mean};
    };
    auto [mg, ag] = smooth(rep.angles.gammas);
    CHECK(mg <= 3.0 * ag + 1e-9);
    auto [mb, ab] = smooth(rep.angles.betas);
    CHECK(mb <= 3.0 * ab + 1e-9);
}

TEST_CASE("reverse protocol basics") {
    auto inst = build_ising_ring(10);
    // p=1 symmetric step: implied lambda = 1/2, tau = 2 gamma
    auto rep = reverse_protocol(inst, {0.3}, {0.3});
    CHECK(rep.angles.taus[0] == doctest::Approx(0.6));
    CHECK(rep.schedule.T() == doctest::Approx(0.6));

    CHECK_THROWS_AS((void)reverse_protocol(inst, {0.3, -0.4}, {0.1, 0.2}),
                    numeric_error);

    // non-smooth warning
    auto rep2 = reverse_protocol(inst, {0.1, 0.9}, {0.4, 0.3});
    CHECK(rep2.nonsmooth_warning);
}

TEST_CASE("round trip: derive -> reverse recovers a linear schedule") {
    auto inst = build_ising_ring(10);
    MatcherConfig cfg;
    auto fwd = derive_angles(inst, Schedule::linear(1.0), 8, cfg);
    REQUIRE(fwd.angles.p == 8);
    auto rev = reverse_protocol(inst, fwd.angles.gammas, fwd.angles.betas, cfg);
    // recovered lambda within 0.02 sup-norm of linear; recovered s within 0.02
    double worst_l = 0, worst_s = 0;
    for (double u = 0.0; u <= 1.0; u += 0.02) {
        worst_l = std::max(worst_l,
                           std::abs(rev.schedule.shape(u) - u));
        worst_s = std::max(worst_s, std::abs(rev.schedule.s_shape(u)));
    }
    CHECK(worst_l < 0.02);
    CHECK(worst_s < 0.02);
    // T agreement at the 10% level
    CHECK(rev.schedule.T() ==
          doctest::Approx(fwd.angles.equivalent_T).epsilon(0.1));
}

TEST_CASE("infeasible p reports a numeric error") {
    auto inst = build_two_level();
    MatcherConfig cfg;
    cfg.t_lo = 5.0;
    cfg.t_hi = 6.0;
    CHECK_THROWS_AS((void)derive_angles(inst, Schedule::linear(1.0), 1, cfg),
                    numeric_error);
}
