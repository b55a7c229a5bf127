#include <doctest.h>

#include <cmath>

#include "cdq/schedule.hpp"

using namespace cdq;

TEST_CASE("built-in lambda forms hit their endpoints") {
    for (auto sched : {Schedule::linear(2.0),
                       Schedule(2.0, LambdaForm::Smoothstep, 0, SForm::Zero, 0),
                       Schedule(2.0, LambdaForm::Power, 1.5, SForm::Zero, 0)}) {
        CHECK(sched.lambda(0.0) == doctest::Approx(0.0));
        CHECK(sched.lambda(2.0) == doctest::Approx(1.0));
        // monotone nondecreasing
        double prev = -1;
        for (double t = 0; t <= 2.0; t += 0.05) {
            CHECK(sched.lambda(t) >= prev - 1e-12);
            prev = sched.lambda(t);
        }
    }
}

TEST_CASE("derivatives agree with finite differences") {
    for (auto sched : {Schedule::linear(3.0),
                       Schedule(3.0, LambdaForm::Smoothstep, 0, SForm::Zero, 0),
                       Schedule(3.0, LambdaForm::Power, 2.0, SForm::Zero, 0)}) {
        for (double t : {0.3, 1.1, 2.0, 2.7}) {
            double h = 1e-6;
            double fd = (sched.lambda(t + h) - sched.lambda(t - h)) / (2 * h);
            CHECK(sched.lambda_dot(t) == doctest::Approx(fd).epsilon(1e-5));
        }
    }
}

TEST_CASE("sin auxiliary field vanishes at the ends") {
    auto sched = Schedule::linear_sin(2.0, 0.05);
    CHECK(sched.s(0.0) == doctest::Approx(0.0));
    CHECK(sched.s(2.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sched.s(1.0) == doctest::Approx(0.05));
}

TEST_CASE("schedule freezes beyond the end") {
    auto sched = Schedule::linear_sin(1.0, 0.05);
    CHECK(sched.lambda(1.5) == doctest::Approx(1.0));
    CHECK(sched.lambda_dot(1.5) == doctest::Approx(0.0));
    CHECK(sched.s(1.5) == doctest::Approx(0.0));
}

TEST_CASE("monotone cubic interpolates and stays monotone") {
    MonotoneCubic mc({0.0, 0.3, 0.6, 1.0}, {0.0, 0.5, 0.7, 1.0});
    CHECK(mc.value(0.3) == doctest::Approx(0.5));
    CHECK(mc.value(0.6) == doctest::Approx(0.7));
    double prev = -1;
    for (double u = 0; u <= 1.0; u += 0.01) {
        CHECK(mc.value(u) >= prev - 1e-12);
        prev = mc.value(u);
    }
    for (double u : {0.1, 0.45, 0.9}) {
        double h = 1e-6;
        double fd = (mc.value(u + h) - mc.value(u - h)) / (2 * h);
        CHECK(mc.derivative(u) == doctest::Approx(fd).epsilon(1e-4));
    }
}

TEST_CASE("invalid schedules are rejected") {
    CHECK_THROWS_AS(Schedule(-1.0, LambdaForm::Linear, 0, SForm::Zero, 0),
                    validation_error);
    CHECK_THROWS_AS(MonotoneCubic({0.0, 0.0}, {0.0, 1.0}), validation_error);
    CHECK_THROWS_AS(MonotoneCubic({0.0}, {0.0}), validation_error);
}
