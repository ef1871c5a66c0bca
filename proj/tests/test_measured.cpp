#include <doctest.h>

#include <cmath>

#include "qwalk/measured.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

TEST_CASE("alpha series equals the return amplitude") {
    WalkSpec spec(7, 3);
    const auto alpha = alpha_series(spec, 40);
    CHECK(alpha[0] == doctest::Approx(1.0));
    const SpectralSums sums = spectral_sums(spec);
    for (int t = 0; t <= 40; ++t)
        CHECK(alpha[t] == doctest::Approx(sums.return_amplitude(t)).epsilon(1e-14));
}

TEST_CASE("beta recursion base cases") {
    WalkSpec spec(5, 1);
    const auto alpha = alpha_series(spec, 30);
    const auto beta = beta_recursion(alpha, 10, 15);
    CHECK(beta[0] == doctest::Approx(alpha[10]));
    CHECK(beta[1] == doctest::Approx(alpha[11] - beta[0] * alpha[1]));
    CHECK_THROWS_AS(beta_recursion(alpha, 20, 15), std::invalid_argument);
}

TEST_CASE("measured walk argument validation") {
    WalkSpec even(6, 2);
    CHECK_THROWS_AS(projective_simulation(even, 0, 10), std::invalid_argument);
    WalkSpec spec(5, 3);
    CHECK_THROWS_AS(projective_simulation(spec, 3, 10), std::invalid_argument);
    WalkSpec big(13, 3);
    CHECK_THROWS_AS(projective_simulation(big, 0, 10), std::invalid_argument);
}

TEST_CASE("projective simulation with T0 >= T is the free walk") {
    WalkSpec spec(6, 3);
    const auto trace = projective_simulation(spec, 40, 30);
    for (int t = 0; t <= 30; ++t) CHECK(trace.q[t] == 0.0);
    CHECK(trace.p[30] == 0.0);
    CHECK(trace.final_norm == doctest::Approx(1.0).epsilon(1e-12));
    const auto alpha = alpha_series(spec, 30);
    for (int t = 0; t <= 30; ++t)
        CHECK(trace.alpha[t] == doctest::Approx(alpha[t]).epsilon(1e-10));
}

TEST_CASE("the two stop-probability pipelines agree") {
    for (auto [n, s, T0] : std::vector<std::array<int, 3>>{
             {7, 3, 10}, {6, 1, 0}, {8, 3, 20}, {5, 3, 4}}) {
        WalkSpec spec(n, s);
        const int T = 150;
        const auto sim = projective_simulation(spec, T0, T);
        const auto rec = measured_trace_spectral(spec, T0, T);
        for (int t = 0; t <= T; ++t)
            CHECK(sim.q[t] == doctest::Approx(rec.q[t]).epsilon(1e-9));
        for (int dt = 0; dt <= T - T0; ++dt)
            CHECK(sim.beta[dt] == doctest::Approx(rec.beta[dt]).epsilon(1e-9));
        CHECK(sim.p[T] + sim.final_norm * sim.final_norm ==
              doctest::Approx(1.0).epsilon(1e-9));
        // p is a nondecreasing probability
        for (int t = 1; t <= T; ++t) CHECK(sim.p[t] >= sim.p[t - 1]);
        CHECK(sim.p[T] <= 1.0 + 1e-10);
    }
}

TEST_CASE("stop probability aligns with the squared measured overlap") {
    WalkSpec spec(7, 3);
    const auto trace = projective_simulation(spec, 10, 80);
    for (int t = 11; t <= 80; ++t)
        CHECK(trace.q[t] ==
              doctest::Approx(trace.beta[t - 10 - 1] * trace.beta[t - 10 - 1])
                  .epsilon(1e-12));
}

TEST_CASE("absorption bound report") {
    WalkSpec spec(7, 3);
    // T even near pi*m so the return mass exists at even times
    const auto rep = absorption_bound_check(spec, 20, 56, 110);
    CHECK(rep.p_T > 0.0);
    CHECK(rep.epsilon == doctest::Approx(1.0));
    CHECK(rep.ratio > 0.0);
    // T0 = T: no measurement window at all
    const auto none = absorption_bound_check(spec, 110, 110, 110);
    CHECK(none.p_T == 0.0);
}
