#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lct/analysis.hpp"
#include "lct/sampling.hpp"

using lct::LctParams;
using lct::ParallelogramSpec;
using lct::TimeFreqBox;

TEST_CASE("min_rate_basic") {
    const TimeFreqBox box{8.0, 4.0};
    CHECK(lct::min_rate_basic(box, LctParams(0, 1, -1, 0)) == doctest::Approx(12.0));
    CHECK(lct::min_rate_basic(box, LctParams(1, 2, 0.5, 2)) == doctest::Approx(4.0));
    CHECK_THROWS_AS(lct::min_rate_basic(box, LctParams(2, 0, 1, 0.5)), lct::ZeroBError);
}

TEST_CASE("min_rate_recoverable") {
    const TimeFreqBox box{8.0, 4.0};
    CHECK(lct::min_rate_recoverable(box, LctParams(0, 1, -1, 0)) == doctest::Approx(12.0));
    CHECK(lct::min_rate_recoverable(box, LctParams(1, 0.7, 0, 1)) == doctest::Approx(4.0));
    lct::ParamSampler sampler(3);
    for (int i = 0; i < 40; ++i) {
        const LctParams m = sampler.next();
        CHECK(lct::min_rate_recoverable(box, m) >= lct::min_rate_basic(box, m));
    }
}

TEST_CASE("min_samples") {
    const TimeFreqBox box{8.0, 4.0};
    const LctParams ft(0, 1, -1, 0);
    CHECK(lct::min_samples(1.0 / 12.0, box, ft) == 96);
    CHECK(lct::min_samples(1.0 / 24.0, box, ft) == 192);
    // b -> 0, a = 1 limit: bound approaches ceil(T / delta)
    CHECK(lct::min_samples(0.5, box, LctParams(1, 1e-6, 0, 1)) == 17);
}

TEST_CASE("rate bounds are monotone in T and F") {
    lct::ParamSampler sampler(5);
    for (int i = 0; i < 20; ++i) {
        const LctParams m = sampler.next();
        const double r1 = lct::min_rate_basic({4.0, 2.0}, m);
        CHECK(lct::min_rate_basic({5.0, 2.0}, m) >= r1);
        CHECK(lct::min_rate_basic({4.0, 3.0}, m) >= r1);
        CHECK(r1 >= 0.0);
    }
}

TEST_CASE("parallelogram_reduce") {
    SUBCASE("axis-aligned rectangle") {
        const auto r = lct::parallelogram_reduce({2, 1, -2, 1});
        CHECK(r.T0 == doctest::Approx(4.0));
        CHECK(r.c0 == doctest::Approx(0.0));
        CHECK(r.F0 == doctest::Approx(2.0));
        CHECK(r.b0 == doctest::Approx(0.0));
    }
    SUBCASE("degenerate inputs are rejected") {
        CHECK_THROWS_AS(lct::parallelogram_reduce({3, 2, 1, 0}), lct::DegenerateParallelogram);
        CHECK_THROWS_AS(lct::parallelogram_reduce({1, 0, 3, 2}), lct::DegenerateParallelogram);
    }
}

TEST_CASE("box_from_parallelogram") {
    SUBCASE("rectangle maps to its own box") {
        const auto box = lct::box_from_parallelogram({2, 1, -2, 1});
        CHECK(box.duration_T == doctest::Approx(4.0));
        CHECK(box.bandwidth_F == doctest::Approx(2.0));
    }
    SUBCASE("sheared case b0=0, c0=0.5") {
        // p1=(2,2), p2=(-2,0): T0=4, c0=0.5, F0=2, b0=0
        const auto r = lct::parallelogram_reduce({2, 2, -2, 0});
        CHECK(r.b0 == doctest::Approx(0.0));
        CHECK(r.c0 == doctest::Approx(0.5));
        const auto box = lct::box_from_parallelogram({2, 2, -2, 0});
        CHECK(box.duration_T == doctest::Approx(4.0));
        CHECK(box.bandwidth_F == doctest::Approx(4.0));
    }
    SUBCASE("outputs positive, T >= T0 and F >= |c0| T0") {
        const ParallelogramSpec spec{3.0, 2.0, -1.0, 0.0};
        const auto r = lct::parallelogram_reduce(spec);
        const auto box = lct::box_from_parallelogram(spec);
        CHECK(box.duration_T > 0.0);
        CHECK(box.bandwidth_F > 0.0);
        CHECK(box.duration_T >= r.T0);
        CHECK(box.bandwidth_F >= std::abs(r.c0) * r.T0);
    }
}

TEST_CASE("plan_box on the hand-derived Fourier case") {
    const auto plan = lct::plan_box({8.0, 4.0}, LctParams(0, 1, -1, 0), true);
    CHECK(plan.delta_max == doctest::Approx(1.0 / 12.0));
    CHECK(plan.n_min == 96);
    CHECK(plan.oversampling_required);
}

TEST_CASE("plan_box a=1 case needs no oversampling when F dominates") {
    const auto plan = lct::plan_box({8.0, 4.0}, LctParams(1, 0.1, 0, 1), false);
    CHECK_FALSE(plan.oversampling_required);
}

TEST_CASE("plan_refined with a rectangle reproduces plan_box exactly") {
    const LctParams m(0, 1, -1, 0);
    for (bool recoverable : {false, true}) {
        const auto direct = lct::plan_box({4.0, 2.0}, m, recoverable);
        const auto refined = lct::plan_refined({2, 1, -2, 1}, m, recoverable);
        CHECK(refined.delta_max == direct.delta_max);
        CHECK(refined.n_min == direct.n_min);
        CHECK(refined.oversampling_required == direct.oversampling_required);
        CHECK(refined.discrete_params.b() == direct.discrete_params.b());
        CHECK(refined.discrete_params.c() == direct.discrete_params.c());
    }
}

TEST_CASE("plan_refined recoverable bound dominates the basic bound") {
    const ParallelogramSpec spec{2, 2, -2, 0};
    lct::ParamSampler sampler(7);
    for (int i = 0; i < 20; ++i) {
        const LctParams m = sampler.next();
        const auto basic = lct::plan_refined(spec, m, false);
        const auto recov = lct::plan_refined(spec, m, true);
        CHECK(recov.delta_max <= basic.delta_max);
    }
}

TEST_CASE("plan_refined pinned worked example") {
    // spec p1=(2,2), p2=(-2,0) with the Fourier matrix:
    // M1 = (0.5,1;-1,0), T=F=4, rate bound 4, delta 1/4, N = ceil(4*4) = 16.
    const auto plan = lct::plan_refined({2, 2, -2, 0}, LctParams(0, 1, -1, 0), false);
    CHECK(plan.delta_max == doctest::Approx(0.25));
    CHECK(plan.n_min == 16);
    CHECK_FALSE(plan.oversampling_required);
    // discrete params from the continuous-to-discrete map at (delta, N): N delta^2 = 1
    CHECK(plan.discrete_params.a() == doctest::Approx(0.0));
    CHECK(plan.discrete_params.b() == doctest::Approx(1.0));
}
