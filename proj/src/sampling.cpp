#include "lct/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace lct {

namespace {

void require_positive_box(const TimeFreqBox& box) {
    if (!(box.duration_T > 0.0) || !(box.bandwidth_F > 0.0))
        throw Error("time duration and bandwidth must be positive");
}

bool b_is_zero(double b) { return std::abs(b) < 1e-12; }

// |a-1|/|b| * T + F, the bandwidth of the signal after the first CM step.
double shear_rate(double a, double b, double t, double f) {
    if (b_is_zero(b)) throw ZeroBError("rate bound requires b != 0");
    return std::abs(a - 1.0) / std::abs(b) * t + f;
}

int ceil_samples(double bound) {
    return std::max(1, static_cast<int>(std::ceil(bound - 1e-12)));
}

}  // namespace

double min_rate_basic(const TimeFreqBox& box, const LctParams& m) {
    require_positive_box(box);
    return shear_rate(m.a(), m.b(), box.duration_T, box.bandwidth_F);
}

double min_rate_recoverable(const TimeFreqBox& box, const LctParams& m) {
    require_positive_box(box);
    const double out_bw = std::abs(m.c()) * box.duration_T + std::abs(m.d()) * box.bandwidth_F;
    return std::max(min_rate_basic(box, m), out_bw);
}

int min_samples(double delta, const TimeFreqBox& box, const LctParams& m) {
    require_positive_box(box);
    if (!(delta > 0.0)) throw Error("delta must be positive");
    const double spread = std::max(
        box.duration_T, std::abs(m.a()) * box.duration_T + std::abs(m.b()) * box.bandwidth_F);
    return ceil_samples(spread / delta);
}

static ReducedParallelogram reduce_impl(const ParallelogramSpec& spec) {
    const double t0 = spec.t1 - spec.t2;
    if (!(t0 > 0.0)) throw DegenerateParallelogram("parallelogram requires t1 > t2");
    const double c0 = (spec.f1 - spec.f2) / t0;
    const double f0 = spec.f1 + spec.f2 - c0 * (spec.t1 + spec.t2);
    if (!(f0 > 0.0)) throw DegenerateParallelogram("parallelogram implies bandwidth F0 <= 0");
    const double b0 = (spec.t1 + spec.t2) / f0;
    return {t0, f0, b0, c0, LctParams(1.0, b0, c0, b0 * c0 + 1.0)};
}

ReducedParallelogram parallelogram_reduce(const ParallelogramSpec& spec) {
    return reduce_impl(spec);
}

TimeFreqBox box_from_parallelogram(const ParallelogramSpec& spec) {
    const ReducedParallelogram r = reduce_impl(spec);
    return {r.T0 + std::abs(r.b0) * r.F0,
            std::abs(r.c0) * r.T0 + std::abs(r.b0 * r.c0 + 1.0) * r.F0};
}

SamplingPlan plan_box(const TimeFreqBox& box, const LctParams& m, bool recoverable) {
    const double rate = recoverable ? min_rate_recoverable(box, m) : min_rate_basic(box, m);
    const double delta = 1.0 / rate;
    const int n = min_samples(delta, box, m);
    const double f = box.bandwidth_F;
    const double f1 = min_rate_basic(box, m);
    const double f_out = std::abs(m.c()) * box.duration_T + std::abs(m.d()) * box.bandwidth_F;
    return {delta, n, map_continuous_to_discrete(m, n, delta), f < f1 || f < f_out};
}

SamplingPlan plan_refined(const ParallelogramSpec& spec, const LctParams& m, bool recoverable) {
    const ReducedParallelogram r = reduce_impl(spec);
    const TimeFreqBox box = box_from_parallelogram(spec);
    const LctParams m1 = compose(m, r.m0);
    const double f1_bw = shear_rate(m1.a(), m1.b(), r.T0, r.F0);
    const double f_out = std::abs(m1.c()) * r.T0 + std::abs(m1.d()) * r.F0;
    double rate = f1_bw;
    if (recoverable) rate = std::max({f1_bw, f_out, box.bandwidth_F});
    const double delta = 1.0 / rate;
    const double spread =
        std::max(box.duration_T, std::abs(m1.a()) * r.T0 + std::abs(m1.b()) * r.F0);
    const int n = ceil_samples(spread / delta);
    const bool oversample = box.bandwidth_F < f1_bw || box.bandwidth_F < f_out;
    return {delta, n, map_continuous_to_discrete(m, n, delta), oversample};
}

}  // namespace lct
