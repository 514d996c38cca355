#pragma once

#include "lct/params.hpp"

namespace lct {

// Time-frequency support box of the input signal.
struct TimeFreqBox {
    double duration_T;
    double bandwidth_F;
};

// Two vertices (t1,f1), (t2,f2) of the fundamental parallelogram bounding
// the input's time-frequency support; p1 is the rightmost vertex and p2 the
// one below-left of it, so t1 > t2.
struct ParallelogramSpec {
    double t1, f1;
    double t2, f2;
};

// Output of parallelogram_reduce: the rectangle (T0,F0) reached by undoing
// the shear M0 = (1,b0;c0,b0*c0+1).
struct ReducedParallelogram {
    double T0, F0, b0, c0;
    LctParams m0;
};

// Computed sampling bounds for approximating the continuous LCT.
struct SamplingPlan {
    double delta_max;
    int n_min;
    LctParams discrete_params;
    bool oversampling_required;
};

// Lower bound on the sampling rate 1/delta: |a-1|/|b| * T + F.
double min_rate_basic(const TimeFreqBox& box, const LctParams& m);

// Rate bound when the output (and input) must also be reconstructible:
// max{ |a-1|/|b| * T + F, |c| T + |d| F }.
double min_rate_recoverable(const TimeFreqBox& box, const LctParams& m);

// Sample-count bound ceil( (1/delta) * max{ T, |a| T + |b| F } ).
int min_samples(double delta, const TimeFreqBox& box, const LctParams& m);

ReducedParallelogram parallelogram_reduce(const ParallelogramSpec& spec);

// Duration/bandwidth of the original signal implied by the parallelogram:
// T = T0 + |b0| F0, F = |c0| T0 + |b0 c0 + 1| F0.
TimeFreqBox box_from_parallelogram(const ParallelogramSpec& spec);

// Plan from a plain T/F box: delta from the chosen rate bound, N from
// min_samples, discrete parameters from the continuous ones at (delta, N).
SamplingPlan plan_box(const TimeFreqBox& box, const LctParams& m, bool recoverable);

// Parallelogram-aware plan: bounds are computed for M1 = M * M0 acting on the
// reduced rectangle (T0, F0), which can be tighter than the plain box plan.
SamplingPlan plan_refined(const ParallelogramSpec& spec, const LctParams& m, bool recoverable);

}  // namespace lct
