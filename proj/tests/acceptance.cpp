// Acceptance suite. Prints one pass/fail line per criterion and exits
// nonzero if any of them fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lct/analysis.hpp"
#include "lct/dlct.hpp"
#include "lct/kernels.hpp"
#include "lct/sampling.hpp"
#include "oracles.hpp"

using lct::cplx;
using lct::LctParams;
using lct::Signal;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << " (" << name << "): "
              << detail << "\n";
    if (!ok) ++g_failures;
}

Signal random_signal(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> samples(static_cast<size_t>(n));
    for (auto& s : samples) s = {dist(rng), dist(rng)};
    return Signal(std::move(samples));
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double time_best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

void criterion_1() {
    double worst = 0.0;
    bool ok = true;
    for (const char* name : {"h1", "h2", "h3", "h4"}) {
        const auto rep = lct::run_reversibility(name, 200, 1);
        for (const auto& r : rep.records) worst = std::max(worst, r.nmse);
        ok = ok && rep.records.size() == 200;
    }
    ok = ok && worst <= 1e-25;
    report(1, "reversibility", ok, "worst NMSE over h1-h4 x 200 runs = " + sci(worst));
}

void criterion_2() {
    double worst = 0.0;
    for (const char* name : {"h1", "h2", "h4"}) {
        const Signal x = lct::make_test_signal(name);
        const Signal round =
            lct::dlct(lct::dlct(x, LctParams(2, 0, 1, 0.5)), LctParams(0.5, 0, -1, 2));
        worst = std::max(worst, lct::nmse(x, round));
    }
    report(2, "B=0 worked pair", worst <= 1e-25, "worst NMSE = " + sci(worst));
}

void criterion_3() {
    const double r2 = std::sqrt(2.0);
    const double e = lct::accuracy_experiment(
        kPi / 2.0, 101, LctParams(0.8 / r2, 0.8 / r2, 5.15 / r2, 7.65 / r2));
    report(3, "Gaussian high accuracy", e < 1e-15, "NMSE = " + sci(e));
}

void criterion_4() {
    const double e = lct::accuracy_experiment(1.0, 101, LctParams(0.44, -0.08, 4.8, 1.4));
    const bool ok = e > 8.6e-4 / 3.0 && e < 8.6e-4 * 3.0;
    report(4, "Gaussian moderate accuracy", ok,
           "NMSE = " + sci(e) + ", expected within 3x of 8.6e-4");
}

void criterion_5() {
    const Signal h4 = lct::make_test_signal("h4");
    auto median_for = [&](double xi_max) {
        lct::ParamSampler sampler(5);
        std::vector<double> errs;
        for (int i = 0; i < 200; ++i) {
            const auto [m1, m2] = lct::random_chirp_limited_pair(sampler, xi_max);
            errs.push_back(lct::additivity_experiment(h4, m1, m2));
        }
        std::sort(errs.begin(), errs.end());
        return 0.5 * (errs[99] + errs[100]);
    };
    const double wide = median_for(2.5), narrow = median_for(0.5);
    const double ratio = wide / narrow;
    const bool ok = ratio >= 1e4 && ratio <= 1e7;
    report(5, "chirp-limited additivity", ok,
           "median ratio (xi<=2.5 over xi<=0.5) = " + sci(ratio));
}

void criterion_6() {
    double worst = 0.0;
    for (int n : {5, 8, 13, 16, 32}) {
        lct::ParamSampler sampler(static_cast<std::uint64_t>(600 + n));
        const Signal x = random_signal(n, static_cast<unsigned>(n));
        for (int i = 0; i < 50; ++i) {
            const LctParams m = sampler.next();
            const auto want = oracle::dlct_three_step(x.samples(), m.a(), m.b(), m.d());
            worst = std::max(worst, oracle::rel_error(lct::dlct(x, m).samples(), want));
        }
        worst = std::max(worst,
                         oracle::rel_error(lct::centered_dft(x).samples(), oracle::dft(x.samples())));
        worst = std::max(worst, oracle::rel_error(lct::centered_idft(x).samples(),
                                                  oracle::idft(x.samples())));
        // the two B = 0 factor sequences
        worst = std::max(worst, oracle::rel_error(lct::dlct(x, LctParams(2, 0, 1, 0.5)).samples(),
                                                  oracle::dlct_b_zero_big_a(x.samples(), 2, 1, 0.5)));
        worst = std::max(worst, oracle::rel_error(lct::dlct(x, LctParams(0.5, 0, -1, 2)).samples(),
                                                  oracle::dlct_b_zero_big_d(x.samples(), 0.5, -1, 2)));
    }
    report(6, "oracle equivalence", worst <= 1e-12, "worst relative error = " + sci(worst));
}

void criterion_7() {
    lct::ParamSampler sampler(7);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(16, 160);
    double worst_norm = 0.0, worst_lin = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = len(rng);
        const Signal x = random_signal(n, static_cast<unsigned>(1000 + i));
        const Signal y = random_signal(n, static_cast<unsigned>(2000 + i));
        const LctParams m = sampler.next();
        const Signal fx = lct::dlct(x, m);
        worst_norm = std::max(worst_norm,
                              std::abs(std::sqrt(lct::energy(fx) / lct::energy(x)) - 1.0));
        const cplx alpha(0.7, -0.4), beta(-0.2, 1.1);
        std::vector<cplx> mix(static_cast<size_t>(n));
        for (size_t k = 0; k < mix.size(); ++k)
            mix[k] = alpha * x.samples()[k] + beta * y.samples()[k];
        const Signal lhs = lct::dlct(Signal(std::move(mix)), m);
        const Signal fy = lct::dlct(y, m);
        std::vector<cplx> rhs(static_cast<size_t>(n));
        for (size_t k = 0; k < rhs.size(); ++k)
            rhs[k] = alpha * fx.samples()[k] + beta * fy.samples()[k];
        worst_lin = std::max(worst_lin, oracle::rel_error(lhs.samples(), rhs));
    }
    const bool ok = worst_norm <= 1e-10 && worst_lin <= 1e-12;
    report(7, "unitarity and linearity", ok,
           "worst norm deviation = " + sci(worst_norm) + ", worst superposition error = " +
               sci(worst_lin));
}

void criterion_8() {
    const int n = 64;
    const Signal x = random_signal(n, 8);
    const Signal got = lct::direct_dlct(x, LctParams(0, 1, -1, 0));
    Signal want = lct::centered_dft(x);
    const cplx factor = std::polar(1.0 / std::sqrt(static_cast<double>(n)), -kPi / 4.0);
    for (auto& s : want.samples()) s *= factor;
    const double e_direct = oracle::rel_error(got.samples(), want.samples());

    const Signal g = lct::make_gaussian(0.5, 64);
    Signal dft_ref = lct::centered_dft(g);
    for (auto& s : dft_ref.samples()) s /= 8.0;
    const double e_frft = lct::nmse(dft_ref, lct::dfrft(g, kPi / 2.0));

    const bool ok = e_direct <= 1e-12 && e_frft <= 1e-10;
    report(8, "DFT reduction", ok,
           "direct relative error = " + sci(e_direct) + ", dfrft(pi/2) NMSE = " + sci(e_frft));
}

void criterion_9() {
    const LctParams ft(0, 1, -1, 0);
    const auto plan = lct::plan_box({8.0, 4.0}, ft, true);
    bool ok = 1.0 / plan.delta_max >= 12.0 - 1e-12 && plan.n_min >= 96;

    const auto direct = lct::plan_box({4.0, 2.0}, ft, true);
    const auto refined = lct::plan_refined({2, 1, -2, 1}, ft, true);
    ok = ok && refined.delta_max == direct.delta_max && refined.n_min == direct.n_min &&
         refined.oversampling_required == direct.oversampling_required;
    report(9, "sampling planner", ok,
           "1/delta_max = " + sci(1.0 / plan.delta_max) + ", n_min = " +
               std::to_string(plan.n_min) + ", rectangle plan matches box plan");
}

void criterion_10() {
    const LctParams m(0.6, 0.8, -0.5, 1.0);
    const std::vector<int> sizes{256, 512, 1024, 2048, 4096};
    std::vector<double> direct_times;
    double fast_4096 = 0.0, direct_4096 = 0.0;
    for (int n : sizes) {
        const Signal x = random_signal(n, static_cast<unsigned>(n));
        lct::dlct(x, m);  // warm the transform plan
        const double tf = time_best_of(5, [&] { lct::dlct(x, m); });
        const double td = time_best_of(2, [&] { lct::direct_dlct(x, m); });
        direct_times.push_back(td);
        if (n == 4096) {
            fast_4096 = tf;
            direct_4096 = td;
        }
    }
    const double speedup = direct_4096 / fast_4096;
    // least-squares slope of log(time) vs log(N)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int k = static_cast<int>(sizes.size());
    for (int i = 0; i < k; ++i) {
        const double lx = std::log(static_cast<double>(sizes[i]));
        const double ly = std::log(direct_times[static_cast<size_t>(i)]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const bool ok = speedup >= 10.0 && std::abs(slope - 2.0) <= 0.3;
    report(10, "complexity separation", ok,
           "speedup at N=4096 = " + sci(speedup) + ", direct-path log-log slope = " + sci(slope));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::cout << "acceptance: all 10 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
