#include "lct/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace lct {

namespace {
constexpr double kPi = std::numbers::pi;
}

Signal chirp_mul(const Signal& x, ChirpRate xi) {
    const int n_samples = x.size();
    std::vector<cplx> out(x.samples());
    const double rate = kPi * xi.xi / static_cast<double>(n_samples);
    for (int n = x.index_min(); n <= x.index_max(); ++n) {
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        out[static_cast<size_t>(n - x.index_min())] *= std::polar(1.0, rate * nn);
    }
    return Signal(std::move(out), x.delta());
}

Signal centered_dft(const Signal& x) {
    const int n_samples = x.size();
    const int n0 = x.index_min();
    std::vector<cplx> std_order(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const int n = n0 + i;
        const int j = ((n % n_samples) + n_samples) % n_samples;
        std_order[static_cast<size_t>(j)] = x.samples()[static_cast<size_t>(i)];
    }
    detail::fft_forward(std_order);
    std::vector<cplx> out(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const int m = n0 + i;
        const int j = ((m % n_samples) + n_samples) % n_samples;
        out[static_cast<size_t>(i)] = std_order[static_cast<size_t>(j)];
    }
    return Signal(std::move(out), x.delta());
}

Signal centered_idft(const Signal& x) {
    const int n_samples = x.size();
    const int n0 = x.index_min();
    std::vector<cplx> std_order(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const int m = n0 + i;
        const int j = ((m % n_samples) + n_samples) % n_samples;
        std_order[static_cast<size_t>(j)] = x.samples()[static_cast<size_t>(i)];
    }
    detail::fft_backward(std_order);
    std::vector<cplx> out(static_cast<size_t>(n_samples));
    const double scale = 1.0 / static_cast<double>(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const int k = n0 + i;
        const int j = ((k % n_samples) + n_samples) % n_samples;
        out[static_cast<size_t>(i)] = std_order[static_cast<size_t>(j)] * scale;
    }
    return Signal(std::move(out), x.delta());
}

bool is_b_zero(const LctParams& m) {
    const double scale = std::max({std::abs(m.a()), std::abs(m.d()), 1.0});
    return std::abs(m.b()) < 1e-12 * scale;
}

Signal direct_dlct(const Signal& x, const LctParams& m) {
    if (is_b_zero(m)) throw ZeroBError("direct_dlct requires B != 0");
    const int n_samples = x.size();
    const double nd = static_cast<double>(n_samples);
    const double big_a = m.a(), big_b = m.b(), big_d = m.d();
    // Principal square root of 1/(jBN).
    const cplx amp = std::sqrt(1.0 / (cplx(0.0, 1.0) * big_b * nd));
    std::vector<cplx> out(static_cast<size_t>(n_samples));
    const double w = 2.0 * kPi / nd;
    for (int k = x.index_min(); k <= x.index_max(); ++k) {
        const double kk = static_cast<double>(k);
        cplx acc{0.0, 0.0};
        for (int n = x.index_min(); n <= x.index_max(); ++n) {
            const double nn = static_cast<double>(n);
            const double phase =
                w * (big_d * kk * kk / (2.0 * big_b) - kk * nn / big_b +
                     big_a * nn * nn / (2.0 * big_b));
            acc += std::polar(1.0, phase) * x.at(n);
        }
        out[static_cast<size_t>(k - x.index_min())] = amp * acc;
    }
    return Signal(std::move(out), x.delta());
}

}  // namespace lct
