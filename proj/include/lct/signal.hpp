#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lct/errors.hpp"

namespace lct {

using cplx = std::complex<double>;

// Finite complex sequence with centered index convention: index n runs over
// [-N/2, N/2-1] for even N and [-(N-1)/2, (N-1)/2] for odd N, stored in
// ascending-n order. Carries a positive sampling period delta, defaulting to
// sqrt(1/N), the period under which discrete and continuous parameter
// matrices coincide.
class Signal {
  public:
    // delta <= 0 (including the default 0) selects sqrt(1/N).
    explicit Signal(std::vector<cplx> samples, double delta = 0.0)
        : samples_(std::move(samples)) {
        if (samples_.empty()) throw InvalidSignal("signal must have at least one sample");
        for (const cplx& s : samples_)
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
                throw InvalidSignal("signal contains non-finite samples");
        if (delta == 0.0) {
            delta_ = std::sqrt(1.0 / static_cast<double>(samples_.size()));
        } else {
            if (!std::isfinite(delta) || delta < 0.0)
                throw InvalidSignal("delta must be positive");
            delta_ = delta;
        }
    }

    int size() const { return static_cast<int>(samples_.size()); }
    double delta() const { return delta_; }

    // Smallest stored centered index: -N/2 for even N, -(N-1)/2 for odd N.
    int index_min() const { return -(size() / 2); }
    int index_max() const { return index_min() + size() - 1; }

    // Access by centered index n in [index_min(), index_max()].
    const cplx& at(int n) const { return samples_[static_cast<size_t>(n - index_min())]; }
    cplx& at(int n) { return samples_[static_cast<size_t>(n - index_min())]; }

    const std::vector<cplx>& samples() const { return samples_; }
    std::vector<cplx>& samples() { return samples_; }

  private:
    std::vector<cplx> samples_;
    double delta_;
};

// Squared l2 norm, sum |x[n]|^2.
inline double energy(const Signal& x) {
    double e = 0.0;
    for (const cplx& s : x.samples()) e += std::norm(s);
    return e;
}

}  // namespace lct
