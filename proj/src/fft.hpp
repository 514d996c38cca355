#pragma once

#include <complex>
#include <vector>

namespace lct::detail {

// Unnormalized standard-order FFT, sum over n in [0,N): e^{-j 2 pi k n / N}.
void fft_forward(std::vector<std::complex<double>>& data);

// Unnormalized inverse (e^{+j 2 pi k n / N}); caller divides by N if needed.
void fft_backward(std::vector<std::complex<double>>& data);

}  // namespace lct::detail
