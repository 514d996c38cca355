#pragma once

#include "lct/params.hpp"
#include "lct/signal.hpp"

namespace lct {

// out[n] = e^{j pi xi n^2 / N} x[n] over the centered index range.
Signal chirp_mul(const Signal& x, ChirpRate xi);

// Unnormalized forward sum X[m] = sum_n x[n] e^{-j 2 pi m n / N}, both
// indices centered. Computed by modulo-N rotation around a standard FFT,
// which is exact because the kernel depends only on m*n mod N.
Signal centered_dft(const Signal& x);

// x[k] = (1/N) sum_m X[m] e^{+j 2 pi m k / N}; exact inverse of centered_dft.
Signal centered_idft(const Signal& x);

// O(N^2) direct-summation DLCT, the verification oracle and complexity
// baseline. M holds the discrete (A,B;C,D); requires B != 0.
//   X[k] = sqrt(1/(jBN)) sum_n e^{j(2pi/N)(D k^2/(2B) - kn/B + A n^2/(2B))} x[n]
// with the principal branch of the square root.
Signal direct_dlct(const Signal& x, const LctParams& m);

// B is treated as exactly zero when |B| < 1e-12 * max(|A|,|D|,1).
bool is_b_zero(const LctParams& m);

}  // namespace lct
