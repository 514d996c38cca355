#pragma once

#include "lct/params.hpp"
#include "lct/signal.hpp"

namespace lct {

// Fast DLCT, O(N log N). For B != 0 this is the CM-CC-CM path
//   X = C_{(D-1)/B} F^ C_{-B} F C_{(A-1)/B} x,
// with F the unnormalized centered DFT and F^ its 1/N inverse. For B = 0 the
// two paired decompositions are dispatched on |A| vs |D|:
//   |A| > |D|: X = sqrt(-j) F C_{1/D} F^ C_D F C_{(C+1)/D} x
//   |A| < |D|: X = sqrt(j)  C_{(C-1)/A} F^ C_{-A} F C_{-1/A} F^ x
// B = 0 with A = D = 1 is the pure chirp multiplication C_C; A = D = -1 is
// index reversal composed with C_{-C} and constant phase j. Forward and
// inverse always land on complementary forms, so the round trip cancels
// factor by factor and reversibility is exact up to round-off.
Signal dlct(const Signal& x, const LctParams& m);

// Forward DLCT with M^{-1}; undoes dlct(x, m) perfectly.
Signal idlct(const Signal& x, const LctParams& m);

// Discrete fractional Fourier transform of angle alpha:
// e^{j alpha/2} times the DLCT with the rotation matrix of alpha. The angle
// is reduced modulo 2 pi for branch selection; the phase uses the caller's
// unreduced alpha.
Signal dfrft(const Signal& x, double alpha);

// Discrete Fresnel transform: e^{j pi z / lambda} F^ C_{-lambda z} F x.
Signal dfresnel(const Signal& x, double lambda, double z);

// Discrete scaling by sigma != 0, using the |sigma|>1 / |sigma|<1 paired
// decompositions so that dscale(dscale(x, s), 1/s) round-trips exactly.
Signal dscale(const Signal& x, double sigma);

}  // namespace lct
