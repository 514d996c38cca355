#include "lct/dlct.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>

#include "lct/kernels.hpp"

namespace lct {

namespace {

constexpr double kPi = std::numbers::pi;

const cplx kSqrtMinusJ = std::polar(1.0, -kPi / 4.0);
const cplx kSqrtPlusJ = std::polar(1.0, kPi / 4.0);

Signal scaled(Signal x, cplx factor) {
    for (cplx& s : x.samples()) s *= factor;
    return x;
}

// Index reversal n -> -n on the centered range. For even N the index -N/2
// has no stored partner +N/2; modulo N it maps back to itself.
Signal reversed(const Signal& x) {
    const int n_samples = x.size();
    std::vector<cplx> out(static_cast<size_t>(n_samples));
    for (int k = x.index_min(); k <= x.index_max(); ++k) {
        int src = -k;
        if (src > x.index_max()) src -= n_samples;
        out[static_cast<size_t>(k - x.index_min())] = x.at(src);
    }
    return Signal(std::move(out), x.delta());
}

// B = 0, A = D = -1: sign reversal composed with a chirp. The constant phase
// depends on the sign of C so that the transform with (-1,0;-C,-1) undoes the
// one with (-1,0;C,-1), and so that the pure parity case C = 0 squares to the
// identity.
Signal negate_branch(const Signal& x, double c) {
    cplx phase{1.0, 0.0};
    if (c > 0.0) phase = cplx(0.0, 1.0);
    else if (c < 0.0) phase = cplx(0.0, -1.0);
    Signal out = chirp_mul(reversed(x), ChirpRate{-c});
    return scaled(std::move(out), phase);
}

}  // namespace

Signal dlct(const Signal& x, const LctParams& m) {
    const double big_a = m.a(), big_b = m.b(), big_c = m.c(), big_d = m.d();
    if (is_b_zero(m)) {
        if (std::abs(big_a - 1.0) < 1e-12 && std::abs(big_d - 1.0) < 1e-12)
            return chirp_mul(x, ChirpRate{big_c});
        if (std::abs(big_a + 1.0) < 1e-12 && std::abs(big_d + 1.0) < 1e-12)
            return negate_branch(x, big_c);
        if (std::abs(big_a) > std::abs(big_d)) {
            Signal t = chirp_mul(x, ChirpRate{(big_c + 1.0) / big_d});
            t = centered_dft(t);
            t = chirp_mul(t, ChirpRate{big_d});
            t = centered_idft(t);
            t = chirp_mul(t, ChirpRate{1.0 / big_d});
            t = centered_dft(t);
            return scaled(std::move(t), kSqrtMinusJ);
        }
        Signal t = centered_idft(x);
        t = chirp_mul(t, ChirpRate{-1.0 / big_a});
        t = centered_dft(t);
        t = chirp_mul(t, ChirpRate{-big_a});
        t = centered_idft(t);
        t = chirp_mul(t, ChirpRate{(big_c - 1.0) / big_a});
        return scaled(std::move(t), kSqrtPlusJ);
    }
    const double scale = std::max({std::abs(big_a), std::abs(big_d), 1.0});
    if (std::abs(big_b) < 1e-6 * scale)
        std::cerr << "lct: warning: |B| = " << std::abs(big_b)
                  << " is close to zero; chirp rates (A-1)/B, (D-1)/B are "
                     "numerically ill-conditioned\n";
    Signal t = chirp_mul(x, ChirpRate{(big_a - 1.0) / big_b});
    t = centered_dft(t);
    t = chirp_mul(t, ChirpRate{-big_b});
    t = centered_idft(t);
    return chirp_mul(t, ChirpRate{(big_d - 1.0) / big_b});
}

Signal idlct(const Signal& x, const LctParams& m) { return dlct(x, inverse(m)); }

Signal dfrft(const Signal& x, double alpha) {
    double reduced = std::fmod(alpha, 2.0 * kPi);
    if (reduced < 0.0) reduced += 2.0 * kPi;
    const cplx phase = std::polar(1.0, alpha / 2.0);
    if (reduced == 0.0) return scaled(Signal(x), phase);
    const LctParams rot(std::cos(reduced), std::sin(reduced), -std::sin(reduced),
                        std::cos(reduced));
    return scaled(dlct(x, rot), phase);
}

Signal dfresnel(const Signal& x, double lambda, double z) {
    if (!(lambda > 0.0)) throw Error("dfresnel requires lambda > 0");
    Signal t = centered_dft(x);
    t = chirp_mul(t, ChirpRate{-lambda * z});
    t = centered_idft(t);
    return scaled(std::move(t), std::polar(1.0, kPi * z / lambda));
}

Signal dscale(const Signal& x, double sigma) {
    if (sigma == 0.0 || !std::isfinite(sigma)) throw Error("dscale requires nonzero sigma");
    if (sigma == 1.0) return x;
    return dlct(x, LctParams(sigma, 0.0, 0.0, 1.0 / sigma));
}

}  // namespace lct
