#pragma once

#include <cmath>
#include <string>

#include "lct/errors.hpp"

namespace lct {

// Tolerance on |a*d - b*c - 1| accepted at construction. Loose enough for
// user-entered decimals, tight enough to catch real mistakes.
inline constexpr double kDetTolerance = 1e-9;

// Real 2x2 unit-determinant parameter matrix (a,b;c,d). The same type holds
// the continuous-domain (a,b;c,d) and the discrete-domain (A,B;C,D); they
// coincide when the sampling period is sqrt(1/N).
class LctParams {
  public:
    LctParams(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
        if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
            throw DeterminantError("parameter matrix has non-finite entries");
        const double det = a * d - b * c;
        if (std::abs(det - 1.0) > kDetTolerance)
            throw DeterminantError("parameter matrix determinant is " + std::to_string(det) +
                                   ", expected 1");
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

  private:
    double a_, b_, c_, d_;
};

inline LctParams make_params(double a, double b, double c, double d) {
    return LctParams(a, b, c, d);
}

// M^{-1} = (d,-b;-c,a); exact in exact arithmetic since det M = 1.
inline LctParams inverse(const LctParams& m) {
    return LctParams(m.d(), -m.b(), -m.c(), m.a());
}

// Matrix product m1 * m2; the cascade "apply m2 first, then m1".
inline LctParams compose(const LctParams& m1, const LctParams& m2) {
    return LctParams(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                     m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

// (A,B;C,D) = (a, b/(N delta^2); c N delta^2, d). Identity when delta = sqrt(1/N).
inline LctParams map_continuous_to_discrete(const LctParams& m, int n, double delta) {
    const double nd2 = static_cast<double>(n) * delta * delta;
    return LctParams(m.a(), m.b() / nd2, m.c() * nd2, m.d());
}

// Discrete chirp rate xi in the diagonal chirp e^{j pi xi n^2 / N}.
struct ChirpRate {
    double xi;
};

}  // namespace lct
