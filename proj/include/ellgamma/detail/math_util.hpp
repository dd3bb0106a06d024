#pragma once

#include <cmath>

namespace ellgamma::detail {

/// x^k for k >= 0 by repeated squaring. pow_int(0, 0) == 1; exact for
/// integer-valued x while every intermediate stays below 2^53.
inline double pow_int(double x, int k) {
    double r = 1.0;
    for (double b = x; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

/// True when x sits on (or within rounding distance of) a pole of Gamma,
/// i.e. a non-positive integer.
inline bool gamma_pole(double x) {
    if (x > 0.0) return false;
    return std::abs(x - std::nearbyint(x)) < 1e-12 * std::max(1.0, std::abs(x));
}

inline bool near_integer(double x) {
    return std::abs(x - std::nearbyint(x)) < 1e-12 * std::max(1.0, std::abs(x));
}

/// log|Gamma(x)| with the sign of Gamma(x) returned through `sign`.
/// Thread-safe (no global signgam).
inline double log_abs_gamma(double x, int& sign) { return ::lgamma_r(x, &sign); }

/// Gamma(p)/Gamma(q) for p, q > 0 without overflowing the intermediates.
inline double gamma_ratio(double p, double q) {
    if (p < 170.0 && q < 170.0) return std::tgamma(p) / std::tgamma(q);
    return std::exp(std::lgamma(p) - std::lgamma(q));
}

/// Rising factorial (nu)_k = nu (nu+1) ... (nu+k-1).
inline double rising_factorial(double nu, int k) {
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= nu + j;
    return v;
}

inline double factorial(int n) {
    double v = 1.0;
    for (int j = 2; j <= n; ++j) v *= j;
    return v;
}

}  // namespace ellgamma::detail
