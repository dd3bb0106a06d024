#include "ellgamma/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellgamma {

namespace {

void check_no_constant(const TruncSeries& u, const char* who) {
    if (u.c.empty() || u.c[0] != 0.0)
        throw std::domain_error(std::string(who) + ": u must have zero constant term");
}

}  // namespace

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k)
        out.c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return out;
}

TruncSeries ts_scale(const TruncSeries& a, double s) {
    TruncSeries out = a;
    for (double& v : out.c) v *= s;
    return out;
}

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
        out.c[static_cast<size_t>(k)] = s;
    }
    return out;
}

TruncSeries ts_derivative(const TruncSeries& a) {
    if (a.order() < 1) return TruncSeries(0);
    TruncSeries out(a.order() - 1);
    for (int k = 1; k <= a.order(); ++k)
        out.c[static_cast<size_t>(k) - 1] = k * a.coeff(k);
    return out;
}

TruncSeries ts_integral(const TruncSeries& a) {
    TruncSeries out(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k)
        out.c[static_cast<size_t>(k) + 1] = a.coeff(k) / (k + 1);
    return out;
}

double ts_eval(const TruncSeries& a, double x) {
    double v = 0.0;
    for (int k = a.order(); k >= 0; --k) v = v * x + a.coeff(k);
    return v;
}

TruncSeries series_pow_binomial(const TruncSeries& u, double nu) {
    check_no_constant(u, "series_pow_binomial");
    const int N = u.order();
    TruncSeries out(N);
    out.c[0] = 1.0;
    TruncSeries upow(N);
    upow.c[0] = 1.0;
    double binom = 1.0;  // binom(-nu, k)
    for (int k = 1; k <= N; ++k) {
        upow = ts_mul(upow, u);
        binom *= (-nu - (k - 1)) / k;
        for (int j = k; j <= N; ++j)
            out.c[static_cast<size_t>(j)] += binom * upow.coeff(j);
    }
    return out;
}

TruncSeries ts_exp(const TruncSeries& u) {
    check_no_constant(u, "ts_exp");
    const int N = u.order();
    TruncSeries e(N);
    e.c[0] = 1.0;
    for (int k = 0; k < N; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += (j + 1) * u.coeff(j + 1) * e.coeff(k - j);
        e.c[static_cast<size_t>(k) + 1] = s / (k + 1);
    }
    return e;
}

}  // namespace ellgamma
