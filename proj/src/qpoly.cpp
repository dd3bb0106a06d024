#include "ellgamma/qpoly.hpp"

#include <cmath>
#include <stdexcept>

#include "ellgamma/detail/math_util.hpp"

namespace ellgamma {

namespace {

void check_params(const QPolyParams& p) {
    if (!(p.nu > 0.0)) throw std::domain_error("qpoly: requires nu > 0");
    if (p.m < 1) throw std::domain_error("qpoly: requires m >= 1");
}

void check_series_domain(const QPolyParams& p, double x) {
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("g_series: the expansion requires |x| < 1");
    if (std::abs(p.b) > std::abs(p.a))
        throw std::domain_error("g_series: the expansion requires |b| <= |a|");
}

// x^n/n! Q_n(a,b|nu,m) = (-x)^n sum_r (-1)^{(m-1)r} (nu)_{n-(m-1)r}
//   b^{n-mr} a^r / ((n-mr)! r!).
// Each inner term interleaves the rising product with the two factorial
// ratios (the factor counts match exactly: k = nb + r), so intermediates
// stay near the final term magnitude even at large n.
double scaled_q_term(const QPolyParams& p, double x, int n) {
    CompensatedSum inner;
    for (int r = 0; r <= n / p.m; ++r) {
        const int k = n - (p.m - 1) * r;
        const int nb = n - p.m * r;
        double v = 1.0;
        int jb = 1, ja = 1;
        for (int j = 1; j <= k; ++j) {
            v *= p.nu + (j - 1);
            if (jb <= nb) v *= p.b / jb++;
            if (ja <= r) v *= p.a / ja++;
        }
        if (((p.m - 1) * r) & 1) v = -v;
        inner.add(v);
    }
    return inner.value() * detail::pow_int(-x, n);
}

}  // namespace

QPolyCoeffs q_poly_coeffs(int n, const QPolyParams& p) {
    if (n < 0) throw std::domain_error("q_poly: requires n >= 0");
    check_params(p);
    QPolyCoeffs out{n, {}};
    double comb = 1.0;  // n!/((n-mr)! r!)
    double apow = 1.0;
    for (int r = 0; r <= n / p.m; ++r) {
        const int k = n - (p.m - 1) * r;
        double term = comb * detail::pow_int(p.b, n - p.m * r) * apow *
                      detail::rising_factorial(p.nu, k);
        if (((p.m - 1) * r) & 1) term = -term;
        if (n & 1) term = -term;
        out.terms.emplace_back(r, term);
        apow *= p.a;
        for (int j = 0; j < p.m; ++j) comb *= static_cast<double>(n - p.m * r - j);
        comb /= r + 1.0;
    }
    return out;
}

double q_poly(int n, const QPolyParams& p) {
    CompensatedSum acc;
    for (const auto& [r, term] : q_poly_coeffs(n, p).terms) acc.add(term);
    return acc.value();
}

SeriesValue g_series(const QPolyParams& p, double x, const SeriesControl& ctl) {
    check_params(p);
    check_series_domain(p, x);
    return sum_series([&](int n) { return scaled_q_term(p, x, n); }, ctl);
}

SeriesValue incomplete_integral(const QPolyParams& p, double x,
                                const SeriesControl& ctl) {
    check_params(p);
    check_series_domain(p, x);
    return sum_series(
        [&](int n) { return scaled_q_term(p, x, n) * x / (n + 1); }, ctl);
}

}  // namespace ellgamma
