#pragma once

#include <initializer_list>
#include <vector>

namespace ellgamma {

/// Dense truncated power series c[0] + c[1] x + ... + c[N] x^N. Arithmetic
/// on two series truncates at the smaller order. Deliberately plain: this
/// is the independent Taylor-coefficient oracle, so it shares no summation
/// machinery with the series evaluators it checks.
struct TruncSeries {
    std::vector<double> c;

    TruncSeries() = default;
    explicit TruncSeries(int order) : c(static_cast<size_t>(order) + 1, 0.0) {}
    TruncSeries(std::initializer_list<double> init) : c(init) {}

    int order() const { return static_cast<int>(c.size()) - 1; }
    double coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : 0.0;
    }
};

/// Default truncation order for the oracle paths; covers every acceptance
/// comparison with margin while staying exact in double precision.
inline constexpr int kDefaultOracleOrder = 16;

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_scale(const TruncSeries& a, double s);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_derivative(const TruncSeries& a);
/// Antiderivative with zero constant term.
TruncSeries ts_integral(const TruncSeries& a);
double ts_eval(const TruncSeries& a, double x);

/// (1 + u)^{-nu} = sum_k binom(-nu, k) u^k composed by truncated polynomial
/// multiplication; u must have zero constant term.
TruncSeries series_pow_binomial(const TruncSeries& u, double nu);

/// exp(u) for u with zero constant term, by the coefficient recurrence of
/// e' = u' e.
TruncSeries ts_exp(const TruncSeries& u);

}  // namespace ellgamma
