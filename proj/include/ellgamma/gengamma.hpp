#pragma once

#include "ellgamma/eval_report.hpp"
#include "ellgamma/series.hpp"

namespace ellgamma {

/// Arguments of the two-variable generalized Gamma function
///   Gamma(x1, xm | nu; m) = int_0^inf exp(-x1 t - xm t^m) t^{nu-1} dt.
/// All parameters are real; xm > 0 keeps the integral convergent for any
/// real x1 once m > 1 (m = 1 additionally needs x1 + xm > 0).
struct GammaArgs2 {
    double x1 = 0.0;
    double xm = 1.0;  ///< must be > 0
    double nu = 1.0;
    double m = 2.0;  ///< real, >= 1
};

/// Arguments of the three-variable generalized Gamma function
///   Gamma(x1, x2, x3 | nu) = int_0^inf exp(-x1 t - x2 t^2 - x3 t^3) t^{nu-1} dt.
struct GammaArgs3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 1.0;  ///< must be > 0
    double nu = 1.0;
};

/// Series expansion
///   Gamma(x1, xm | nu; m) = (1/m) sum_r (-1)^r/r! x1^r xm^{-(nu+r)/m}
///                                  Gamma((nu+r)/m).
/// For integer m the terms are grouped by r mod m, so consecutive terms of
/// one group differ by integer Gamma shifts and everything updates through
/// short products of moderate factors; non-integer m falls back to a
/// per-term log-space evaluation.
SeriesValue gengamma2_series(const GammaArgs2& g, const SeriesControl& ctl = {});

/// The defining integral by adaptive quadrature (the oracle path of the
/// two-path validation). Requires nu > 0; throws when the requested
/// tolerance cannot be met.
EvalReport gengamma2_quad(const GammaArgs2& g, double tol = 1e-10);

/// Series-first evaluation with the documented quadrature fallback: the
/// fallback fires preemptively past kSeriesQuadCrossover and reactively on
/// non-convergence or a raised cancellation flag (warnings say which).
EvalReport gengamma2(const GammaArgs2& g, const SeriesControl& ctl = {});

/// Three-variable expansion in generalized Hermite polynomials:
///   Gamma(x1,x2,x3|nu) = (1/3) sum_r H_r^{(2)}(-x1,-x2)/r!
///                              x3^{-(r+nu)/3} Gamma((r+nu)/3),
/// with H_r^{(2)}/r! advanced by the generating-function recurrence.
SeriesValue gengamma3(const GammaArgs3& g, const SeriesControl& ctl = {});

/// Hermite function of negative order nu < 0,
///   H_nu(x) = Gamma(2x, 1 | -nu; 2) / Gamma(-nu)
///           = (1/Gamma(-nu)) int_0^inf exp(-2xt - t^2) t^{-nu-1} dt.
double hermite_fn(double nu, double x);

/// Order-m extension H_nu^{(m)}(x1, xm) = Gamma(x1, xm | -nu; m)/Gamma(-nu),
/// nu < 0.
double hermite_fn_m(double nu, double x1, double xm, double m);

/// H_{-(n+1)}^{(m)}(x1, xm) = (1/n!) int_0^inf t^n exp(-x1 t - xm t^m) dt,
/// n >= 0, via the generalized Gamma evaluator at index nu = n + 1.
double h_minus_order(int n, double x1, double xm, double m);

/// Cross-check route for h_minus_order through the derivative identity
///   H_{-(n+1)}^{(m)} = (-1)^n/n! d^n/dx1^n H_{-1}^{(m)},
/// with the derivative taken by an n-th order central difference. Accuracy
/// decays quickly with n; intended for low-order validation only.
double h_minus_order_deriv(int n, double x1, double xm, double m);

/// Partial sum of the generating function
///   sum_n z^n H_{-n-1}^{(m)}(x1, xm) = H_{-1}^{(m)}(x1 - z, xm).
SeriesValue h_minus1_gf_partial(double z, double x1, double xm, double m,
                                int n_last, double tol = 1e-10);

/// Error-function closed form of H_{-1}^{(2)}:
///   int_0^inf exp(-x1 t - x2 t^2) dt
///     = (1/2) sqrt(pi/x2) exp(x1^2/(4 x2)) erfc(x1/(2 sqrt(x2))).
double h_minus1_erf_form(double x1, double x2);

}  // namespace ellgamma
