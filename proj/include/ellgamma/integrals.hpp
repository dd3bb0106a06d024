#pragma once

#include <functional>
#include <optional>

#include "ellgamma/eval_report.hpp"
#include "ellgamma/series.hpp"

namespace ellgamma {

enum class IntegralKind {
    full_line_quadratic,         ///< int_-inf^inf (1 + a x^2)^{-nu}
    full_line_quadratic_linear,  ///< int_-inf^inf (1 + b x + a x^2)^{-nu}
    half_line_monomial,          ///< int_0^inf (1 + a x^m)^{-nu}
    half_line_general,           ///< int_0^inf (1 + b x + a x^m)^{-nu}
    hyper_elliptic3,             ///< int_0^inf (1 + a1 x + a2 x^2 + a3 x^3)^{-nu}
    incomplete_finite,           ///< int_0^upper (1 + b x + a x^m)^{-nu}
};

/// One integral to evaluate; only the fields relevant to `kind` are read.
struct IntegralSpec {
    IntegralKind kind = IntegralKind::full_line_quadratic;
    double a = 0.0;
    double b = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double nu = 0.0;
    double m = 0.0;
    double upper = 0.0;  ///< finite upper limit for incomplete_finite
};

enum class ForceMethod { automatic, series, quadrature };

/// F(a,0|nu,2) = sqrt(pi/a) Gamma(nu - 1/2)/Gamma(nu); a > 0, nu > 1/2.
EvalReport f_quadratic(double a, double nu);

/// F(a,b|nu,2) = sqrt(pi/a) Gamma(nu-1/2)/Gamma(nu) (1 - b^2/(4a))^{-(nu-1/2)};
/// a > 0, b^2 < 4a, nu > 1/2.
EvalReport f_quadratic_linear(double a, double b, double nu);

/// Phi(a,0|nu,m) = Gamma(1/m) Gamma(nu - 1/m) / (m a^{1/m} Gamma(nu));
/// a > 0, real m >= 1, nu > 1/m.
EvalReport phi_monomial(double a, double nu, double m);

/// Phi(a,b|nu,m) by the umbral series
///   (1/(m Gamma(nu))) sum_r (-1)^r/r! b^r a^{-(1+r)/m}
///       Gamma((m nu + (m-1) r - 1)/m) Gamma((1+r)/m),
/// with compensated summation and a quadrature fallback on cancellation or
/// non-convergence. The integrand 1 + b x + a x^m must be positive on
/// [0, inf); for b < 0 this is checked at the interior critical point.
EvalReport phi_general(double a, double b, double nu, double m,
                       const SeriesControl& ctl = {});

/// Cubic hyper-elliptic integral via the weighted-Hermite expansion
///   Phi({a_s}|nu;3) = (1/(3 Gamma(nu))) sum_n Htilde_n^{(2)}(-a1,-a2)/n!
///                         a3^{-(n+1)/3} Gamma((n+1)/3),
/// same summation policy and fallback as phi_general. a3 > 0, nu > 1/3,
/// and 1 + a1 x + a2 x^2 + a3 x^3 > 0 on [0, inf).
EvalReport phi_hyperelliptic3(double a1, double a2, double a3, double nu,
                              const SeriesControl& ctl = {});

/// Second-order peak approximation of int_-inf^inf [M f(x)]^{-nu} dx for a
/// smooth positive f with a non-degenerate global minimum at x0:
///   sqrt(2 pi) / (M f(x0))^nu * Gamma(nu-1/2)/Gamma(nu) * sqrt(f(x0)/f''(x0)).
/// f'' comes from `second_derivative` when given, otherwise from a central
/// difference with step max(1e-4, 1e-4 |x0|) (recorded in warnings).
EvalReport laplace_peak_approx(const std::function<double(double)>& f, double x0,
                               double M, double nu,
                               std::optional<double> second_derivative = std::nullopt);

/// The defining integrand of `spec` at x (used by the quadrature paths and
/// the compare subcommand).
double integrand(const IntegralSpec& spec, double x);

/// Dispatch to the operation matching spec.kind. ForceMethod::series skips
/// the quadrature fallback (the closed-form kinds keep their closed form);
/// ForceMethod::quadrature integrates the defining integrand directly.
EvalReport evaluate(const IntegralSpec& spec, const SeriesControl& ctl = {},
                    ForceMethod force = ForceMethod::automatic);

/// The independent quadrature path for spec (oracle side of two-path
/// validation).
EvalReport evaluate_quadrature(const IntegralSpec& spec, double tol);

}  // namespace ellgamma
