#pragma once

#include <utility>
#include <vector>

#include "ellgamma/series.hpp"

namespace ellgamma {

/// Parameters of G(a,b;x|nu,m) = (1 + b x + a x^m)^{-nu} and of the
/// Q-polynomials in its Taylor expansion.
struct QPolyParams {
    double a = 1.0;
    double b = 0.0;
    double nu = 1.0;  ///< must be > 0
    int m = 2;        ///< integer >= 1
};

/// Exact term list of one Q-polynomial: (r, signed term value) pairs whose
/// sum reassembles q_poly(n, p). floor(n/m) + 1 entries.
struct QPolyCoeffs {
    int n = 0;
    std::vector<std::pair<int, double>> terms;
};

/// Q_n(a,b|nu,m) = (-1)^n n!/Gamma(nu) sum_{r=0}^{floor(n/m)} (-1)^{(m-1)r}
///   Gamma(n-(m-1)r+nu) b^{n-mr} a^r / ((n-mr)! r!),
/// with every Gamma(nu+k)/Gamma(nu) evaluated as the rising product
/// (nu)_k, never as a quotient of two large Gamma values.
double q_poly(int n, const QPolyParams& p);

/// The individual signed terms of Q_n, for the oracle comparison path.
QPolyCoeffs q_poly_coeffs(int n, const QPolyParams& p);

/// Series evaluation of G(a,b;x|nu,m) = sum_n x^n/n! Q_n(a,b|nu,m).
/// Valid for |x| < 1 and |b| <= |a| (throws std::domain_error outside);
/// stops by the two-consecutive-small-terms rule or the term cap.
SeriesValue g_series(const QPolyParams& p, double x, const SeriesControl& ctl = {});

/// Incomplete integral int_0^x G(a,b;xi|nu,m) dxi
///   = sum_n x^{n+1}/(n+1)! Q_n(a,b|nu,m), same domain and truncation
/// policy as g_series.
SeriesValue incomplete_integral(const QPolyParams& p, double x,
                                const SeriesControl& ctl = {});

}  // namespace ellgamma
