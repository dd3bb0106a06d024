#pragma once

#include "ellgamma/series.hpp"

namespace ellgamma {

/// Degree/order pair of a generalized (Gould-Hopper) Hermite polynomial
/// H_n^{(m)}(x, y). The order m is an integer: the summation limit
/// floor(n/m) requires it, even though the integral transforms elsewhere in
/// the library accept real m.
struct PolyIndex {
    int n = 0;  ///< degree, 0 <= n <= kMaxHermiteDegree
    int m = 1;  ///< superscript order, m >= 1
};

/// Beyond this degree the floating-point factorial ratios have lost all
/// precision and nothing in this library needs the values.
inline constexpr int kMaxHermiteDegree = 300;

/// H_n^{(m)}(x, y) = n! sum_{r=0}^{floor(n/m)} x^{n-mr} y^r / ((n-mr)! r!).
/// The factorial ratio is folded into each term, so intermediates stay the
/// size of the term itself; exact for integer x, y while representable.
double hermite_gh(const PolyIndex& idx, double x, double y);

/// H_n^{(m)}(x, y) / n!, i.e. the coefficient of t^n in exp(x t + y t^m),
/// computed by the generating-function recurrence
///   (k+1) c_{k+1} = x c_k + m y c_{k+1-m}.
/// Stays finite far beyond the degrees where hermite_gh overflows.
double hermite_gh_scaled(const PolyIndex& idx, double x, double y);

/// Partial sum sum_{n=0}^{n_last} t^n/n! H_n^{(m)}(x, y) of the generating
/// function of exp(x t + y t^m). The truncation estimate is the first
/// omitted term |t^{N+1}/(N+1)! H_{N+1}|.
SeriesValue hermite_gf_partial(double t, double x, double y, int m, int n_last,
                               double tol = 1e-10);

/// Gamma-weighted polynomial used by the cubic hyper-elliptic expansion:
///   n! sum_{r=0}^{floor(n/2)} x^{n-2r} y^r / ((n-2r)! r!)
///      * Gamma((2n + 3(nu - r) - 1)/3).
/// Throws when a weight argument lands on a Gamma pole, naming the r.
double hermite_weighted(int n, double x, double y, double nu);

/// hermite_weighted / n!, evaluated term-wise in log space so the Gamma
/// growth and factorial decay cancel before exponentiation. No degree cap.
double hermite_weighted_scaled(int n, double x, double y, double nu);

}  // namespace ellgamma
