#pragma once

#include <functional>

namespace ellgamma {

/// Outcome of one adaptive quadrature. `converged` implies
/// abs_err_est <= the requested tolerance.
struct QuadResult {
    double value = 0.0;
    double abs_err_est = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive evaluation of int_0^inf f, via a double-exponential variable
/// change that also absorbs integrable endpoint singularities at 0.
QuadResult quad_half_line(const std::function<double(double)>& f, double tol);

/// Adaptive evaluation of int_{-inf}^inf f.
QuadResult quad_full_line(const std::function<double(double)>& f, double tol);

/// Adaptive evaluation of int_lo^hi f, lo <= hi.
QuadResult quad_finite(const std::function<double(double)>& f, double lo,
                       double hi, double tol);

}  // namespace ellgamma
