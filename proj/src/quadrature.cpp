#include "ellgamma/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ellgamma {

namespace {

// Below this the double-exponential engines just run to their maximum
// refinement depth anyway.
constexpr double kMinTol = 1e-15;

// The engines terminate on a *relative* error estimate; ask for two extra
// digits so the absolute estimate lands safely under the caller's tolerance.
// One more refinement level is nearly free at double-exponential convergence.
double internal_tol(double tol) { return std::max(0.01 * tol, kMinTol); }

void check_tol(double tol) {
    if (!(tol > 0.0)) throw std::domain_error("quadrature: tol must be > 0");
}

QuadResult finish(double value, double rel_err, double l1, long evals, double tol) {
    QuadResult out;
    out.value = value;
    out.abs_err_est = rel_err * std::max(l1, std::abs(value));
    out.evaluations = evals;
    out.converged = std::isfinite(value) && out.abs_err_est <= tol;
    return out;
}

QuadResult failed(long evals) {
    return {std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::infinity(), evals, false};
}

}  // namespace

QuadResult quad_half_line(const std::function<double(double)>& f, double tol) {
    check_tol(tol);
    boost::math::quadrature::exp_sinh<double> integrator;  // fresh workspace per call
    long evals = 0;
    auto g = [&](double t) {
        ++evals;
        return f(t);
    };
    double err = 0.0, l1 = 0.0;
    double v = 0.0;
    try {
        v = integrator.integrate(g, internal_tol(tol), &err, &l1);
    } catch (const std::exception&) {
        return failed(evals);
    }
    return finish(v, err, l1, evals, tol);
}

QuadResult quad_full_line(const std::function<double(double)>& f, double tol) {
    check_tol(tol);
    boost::math::quadrature::sinh_sinh<double> integrator;
    long evals = 0;
    auto g = [&](double t) {
        ++evals;
        return f(t);
    };
    double err = 0.0, l1 = 0.0;
    double v = 0.0;
    try {
        v = integrator.integrate(g, internal_tol(tol), &err, &l1);
    } catch (const std::exception&) {
        return failed(evals);
    }
    return finish(v, err, l1, evals, tol);
}

QuadResult quad_finite(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
    check_tol(tol);
    if (lo > hi) throw std::domain_error("quad_finite: requires lo <= hi");
    if (lo == hi) return {0.0, 0.0, 0, true};
    boost::math::quadrature::tanh_sinh<double> integrator;
    long evals = 0;
    auto g = [&](double t) {
        ++evals;
        return f(t);
    };
    double err = 0.0, l1 = 0.0;
    double v = 0.0;
    try {
        v = integrator.integrate(g, lo, hi, internal_tol(tol), &err, &l1);
    } catch (const std::exception&) {
        return failed(evals);
    }
    return finish(v, err, l1, evals, tol);
}

}  // namespace ellgamma
