#include "ellgamma/gengamma.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellgamma/detail/math_util.hpp"
#include "ellgamma/quadrature.hpp"

namespace ellgamma {

namespace {

void check_args2(const GammaArgs2& g) {
    if (!(g.xm > 0.0)) throw std::domain_error("gengamma2: requires x_m > 0");
    if (!(g.m >= 1.0)) throw std::domain_error("gengamma2: requires m >= 1");
    if (g.m == 1.0 && !(g.x1 + g.xm > 0.0))
        throw std::domain_error("gengamma2: the m = 1 integral needs x1 + x_m > 0");
}

void check_series_arg(double c, int r) {
    if (detail::gamma_pole(c))
        throw std::domain_error("gengamma2_series: Gamma pole at term r = " +
                                std::to_string(r));
}

// Term generator for integer m. Terms are grouped by s = r mod m: within a
// group the Gamma argument (nu+r)/m advances by exactly 1 per step, so the
// whole update is a short product of moderate factors and the terms carry
// no lgamma round-off.
class IntOrderTerms {
  public:
    explicit IntOrderTerms(const GammaArgs2& g)
        : g_(g), mi_(static_cast<int>(std::lround(g.m))), cur_(static_cast<size_t>(mi_)) {}

    double operator()(int r) {
        const int s = r % mi_;
        if (r < mi_) {
            const double c = (g_.nu + s) / g_.m;
            check_series_arg(c, r);
            cur_[static_cast<size_t>(s)] = detail::pow_int(-g_.x1, s) /
                                           detail::factorial(s) * std::tgamma(c) *
                                           std::pow(g_.xm, -c) / g_.m;
        } else {
            const double c = (g_.nu + s) / g_.m;
            const int q = r / mi_;
            double factor = detail::pow_int(-g_.x1, mi_) * (c + (q - 1)) / g_.xm;
            for (int i = r - mi_ + 1; i <= r; ++i) factor /= i;
            cur_[static_cast<size_t>(s)] *= factor;
        }
        return cur_[static_cast<size_t>(s)];
    }

  private:
    GammaArgs2 g_;
    int mi_;
    std::vector<double> cur_;
};

// Per-term log-space evaluation for non-integer m: the Gamma argument steps
// by the irrational 1/m, so there is no integer-shift product to exploit.
double real_order_term(const GammaArgs2& g, int r) {
    const double c = (g.nu + r) / g.m;
    check_series_arg(c, r);
    if (g.x1 == 0.0)
        return r == 0 ? std::tgamma(c) * std::pow(g.xm, -c) / g.m : 0.0;
    int gsign = 0;
    const double logmag = r * std::log(std::abs(g.x1)) - std::lgamma(r + 1.0) -
                          c * std::log(g.xm) + detail::log_abs_gamma(c, gsign);
    double sign = gsign;
    if (g.x1 > 0.0 && (r & 1)) sign = -sign;  // (-1)^r x1^r
    return sign * std::exp(logmag) / g.m;
}

// exp(-x1 t - xm t^m) t^{nu-1} written as one exponential so the huge-t
// samples of the double-exponential grid evaluate to 0 instead of 0 * inf.
double gamma2_integrand(const GammaArgs2& g, double t) {
    double e = -g.x1 * t - g.xm * std::pow(t, g.m);
    if (g.nu != 1.0) e += (g.nu - 1.0) * std::log(t);
    if (std::isnan(e)) return 0.0;  // inf - inf at astronomical t; decay wins
    return std::exp(e);
}

std::string describe(const GammaArgs2& g) {
    std::ostringstream os;
    os << "Gamma(" << g.x1 << ", " << g.xm << " | " << g.nu << "; " << g.m << ")";
    return os.str();
}

EvalReport from_series(const SeriesValue& s, Method method) {
    EvalReport out;
    out.value = s.value;
    // truncation estimate plus a cancellation penalty; floored so only
    // closed forms ever report a zero error estimate
    out.abs_err_est = std::max(s.trunc_estimate + s.max_term * DBL_EPSILON, DBL_MIN);
    out.method = method;
    out.terms_used = s.terms_used;
    out.converged = true;
    return out;
}

}  // namespace

SeriesValue gengamma2_series(const GammaArgs2& g, const SeriesControl& ctl) {
    check_args2(g);
    if (detail::near_integer(g.m)) {
        IntOrderTerms gen(g);
        return sum_series([&gen](int r) { return gen(r); }, ctl);
    }
    return sum_series([&g](int r) { return real_order_term(g, r); }, ctl);
}

EvalReport gengamma2_quad(const GammaArgs2& g, double tol) {
    check_args2(g);
    if (!(g.nu > 0.0))
        throw std::domain_error("gengamma2_quad: the defining integral needs nu > 0");
    const QuadResult q =
        quad_half_line([&g](double t) { return gamma2_integrand(g, t); }, tol);
    if (!q.converged) {
        std::ostringstream os;
        os << "gengamma2_quad: tolerance " << tol << " not reached for "
           << describe(g) << "; achieved estimate " << q.abs_err_est;
        throw std::runtime_error(os.str());
    }
    EvalReport out;
    out.value = q.value;
    out.abs_err_est = std::max(q.abs_err_est, DBL_MIN);
    out.method = Method::quadrature;
    out.terms_used = static_cast<int>(q.evaluations);
    out.converged = true;
    return out;
}

EvalReport gengamma2(const GammaArgs2& g, const SeriesControl& ctl) {
    check_args2(g);
    std::string why;
    if (std::abs(g.x1) / std::pow(g.xm, 1.0 / g.m) > ctl.crossover) {
        why = "series skipped: |x1|/x_m^{1/m} beyond the cancellation crossover";
    } else {
        const SeriesValue s = gengamma2_series(g, ctl);
        if (s.converged && !s.cancellation_flag) return from_series(s, Method::series);
        why = s.converged ? "series cancellation flag raised; fell back to quadrature"
                          : "series did not converge within the term cap; fell back to quadrature";
    }
    if (!(g.nu > 0.0))
        throw std::runtime_error("gengamma2: series evaluation failed for " + describe(g) +
                                 " and the quadrature fallback needs nu > 0");
    EvalReport out = gengamma2_quad(g, ctl.tol);
    out.warnings.push_back(why);
    return out;
}

SeriesValue gengamma3(const GammaArgs3& g, const SeriesControl& ctl) {
    if (!(g.x3 > 0.0)) throw std::domain_error("gengamma3: requires x3 > 0");
    if (!(g.nu > 0.0)) throw std::domain_error("gengamma3: requires nu > 0");
    // H_r^{(2)}(-x1,-x2)/r! by its recurrence; Gamma((r+nu)/3) and the x3
    // power grouped by r mod 3 so both advance by integer shifts.
    const double hx = -g.x1, hy = -g.x2;
    double c_prev = 0.0, c_cur = 1.0;  // scaled H at r-1 and r
    double gam[3] = {0, 0, 0}, xpow[3] = {0, 0, 0};
    auto gen = [&](int r) {
        const int s = r % 3;
        if (r < 3) {
            const double c = (g.nu + r) / 3.0;
            gam[s] = std::tgamma(c);
            xpow[s] = std::pow(g.x3, -c);
        } else {
            gam[s] *= (g.nu + (r - 3)) / 3.0;
            xpow[s] /= g.x3;
        }
        const double term = c_cur * gam[s] * xpow[s] / 3.0;
        const double c_next = (hx * c_cur + 2.0 * hy * c_prev) / (r + 1);
        c_prev = c_cur;
        c_cur = c_next;
        return term;
    };
    return sum_series(gen, ctl);
}

double hermite_fn_m(double nu, double x1, double xm, double m) {
    if (!(nu < 0.0))
        throw std::domain_error("hermite_fn: defined here for nu < 0 only");
    const EvalReport r = gengamma2(GammaArgs2{x1, xm, -nu, m}, SeriesControl{1e-13, 500});
    return r.value / std::tgamma(-nu);
}

double hermite_fn(double nu, double x) { return hermite_fn_m(nu, 2.0 * x, 1.0, 2.0); }

double h_minus_order(int n, double x1, double xm, double m) {
    if (n < 0) throw std::domain_error("h_minus_order: requires n >= 0");
    if (n > 170)
        throw std::domain_error("h_minus_order: n! overflows double for n > 170");
    const EvalReport r =
        gengamma2(GammaArgs2{x1, xm, n + 1.0, m}, SeriesControl{1e-13, 500});
    return r.value / std::tgamma(n + 1.0);
}

double h_minus_order_deriv(int n, double x1, double xm, double m) {
    if (n < 0 || n > 6)
        throw std::domain_error("h_minus_order_deriv: supported for 0 <= n <= 6");
    const double h = 1e-2 * std::max(1.0, std::abs(x1));
    CompensatedSum acc;
    double binom = 1.0;  // C(n, k)
    for (int k = 0; k <= n; ++k) {
        const double f = h_minus_order(0, x1 + (0.5 * n - k) * h, xm, m);
        acc.add((k & 1) ? -binom * f : binom * f);
        binom = binom * (n - k) / (k + 1.0);
    }
    double d = acc.value() / detail::pow_int(h, n);  // d^n/dx1^n H_{-1}
    if (n & 1) d = -d;
    return d / std::tgamma(n + 1.0);
}

SeriesValue h_minus1_gf_partial(double z, double x1, double xm, double m,
                                int n_last, double tol) {
    if (n_last < 0 || n_last > 169)
        throw std::domain_error("h_minus1_gf_partial: N must be in [0, 169]");
    return sum_partial(
        [&](int n) { return detail::pow_int(z, n) * h_minus_order(n, x1, xm, m); },
        n_last, tol);
}

double h_minus1_erf_form(double x1, double x2) {
    if (!(x2 > 0.0)) throw std::domain_error("h_minus1_erf_form: requires x2 > 0");
    const double half_x1_scaled = x1 / (2.0 * std::sqrt(x2));
    return 0.5 * std::sqrt(std::numbers::pi / x2) *
           std::exp(half_x1_scaled * half_x1_scaled) * std::erfc(half_x1_scaled);
}

}  // namespace ellgamma
