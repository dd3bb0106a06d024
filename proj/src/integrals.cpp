#include "ellgamma/integrals.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ellgamma/detail/math_util.hpp"
#include "ellgamma/gengamma.hpp"
#include "ellgamma/hermite.hpp"
#include "ellgamma/qpoly.hpp"
#include "ellgamma/quadrature.hpp"

namespace ellgamma {

namespace {

EvalReport closed(double value) {
    return EvalReport{value, 0.0, Method::closed_form, 0, {}, true};
}

EvalReport from_series(const SeriesValue& s, Method method) {
    EvalReport out;
    out.value = s.value;
    // truncation estimate plus a cancellation penalty; floored so only
    // closed forms ever report a zero error estimate
    out.abs_err_est = std::max(s.trunc_estimate + s.max_term * DBL_EPSILON, DBL_MIN);
    out.method = method;
    out.terms_used = s.terms_used;
    out.converged = s.converged;
    return out;
}

EvalReport from_quad(const QuadResult& q) {
    EvalReport out;
    out.value = q.value;
    out.abs_err_est = std::max(q.abs_err_est, DBL_MIN);
    out.method = Method::quadrature;
    out.terms_used = static_cast<int>(q.evaluations);
    out.converged = q.converged;
    return out;
}

// 1 + b x + a x^m on [0, inf): for b < 0 the single interior critical point
// is x* = (-b/(m a))^{1/(m-1)}; positivity there is positivity everywhere.
void check_positive_general(double a, double b, double m, const char* who) {
    if (b >= 0.0) return;
    if (m == 1.0) {
        if (!(a + b > 0.0))
            throw std::domain_error(std::string(who) +
                                    ": integrand (1 + (a+b) x)^-nu needs a + b > 0");
        return;
    }
    const double xs = std::pow(-b / (m * a), 1.0 / (m - 1.0));
    if (!(1.0 + b * xs + a * std::pow(xs, m) > 0.0))
        throw std::domain_error(std::string(who) +
                                ": 1 + b x + a x^m is not positive on [0, inf)");
}

// Critical points of 1 + a1 x + a2 x^2 + a3 x^3 come from a quadratic;
// checking the polynomial there covers the whole half line.
void check_positive_cubic(double a1, double a2, double a3) {
    if (a1 >= 0.0 && a2 >= 0.0) return;
    const double A = 3.0 * a3, B = 2.0 * a2, C = a1;
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return;
    const double sq = std::sqrt(disc);
    for (const double xs : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
        if (xs <= 0.0) continue;
        if (!(1.0 + xs * (a1 + xs * (a2 + xs * a3)) > 0.0))
            throw std::domain_error(
                "phi_hyperelliptic3: 1 + a1 x + a2 x^2 + a3 x^3 is not positive on "
                "[0, inf)");
    }
}

void check_phi_args(double a, double nu, double m, const char* who) {
    if (!(a > 0.0)) throw std::domain_error(std::string(who) + ": requires a > 0");
    if (!(m >= 1.0)) throw std::domain_error(std::string(who) + ": requires m >= 1");
    if (!(nu > 1.0 / m))
        throw std::domain_error(std::string(who) + ": requires nu > 1/m");
}

// Umbral-series term generator for integer m: terms grouped by r mod m so
// both Gamma arguments advance by integer shifts within a group.
class UmbralIntTerms {
  public:
    UmbralIntTerms(double a, double b, double nu, int m)
        : a_(a), b_(b), nu_(nu), m_(m), cur_(static_cast<size_t>(m)) {}

    double operator()(int r) {
        const int s = r % m_;
        if (r < m_) {
            const double A = nu_ - 1.0 / m_ + s * (m_ - 1.0) / m_;
            const double B = (1.0 + s) / m_;
            cur_[static_cast<size_t>(s)] =
                detail::pow_int(-b_, s) / detail::factorial(s) *
                std::pow(a_, -B) * std::tgamma(A) * std::tgamma(B) /
                (m_ * std::tgamma(nu_));
        } else {
            const int q = r / m_;
            const double A_prev = nu_ - 1.0 / m_ + (r - m_) * (m_ - 1.0) / m_;
            const double B_prev = (1.0 + (r - m_)) / m_;
            // Gamma(A+m-1)/Gamma(A) and Gamma(B+1)/Gamma(B)
            double factor = detail::pow_int(-b_, m_) * B_prev / a_;
            for (int j = 0; j < m_ - 1; ++j) factor *= A_prev + j;
            for (int i = r - m_ + 1; i <= r; ++i) factor /= i;
            (void)q;
            cur_[static_cast<size_t>(s)] *= factor;
        }
        return cur_[static_cast<size_t>(s)];
    }

  private:
    double a_, b_, nu_;
    int m_;
    std::vector<double> cur_;
};

double umbral_real_term(double a, double b, double nu, double m, int r) {
    if (b == 0.0) {
        if (r > 0) return 0.0;
        return std::tgamma(nu - 1.0 / m) * std::tgamma(1.0 / m) /
               (m * std::pow(a, 1.0 / m) * std::tgamma(nu));
    }
    const double A = nu - 1.0 / m + r * (m - 1.0) / m;
    const double B = (1.0 + r) / m;
    const double logmag = r * std::log(std::abs(b)) - std::lgamma(r + 1.0) -
                          B * std::log(a) + std::lgamma(A) + std::lgamma(B) -
                          std::lgamma(nu) - std::log(m);
    double sign = 1.0;
    if (b > 0.0 && (r & 1)) sign = -1.0;
    return sign * std::exp(logmag);
}

SeriesValue phi_general_series(double a, double b, double nu, double m,
                               const SeriesControl& ctl) {
    if (detail::near_integer(m)) {
        UmbralIntTerms gen(a, b, nu, static_cast<int>(std::lround(m)));
        return sum_series([&gen](int r) { return gen(r); }, ctl);
    }
    return sum_series([&](int r) { return umbral_real_term(a, b, nu, m, r); }, ctl);
}

// Hyper-elliptic series term: Htilde_n^{(2)}(-a1,-a2)/n! carries the
// nu-dependent Gamma weights; the remaining factors stay in double range up
// to the term cap.
SeriesValue phi_hyper_series(double a1, double a2, double a3, double nu,
                             const SeriesControl& ctl) {
    const double lg_nu = std::lgamma(nu);
    return sum_series(
        [&](int n) {
            const double scaled = hermite_weighted_scaled(n, -a1, -a2, nu);
            const double c = (n + 1.0) / 3.0;
            return scaled * std::exp(std::lgamma(c) - c * std::log(a3) - lg_nu) / 3.0;
        },
        ctl);
}

EvalReport series_with_fallback(const SeriesValue& s, Method method,
                                const IntegralSpec& spec, const SeriesControl& ctl,
                                bool attempted_series, const char* who) {
    std::string why;
    if (!attempted_series) {
        why = "series skipped: coefficient ratio beyond the cancellation crossover";
    } else if (s.converged && !s.cancellation_flag) {
        return from_series(s, method);
    } else {
        why = s.converged ? "series cancellation flag raised; fell back to quadrature"
                          : "series did not converge within the term cap; fell back "
                            "to quadrature";
    }
    const QuadResult q =
        quad_half_line([&spec](double x) { return integrand(spec, x); }, ctl.tol);
    if (!q.converged) {
        std::ostringstream os;
        os << who << ": series evaluation failed and the quadrature fallback did "
           << "not reach tol = " << ctl.tol << " (estimate " << q.abs_err_est << ")";
        throw std::runtime_error(os.str());
    }
    EvalReport out = from_quad(q);
    out.warnings.push_back(why);
    return out;
}

}  // namespace

EvalReport f_quadratic(double a, double nu) {
    if (!(a > 0.0)) throw std::domain_error("f_quadratic: requires a > 0");
    if (!(nu > 0.5)) throw std::domain_error("f_quadratic: requires nu > 1/2");
    return closed(std::sqrt(std::numbers::pi / a) * detail::gamma_ratio(nu - 0.5, nu));
}

EvalReport f_quadratic_linear(double a, double b, double nu) {
    if (!(a > 0.0)) throw std::domain_error("f_quadratic_linear: requires a > 0");
    if (!(nu > 0.5)) throw std::domain_error("f_quadratic_linear: requires nu > 1/2");
    if (!(b * b < 4.0 * a))
        throw std::domain_error("f_quadratic_linear: requires b^2 < 4a");
    const double pole_factor = std::pow(1.0 - b * b / (4.0 * a), -(nu - 0.5));
    return closed(std::sqrt(std::numbers::pi / a) * detail::gamma_ratio(nu - 0.5, nu) *
                  pole_factor);
}

EvalReport phi_monomial(double a, double nu, double m) {
    check_phi_args(a, nu, m, "phi_monomial");
    return closed(std::tgamma(1.0 / m) * detail::gamma_ratio(nu - 1.0 / m, nu) /
                  (m * std::pow(a, 1.0 / m)));
}

EvalReport phi_general(double a, double b, double nu, double m,
                       const SeriesControl& ctl) {
    check_phi_args(a, nu, m, "phi_general");
    check_positive_general(a, b, m, "phi_general");
    if (b == 0.0) return phi_monomial(a, nu, m);  // exact single-term reduction
    IntegralSpec spec;
    spec.kind = IntegralKind::half_line_general;
    spec.a = a;
    spec.b = b;
    spec.nu = nu;
    spec.m = m;
    const bool attempt = std::abs(b) / std::pow(a, 1.0 / m) <= ctl.crossover;
    SeriesValue s;
    if (attempt) s = phi_general_series(a, b, nu, m, ctl);
    return series_with_fallback(s, Method::umbral_series, spec, ctl, attempt,
                                "phi_general");
}

EvalReport phi_hyperelliptic3(double a1, double a2, double a3, double nu,
                              const SeriesControl& ctl) {
    if (!(a3 > 0.0)) throw std::domain_error("phi_hyperelliptic3: requires a3 > 0");
    if (!(nu > 1.0 / 3.0))
        throw std::domain_error("phi_hyperelliptic3: requires nu > 1/3");
    check_positive_cubic(a1, a2, a3);
    if (a1 == 0.0 && a2 == 0.0) return phi_monomial(a3, nu, 3.0);
    IntegralSpec spec;
    spec.kind = IntegralKind::hyper_elliptic3;
    spec.a1 = a1;
    spec.a2 = a2;
    spec.a3 = a3;
    spec.nu = nu;
    const bool attempt =
        std::max(std::abs(a1), std::sqrt(std::abs(a2))) / std::cbrt(a3) <=
        ctl.crossover;
    SeriesValue s;
    if (attempt) s = phi_hyper_series(a1, a2, a3, nu, ctl);
    return series_with_fallback(s, Method::series, spec, ctl, attempt,
                                "phi_hyperelliptic3");
}

EvalReport laplace_peak_approx(const std::function<double(double)>& f, double x0,
                               double M, double nu,
                               std::optional<double> second_derivative) {
    if (!(M > 0.0)) throw std::domain_error("laplace_peak_approx: requires M > 0");
    if (!(nu > 0.5)) throw std::domain_error("laplace_peak_approx: requires nu > 1/2");
    const double f0 = f(x0);
    if (!(f0 > 0.0))
        throw std::domain_error("laplace_peak_approx: requires f(x0) > 0");
    EvalReport out;
    double fpp = 0.0;
    if (second_derivative) {
        fpp = *second_derivative;
    } else {
        const double h = std::max(1e-4, 1e-4 * std::abs(x0));
        fpp = (f(x0 + h) - 2.0 * f0 + f(x0 - h)) / (h * h);
        std::ostringstream os;
        os << "f'' estimated by central differences with step h = " << h;
        out.warnings.push_back(os.str());
    }
    if (!(fpp > 0.0))
        throw std::domain_error(
            "laplace_peak_approx: f''(x0) <= 0, x0 is not a non-degenerate minimum");
    out.value = std::sqrt(2.0 * std::numbers::pi) / std::pow(M * f0, nu) *
                detail::gamma_ratio(nu - 0.5, nu) * std::sqrt(f0 / fpp);
    out.method = Method::closed_form;
    out.converged = true;
    return out;
}

double integrand(const IntegralSpec& spec, double x) {
    switch (spec.kind) {
        case IntegralKind::full_line_quadratic:
            return std::pow(1.0 + spec.a * x * x, -spec.nu);
        case IntegralKind::full_line_quadratic_linear:
            return std::pow(1.0 + spec.b * x + spec.a * x * x, -spec.nu);
        case IntegralKind::half_line_monomial:
            return std::pow(1.0 + spec.a * std::pow(x, spec.m), -spec.nu);
        case IntegralKind::half_line_general:
        case IntegralKind::incomplete_finite:
            return std::pow(1.0 + spec.b * x + spec.a * std::pow(x, spec.m), -spec.nu);
        case IntegralKind::hyper_elliptic3:
            return std::pow(1.0 + x * (spec.a1 + x * (spec.a2 + x * spec.a3)), -spec.nu);
    }
    throw std::logic_error("integrand: unknown kind");
}

EvalReport evaluate_quadrature(const IntegralSpec& spec, double tol) {
    const auto f = [&spec](double x) { return integrand(spec, x); };
    switch (spec.kind) {
        case IntegralKind::full_line_quadratic:
        case IntegralKind::full_line_quadratic_linear:
            return from_quad(quad_full_line(f, tol));
        case IntegralKind::incomplete_finite:
            return from_quad(quad_finite(f, 0.0, spec.upper, tol));
        default:
            return from_quad(quad_half_line(f, tol));
    }
}

EvalReport evaluate(const IntegralSpec& spec, const SeriesControl& ctl,
                    ForceMethod force) {
    if (force == ForceMethod::quadrature) {
        // Still reject invalid parameter sets up front.
        switch (spec.kind) {
            case IntegralKind::full_line_quadratic:
                (void)f_quadratic(spec.a, spec.nu);
                break;
            case IntegralKind::full_line_quadratic_linear:
                (void)f_quadratic_linear(spec.a, spec.b, spec.nu);
                break;
            case IntegralKind::half_line_monomial:
                check_phi_args(spec.a, spec.nu, spec.m, "phi_monomial");
                break;
            case IntegralKind::half_line_general:
                check_phi_args(spec.a, spec.nu, spec.m, "phi_general");
                check_positive_general(spec.a, spec.b, spec.m, "phi_general");
                break;
            case IntegralKind::hyper_elliptic3:
                if (!(spec.a3 > 0.0))
                    throw std::domain_error("phi_hyperelliptic3: requires a3 > 0");
                if (!(spec.nu > 1.0 / 3.0))
                    throw std::domain_error("phi_hyperelliptic3: requires nu > 1/3");
                check_positive_cubic(spec.a1, spec.a2, spec.a3);
                break;
            case IntegralKind::incomplete_finite:
                break;
        }
        return evaluate_quadrature(spec, ctl.tol);
    }

    switch (spec.kind) {
        case IntegralKind::full_line_quadratic:
            return f_quadratic(spec.a, spec.nu);
        case IntegralKind::full_line_quadratic_linear:
            return f_quadratic_linear(spec.a, spec.b, spec.nu);
        case IntegralKind::half_line_monomial:
            return phi_monomial(spec.a, spec.nu, spec.m);
        case IntegralKind::half_line_general: {
            if (force == ForceMethod::series) {
                check_phi_args(spec.a, spec.nu, spec.m, "phi_general");
                check_positive_general(spec.a, spec.b, spec.m, "phi_general");
                if (spec.b == 0.0) return phi_monomial(spec.a, spec.nu, spec.m);
                return from_series(
                    phi_general_series(spec.a, spec.b, spec.nu, spec.m, ctl),
                    Method::umbral_series);
            }
            return phi_general(spec.a, spec.b, spec.nu, spec.m, ctl);
        }
        case IntegralKind::hyper_elliptic3: {
            if (force == ForceMethod::series) {
                if (!(spec.a3 > 0.0))
                    throw std::domain_error("phi_hyperelliptic3: requires a3 > 0");
                if (!(spec.nu > 1.0 / 3.0))
                    throw std::domain_error("phi_hyperelliptic3: requires nu > 1/3");
                check_positive_cubic(spec.a1, spec.a2, spec.a3);
                if (spec.a1 == 0.0 && spec.a2 == 0.0)
                    return phi_monomial(spec.a3, spec.nu, 3.0);
                return from_series(
                    phi_hyper_series(spec.a1, spec.a2, spec.a3, spec.nu, ctl),
                    Method::series);
            }
            return phi_hyperelliptic3(spec.a1, spec.a2, spec.a3, spec.nu, ctl);
        }
        case IntegralKind::incomplete_finite: {
            if (!detail::near_integer(spec.m) || spec.m < 1.0)
                throw std::domain_error(
                    "incomplete integral: the Q-polynomial series needs integer m >= 1");
            QPolyParams p;
            p.a = spec.a;
            p.b = spec.b;
            p.nu = spec.nu;
            p.m = static_cast<int>(std::lround(spec.m));
            return from_series(incomplete_integral(p, spec.upper, ctl), Method::series);
        }
    }
    throw std::logic_error("evaluate: unknown kind");
}

}  // namespace ellgamma
