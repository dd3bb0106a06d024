#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <numbers>
#include <vector>

#include "ellgamma/gengamma.hpp"
#include "ellgamma/integrals.hpp"
#include "ellgamma/quadrature.hpp"

using namespace ellgamma;
using std::numbers::pi;

namespace {

double half_line_oracle(const IntegralSpec& spec, double tol = 1e-12) {
    return quad_half_line([&](double x) { return integrand(spec, x); }, tol).value;
}

double full_line_oracle(const IntegralSpec& spec, double tol = 1e-12) {
    return quad_full_line([&](double x) { return integrand(spec, x); }, tol).value;
}

IntegralSpec general_spec(double a, double b, double nu, double m) {
    IntegralSpec s;
    s.kind = IntegralKind::half_line_general;
    s.a = a;
    s.b = b;
    s.nu = nu;
    s.m = m;
    return s;
}

}  // namespace

TEST_CASE("full-line quadratic closed form") {
    CHECK(f_quadratic(1.0, 1.0).value == doctest::Approx(pi).epsilon(1e-15));
    CHECK(f_quadratic(1.0, 1.5).value == doctest::Approx(2.0).epsilon(1e-15));
    IntegralSpec s;
    s.kind = IntegralKind::full_line_quadratic;
    s.a = 4.0;
    s.nu = 2.0;
    CHECK(f_quadratic(4.0, 2.0).value ==
          doctest::Approx(full_line_oracle(s)).epsilon(1e-12));
    const EvalReport r = f_quadratic(2.0, 1.0);
    CHECK(r.method == Method::closed_form);
    CHECK(r.abs_err_est == 0.0);
    CHECK_THROWS_AS(f_quadratic(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(f_quadratic(1.0, 0.5), std::domain_error);
}

TEST_CASE("full-line quadratic-linear closed form") {
    SUBCASE("b = 0 reduction") {
        CHECK(f_quadratic_linear(1.7, 0.0, 1.3).value == f_quadratic(1.7, 1.3).value);
    }
    SUBCASE("analytic anchor 2 pi / sqrt(3)") {
        IntegralSpec s;
        s.kind = IntegralKind::full_line_quadratic_linear;
        s.a = 1.0;
        s.b = 1.0;
        s.nu = 1.0;
        const double v = f_quadratic_linear(1.0, 1.0, 1.0).value;
        CHECK(v == doctest::Approx(2.0 * pi / std::sqrt(3.0)).epsilon(1e-14));
        CHECK(v == doctest::Approx(full_line_oracle(s, 1e-11)).epsilon(1e-10));
    }
    SUBCASE("quadrature oracle, fractional nu and negative b") {
        IntegralSpec s;
        s.kind = IntegralKind::full_line_quadratic_linear;
        s.a = 2.0;
        s.b = -1.5;
        s.nu = 2.25;
        CHECK(f_quadratic_linear(2.0, -1.5, 2.25).value ==
              doctest::Approx(full_line_oracle(s)).epsilon(1e-10));
    }
    SUBCASE("symmetry under b -> -b") {
        CHECK(f_quadratic_linear(1.2, 0.9, 1.8).value ==
              doctest::Approx(f_quadratic_linear(1.2, -0.9, 1.8).value)
                  .epsilon(1e-14));
    }
    SUBCASE("vanishing discriminant rejected") {
        CHECK_THROWS_AS(f_quadratic_linear(1.0, 2.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(f_quadratic_linear(1.0, -2.1, 1.0), std::domain_error);
    }
}

TEST_CASE("half-line monomial closed form") {
    CHECK(phi_monomial(1.0, 1.0, 2.0).value == doctest::Approx(pi / 2.0).epsilon(1e-15));
    CHECK(phi_monomial(1.0, 2.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-15));
    IntegralSpec s;
    s.kind = IntegralKind::half_line_monomial;
    s.a = 1.0;
    s.nu = 1.0;
    s.m = 4.0;
    const double v = phi_monomial(1.0, 1.0, 4.0).value;
    CHECK(v == doctest::Approx(pi * std::sqrt(2.0) / 4.0).epsilon(1e-14));
    CHECK(v == doctest::Approx(half_line_oracle(s)).epsilon(1e-12));
    CHECK_THROWS_AS(phi_monomial(1.0, 0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(phi_monomial(1.0, 1.0, 0.9), std::domain_error);
}

TEST_CASE("closed forms against the quadrature oracle over the grid") {
    for (const double a : {0.5, 2.0})
        for (const double nu : {0.75, 1.5, 2.5}) {
            IntegralSpec s;
            s.kind = IntegralKind::full_line_quadratic;
            s.a = a;
            s.nu = nu;
            CHECK(f_quadratic(a, nu).value ==
                  doctest::Approx(full_line_oracle(s, 1e-11)).epsilon(1e-10));
        }
    for (const double b : {-0.8, 0.4})
        for (const double nu : {0.75, 2.0}) {
            IntegralSpec s;
            s.kind = IntegralKind::full_line_quadratic_linear;
            s.a = 1.0;
            s.b = b;
            s.nu = nu;
            CHECK(f_quadratic_linear(1.0, b, nu).value ==
                  doctest::Approx(full_line_oracle(s, 1e-11)).epsilon(1e-10));
        }
    for (const double m : {1.5, 2.0, 3.0})
        for (const double nu : {1.0, 2.5}) {
            IntegralSpec s;
            s.kind = IntegralKind::half_line_monomial;
            s.a = 1.3;
            s.nu = nu;
            s.m = m;
            CHECK(phi_monomial(1.3, nu, m).value ==
                  doctest::Approx(half_line_oracle(s, 1e-11)).epsilon(1e-10));
        }
}

TEST_CASE("a larger crossover keeps the series path in charge") {
    SeriesControl ctl;
    ctl.crossover = 50.0;
    const EvalReport r = phi_general(0.01, 1.0, 2.0, 2.0, ctl);  // ratio 10
    // past the default crossover the series still converges here, it just
    // pays cancellation; with the knob widened it must be used and agree
    if (r.method == Method::umbral_series)
        CHECK(r.value ==
              doctest::Approx(half_line_oracle(general_spec(0.01, 1.0, 2.0, 2.0)))
                  .epsilon(1e-7));
    else
        CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("monomial scale covariance") {
    for (const double lam : {0.5, 1.3, 2.0, 4.0}) {
        const double m = 3.0, a = 1.4, nu = 1.2;
        CHECK(phi_monomial(a * std::pow(lam, m), nu, m).value ==
              doctest::Approx(phi_monomial(a, nu, m).value / lam).epsilon(1e-12));
    }
}

TEST_CASE("umbral series for the general half-line integral") {
    SUBCASE("b = 0 reduces exactly to the monomial form") {
        const EvalReport r = phi_general(1.3, 0.0, 1.5, 3.0);
        CHECK(r.value == phi_monomial(1.3, 1.5, 3.0).value);
        CHECK(r.method == Method::closed_form);
    }
    SUBCASE("m = 2 oracle cell") {
        const EvalReport r = phi_general(1.0, 1.0, 2.0, 2.0);
        CHECK(r.method == Method::umbral_series);
        CHECK(r.converged);
        CHECK(r.abs_err_est > 0.0);
        CHECK(r.value ==
              doctest::Approx(half_line_oracle(general_spec(1.0, 1.0, 2.0, 2.0)))
                  .epsilon(1e-8));
    }
    SUBCASE("m = 3 oracle cell") {
        const EvalReport r = phi_general(2.0, 0.5, 1.5, 3.0);
        CHECK(r.value ==
              doctest::Approx(half_line_oracle(general_spec(2.0, 0.5, 1.5, 3.0)))
                  .epsilon(1e-8));
    }
    SUBCASE("non-integer m goes through the log-space terms") {
        const EvalReport r = phi_general(1.5, 0.4, 1.8, 2.5);
        CHECK(r.method == Method::umbral_series);
        CHECK(r.value ==
              doctest::Approx(half_line_oracle(general_spec(1.5, 0.4, 1.8, 2.5)))
                  .epsilon(1e-8));
    }
    SUBCASE("negative b inside the positivity region") {
        const EvalReport r = phi_general(1.0, -1.0, 2.0, 2.0);  // b^2 < 4a
        CHECK(r.value ==
              doctest::Approx(half_line_oracle(general_spec(1.0, -1.0, 2.0, 2.0)))
                  .epsilon(1e-8));
    }
    SUBCASE("positivity violations rejected") {
        CHECK_THROWS_AS(phi_general(1.0, -2.0, 2.0, 2.0), std::domain_error);
        CHECK_THROWS_AS(phi_general(0.1, -1.0, 2.0, 3.0), std::domain_error);
    }
    SUBCASE("fallback past the cancellation crossover") {
        const EvalReport r = phi_general(0.01, 1.0, 2.0, 2.0);  // b/sqrt(a) = 10
        CHECK(r.method == Method::quadrature);
        REQUIRE_FALSE(r.warnings.empty());
        CHECK(r.value ==
              doctest::Approx(half_line_oracle(general_spec(0.01, 1.0, 2.0, 2.0)))
                  .epsilon(1e-8));
    }
}

TEST_CASE("integral-transform chain by nested quadrature") {
    // Phi(a,b|nu,m) = (1/Gamma(nu)) int_0^inf e^-s s^{nu-1} Gamma(sb, sa|1; m) ds
    // with the inner Gamma evaluated by its own quadrature. Coarse by
    // construction, hence the loose tolerance.
    const double a = 1.0, b = 0.5, nu = 2.0, m = 2.0;
    const auto inner = [&](double s) {
        return quad_half_line(
                   [&](double t) {
                       return std::exp(-s * b * t - s * a * std::pow(t, m));
                   },
                   1e-9)
            .value;
    };
    const double chained =
        quad_half_line(
            [&](double s) { return std::exp(-s) * std::pow(s, nu - 1.0) * inner(s); },
            1e-8)
            .value /
        std::tgamma(nu);
    CHECK(phi_general(a, b, nu, m).value == doctest::Approx(chained).epsilon(1e-6));
}

TEST_CASE("cubic hyper-elliptic integrals") {
    SUBCASE("monomial reduction") {
        const EvalReport r = phi_hyperelliptic3(0.0, 0.0, 1.4, 1.2);
        CHECK(r.value == phi_monomial(1.4, 1.2, 3.0).value);
    }
    SUBCASE("all-ones cell") {
        IntegralSpec s;
        s.kind = IntegralKind::hyper_elliptic3;
        s.a1 = s.a2 = s.a3 = 1.0;
        s.nu = 2.0;
        const EvalReport r = phi_hyperelliptic3(1.0, 1.0, 1.0, 2.0);
        CHECK(r.method == Method::series);
        CHECK(r.value == doctest::Approx(half_line_oracle(s)).epsilon(1e-8));
    }
    SUBCASE("negative a2 passing the positivity scan") {
        IntegralSpec s;
        s.kind = IntegralKind::hyper_elliptic3;
        s.a1 = 0.5;
        s.a2 = -0.2;
        s.a3 = 1.0;
        s.nu = 1.5;
        const EvalReport r = phi_hyperelliptic3(0.5, -0.2, 1.0, 1.5);
        CHECK(r.value == doctest::Approx(half_line_oracle(s)).epsilon(1e-8));
    }
    SUBCASE("positivity scan rejects a sign change") {
        CHECK_THROWS_AS(phi_hyperelliptic3(-3.0, 0.1, 0.05, 1.0), std::domain_error);
    }
    SUBCASE("precondition checks") {
        CHECK_THROWS_AS(phi_hyperelliptic3(1.0, 1.0, 0.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(phi_hyperelliptic3(1.0, 1.0, 1.0, 0.3), std::domain_error);
    }
}

TEST_CASE("peak approximation") {
    SUBCASE("exact for a quadratic with the second derivative supplied") {
        const auto f = [](double x) { return 1.0 + x * x; };
        for (const double nu : {1.0, 2.0, 5.0})
            CHECK(laplace_peak_approx(f, 0.0, 1.0, nu, 2.0).value ==
                  doctest::Approx(f_quadratic(1.0, nu).value).epsilon(1e-14));
    }
    SUBCASE("finite-difference f'' stays close and is reported") {
        const auto f = [](double x) { return 1.0 + x * x; };
        const EvalReport r = laplace_peak_approx(f, 0.0, 1.0, 2.0);
        REQUIRE_FALSE(r.warnings.empty());
        CHECK(r.value == doctest::Approx(f_quadratic(1.0, 2.0).value).epsilon(1e-7));
    }
    SUBCASE("cosh within 10 percent at nu = 3") {
        const double approx =
            laplace_peak_approx([](double x) { return std::cosh(x); }, 0.0, 1.0, 3.0,
                                1.0)
                .value;
        const double exact =
            quad_full_line([](double x) { return std::pow(std::cosh(x), -3.0); },
                           1e-12)
                .value;
        CHECK(std::abs(approx - exact) / exact < 0.10);
    }
    SUBCASE("relative error does not depend on the overall scale M") {
        std::vector<double> errs;
        for (const double M : {1.0, 4.0, 16.0}) {
            const double approx =
                laplace_peak_approx([](double x) { return std::cosh(x); }, 0.0, M,
                                    3.0, 1.0)
                    .value;
            const double exact =
                quad_full_line(
                    [&](double x) { return std::pow(M * std::cosh(x), -3.0); },
                    1e-12)
                    .value;
            errs.push_back(std::abs(approx - exact) / exact);
        }
        CHECK(errs[1] == doctest::Approx(errs[0]).epsilon(1e-9));
        CHECK(errs[2] == doctest::Approx(errs[0]).epsilon(1e-9));
    }
    SUBCASE("rejects a maximum") {
        CHECK_THROWS_AS(
            laplace_peak_approx([](double x) { return 2.0 - x * x; }, 0.0, 1.0, 2.0),
            std::domain_error);
        CHECK_THROWS_AS(
            laplace_peak_approx([](double x) { return x; }, 0.0, 1.0, 2.0),
            std::domain_error);
    }
}

TEST_CASE("dispatcher honours the forced method") {
    IntegralSpec s = general_spec(1.0, 1.0, 2.0, 2.0);
    const EvalReport as = evaluate(s, {}, ForceMethod::series);
    CHECK(as.method == Method::umbral_series);
    const EvalReport aq = evaluate(s, {}, ForceMethod::quadrature);
    CHECK(aq.method == Method::quadrature);
    CHECK(as.value == doctest::Approx(aq.value).epsilon(1e-8));

    IntegralSpec c;
    c.kind = IntegralKind::full_line_quadratic;
    c.a = 1.0;
    c.nu = 1.0;
    CHECK(evaluate(c, {}, ForceMethod::series).method == Method::closed_form);
    CHECK(evaluate(c, {}, ForceMethod::quadrature).method == Method::quadrature);
}

TEST_CASE("dispatcher validates the incomplete kind") {
    IntegralSpec s;
    s.kind = IntegralKind::incomplete_finite;
    s.a = 1.0;
    s.b = 1.0;
    s.nu = 1.0;
    s.m = 2.0;
    s.upper = 0.5;
    const EvalReport r = evaluate(s);
    const EvalReport q = evaluate_quadrature(s, 1e-12);
    CHECK(r.value == doctest::Approx(q.value).epsilon(1e-9));
    s.m = 2.5;  // the Q-polynomial series needs integer m
    CHECK_THROWS_AS(evaluate(s), std::domain_error);
}
