#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ellgamma/gengamma.hpp"
#include "ellgamma/hermite.hpp"
#include "ellgamma/integrals.hpp"
#include "ellgamma/qpoly.hpp"
#include "ellgamma/quadrature.hpp"
#include "ellgamma/trunc_series.hpp"

namespace py = pybind11;
using namespace ellgamma;

namespace {

std::string repr_series(const SeriesValue& s) {
    std::ostringstream os;
    os << "SeriesValue(value=" << s.value << ", terms_used=" << s.terms_used
       << ", trunc_estimate=" << s.trunc_estimate
       << ", cancellation_flag=" << (s.cancellation_flag ? "True" : "False")
       << ", converged=" << (s.converged ? "True" : "False") << ")";
    return os.str();
}

std::string repr_report(const EvalReport& r) {
    std::ostringstream os;
    os << "EvalReport(value=" << r.value << ", abs_err_est=" << r.abs_err_est
       << ", method='" << method_name(r.method) << "', terms_used=" << r.terms_used
       << ", converged=" << (r.converged ? "True" : "False") << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Elliptic-type and hyper-elliptic integrals via generalized Hermite "
        "polynomials and generalized Gamma functions";

    py::class_<SeriesValue>(m, "SeriesValue")
        .def_readonly("value", &SeriesValue::value)
        .def_readonly("terms_used", &SeriesValue::terms_used)
        .def_readonly("trunc_estimate", &SeriesValue::trunc_estimate)
        .def_readonly("max_term", &SeriesValue::max_term)
        .def_readonly("cancellation_flag", &SeriesValue::cancellation_flag)
        .def_readonly("converged", &SeriesValue::converged)
        .def("__repr__", &repr_series);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("value", &EvalReport::value)
        .def_readonly("abs_err_est", &EvalReport::abs_err_est)
        .def_property_readonly(
            "method", [](const EvalReport& r) { return method_name(r.method); })
        .def_readonly("terms_used", &EvalReport::terms_used)
        .def_readonly("warnings", &EvalReport::warnings)
        .def_readonly("converged", &EvalReport::converged)
        .def("__repr__", &repr_report);

    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("abs_err_est", &QuadResult::abs_err_est)
        .def_readonly("evaluations", &QuadResult::evaluations)
        .def_readonly("converged", &QuadResult::converged);

    // Generalized Hermite polynomials
    m.def(
        "hermite_gh",
        [](int n, int m_, double x, double y) {
            return hermite_gh(PolyIndex{n, m_}, x, y);
        },
        py::arg("n"), py::arg("m"), py::arg("x"), py::arg("y"),
        "Gould-Hopper polynomial H_n^{(m)}(x, y)");
    m.def(
        "hermite_gf_partial",
        [](double t, double x, double y, int m_, int n_last, double tol) {
            return hermite_gf_partial(t, x, y, m_, n_last, tol);
        },
        py::arg("t"), py::arg("x"), py::arg("y"), py::arg("m"), py::arg("n_last"),
        py::arg("tol") = 1e-10,
        "Partial sum of the generating function of exp(x t + y t^m)");
    m.def("hermite_weighted", &hermite_weighted, py::arg("n"), py::arg("x"),
          py::arg("y"), py::arg("nu"),
          "Gamma-weighted Hermite polynomial used by the cubic hyper-elliptic "
          "series");

    // Q-polynomials and the G series
    m.def(
        "q_poly",
        [](int n, double a, double b, double nu, int m_) {
            return q_poly(n, QPolyParams{a, b, nu, m_});
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("m"),
        "Q_n(a,b|nu,m), n! times the x^n Taylor coefficient of "
        "(1 + b x + a x^m)^{-nu}");
    m.def(
        "g_series",
        [](double a, double b, double nu, int m_, double x, double tol,
           int max_terms) {
            return g_series(QPolyParams{a, b, nu, m_}, x,
                            SeriesControl{tol, max_terms});
        },
        py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("m"), py::arg("x"),
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500,
        "Series evaluation of (1 + b x + a x^m)^{-nu}, |x| < 1, |b| <= |a|");
    m.def(
        "incomplete_integral",
        [](double a, double b, double nu, int m_, double x, double tol,
           int max_terms) {
            return incomplete_integral(QPolyParams{a, b, nu, m_}, x,
                                       SeriesControl{tol, max_terms});
        },
        py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("m"), py::arg("x"),
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500,
        "Series evaluation of the incomplete integral of G over [0, x]");

    // Generalized Gamma functions
    m.def(
        "gengamma2_series",
        [](double x1, double xm, double nu, double m_, double tol, int max_terms) {
            return gengamma2_series(GammaArgs2{x1, xm, nu, m_},
                                    SeriesControl{tol, max_terms});
        },
        py::arg("x1"), py::arg("xm"), py::arg("nu"), py::arg("m") = 2.0,
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500,
        "Series expansion of Gamma(x1, x_m | nu; m)");
    m.def(
        "gengamma2_quad",
        [](double x1, double xm, double nu, double m_, double tol) {
            return gengamma2_quad(GammaArgs2{x1, xm, nu, m_}, tol);
        },
        py::arg("x1"), py::arg("xm"), py::arg("nu"), py::arg("m") = 2.0,
        py::arg("tol") = 1e-10, "Defining integral by adaptive quadrature");
    m.def(
        "gengamma2",
        [](double x1, double xm, double nu, double m_, double tol, int max_terms) {
            return gengamma2(GammaArgs2{x1, xm, nu, m_},
                             SeriesControl{tol, max_terms});
        },
        py::arg("x1"), py::arg("xm"), py::arg("nu"), py::arg("m") = 2.0,
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500,
        "Series-first evaluation with the documented quadrature fallback");
    m.def(
        "gengamma3",
        [](double x1, double x2, double x3, double nu, double tol, int max_terms) {
            return gengamma3(GammaArgs3{x1, x2, x3, nu},
                             SeriesControl{tol, max_terms});
        },
        py::arg("x1"), py::arg("x2"), py::arg("x3"), py::arg("nu"),
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500,
        "Three-variable generalized Gamma function");
    m.def("hermite_fn", &hermite_fn, py::arg("nu"), py::arg("x"),
          "Hermite function of negative order");
    m.def("hermite_fn_m", &hermite_fn_m, py::arg("nu"), py::arg("x1"),
          py::arg("xm"), py::arg("m"));
    m.def("h_minus_order", &h_minus_order, py::arg("n"), py::arg("x1"),
          py::arg("xm"), py::arg("m"),
          "H_{-(n+1)}^{(m)}(x1, xm) = (1/n!) int_0^inf t^n e^{-x1 t - xm t^m} dt");
    m.def("h_minus_order_deriv", &h_minus_order_deriv, py::arg("n"), py::arg("x1"),
          py::arg("xm"), py::arg("m"),
          "Finite-difference cross-check route for h_minus_order");
    m.def(
        "h_minus1_gf_partial",
        [](double z, double x1, double xm, double m_, int n_last, double tol) {
            return h_minus1_gf_partial(z, x1, xm, m_, n_last, tol);
        },
        py::arg("z"), py::arg("x1"), py::arg("xm"), py::arg("m"), py::arg("n_last"),
        py::arg("tol") = 1e-9);
    m.def("h_minus1_erf_form", &h_minus1_erf_form, py::arg("x1"), py::arg("x2"),
          "erfc closed form of H_{-1}^{(2)}");

    // Integral families
    m.def("f_quadratic", &f_quadratic, py::arg("a"), py::arg("nu"));
    m.def("f_quadratic_linear", &f_quadratic_linear, py::arg("a"), py::arg("b"),
          py::arg("nu"));
    m.def("phi_monomial", &phi_monomial, py::arg("a"), py::arg("nu"), py::arg("m"));
    m.def(
        "phi_general",
        [](double a, double b, double nu, double m_, double tol, int max_terms) {
            return phi_general(a, b, nu, m_, SeriesControl{tol, max_terms});
        },
        py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("m"),
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500);
    m.def(
        "phi_hyperelliptic3",
        [](double a1, double a2, double a3, double nu, double tol, int max_terms) {
            return phi_hyperelliptic3(a1, a2, a3, nu, SeriesControl{tol, max_terms});
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("nu"),
        py::arg("tol") = 1e-10, py::arg("max_terms") = 500);
    m.def(
        "laplace_peak_approx",
        [](const std::function<double(double)>& f, double x0, double M, double nu,
           std::optional<double> second_derivative) {
            return laplace_peak_approx(f, x0, M, nu, second_derivative);
        },
        py::arg("f"), py::arg("x0"), py::arg("M"), py::arg("nu"),
        py::arg("second_derivative") = py::none(),
        "Second-order peak approximation of the full-line integral of "
        "[M f(x)]^{-nu}");

    // Quadrature oracles
    m.def("quad_half_line", &quad_half_line, py::arg("f"), py::arg("tol") = 1e-10);
    m.def("quad_full_line", &quad_full_line, py::arg("f"), py::arg("tol") = 1e-10);
    m.def("quad_finite", &quad_finite, py::arg("f"), py::arg("lo"), py::arg("hi"),
          py::arg("tol") = 1e-10);

    // Taylor-coefficient oracle
    m.def(
        "series_pow_binomial",
        [](const std::vector<double>& u, double nu) {
            TruncSeries s;
            s.c = u;
            return series_pow_binomial(s, nu).c;
        },
        py::arg("u"), py::arg("nu"),
        "Coefficients of (1+u)^{-nu} for a truncated series u (zero constant "
        "term)");
}
