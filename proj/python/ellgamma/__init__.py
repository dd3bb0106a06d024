"""Elliptic-type and hyper-elliptic integrals via generalized Hermite
polynomials and generalized Gamma functions."""

from ._core import (
    EvalReport,
    QuadResult,
    SeriesValue,
    f_quadratic,
    f_quadratic_linear,
    g_series,
    gengamma2,
    gengamma2_quad,
    gengamma2_series,
    gengamma3,
    h_minus1_erf_form,
    h_minus1_gf_partial,
    h_minus_order,
    h_minus_order_deriv,
    hermite_fn,
    hermite_fn_m,
    hermite_gf_partial,
    hermite_gh,
    hermite_weighted,
    incomplete_integral,
    laplace_peak_approx,
    phi_general,
    phi_hyperelliptic3,
    phi_monomial,
    q_poly,
    quad_finite,
    quad_full_line,
    quad_half_line,
    series_pow_binomial,
)

__all__ = [
    "EvalReport",
    "QuadResult",
    "SeriesValue",
    "f_quadratic",
    "f_quadratic_linear",
    "g_series",
    "gengamma2",
    "gengamma2_quad",
    "gengamma2_series",
    "gengamma3",
    "h_minus1_erf_form",
    "h_minus1_gf_partial",
    "h_minus_order",
    "h_minus_order_deriv",
    "hermite_fn",
    "hermite_fn_m",
    "hermite_gf_partial",
    "hermite_gh",
    "hermite_weighted",
    "incomplete_integral",
    "laplace_peak_approx",
    "phi_general",
    "phi_hyperelliptic3",
    "phi_monomial",
    "q_poly",
    "quad_finite",
    "quad_full_line",
    "quad_half_line",
    "series_pow_binomial",
]

__version__ = "0.1.0"
