#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace ellgamma {

/// Result of a truncated series evaluation together with its convergence
/// diagnostics. `trunc_estimate` is the magnitude of the first omitted term;
/// when `converged` is set it is bounded by tol * max(1, |value|).
struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    double trunc_estimate = 0.0;
    double max_term = 0.0;  ///< largest |term| summed (cancellation diagnostic)
    bool cancellation_flag = false;
    bool converged = false;
};

/// Above this coefficient ratio (|x1|/x_m^{1/m} and its analogues) the
/// alternating expansions lose more digits than double precision holds, so
/// the combined evaluators go straight to quadrature.
inline constexpr double kSeriesQuadCrossover = 8.0;

/// Truncation knobs shared by every series evaluator.
struct SeriesControl {
    double tol = 1e-10;
    int max_terms = 500;
    double crossover = kSeriesQuadCrossover;
};

/// Neumaier variant of compensated summation.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {

// |S| below this fraction of the largest term means the sum lost most of
// its leading digits to cancellation.
inline constexpr double kCancellationRatio = 1e-6;

inline bool lost_to_cancellation(double value, double max_term) {
    return std::abs(value) < kCancellationRatio * max_term;
}

}  // namespace detail

/// Sums term(0), term(1), ... with compensated summation. Stops once two
/// consecutive terms fall below tol * max(1, |S|) and the next term confirms
/// the tail (that single-term lookahead guards alternating series against a
/// false stop on one accidentally small term); the confirming term becomes
/// the truncation estimate and is not added. The generator is invoked once
/// per index, in increasing order.
template <typename TermGen>
SeriesValue sum_series(TermGen&& term, const SeriesControl& ctl) {
    SeriesValue out;
    CompensatedSum acc;
    double prev_mag = std::numeric_limits<double>::infinity();
    bool small_pair = false;
    for (int n = 0;; ++n) {
        const double t = term(n);
        if (!std::isfinite(t)) {
            out.value = acc.value();
            out.terms_used = n;
            out.trunc_estimate = std::numeric_limits<double>::infinity();
            out.converged = false;
            break;
        }
        const double mag = std::abs(t);
        const double partial = acc.value();
        if (small_pair && mag <= ctl.tol * std::max(1.0, std::abs(partial))) {
            out.value = partial;
            out.terms_used = n;
            out.trunc_estimate = mag;
            out.converged = true;
            break;
        }
        if (n == ctl.max_terms) {
            out.value = partial;
            out.terms_used = n;
            out.trunc_estimate = mag;
            out.converged = false;
            break;
        }
        acc.add(t);
        out.max_term = std::max(out.max_term, mag);
        const double thresh = ctl.tol * std::max(1.0, std::abs(acc.value()));
        small_pair = n >= 1 && mag <= thresh && prev_mag <= thresh;
        prev_mag = mag;
    }
    out.cancellation_flag = detail::lost_to_cancellation(out.value, out.max_term);
    return out;
}

/// Partial sum of term(0..n_last). The first omitted term term(n_last + 1)
/// provides the truncation estimate; `tol` only feeds the converged flag.
template <typename TermGen>
SeriesValue sum_partial(TermGen&& term, int n_last, double tol = 1e-10) {
    SeriesValue out;
    CompensatedSum acc;
    for (int n = 0; n <= n_last; ++n) {
        const double t = term(n);
        acc.add(t);
        out.max_term = std::max(out.max_term, std::abs(t));
    }
    out.value = acc.value();
    out.terms_used = n_last + 1;
    out.trunc_estimate = std::abs(term(n_last + 1));
    out.converged = std::isfinite(out.value) &&
                    out.trunc_estimate <= tol * std::max(1.0, std::abs(out.value));
    out.cancellation_flag = detail::lost_to_cancellation(out.value, out.max_term);
    return out;
}

}  // namespace ellgamma
