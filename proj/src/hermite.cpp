#include "ellgamma/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellgamma/detail/math_util.hpp"

namespace ellgamma {

namespace {

void check_index(const PolyIndex& idx) {
    if (idx.n < 0) throw std::domain_error("hermite: degree n must be >= 0");
    if (idx.m < 1) throw std::domain_error("hermite: order m must be >= 1");
    if (idx.n > kMaxHermiteDegree)
        throw std::domain_error("hermite: degree n = " + std::to_string(idx.n) +
                                " exceeds the supported cap " +
                                std::to_string(kMaxHermiteDegree));
}

double weight_arg(int n, int r, double nu) {
    return (2.0 * n + 3.0 * (nu - r) - 1.0) / 3.0;
}

void check_weight_poles(int n, double nu) {
    for (int r = 0; r <= n / 2; ++r) {
        if (detail::gamma_pole(weight_arg(n, r, nu)))
            throw std::domain_error(
                "hermite_weighted: Gamma pole in the weight at r = " + std::to_string(r));
    }
}

}  // namespace

double hermite_gh(const PolyIndex& idx, double x, double y) {
    check_index(idx);
    const int n = idx.n, m = idx.m;
    CompensatedSum acc;
    double coeff = 1.0;  // n!/((n-mr)! r!), updated term to term
    double ypow = 1.0;
    for (int r = 0; r <= n / m; ++r) {
        acc.add(coeff * detail::pow_int(x, n - m * r) * ypow);
        ypow *= y;
        for (int j = 0; j < m; ++j) coeff *= static_cast<double>(n - m * r - j);
        coeff /= r + 1.0;
    }
    return acc.value();
}

double hermite_gh_scaled(const PolyIndex& idx, double x, double y) {
    check_index(idx);
    const int n = idx.n, m = idx.m;
    std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
    c[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        double v = x * c[static_cast<size_t>(k)];
        if (k + 1 - m >= 0) v += m * y * c[static_cast<size_t>(k + 1 - m)];
        c[static_cast<size_t>(k) + 1] = v / (k + 1);
    }
    return c[static_cast<size_t>(n)];
}

SeriesValue hermite_gf_partial(double t, double x, double y, int m, int n_last,
                               double tol) {
    if (n_last < 0) throw std::domain_error("hermite_gf_partial: N must be >= 0");
    check_index(PolyIndex{n_last + 1, m});  // the truncation estimate needs N+1
    std::vector<double> c;
    c.reserve(static_cast<size_t>(n_last) + 2);
    c.push_back(1.0);
    auto coeff = [&](int k) {
        while (static_cast<int>(c.size()) <= k) {
            const int j = static_cast<int>(c.size()) - 1;
            double v = x * c[static_cast<size_t>(j)];
            if (j + 1 - m >= 0) v += m * y * c[static_cast<size_t>(j + 1 - m)];
            c.push_back(v / (j + 1));
        }
        return c[static_cast<size_t>(k)];
    };
    return sum_partial([&](int n) { return detail::pow_int(t, n) * coeff(n); },
                       n_last, tol);
}

double hermite_weighted(int n, double x, double y, double nu) {
    check_index(PolyIndex{n, 2});
    check_weight_poles(n, nu);
    CompensatedSum acc;
    double coeff = 1.0;  // n!/((n-2r)! r!)
    double ypow = 1.0;
    for (int r = 0; r <= n / 2; ++r) {
        acc.add(coeff * detail::pow_int(x, n - 2 * r) * ypow *
                std::tgamma(weight_arg(n, r, nu)));
        ypow *= y;
        coeff *= static_cast<double>(n - 2 * r) * (n - 2 * r - 1);
        coeff /= r + 1.0;
    }
    return acc.value();
}

double hermite_weighted_scaled(int n, double x, double y, double nu) {
    if (n < 0) throw std::domain_error("hermite_weighted_scaled: n must be >= 0");
    check_weight_poles(n, nu);
    CompensatedSum acc;
    for (int r = 0; r <= n / 2; ++r) {
        const int nb = n - 2 * r;
        if (x == 0.0 && nb != 0) continue;
        if (y == 0.0 && r != 0) continue;
        int gsign = 0;
        double logmag = detail::log_abs_gamma(weight_arg(n, r, nu), gsign) -
                        std::lgamma(nb + 1.0) - std::lgamma(r + 1.0);
        double sign = gsign;
        if (nb > 0) {
            logmag += nb * std::log(std::abs(x));
            if (x < 0.0 && (nb & 1)) sign = -sign;
        }
        if (r > 0) {
            logmag += r * std::log(std::abs(y));
            if (y < 0.0 && (r & 1)) sign = -sign;
        }
        acc.add(sign * std::exp(logmag));
    }
    return acc.value();
}

}  // namespace ellgamma
