#pragma once

#include <string>
#include <vector>

namespace ellgamma {

enum class Method { closed_form, series, umbral_series, quadrature };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::series: return "series";
        case Method::umbral_series: return "umbral_series";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

/// CLI/JSON-facing wrapper around one evaluation. abs_err_est is zero only
/// for closed-form results; warnings are non-empty whenever a fallback was
/// taken.
struct EvalReport {
    double value = 0.0;
    double abs_err_est = 0.0;
    Method method = Method::closed_form;
    int terms_used = 0;
    std::vector<std::string> warnings;
    bool converged = true;
};

}  // namespace ellgamma
