#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellgamma/integrals.hpp"

namespace ellgamma::cli {

/// One output row of the eval/compare/table subcommands. Every record
/// carries the full field set in a fixed order, so JSON lines and CSV rows
/// expose identical fields; numbers print with 17 significant digits and
/// round-trip losslessly.
struct Record {
    std::string kind;
    std::optional<double> a, b, a1, a2, a3, nu, m, x;
    double tol = 0.0;
    std::string method;
    std::optional<double> value;
    std::optional<double> abs_err_est;
    std::optional<long> terms_used;
    std::optional<bool> converged;
    std::optional<double> abs_diff, rel_diff;  ///< set on compare difference rows
    std::vector<std::string> warnings;
    std::string error;  ///< non-empty marks an error record
    long long wall_time_us = 0;

    std::string to_json() const;
    std::string to_csv() const;
    static std::string csv_header();
};

/// Format one double with 17 significant digits (lossless round-trip).
std::string format_double(double v);

/// Parse a single value or an inclusive "lo:hi:count" range into its grid.
std::vector<double> parse_range(const std::string& text);

/// Environment variable overriding the default --tol (1e-10).
inline constexpr const char* kTolEnvVar = "ELLGAMMA_TOL";

/// Entry point of the ellgamma tool. Exit code 0 iff every emitted record
/// converged and no domain error occurred.
int run(int argc, const char* const* argv);

}  // namespace ellgamma::cli
