#include "ellgamma/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace ellgamma::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_us(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0)
        .count();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void append_json_number(std::string& out, const std::optional<double>& v) {
    if (v && std::isfinite(*v))
        out += format_double(*v);
    else
        out += "null";
}

void append_csv_number(std::string& out, const std::optional<double>& v) {
    if (v) out += format_double(*v);
}

std::string join_warnings(const std::vector<std::string>& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "; ";
        out += w[i];
    }
    return out;
}

// Canonical parameter order; table sweeps nest their loops in this order.
constexpr const char* kParamNames[] = {"a", "b", "a1", "a2", "a3", "nu", "m", "x"};

struct KindInfo {
    IntegralKind kind;
    std::vector<std::string> params;  // relevant flags, canonical order
};

const std::map<std::string, KindInfo>& kind_table() {
    static const std::map<std::string, KindInfo> table = {
        {"full-quadratic", {IntegralKind::full_line_quadratic, {"a", "nu"}}},
        {"full-quadratic-linear",
         {IntegralKind::full_line_quadratic_linear, {"a", "b", "nu"}}},
        {"half-monomial", {IntegralKind::half_line_monomial, {"a", "nu", "m"}}},
        {"half-general", {IntegralKind::half_line_general, {"a", "b", "nu", "m"}}},
        {"hyper3", {IntegralKind::hyper_elliptic3, {"a1", "a2", "a3", "nu"}}},
        {"incomplete", {IntegralKind::incomplete_finite, {"a", "b", "nu", "m", "x"}}},
    };
    return table;
}

void assign_param(IntegralSpec& spec, const std::string& name, double v) {
    if (name == "a") spec.a = v;
    else if (name == "b") spec.b = v;
    else if (name == "a1") spec.a1 = v;
    else if (name == "a2") spec.a2 = v;
    else if (name == "a3") spec.a3 = v;
    else if (name == "nu") spec.nu = v;
    else if (name == "m") spec.m = v;
    else if (name == "x") spec.upper = v;
}

void echo_param(Record& rec, const std::string& name, double v) {
    if (name == "a") rec.a = v;
    else if (name == "b") rec.b = v;
    else if (name == "a1") rec.a1 = v;
    else if (name == "a2") rec.a2 = v;
    else if (name == "a3") rec.a3 = v;
    else if (name == "nu") rec.nu = v;
    else if (name == "m") rec.m = v;
    else if (name == "x") rec.x = v;
}

struct CommonOpts {
    std::string kind;
    std::map<std::string, std::string> params;  // flag name -> raw text
    double tol = 1e-10;
    int max_terms = 500;
    std::string format = "json";
    std::string force = "auto";
    double agree_tol = 1e-8;
};

double default_tol() {
    if (const char* env = std::getenv(kTolEnvVar)) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "ellgamma: ignoring invalid " << kTolEnvVar << "='" << env
                  << "'\n";
    }
    return 1e-10;
}

void add_common_options(CLI::App* cmd, CommonOpts& o, bool with_force,
                        bool with_agree) {
    std::vector<std::string> kinds;
    for (const auto& [name, info] : kind_table()) kinds.push_back(name);
    cmd->add_option("--kind", o.kind, "integral family")
        ->required()
        ->check(CLI::IsMember(kinds));
    for (const char* p : kParamNames)
        cmd->add_option(std::string("--") + p, o.params[p]);
    cmd->add_option("--tol", o.tol, "series/quadrature tolerance")
        ->default_val(default_tol());
    cmd->add_option("--max-terms", o.max_terms, "series term cap")->default_val(500);
    cmd->add_option("--format", o.format, "output format")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    if (with_force)
        cmd->add_option("--force-method", o.force, "evaluation path")
            ->default_val("auto")
            ->check(CLI::IsMember({"auto", "series", "quadrature"}));
    if (with_agree)
        cmd->add_option("--agree-tol", o.agree_tol,
                        "relative two-path agreement required by compare")
            ->default_val(1e-8);
}

ForceMethod force_from(const std::string& s) {
    if (s == "series") return ForceMethod::series;
    if (s == "quadrature") return ForceMethod::quadrature;
    return ForceMethod::automatic;
}

// Grid of values per relevant parameter, canonical order. Parameters not
// used by the kind must not be given; all relevant ones are required.
std::vector<std::vector<double>> build_grids(const CommonOpts& o,
                                             const KindInfo& info,
                                             bool allow_ranges) {
    for (const auto& [name, text] : o.params) {
        if (text.empty()) continue;
        bool relevant = false;
        for (const auto& p : info.params) relevant |= (p == name);
        if (!relevant)
            throw CLI::ValidationError("--" + name + " is not used by kind '" +
                                       o.kind + "'");
    }
    std::vector<std::vector<double>> grids;
    for (const auto& p : info.params) {
        const auto it = o.params.find(p);
        if (it == o.params.end() || it->second.empty())
            throw CLI::ValidationError("kind '" + o.kind + "' requires --" + p);
        std::vector<double> g = parse_range(it->second);
        if (!allow_ranges && g.size() != 1)
            throw CLI::ValidationError("--" + p +
                                       ": ranges are only accepted by 'table'");
        grids.push_back(std::move(g));
    }
    return grids;
}

Record base_record(const CommonOpts& o, const KindInfo& info,
                   const std::vector<double>& point) {
    Record rec;
    rec.kind = o.kind;
    rec.tol = o.tol;
    for (size_t i = 0; i < info.params.size(); ++i)
        echo_param(rec, info.params[i], point[i]);
    return rec;
}

IntegralSpec spec_for(const KindInfo& info, const std::vector<double>& point) {
    IntegralSpec spec;
    spec.kind = info.kind;
    for (size_t i = 0; i < info.params.size(); ++i)
        assign_param(spec, info.params[i], point[i]);
    return spec;
}

void fill_from_report(Record& rec, const EvalReport& r) {
    rec.method = method_name(r.method);
    rec.value = r.value;
    rec.abs_err_est = r.abs_err_est;
    rec.terms_used = r.terms_used;
    rec.converged = r.converged;
    rec.warnings = r.warnings;
}

class Emitter {
  public:
    Emitter(const std::string& format) : csv_(format == "csv") {
        if (csv_) std::cout << Record::csv_header() << '\n';
    }
    // Error records go to the error stream; everything else to stdout.
    bool emit(const Record& rec) {
        if (!rec.error.empty()) {
            std::cerr << (csv_ ? rec.to_csv() : rec.to_json()) << '\n';
            return false;
        }
        std::cout << (csv_ ? rec.to_csv() : rec.to_json()) << '\n';
        return rec.converged.value_or(true);
    }

  private:
    bool csv_;
};

Record evaluate_point(const CommonOpts& o, const KindInfo& info,
                      const std::vector<double>& point, ForceMethod force) {
    Record rec = base_record(o, info, point);
    const auto t0 = Clock::now();
    try {
        const EvalReport r = evaluate(spec_for(info, point),
                                      SeriesControl{o.tol, o.max_terms}, force);
        fill_from_report(rec, r);
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    rec.wall_time_us = elapsed_us(t0);
    return rec;
}

int run_eval(const CommonOpts& o) {
    const KindInfo& info = kind_table().at(o.kind);
    const auto grids = build_grids(o, info, false);
    std::vector<double> point;
    for (const auto& g : grids) point.push_back(g[0]);
    Emitter emitter(o.format);
    return emitter.emit(evaluate_point(o, info, point, force_from(o.force))) ? 0 : 1;
}

int run_compare(const CommonOpts& o) {
    const KindInfo& info = kind_table().at(o.kind);
    const auto grids = build_grids(o, info, false);
    std::vector<double> point;
    for (const auto& g : grids) point.push_back(g[0]);
    Emitter emitter(o.format);

    const Record primary = evaluate_point(o, info, point, ForceMethod::series);
    bool ok = emitter.emit(primary);
    if (!primary.error.empty()) return 1;

    Record reference = base_record(o, info, point);
    {
        const auto t0 = Clock::now();
        try {
            fill_from_report(reference,
                             evaluate_quadrature(spec_for(info, point), o.tol));
        } catch (const std::exception& e) {
            reference.error = e.what();
        }
        reference.wall_time_us = elapsed_us(t0);
    }
    ok &= emitter.emit(reference);
    if (!reference.error.empty()) return 1;

    Record diff = base_record(o, info, point);
    diff.method = "difference";
    const double va = *primary.value, vb = *reference.value;
    diff.abs_diff = std::abs(va - vb);
    const double scale = std::max(std::abs(va), std::abs(vb));
    diff.rel_diff = scale > 0.0 ? *diff.abs_diff / scale : 0.0;
    diff.converged = *diff.rel_diff <= o.agree_tol;
    ok &= emitter.emit(diff);
    return ok ? 0 : 1;
}

int run_table(const CommonOpts& o) {
    const KindInfo& info = kind_table().at(o.kind);
    const auto grids = build_grids(o, info, true);

    std::vector<std::vector<double>> points;
    std::vector<double> point(grids.size());
    // Cartesian product, last parameter fastest (lexicographic order).
    const std::function<void(size_t)> expand = [&](size_t level) {
        if (level == grids.size()) {
            points.push_back(point);
            return;
        }
        for (const double v : grids[level]) {
            point[level] = v;
            expand(level + 1);
        }
    };
    expand(0);

    // Rows are independent pure evaluations: compute them in parallel, then
    // emit strictly in row order.
    std::vector<Record> rows(points.size());
    const ForceMethod force = force_from(o.force);
    const size_t jobs =
        std::min<size_t>(points.size(),
                         std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (size_t j = 0; j < jobs; ++j) {
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < points.size();
                 i = next.fetch_add(1))
                rows[i] = evaluate_point(o, info, points[i], force);
        }));
    }
    for (auto& f : futs) f.get();

    Emitter emitter(o.format);
    bool ok = true;
    for (const Record& rec : rows) ok &= emitter.emit(rec);
    return ok ? 0 : 1;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_range(const std::string& text) {
    const size_t c1 = text.find(':');
    if (c1 == std::string::npos) return {std::stod(text)};
    const size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw std::invalid_argument("range must be lo:hi:count, got '" + text + "'");
    const double lo = std::stod(text.substr(0, c1));
    const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const long count = std::stol(text.substr(c2 + 1));
    if (count < 1)
        throw std::invalid_argument("range count must be >= 1 in '" + text + "'");
    if (count == 1) {
        if (lo != hi)
            throw std::invalid_argument("range with count 1 needs lo == hi in '" +
                                        text + "'");
        return {lo};
    }
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (long i = 0; i < count; ++i)
        out.push_back(i == count - 1 ? hi : lo + static_cast<double>(i) * step);
    return out;
}

std::string Record::csv_header() {
    return "kind,a,b,a1,a2,a3,nu,m,x,tol,method,value,abs_err_est,terms_used,"
           "converged,abs_diff,rel_diff,warnings,error,wall_time_us";
}

std::string Record::to_csv() const {
    std::string out = csv_quote(kind);
    for (const auto* v : {&a, &b, &a1, &a2, &a3, &nu, &m, &x}) {
        out += ',';
        append_csv_number(out, *v);
    }
    out += ',';
    out += format_double(tol);
    out += ',';
    out += csv_quote(method);
    out += ',';
    if (value) out += format_double(*value);
    out += ',';
    if (abs_err_est) out += format_double(*abs_err_est);
    out += ',';
    if (terms_used) out += std::to_string(*terms_used);
    out += ',';
    if (converged) out += (*converged ? "true" : "false");
    out += ',';
    append_csv_number(out, abs_diff);
    out += ',';
    append_csv_number(out, rel_diff);
    out += ',';
    out += csv_quote(join_warnings(warnings));
    out += ',';
    out += csv_quote(error);
    out += ',';
    out += std::to_string(wall_time_us);
    return out;
}

std::string Record::to_json() const {
    std::string out = "{\"kind\":\"" + json_escape(kind) + "\"";
    const char* names[] = {"a", "b", "a1", "a2", "a3", "nu", "m", "x"};
    const std::optional<double>* vals[] = {&a, &b, &a1, &a2, &a3, &nu, &m, &x};
    for (int i = 0; i < 8; ++i) {
        out += ",\"";
        out += names[i];
        out += "\":";
        append_json_number(out, *vals[i]);
    }
    out += ",\"tol\":" + format_double(tol);
    out += ",\"method\":";
    out += method.empty() ? "null" : "\"" + json_escape(method) + "\"";
    out += ",\"value\":";
    append_json_number(out, value);
    out += ",\"abs_err_est\":";
    append_json_number(out, abs_err_est);
    out += ",\"terms_used\":";
    out += terms_used ? std::to_string(*terms_used) : "null";
    out += ",\"converged\":";
    out += converged ? (*converged ? "true" : "false") : "null";
    out += ",\"abs_diff\":";
    append_json_number(out, abs_diff);
    out += ",\"rel_diff\":";
    append_json_number(out, rel_diff);
    out += ",\"warnings\":[";
    for (size_t i = 0; i < warnings.size(); ++i) {
        if (i) out += ',';
        out += '"' + json_escape(warnings[i]) + '"';
    }
    out += "],\"error\":";
    out += error.empty() ? "null" : "\"" + json_escape(error) + "\"";
    out += ",\"wall_time_us\":" + std::to_string(wall_time_us);
    out += "}";
    return out;
}

int run(int argc, const char* const* argv) {
    CLI::App app{
        "ellgamma: elliptic-type and hyper-elliptic integrals via generalized "
        "Hermite polynomials and generalized Gamma functions"};
    app.require_subcommand(1);

    CommonOpts eval_opts, cmp_opts, table_opts;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "evaluate one integral; one record on stdout");
    add_common_options(eval_cmd, eval_opts, true, false);
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare",
        "evaluate by the primary path and by quadrature; emit both records "
        "plus their difference");
    add_common_options(cmp_cmd, cmp_opts, false, true);
    CLI::App* table_cmd = app.add_subcommand(
        "table",
        "Cartesian sweep over lo:hi:count parameter ranges; one record per "
        "grid point in lexicographic order");
    add_common_options(table_cmd, table_opts, true, false);

    try {
        app.parse(argc, argv);
        if (eval_cmd->parsed()) return run_eval(eval_opts);
        if (cmp_cmd->parsed()) return run_compare(cmp_opts);
        return run_table(table_opts);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "ellgamma: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ellgamma::cli
