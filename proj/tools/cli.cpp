#include "cli.hpp"

#include "cesaro/carleson.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/harness.hpp"
#include "cesaro/io.hpp"
#include "cesaro/spaces.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace cesaro::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + path.string());
    f << text;
}

void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

void write_trace(const fs::path& dir, const std::string& stem, const std::vector<int>& levels,
                 const std::vector<double>& values) {
    std::ostringstream os;
    write_trace_csv(os, levels, values);
    write_file(dir / (stem + ".csv"), os.str());
}

std::string criterion_stem(const CriterionResult& c) {
    std::string stem = c.r ? c.name + "_r" + format_double(*c.r) : c.name;
    for (auto& ch : stem)
        if (ch == '/' || ch == ' ') ch = '_';
    return stem;
}

struct Common {
    std::string out;
    std::string trace_dir;
};

void add_common(CLI::App* sub, Common& c, bool traces) {
    sub->add_option("--out", c.out, "write the result to this file instead of stdout");
    if (traces) sub->add_option("--trace-dir", c.trace_dir, "directory for level,value CSV traces");
}

// --- moments ---------------------------------------------------------------

struct MomentsArgs {
    Common common;
    std::string measure;
    std::size_t n = 0;
};

int run_moments(const MomentsArgs& a, std::ostream& out) {
    const MomentSequence m = moments(load_measure(a.measure), a.n);
    std::string text = "n,moment\n";
    for (std::size_t k = 0; k < m.values.size(); ++k) text += std::to_string(k) + "," + format_double(m.values[k]) + "\n";
    emit(out, a.common.out, text);
    return kOk;
}

// --- carleson --------------------------------------------------------------

struct CarlesonArgs {
    Common common;
    std::string measure;
    double s = 0.0;
    CarlesonConfig config;
};

int run_carleson(const CarlesonArgs& a, std::ostream& out) {
    const Measure mu = load_measure(a.measure);
    const CarlesonVerdict v = is_s_carleson(mu, a.s, a.config);

    json criteria = json::array();
    for (const auto& c : v.criteria) {
        json j{{"name", c.name}};
        if (c.r) j["r"] = *c.r;
        if (c.ok()) {
            j["verdict"] = to_string(c.report->verdict);
            if (std::isfinite(c.report->exponent))
                j["exponent"] = c.report->exponent;
            else
                j["exponent"] = "inf";  // the inner integral is infinite at every level
            j["levels"] = c.report->levels;
            j["values"] = c.report->values;
            if (!a.common.trace_dir.empty() && !c.report->levels.empty())
                write_trace(a.common.trace_dir, criterion_stem(c), c.report->levels, c.report->values);
        } else {
            j["error"] = c.error;
        }
        criteria.push_back(std::move(j));
    }
    const json doc{{"schema", ScenarioReport::kSchema},
                   {"measure", json::parse(measure_to_json(mu))},
                   {"s", v.s},
                   {"t", v.t},
                   {"consensus", to_string(v.consensus)},
                   {"criteria", criteria}};
    emit(out, a.common.out, doc.dump(2) + "\n");
    return kOk;
}

// --- transform -------------------------------------------------------------

struct TransformArgs {
    Common common;
    std::string measure;
    std::string input;
    std::optional<double> s;
    std::size_t order = 400;
};

int run_transform(const TransformArgs& a, std::ostream& out) {
    const Measure mu = load_measure(a.measure);
    const PowerSeries f = a.input.empty() ? PowerSeries::constant(1.0) : load_coefficients(a.input);
    const PowerSeries g = a.s ? cesaro_mu_s(f, mu, *a.s, a.order) : cesaro_mu(f, mu, a.order);
    std::ostringstream os;
    write_coefficients(os, g);
    emit(out, a.common.out, os.str());
    return kOk;
}

// --- seminorm --------------------------------------------------------------

struct SeminormArgs {
    Common common;
    std::string space;
    std::string input;
    std::optional<double> p;
    int depth = kDefaultDepth;
};

int run_seminorm(const SeminormArgs& a, std::ostream& out) {
    const bool needs_p = a.space == "qp" || a.space == "lambda";
    if (needs_p && !a.p) throw UsageError("--space " + a.space + " needs --p");
    if (a.space == "qp" && *a.p <= 0.0)
        throw UsageError("--p must be > 0 for qp; p = 0 is the Dirichlet space, where C_mu(1) for Lebesgue "
                         "measure already fails (run `verify --scenario cesaro-lebesgue`)");
    const PowerSeries f = load_coefficients(a.input);

    SeminormEstimate e;
    if (a.space == "bloch")
        e = bloch_seminorm(f, a.depth);
    else if (a.space == "qp")
        e = qp_seminorm(f, *a.p, a.depth);
    else if (a.space == "lambda")
        e = lambda_norm(f, *a.p, a.depth);
    else
        e = {hinf_norm(f), {}, {}, true};

    json doc{{"schema", ScenarioReport::kSchema}, {"space", a.space}};
    if (a.p) doc["p"] = *a.p;
    doc["value"] = e.value;
    doc["levels"] = e.levels;
    doc["trace"] = e.trace;
    doc["converged"] = e.converged;
    if (!a.common.trace_dir.empty() && !e.levels.empty()) write_trace(a.common.trace_dir, a.space, e.levels, e.trace);
    emit(out, a.common.out, doc.dump(2) + "\n");
    return e.converged ? kOk : kNumeric;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::string scenario = "all";
    bool parallel = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const std::vector<ScenarioReport> reports = run_scenario(a.scenario, a.parallel);
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.pass();
        for (const auto& c : r.checks)
            if (!c.pass) err << r.scenario << ": FAIL " << c.name << " (expected " << c.expected << ", got "
                             << c.observed << ")\n";
        if (!a.common.trace_dir.empty())
            for (const auto& t : r.traces) write_trace(fs::path(a.common.trace_dir) / r.scenario, t.name, t.levels, t.values);
    }
    emit(out, a.common.out, to_json(reports) + "\n");
    return ok ? kOk : kScenarioFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cesaro-type operators, Carleson criteria and seminorm estimates", "cesaro"};
    app.require_subcommand(1);

    MomentsArgs mo;
    auto* moments_cmd = app.add_subcommand("moments", "moments mu_0..mu_n of a measure as CSV");
    moments_cmd->add_option("--measure", mo.measure, "measure config (JSON)")->required()->check(CLI::ExistingFile);
    moments_cmd->add_option("--n", mo.n, "highest moment index")->required();
    add_common(moments_cmd, mo.common, false);

    CarlesonArgs ca;
    std::vector<double> r_values;
    auto* carleson_cmd = app.add_subcommand("carleson", "run every s-Carleson criterion on a measure");
    carleson_cmd->add_option("--measure", ca.measure, "measure config (JSON)")->required()->check(CLI::ExistingFile);
    carleson_cmd->add_option("--s", ca.s, "order s > 0")->required();
    carleson_cmd->add_option("--t", ca.config.t, "auxiliary exponent t > 0")->capture_default_str();
    carleson_cmd->add_option("--r", r_values, "auxiliary exponents 0 <= r < s (repeatable; default 0 and s/2)");
    carleson_cmd->add_option("--depth", ca.config.depth, "dyadic levels")->capture_default_str();
    carleson_cmd->add_option("--angles", ca.config.angles, "angles for the complex-parameter criterion")
        ->capture_default_str();
    add_common(carleson_cmd, ca.common, true);

    TransformArgs tr;
    double transform_s = 0.0;
    auto* transform_cmd = app.add_subcommand("transform", "apply C_mu (or C_mu,s with --s) to a coefficient file");
    transform_cmd->add_option("--measure", tr.measure, "measure config (JSON)")->required()->check(CLI::ExistingFile);
    transform_cmd->add_option("--input", tr.input, "coefficient file; default is f = 1")->check(CLI::ExistingFile);
    auto* s_opt = transform_cmd->add_option("--s", transform_s, "order s > 0 of the generalized operator");
    transform_cmd->add_option("--order", tr.order, "truncation order N")->capture_default_str();
    add_common(transform_cmd, tr.common, false);

    SeminormArgs se;
    double seminorm_p = 0.0;
    auto* seminorm_cmd = app.add_subcommand("seminorm", "estimate a norm or seminorm of a coefficient file");
    seminorm_cmd->add_option("--space", se.space, "bloch, qp, lambda or hinf")
        ->required()
        ->check(CLI::IsMember({"bloch", "qp", "lambda", "hinf"}));
    seminorm_cmd->add_option("--input", se.input, "coefficient file")->required()->check(CLI::ExistingFile);
    auto* p_opt = seminorm_cmd->add_option("--p", seminorm_p, "exponent (qp: 0 < p; lambda: p > 1)");
    seminorm_cmd->add_option("--depth", se.depth, "dyadic levels")->capture_default_str();
    add_common(seminorm_cmd, se.common, true);

    VerifyArgs ve;
    auto* verify_cmd = app.add_subcommand("verify", "run verification scenarios and print a JSON report");
    std::vector<std::string> choices = scenario_ids();
    choices.insert(choices.begin(), "all");
    verify_cmd->add_option("--scenario", ve.scenario, "scenario id or 'all'")
        ->capture_default_str()
        ->check(CLI::IsMember(choices));
    verify_cmd->add_flag("--parallel", ve.parallel, "run scenarios on separate threads");
    add_common(verify_cmd, ve.common, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*moments_cmd) return run_moments(mo, out);
        if (*carleson_cmd) {
            ca.config.r_values = r_values;
            return run_carleson(ca, out);
        }
        if (*transform_cmd) {
            if (*s_opt) tr.s = transform_s;
            return run_transform(tr, out);
        }
        if (*seminorm_cmd) {
            if (*p_opt) se.p = seminorm_p;
            return run_seminorm(se, out);
        }
        return run_verify(ve, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "out of domain: " << e.what() << "\n";
        return kUsage;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace cesaro::cli
