#include "cesaro/harness.hpp"

#include "cesaro/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

namespace cesaro {
namespace {

using json = nlohmann::ordered_json;

json report_json(const ScenarioReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
    json traces = json::array();
    for (const auto& t : r.traces) traces.push_back({{"name", t.name}, {"levels", t.levels}, {"values", t.values}});
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    return {{"schema", ScenarioReport::kSchema},
            {"scenario", r.scenario},
            {"statement", r.statement},
            {"inputs", inputs},
            {"checks", checks},
            {"pass", r.pass()},
            {"traces", traces}};
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("report: missing '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("report: bad '") + key + "': " + e.what());
    }
}

ScenarioReport report_from(const json& j) {
    if (!j.is_object()) throw ValidationError("report: expected an object");
    if (field<int>(j, "schema") != ScenarioReport::kSchema) throw ValidationError("report: unsupported schema");
    ScenarioReport r;
    r.scenario = field<std::string>(j, "scenario");
    r.statement = field<std::string>(j, "statement");
    r.inputs = field<std::map<std::string, std::string>>(j, "inputs");
    for (const auto& c : field<json>(j, "checks"))
        r.checks.push_back({field<std::string>(c, "name"), field<std::string>(c, "expected"),
                            field<std::string>(c, "observed"), field<bool>(c, "pass")});
    for (const auto& t : field<json>(j, "traces"))
        r.traces.push_back(
            {field<std::string>(t, "name"), field<std::vector<int>>(t, "levels"), field<std::vector<double>>(t, "values")});
    if (field<bool>(j, "pass") != r.pass()) throw ValidationError("report: 'pass' disagrees with its checks");
    return r;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("report: ") + e.what());
    }
}

}  // namespace

bool ScenarioReport::pass() const noexcept {
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void ScenarioReport::add(std::string name, std::string expected, std::string observed, bool ok) {
    checks.push_back({std::move(name), std::move(expected), std::move(observed), ok});
}

void ScenarioReport::add_trace(std::string name, const GrowthReport& r) { add_trace(std::move(name), r.levels, r.values); }

void ScenarioReport::add_trace(std::string name, std::vector<int> levels, std::vector<double> values) {
    for (auto& ch : name) {
        const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                          ch == '.' || ch == '-' || ch == '_';
        if (!keep) ch = '_';
    }
    traces.push_back({std::move(name), std::move(levels), std::move(values)});
}

std::string to_json(const ScenarioReport& r) { return report_json(r).dump(2); }

ScenarioReport report_from_json(const std::string& text) { return report_from(parse(text)); }

std::string to_json(const std::vector<ScenarioReport>& reports) {
    json arr = json::array();
    bool all = !reports.empty();
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
        all = all && r.pass();
    }
    return json{{"schema", ScenarioReport::kSchema}, {"pass", all}, {"reports", arr}}.dump(2);
}

std::vector<ScenarioReport> reports_from_json(const std::string& text) {
    const json j = parse(text);
    if (field<int>(j, "schema") != ScenarioReport::kSchema) throw ValidationError("report: unsupported schema");
    std::vector<ScenarioReport> out;
    for (const auto& r : field<json>(j, "reports")) out.push_back(report_from(r));
    return out;
}

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids{
        "carleson-equivalence", "large-r-divergence", "cesaro-lebesgue", "kernel-series-membership",
        "cesaro-range-qp",      "cesaro-s-range",     "kernel-bands",
    };
    return ids;
}

namespace {

ScenarioReport run_one(const std::string& id) {
    if (id == "carleson-equivalence") return run_carleson_equivalence(labeled_corpus());
    if (id == "large-r-divergence") {
        ScenarioReport r = run_large_r_divergence(0.5, 1.0, {0.5, 0.75});
        try {
            run_large_r_divergence(0.5, 1.0, {0.25});
            r.add("r=0.25 rejected", "ParameterError", "accepted", false);
        } catch (const ParameterError&) {
            r.add("r=0.25 rejected", "ParameterError", "ParameterError", true);
        }
        return r;
    }
    if (id == "cesaro-lebesgue") return run_cesaro_lebesgue();
    if (id == "kernel-series-membership") return run_kernel_series_membership(labeled_corpus());
    if (id == "cesaro-range-qp") return run_cesaro_range_qp();
    if (id == "cesaro-s-range") return run_cesaro_s_range();
    if (id == "kernel-bands") return run_kernel_bands();
    throw ValidationError("unknown scenario '" + id + "'");
}

}  // namespace

std::vector<ScenarioReport> run_scenario(const std::string& id, bool parallel) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = scenario_ids();
    else if (std::find(scenario_ids().begin(), scenario_ids().end(), id) != scenario_ids().end())
        ids = {id};
    else
        throw ValidationError("unknown scenario '" + id + "'");

    std::vector<ScenarioReport> reports(ids.size());
    if (!parallel || ids.size() == 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) reports[i] = run_one(ids[i]);
        return reports;
    }
    std::vector<std::exception_ptr> errors(ids.size());
    {
        std::vector<std::jthread> workers;
        for (std::size_t i = 0; i < ids.size(); ++i)
            workers.emplace_back([&, i] {
                try {
                    reports[i] = run_one(ids[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

}  // namespace cesaro
