#pragma once

#include "cesaro/carleson.hpp"
#include "cesaro/corpus.hpp"

#include <map>
#include <string>
#include <vector>

namespace cesaro {

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct TraceRecord {
    std::string name;  // also the CSV file stem
    std::vector<int> levels;
    std::vector<double> values;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct ScenarioReport {
    static constexpr int kSchema = 1;

    std::string scenario;
    std::string statement;  // the property the scenario exercises
    std::map<std::string, std::string> inputs;
    std::vector<CheckRecord> checks;
    std::vector<TraceRecord> traces;

    /// True iff every check passed (and there is at least one).
    bool pass() const noexcept;
    void add(std::string name, std::string expected, std::string observed, bool ok);
    void add_trace(std::string name, const GrowthReport& r);
    void add_trace(std::string name, std::vector<int> levels, std::vector<double> values);

    friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

/// JSON text (schema 1). Deterministic: no timestamps, fixed key order,
/// doubles printed round-trip exact.
std::string to_json(const ScenarioReport& r);
ScenarioReport report_from_json(const std::string& text);

/// Reports of several scenarios: {"schema": 1, "pass": ..., "reports": [...]}.
std::string to_json(const std::vector<ScenarioReport>& reports);
std::vector<ScenarioReport> reports_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Scenarios
// ---------------------------------------------------------------------------

/// Runs every criterion on mu at order s; passes iff all criteria produce a
/// verdict and the consensus matches the label.
ScenarioReport run_carleson_equivalence(const std::vector<LabeledMeasure>& corpus,
                                        const CarlesonConfig& config = {});

/// For mu = (1-x)^(s-1) dx and r >= s the integral condition's inner integral
/// is infinite while mu is s-Carleson. Throws ParameterError when r < s.
ScenarioReport run_large_r_divergence(double s, double t, const std::vector<double>& r_values);

/// C_mu(1) for Lebesgue measure is (1/z) log(1/(1-z)): exact coefficients
/// 1/(n+1), its value at 1/2, Bloch-type coefficient decay, and the
/// logarithmic growth of the Dirichlet sum.
ScenarioReport run_cesaro_lebesgue();

/// f_{mu,s} has coefficient decay O(1/n) exactly when mu is s-Carleson.
ScenarioReport run_kernel_series_membership(const std::vector<LabeledMeasure>& corpus);

struct QpScenarioConfig {
    std::vector<double> p_values{1.0, 1.5};
    std::size_t order = std::size_t{1} << 17;  // truncation for the Q_p seminorm
    std::size_t coeff_order = 4096;            // truncation for the coefficient criterion
};

/// C_mu maps bounded analytic functions into Q_p (0 < p < 2) iff mu is a
/// Carleson measure. Throws ParameterError for p outside (0, 2).
ScenarioReport run_cesaro_range_qp(const QpScenarioConfig& config = {});

struct SRangeCase {
    double s;
    double p;
};

/// C_{mu,s} maps bounded analytic functions into the mean Lipschitz space
/// and the Bloch space when mu is s-Carleson; f = 1 detects the converse.
ScenarioReport run_cesaro_s_range(const std::vector<SRangeCase>& cases = {{0.5, 3.0}, {1.0, 2.0}},
                                  std::size_t order = 4096);

/// Ratio bands for the circle-mean kernel estimate and the two-point area
/// kernel estimate.
ScenarioReport run_kernel_bands();

/// Scenario ids accepted by run_scenario, in execution order.
const std::vector<std::string>& scenario_ids();

/// Runs one scenario by id, or all of them for "all". Throws ValidationError
/// for an unknown id. With parallel = true independent scenarios run on
/// separate threads; the reports are identical either way.
std::vector<ScenarioReport> run_scenario(const std::string& id, bool parallel = false);

}  // namespace cesaro
