#include "doctest.h"

#include "cesaro/errors.hpp"
#include "cesaro/harness.hpp"

using namespace cesaro;

TEST_SUITE("harness") {

TEST_CASE("report pass flag follows its checks") {
    ScenarioReport r;
    CHECK_FALSE(r.pass());
    r.add("a", "1", "1", true);
    CHECK(r.pass());
    r.add("b", "1", "2", false);
    CHECK_FALSE(r.pass());
}

TEST_CASE("report JSON round-trips") {
    ScenarioReport r;
    r.scenario = "demo";
    r.statement = "a statement";
    r.inputs = {{"s", "0.5"}, {"measure", "lebesgue"}};
    r.add("check", "x", "x", true);
    r.add_trace("trace one/with spaces", {0, 1, 2}, {1.0, 0.1, 1.0 / 3.0});
    CHECK(r.traces.front().name == "trace_one_with_spaces");

    const std::string text = to_json(r);
    CHECK(text.find("\"schema\": 1") != std::string::npos);
    CHECK(report_from_json(text) == r);
    CHECK(to_json(report_from_json(text)) == text);

    const std::vector<ScenarioReport> many{r, r};
    CHECK(reports_from_json(to_json(many)) == many);
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(report_from_json("[]"), ValidationError);
    CHECK_THROWS_AS(report_from_json("{\"schema\": 2}"), ValidationError);
    ScenarioReport r;
    r.scenario = "x";
    r.add("c", "1", "2", false);
    std::string text = to_json(r);
    text.replace(text.find("\"pass\": false\n"), 14, "\"pass\": true\n");
    CHECK_THROWS_AS(report_from_json(text), ValidationError);
}

TEST_CASE("cheap scenarios pass") {
    CHECK(run_cesaro_lebesgue().pass());
    CHECK(run_large_r_divergence(0.5, 1.0, {0.5, 0.75}).pass());
    CHECK(run_large_r_divergence(2.0, 0.5, {2.0, 3.0}).pass());
    CHECK(run_kernel_bands().pass());
}

TEST_CASE("scenario guards") {
    CHECK_THROWS_AS(run_large_r_divergence(0.5, 1.0, {0.25}), ParameterError);
    QpScenarioConfig c;
    c.p_values = {0.0};
    CHECK_THROWS_AS(run_cesaro_range_qp(c), ParameterError);
    c.p_values = {2.0};
    CHECK_THROWS_AS(run_cesaro_range_qp(c), ParameterError);
    CHECK_THROWS_AS(run_cesaro_s_range({{0.5, 1.5}}), ParameterError);
    CHECK_THROWS_AS(run_scenario("nope"), ValidationError);
    CHECK(scenario_ids().size() == 7);
}

TEST_CASE("repeated registry runs are identical") {
    const auto a = run_scenario("kernel-bands");
    const auto b = run_scenario("kernel-bands");
    CHECK(to_json(a) == to_json(b));
}

}
