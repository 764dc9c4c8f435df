#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using cesaro::cli::cli_main;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string measures = CESARO_SOURCE_DIR "/measures/";

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cesaro_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("moments prints CSV") {
    const Run r = run({"moments", "--measure", measures + "lebesgue.json", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,moment\n0,1\n1,0.5\n2,0.3333333333333333\n3,0.25\n4,0.2\n");
}

TEST_CASE("carleson reports a consensus and writes traces") {
    const fs::path dir = scratch("carleson");
    const Run r = run({"carleson", "--measure", measures + "lebesgue.json", "--s", "2", "--trace-dir", dir.string()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["consensus"] == "NotCarleson");
    CHECK(j["criteria"].size() == 7);
    CHECK(fs::exists(dir / "box.csv"));
    std::ifstream box(dir / "box.csv");
    std::string header;
    std::getline(box, header);
    CHECK(header == "level,value");
    fs::remove_all(dir);
}

TEST_CASE("carleson on the committed examples") {
    CHECK(nlohmann::json::parse(run({"carleson", "--measure", measures + "power_density.json", "--s", "0.5"}).out)
              ["consensus"] == "Carleson");
    CHECK(nlohmann::json::parse(run({"carleson", "--measure", measures + "dyadic_atoms.json", "--s", "1"}).out)
              ["consensus"] == "NotCarleson");
}

TEST_CASE("transform and seminorm") {
    const fs::path dir = scratch("transform");
    fs::create_directories(dir);
    const std::string coeffs = (dir / "g.txt").string();
    Run t = run({"transform", "--measure", measures + "lebesgue.json", "--order", "1024", "--out", coeffs});
    CHECK(t.code == 0);
    std::ifstream in(coeffs);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    CHECK(first == "1 0");
    CHECK(second == "0.5 0");

    // 1024 coefficients resolve too few levels for the sup to settle
    const Run short_run = run({"seminorm", "--space", "bloch", "--input", coeffs});
    CHECK(short_run.code == 3);
    CHECK(nlohmann::json::parse(short_run.out)["converged"] == false);

    t = run({"transform", "--measure", measures + "lebesgue.json", "--order", "65536", "--out", coeffs});
    const Run b = run({"seminorm", "--space", "bloch", "--input", coeffs});
    CHECK(b.code == 0);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["converged"] == true);
    CHECK(j["trace"].size() == j["levels"].size());

    const Run h = run({"seminorm", "--space", "hinf", "--input", coeffs});
    CHECK(h.code == 0);

    CHECK(run({"seminorm", "--space", "qp", "--input", coeffs}).code == 2);
    const Run p0 = run({"seminorm", "--space", "qp", "--p", "0", "--input", coeffs});
    CHECK(p0.code == 2);
    CHECK(p0.err.find("cesaro-lebesgue") != std::string::npos);
    CHECK(run({"seminorm", "--space", "lambda", "--p", "1", "--input", coeffs}).code == 2);

    Run s = run({"transform", "--measure", measures + "lebesgue.json", "--s", "1", "--order", "8"});
    Run c = run({"transform", "--measure", measures + "lebesgue.json", "--order", "8"});
    CHECK(s.out == c.out);
    fs::remove_all(dir);
}

TEST_CASE("verify") {
    const fs::path dir = scratch("verify");
    const Run r = run({"verify", "--scenario", "cesaro-lebesgue", "--trace-dir", dir.string()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["reports"][0]["scenario"] == "cesaro-lebesgue");
    CHECK(fs::exists(dir / "cesaro-lebesgue" / "n_a_n.csv"));
    fs::remove_all(dir);
}

TEST_CASE("usage and validation errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--scenario", "nope"}).code == 2);
    CHECK(run({"moments", "--measure", "/nonexistent.json", "--n", "3"}).code == 2);
    CHECK(run({"carleson", "--measure", measures + "lebesgue.json", "--s", "1", "--r", "1"}).code == 2);
    CHECK(run({"carleson", "--measure", measures + "lebesgue.json", "--s", "1", "--t", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const fs::path dir = scratch("bad");
    fs::create_directories(dir);
    std::ofstream(dir / "bad.json") << R"({"type": "power_density", "alpha": -3})";
    const Run r = run({"moments", "--measure", (dir / "bad.json").string(), "--n", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("alpha") != std::string::npos);
    fs::remove_all(dir);
}
