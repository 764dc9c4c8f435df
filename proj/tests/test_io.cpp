#include "doctest.h"

#include "cesaro/errors.hpp"
#include "cesaro/io.hpp"

#include <sstream>

using namespace cesaro;

TEST_SUITE("io") {

TEST_CASE("format_double round-trips") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.2) == "0.2");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("measure configs") {
    CHECK(measure_from_json(R"({"type": "lebesgue"})") == Measure::lebesgue());
    CHECK(measure_from_json(R"({"type": "power_density", "alpha": -0.5})") == Measure::power_density(-0.5));
    CHECK(measure_from_json(R"({"type": "dyadic", "weight_exponent": 0.5, "count": 10})") ==
          Measure::dyadic_atoms(0.5, 10));
    const Measure mix = Measure::mixture(
        {Measure::atoms({0.25, 0.5}, {1.0, 2.0}), Measure::power_density(1.0, 3.0), Measure::lebesgue()});
    CHECK(measure_from_json(measure_to_json(mix)) == mix);

    CHECK_THROWS_AS(measure_from_json("{"), ValidationError);
    CHECK_THROWS_AS(measure_from_json(R"({"type": "gaussian"})"), ValidationError);
    CHECK_THROWS_AS(measure_from_json(R"({"type": "power_density"})"), ValidationError);
    CHECK_THROWS_AS(measure_from_json(R"({"type": "power_density", "alpha": "x"})"), ValidationError);
    CHECK_THROWS_AS(measure_from_json(R"({"type": "power_density", "alpha": -2})"), ValidationError);
    CHECK_THROWS_AS(measure_from_json(R"({"type": "atomic", "points": [1.5], "weights": [1]})"), ValidationError);
    CHECK_THROWS_AS(load_measure("/nonexistent/measure.json"), ValidationError);
}

TEST_CASE("coefficient files") {
    std::istringstream in("# header\n1\n0.5 -0.25\n\n  2e-3 0\n");
    const PowerSeries f = read_coefficients(in);
    REQUIRE(f.order() == 2);
    CHECK(f[1] == complex(0.5, -0.25));
    CHECK(f[2] == complex(2e-3, 0.0));

    std::ostringstream out;
    write_coefficients(out, f);
    std::istringstream back(out.str());
    CHECK(read_coefficients(back) == f);

    std::istringstream bad("1 2 3\n");
    CHECK_THROWS_AS(read_coefficients(bad), ValidationError);
    std::istringstream junk("abc\n");
    CHECK_THROWS_AS(read_coefficients(junk), ValidationError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_coefficients(empty), ValidationError);
}

TEST_CASE("trace CSV") {
    std::ostringstream out;
    write_trace_csv(out, {0, 1}, {1.5, 0.25});
    CHECK(out.str() == "level,value\n0,1.5\n1,0.25\n");
}

}
