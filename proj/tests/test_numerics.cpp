#include "doctest.h"

#include "cesaro/errors.hpp"
#include "cesaro/numerics.hpp"

#include <cmath>

using namespace cesaro;

TEST_SUITE("numerics") {

TEST_CASE("Gauss-Legendre is exact for polynomials of degree 2n-1") {
    const GaussRule& g = gauss_legendre(8);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) sum += g.weights[i] * std::pow(g.nodes[i], 15);
    CHECK(sum == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Jacobi absorbs an endpoint singularity") {
    // mpmath: int_0^1 u^-0.5 cos(u) du
    const GaussRule& g = gauss_jacobi_left(20, -0.5);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) sum += g.weights[i] * std::cos(g.nodes[i]);
    CHECK(sum == doctest::Approx(1.8090484758005442).epsilon(1e-14));
    CHECK_THROWS(gauss_jacobi_left(10, -1.0));
}

TEST_CASE("quadrature against measures") {
    const auto one = [](double, double) { return 1.0; };
    CHECK(quad_measure(one, Measure::power_density(2.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    QuadOptions opts;
    opts.endpoint_power = -0.5;
    // int (1 - t)^-0.5 dt = 2
    CHECK(quad_measure(one, Measure::lebesgue(), opts) == doctest::Approx(2.0).epsilon(1e-10));

    const Measure atoms = Measure::atoms({0.25, 0.5}, {1.0, 3.0});
    CHECK(quad_measure([](double t, double) { return t; }, atoms) == doctest::Approx(1.75));

    const auto c = quad_measure_complex([](double t, double) { return complex(t, 1.0); }, Measure::lebesgue());
    CHECK(c.real() == doctest::Approx(0.5));
    CHECK(c.imag() == doctest::Approx(1.0));
}

TEST_CASE("non-integrable endpoint is reported as a numeric failure") {
    QuadOptions opts;
    opts.endpoint_power = -1.0;
    const auto r = integrate_measure([](double, double) { return 1.0; }, Measure::lebesgue(), opts);
    CHECK_FALSE(r.converged);
    REQUIRE(r.estimates.size() >= 2);
    CHECK(r.estimates.back() > r.estimates.front());
    try {
        quad_measure([](double, double) { return 1.0; }, Measure::power_density(-0.5), opts);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(e.estimates().size() == 2);
    }
}

TEST_CASE("growth classification") {
    std::vector<int> levels;
    std::vector<double> flat, grow, zeros;
    for (int j = 0; j < 12; ++j) {
        levels.push_back(j);
        flat.push_back(1.0 + 1.0 / (j + 1));
        grow.push_back(std::exp2(0.5 * j));
        zeros.push_back(0.0);
    }
    CHECK(make_growth_report(levels, flat).bounded());
    const GrowthReport g = make_growth_report(levels, grow);
    CHECK_FALSE(g.bounded());
    CHECK(g.exponent == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(make_growth_report(levels, zeros).bounded());
    CHECK_THROWS_AS(make_growth_report({0, 1, 2}, {1.0, 1.0, 1.0}), NumericError);
    CHECK_THROWS_AS(make_growth_report({0, 1, 2, 3}, {1.0, 1.0, NAN, 1.0}), NumericError);
}

TEST_CASE("sup over dyadic boundary grid") {
    const GrowthReport r = sup_on_dyadic_boundary(
        [](const BoundaryPoint& p) { return std::cos(p.angle) / p.gap; }, 8, 16);
    REQUIRE(r.levels.size() == 8);
    CHECK(r.levels.front() == 1);
    CHECK(r.values.back() == doctest::Approx(256.0));
    CHECK(r.exponent == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("area quadrature, dA normalized to 1") {
    const DiskGrid u = DiskGrid::uniform(32, 64);
    CHECK(disk_integral([](complex) { return 1.0; }, u) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(disk_integral([](complex z) { return std::norm(z); }, u) == doctest::Approx(0.5).epsilon(1e-13));
    const DiskGrid w = DiskGrid::weighted(32, 64, 1.5);
    CHECK(disk_integral([](complex) { return 1.0; }, w) == doctest::Approx(1.0 / 2.5).epsilon(1e-13));
}

}
