#include "doctest.h"

#include "cesaro/corpus.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/spaces.hpp"

#include <cmath>

using namespace cesaro;

namespace {

PowerSeries geometric(std::size_t order, double ratio = 1.0) {
    std::vector<double> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = std::pow(ratio, static_cast<double>(n));
    return PowerSeries::from_real(c);
}

}  // namespace

TEST_SUITE("spaces") {

TEST_CASE("integral means") {
    // Parseval: M_2(1/2, 1/(1-z)) = (1 - 1/4)^-1/2
    CHECK(Mp(geometric(200), 0.5, 2.0) == doctest::Approx(1.154700538379251).epsilon(1e-12));
    // M_4(1/2, 1 + z)^4 = 1 + 4r^2 + r^4; M_1(1/2, 1/(1-z)) = 2F1(1/2,1/2;1;1/4) (mpmath)
    CHECK(Mp(PowerSeries{1.0, 1.0}, 0.5, 4.0) == doctest::Approx(1.1983908634642152).epsilon(1e-12));
    CHECK(Mp(geometric(200), 0.5, 1.0) == doctest::Approx(1.0731820071493644).epsilon(1e-10));
    CHECK_THROWS_AS(Mp(PowerSeries{1.0}, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(Mp(PowerSeries{1.0}, 0.5, 0.5), ParameterError);
}

TEST_CASE("certified depth") {
    CHECK(certified_depth(4096) == 9);
    CHECK(certified_depth(std::size_t{1} << 17, 6) == 11);
}

TEST_CASE("Bloch seminorm") {
    const SeminormEstimate z = bloch_seminorm(PowerSeries::monomial(1));
    CHECK(z.value == doctest::Approx(1.0));
    CHECK(z.converged);
    // log(1/(1-z)): (1 - r^2)/(1 - r) = 1 + r increases to 2
    std::vector<double> c(1 << 16);
    for (std::size_t n = 1; n < c.size(); ++n) c[n] = 1.0 / n;
    const SeminormEstimate l = bloch_seminorm(PowerSeries::from_real(c));
    CHECK(l.converged);
    CHECK(l.value == doctest::Approx(2.0).epsilon(0.01));
    CHECK(l.value <= 2.0);
}

TEST_CASE("Q_p seminorm") {
    // for f = z the supremum is at a = 0: int (1 - |z|^2)^p dA = 1/(p + 1)
    const SeminormEstimate e1 = qp_seminorm(PowerSeries::monomial(1), 1.0, 10);
    CHECK(e1.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(qp_seminorm(PowerSeries::monomial(1), 1.5, 10).value == doctest::Approx(0.4).epsilon(1e-12));
    CHECK_THROWS_AS(qp_seminorm(PowerSeries::monomial(1), 0.0), ParameterError);
}

TEST_CASE("Q_p evaluators agree") {
    const PowerSeries f = blaschke_factor(complex(0.3, 0.4), 256);
    QpOptions grid;
    grid.method = QpMethod::Grid;
    const SeminormEstimate a = qp_seminorm(f, 1.0, 4);
    const SeminormEstimate b = qp_seminorm(f, 1.0, 4, grid);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) CHECK(a.trace[i] == doctest::Approx(b.trace[i]).epsilon(1e-5));
}

TEST_CASE("mean Lipschitz norm") {
    const SeminormEstimate e = lambda_norm(PowerSeries::monomial(1), 2.0, 10);
    CHECK(e.trace.front() == 1.0);
    CHECK(e.value == doctest::Approx(1.0));
    CHECK_THROWS_AS(lambda_norm(PowerSeries::monomial(1), 1.0), ParameterError);
}

TEST_CASE("coefficient decay") {
    std::vector<double> harmonic(4097), root(4097);
    for (std::size_t n = 0; n <= 4096; ++n) {
        harmonic[n] = 1.0 / (n + 1.0);
        root[n] = 1.0 / std::sqrt(n + 1.0);
    }
    const GrowthReport h = coeff_decay_test(PowerSeries::from_real(harmonic));
    CHECK(h.bounded());
    CHECK(h.values.back() == doctest::Approx(4096.0 / 4097.0));
    const GrowthReport r = coeff_decay_test(PowerSeries::from_real(root));
    CHECK_FALSE(r.bounded());
    CHECK(r.exponent == doctest::Approx(0.5).epsilon(0.02));

    CHECK(coeff_decay_test(f_mu_s(Measure::power_density(0.5), 1.5, 4096)).bounded());
    CHECK_THROWS_AS(coeff_decay_test(PowerSeries{1.0, 2.0, 1.0, 0.5, 0.2, 0.1, 0.1, 0.1, 0.1}), ValidationError);
    CHECK_THROWS_AS(coeff_decay_test(PowerSeries{1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(coeff_decay_test(PowerSeries{1.0, 0.5}), ParameterError);
    CHECK(coeff_growth(PowerSeries{1.0, 2.0, 1.0, 0.5, 0.2, 0.1, 0.1, 0.1, 0.1}).values.size() == 4);
}

TEST_CASE("Q_p coefficient criterion") {
    CHECK(qp_coeff_criterion(cesaro_mu(PowerSeries::constant(1.0), Measure::lebesgue(), 2048), 1.0).bounded());
    CHECK_FALSE(qp_coeff_criterion(cesaro_mu(PowerSeries::constant(1.0), Measure::dyadic_atoms(0.5), 2048), 1.0)
                    .bounded());
    CHECK_THROWS_AS(qp_coeff_criterion(PowerSeries{complex(0.0, 1.0), 1.0}, 1.0), ValidationError);
}

TEST_CASE("H-infinity norm of test functions") {
    for (const auto& f : hinf_test_functions(4096)) {
        CAPTURE(f.name);
        const double h = hinf_norm(f.series);
        CHECK(h <= 1.001);
        CHECK(h >= 0.99);
    }
    CHECK(hinf_norm(PowerSeries{1.0, 1.0}) == doctest::Approx(2.0 - std::ldexp(1.0, -12)));
}

TEST_CASE("circle kernel") {
    // mpmath: mean of |1 - z e^-it|^-(1 + beta)
    CHECK(circle_kernel_check(0.9, 0.5).computed == doctest::Approx(2.4880313712810638).epsilon(1e-9));
    CHECK(circle_kernel_check(complex(0.0, 0.5), 0.0).computed == doctest::Approx(1.0731820071493644).epsilon(1e-9));
    for (double beta : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
        for (int j = 0; j <= 16; j += 4) {
            const KernelCheck k = circle_kernel_check(1.0 - std::ldexp(1.0, -j), beta);
            CHECK(k.converged);
            CHECK(k.ratio >= 1.0 / 20.0);
            CHECK(k.ratio <= 20.0);
        }
    }
    CHECK_THROWS_AS(circle_kernel_check(1.0, 0.0), DomainError);
}

TEST_CASE("two-point area kernel") {
    for (double s : {0.0, 0.5, 2.0}) {
        const KernelCheck k = two_kernel_check(0.0, 0.0, s, 1.5 + s, 1.5);
        CHECK(k.computed == doctest::Approx(1.0 / (s + 1.0)).epsilon(1e-10));
    }
    const KernelCheck c1 = two_kernel_check(0.9375, 0.9375, 0.0, 1.5, 1.5);
    CHECK(c1.ratio > 0.5);
    CHECK(c1.ratio < 2.0);
    const KernelCheck c2 = two_kernel_check(0.9375, 0.0, 0.0, 3.0, 1.0);
    CHECK(c2.ratio > 0.5);
    CHECK(c2.ratio < 2.0);
    CHECK_THROWS_AS(two_kernel_check(0.5, 0.5, 0.0, 1.0, 0.5), ParameterError);
}

}

TEST_SUITE("spaces") {

TEST_CASE("coefficient decay agrees with the Bloch flag") {
    const std::size_t n = std::size_t{1} << 16;
    const PowerSeries good = cesaro_mu(PowerSeries::constant(1.0), Measure::lebesgue(), n);
    const PowerSeries bad = cesaro_mu(PowerSeries::constant(1.0), Measure::dyadic_atoms(0.5), n);
    CHECK(coeff_decay_test(good).bounded() == bloch_seminorm(good).converged);
    CHECK(coeff_decay_test(bad).bounded() == bloch_seminorm(bad).converged);
    CHECK_FALSE(coeff_decay_test(bad).bounded());
}

TEST_CASE("Q_p seminorm does not increase with p") {
    // (1 - |sigma_a|^2)^p decreases in p pointwise; the spaces grow with p
    for (const auto& f : {PowerSeries::monomial(1), PowerSeries::monomial(2), blaschke_factor(0.5, 512)}) {
        const double a = qp_seminorm(f, 1.0, 6).value, b = qp_seminorm(f, 1.5, 6).value;
        CHECK(b <= a * (1.0 + 1e-12));
    }
}

}
