#include "cesaro/corpus.hpp"

namespace cesaro {

std::vector<LabeledMeasure> labeled_corpus() {
    // Box masses: Lebesgue h; (1-x)^alpha dx  h^(alpha+1)/(alpha+1);
    // dyadic atoms with weights 2^(-k w)  ~ h^w; a point mass vanishes near 1.
    return {
        {"lebesgue", Measure::lebesgue(), 1.0, true},
        {"lebesgue", Measure::lebesgue(), 0.5, true},
        {"power_density(-0.5)", Measure::power_density(-0.5), 0.5, true},
        {"power_density(1)", Measure::power_density(1.0), 2.0, true},
        {"power_density(3)", Measure::power_density(3.0), 4.0, true},
        {"dyadic(1)", Measure::dyadic_atoms(1.0), 1.0, true},
        {"dyadic(1.5)", Measure::dyadic_atoms(1.5), 1.5, true},
        {"point_mass(0.5)", Measure::atoms({0.5}, {1.0}), 2.0, true},
        {"point_mass(0)", Measure::atoms({0.0}, {1.0}), 1.0, true},
        {"lebesgue+dyadic(1)", Measure::mixture({Measure::lebesgue(), Measure::dyadic_atoms(1.0)}), 1.0, true},
        {"lebesgue", Measure::lebesgue(), 1.5, false},
        {"lebesgue", Measure::lebesgue(), 2.0, false},
        {"dyadic(0.5)", Measure::dyadic_atoms(0.5), 1.0, false},
        {"dyadic(0.75)", Measure::dyadic_atoms(0.75), 1.5, false},
        {"power_density(0.5)", Measure::power_density(0.5), 2.0, false},
    };
}

std::vector<TestFunction> hinf_test_functions(std::size_t order) {
    return {
        {"1", PowerSeries::constant(1.0)},
        {"z^3", PowerSeries::monomial(3)},
        {"blaschke(0.5)", blaschke_factor(0.5, order)},
        {"blaschke{0.5,-0.4i,0.3+0.6i}", blaschke_product({0.5, complex(0.0, -0.4), complex(0.3, 0.6)}, order)},
    };
}

}  // namespace cesaro
