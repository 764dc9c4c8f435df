#pragma once

#include "cesaro/measure.hpp"
#include "cesaro/series.hpp"

#include <string>
#include <vector>

namespace cesaro {

/// A measure together with an order s and whether it is s-Carleson, known in
/// closed form from the box condition mu([1 - h, 1)) <= C h^s.
struct LabeledMeasure {
    std::string name;
    Measure measure;
    double s = 1.0;
    bool carleson = true;
};

/// Ten positive and five negative instances: Lebesgue, power densities,
/// dyadic atoms 1 - 2^-k with weights 2^(-k w), point masses and a mixture.
std::vector<LabeledMeasure> labeled_corpus();

struct TestFunction {
    std::string name;
    PowerSeries series;
};

/// Bounded analytic test functions truncated at the given order: 1, z^3, the
/// Blaschke factor (0.5 - z)/(1 - 0.5 z) and a three-zero Blaschke product.
std::vector<TestFunction> hinf_test_functions(std::size_t order);

}  // namespace cesaro
