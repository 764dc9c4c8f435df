#pragma once

#include "cesaro/measure.hpp"
#include "cesaro/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cesaro {

/// Four characterizations of s-Carleson measures on [0, 1), each reduced to a
/// growth trace whose boundedness is the criterion:
///
///   box          mu([t, 1)) <= C (1 - t)^s
///   moment       sup_n (1 + n)^s mu_n < inf
///   integral     sup_a int (1-|a|)^t / ((1-x)^r (1-|a|x)^(s+t-r)) dmu(x),  0 <= r < s
///                (real form) and the same with |1 - a x| for complex a
///   disk kernel  sup_a int (1-|a|^2)^t / |1 - conj(a) x|^(s+t) dmu(x)
///
/// All of them agree on every finite positive measure on [0, 1).

/// S_j = mu([1 - 2^-j, 1)) / 2^-js, j = 1..depth.
GrowthReport box_test(const Measure& mu, double s, int depth = kDefaultDepth);

/// S_j = (1 + n)^s mu_n at n = 2^j <= max_order, j = 0, 1, ...
GrowthReport moment_test(const Measure& mu, double s, std::size_t max_order = std::size_t{1} << kDefaultDepth);

/// Inner integral of the real-parameter criterion at one radius |a| = 1 - gap.
/// Throws NumericError when the quadrature does not converge (for instance
/// when r >= s and the measure has density (1-x)^(s-1)).
double integral_kernel_real(const Measure& mu, double s, double t, double r, double gap);

/// Inner integral of the complex-parameter criterion at a = (1 - gap) e^{i angle}.
double integral_kernel_complex(const Measure& mu, double s, double t, double r, double gap, double angle);

/// Real-parameter integral criterion; requires t > 0 and 0 <= r < s. When a
/// density part makes the inner integral infinite at every a the report is
/// Divergent with an infinite exponent and no levels.
GrowthReport integral_test_real(const Measure& mu, double s, double t, double r, int depth = kDefaultDepth);

inline constexpr int kDefaultCriterionAngles = 256;

/// Complex-parameter integral criterion on a depth x angles grid.
GrowthReport integral_test_complex(const Measure& mu, double s, double t, double r, int depth = kDefaultDepth,
                                   int angles = kDefaultCriterionAngles);

/// Disk-kernel criterion (the r = 0 complex form with (1-|a|^2)^t upstairs).
GrowthReport disk_kernel_test(const Measure& mu, double s, double t, int depth = kDefaultDepth,
                              int angles = kDefaultCriterionAngles);

enum class Consensus { Carleson, NotCarleson, Disagreement };

const char* to_string(Consensus c) noexcept;

struct CriterionResult {
    std::string name;
    std::optional<double> r;  // for the integral criteria
    std::optional<GrowthReport> report;
    std::string error;  // set when the criterion failed numerically

    bool ok() const noexcept { return report.has_value(); }
};

struct CarlesonConfig {
    double t = 1.0;
    /// Values of r used by the integral criteria; empty means {0, s/2}.
    std::vector<double> r_values;
    int depth = kDefaultDepth;
    int angles = kDefaultCriterionAngles;
    std::size_t moment_order = std::size_t{1} << kDefaultDepth;
};

struct CarlesonVerdict {
    double s = 0.0;
    double t = 0.0;
    std::vector<CriterionResult> criteria;
    Consensus consensus = Consensus::Disagreement;
};

/// Runs every criterion. Numeric failures are recorded on the criterion and
/// do not abort the run; the consensus is taken over the criteria that
/// produced a verdict. Throws NumericError if none did.
CarlesonVerdict is_s_carleson(const Measure& mu, double s, const CarlesonConfig& config = {});

}  // namespace cesaro
