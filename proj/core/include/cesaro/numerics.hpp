#pragma once

#include "cesaro/measure.hpp"

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cesaro {

using complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Gauss rules
// ---------------------------------------------------------------------------

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [0, 1]. Cached; safe to call concurrently.
const GaussRule& gauss_legendre(int n);

/// n-point Gauss rule on [0, 1] for the weight u^gamma, gamma > -1
/// (Golub-Welsch on the shifted Jacobi recurrence). Cached.
const GaussRule& gauss_jacobi_left(int n, double gamma);

// ---------------------------------------------------------------------------
// Quadrature against a measure on [0, 1)
// ---------------------------------------------------------------------------

/// Integrands receive t together with 1 - t, so kernels such as (1 - |a| t)
/// can be formed without cancellation when t is within rounding of 1.
using RealIntegrand = std::function<double(double t, double one_minus_t)>;
using ComplexIntegrand = std::function<complex(double t, double one_minus_t)>;

struct QuadOptions {
    /// The integrand is g(t) * (1 - t)^endpoint_power. For density measures the
    /// factor is merged into the Gauss-Jacobi weight of the panel touching 1.
    double endpoint_power = 0.0;
    double rtol = 1e-9;
    int max_rounds = 12;
};

template <class T>
struct QuadResult {
    T value{};
    bool converged = false;
    /// Successive estimates of the density part, one per escalation round.
    std::vector<T> estimates;
};

/// Integral of g(t) (1 - t)^p d mu(t). Atoms are summed exactly. Density parts
/// use dyadic panels [1 - 2^-m, 1 - 2^-(m+1)] with Gauss-Legendre nodes plus a
/// Gauss-Jacobi panel at the endpoint; the panel count and node count grow each
/// round until two successive rounds agree to rtol. When the endpoint exponent
/// alpha + p is <= -1 the endpoint panel is omitted, the estimates keep
/// growing and the result is reported as not converged.
QuadResult<double> integrate_measure(const RealIntegrand& g, const Measure& mu, const QuadOptions& opts = {});
QuadResult<complex> integrate_measure_complex(const ComplexIntegrand& g, const Measure& mu,
                                              const QuadOptions& opts = {});

/// As integrate_measure, but throws NumericError (carrying the last two
/// estimates) when escalation does not converge.
double quad_measure(const RealIntegrand& g, const Measure& mu, const QuadOptions& opts = {});
complex quad_measure_complex(const ComplexIntegrand& g, const Measure& mu, const QuadOptions& opts = {});

// ---------------------------------------------------------------------------
// Area quadrature on the unit disk, dA normalized so that A(D) = 1
// ---------------------------------------------------------------------------

struct DiskGrid {
    std::vector<double> radii;
    std::vector<double> radial_weights;
    int angular = 0;
    /// The grid integrates g(z) (1 - |z|^2)^weight_exponent dA(z).
    double weight_exponent = 0.0;

    /// Gauss-Legendre of order R in r, M uniform angles.
    static DiskGrid uniform(int radial, int angular);
    /// Gauss-Jacobi in rho = r^2 with weight (1 - rho)^p absorbed, M uniform angles.
    static DiskGrid weighted(int radial, int angular, double p);

    std::size_t size() const noexcept { return radii.size() * static_cast<std::size_t>(angular); }
};

inline constexpr int kDefaultRadialOrder = 96;
inline constexpr int kDefaultAngularCount = 256;

/// Sum of weight * g(node) over the grid.
double disk_integral(const std::function<double(complex)>& g, const DiskGrid& grid);

// ---------------------------------------------------------------------------
// Suprema over boundary-approaching grids
// ---------------------------------------------------------------------------

enum class Verdict { Bounded, Divergent };

const char* to_string(Verdict v) noexcept;

/// Growth exponents below this (in powers of 2 per dyadic level) count as bounded.
inline constexpr double kGrowthThreshold = 0.1;
inline constexpr int kDefaultDepth = 18;

struct GrowthFit {
    Verdict verdict = Verdict::Bounded;
    double slope = 0.0;     // d log S / d level
    double exponent = 0.0;  // slope / ln 2
};

struct GrowthReport {
    std::vector<int> levels;
    std::vector<double> values;
    double slope = 0.0;
    double exponent = 0.0;
    Verdict verdict = Verdict::Bounded;

    bool bounded() const noexcept { return verdict == Verdict::Bounded; }
};

/// Least-squares slope of log S_j against j over the last ceil(n/2) levels.
/// Bounded iff slope < threshold * ln 2. Zero values count as bounded
/// evidence (a supremum that drops to zero is not growing). Throws
/// NumericError when fewer than four finite values are supplied, or when a
/// value is negative or not finite.
GrowthFit classify_growth(std::span<const double> values, std::span<const int> levels,
                          double threshold = kGrowthThreshold);

GrowthReport make_growth_report(std::vector<int> levels, std::vector<double> values,
                                double threshold = kGrowthThreshold);

/// A point a = (1 - gap) e^{i angle} on a dyadic circle; gap = 2^-level is exact.
struct BoundaryPoint {
    int level = 0;
    double gap = 1.0;
    double angle = 0.0;

    double radius() const noexcept { return 1.0 - gap; }
    complex point() const noexcept { return std::polar(1.0 - gap, angle); }
};

/// S_j = max over M angles of h(a), |a| = 1 - 2^-j, j = first_level..depth.
/// Level 0 is the single point a = 0. Failures of h are rethrown as
/// NumericError naming the level and angle.
GrowthReport sup_on_dyadic_boundary(const std::function<double(const BoundaryPoint&)>& h, int depth,
                                    int angles, int first_level = 1, double threshold = kGrowthThreshold);

}  // namespace cesaro
