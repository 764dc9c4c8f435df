#pragma once

#include "cesaro/numerics.hpp"
#include "cesaro/series.hpp"

#include <vector>

namespace cesaro {

/// A supremum over dyadic radii 1 - 2^-j (level 0 is the origin).
///
/// Truncated series are bounded on the closed disk, so every seminorm of one
/// is finite. Levels are therefore capped at the depth the truncation order
/// can resolve (see certified_depth) and convergence is read from the running
/// supremum: the flag is set when the running sup at the last level is within
/// 2% of the running sup one level earlier, and any grid-refinement check
/// performed by the estimator also passed.
struct SeminormEstimate {
    double value = 0.0;  // max over trace
    std::vector<int> levels;
    std::vector<double> trace;  // per-level supremum
    bool converged = false;
};

inline constexpr double kSeminormTolerance = 0.02;

/// Deepest dyadic level at which a series truncated at order N still
/// represents its limit: r^N = (1 - 2^-j)^N <= e^-8 needs j <= log2 N - 3.
int certified_depth(std::size_t order, int slack = 3);

/// Integral mean (1/2pi int |f(r e^it)|^p dt)^(1/p) by the trapezoid rule,
/// doubling from 64 nodes until two rules agree to 1e-8. Requires 0 < r < 1
/// and p >= 1.
double Mp(const PowerSeries& f, double r, double p);

/// sup (1 - |z|^2)|f'(z)| over levels 0..min(depth, certified) x angles.
SeminormEstimate bloch_seminorm(const PowerSeries& f, int depth = kDefaultDepth,
                                int angles = kDefaultAngularCount);

enum class QpMethod {
    /// Exact identity for the substituted integral:
    ///   (1-|a|^2)^p sum_n |g_n|^2 B(n+1, p+1),  g = f' (1 - conj(a) z)^-p.
    Coefficients,
    /// Area quadrature of the substituted integrand on DiskGrid::weighted,
    /// checked against a half-resolution grid and doubled (up to twice)
    /// while they differ by more than 2%. Costs radial x angular x N per a.
    Grid,
};

struct QpOptions {
    QpMethod method = QpMethod::Coefficients;
    int radial = kDefaultRadialOrder;
    int angular = kDefaultAngularCount;
    int a_angles = 16;
};

/// sup_a int |f'(z)|^2 (1 - |sigma_a(z)|^2)^p dA(z), the squared Q_p seminorm,
/// evaluated after the substitution z = sigma_a(w), where it reads
///   int |f'(sigma_a(w))|^2 |sigma_a'(w)|^2 (1 - |w|^2)^p dA(w).
/// The point a runs over the origin and dyadic circles 1 - 2^-j,
/// j <= min(depth, certified_depth(N, 6)), and at least 3 levels.
SeminormEstimate qp_seminorm(const PowerSeries& f, double p, int depth = kDefaultDepth,
                             const QpOptions& options = {});

/// sup over dyadic r of (1 - r)^(1 - 1/p) M_p(r, f'). Requires p > 1.
SeminormEstimate lambda_norm(const PowerSeries& f, double p, int depth = kDefaultDepth);

/// F(r) = sum_n (1-r)^p / (n+1)^(p+1) (sum_{k<=n} (k+1) a_{k+1} (n-k+1)^(p-1) r^(n-k))^2
/// at r = 1 - 2^-j. The outer sum runs past the truncation order until the
/// summands have decayed below 1e-14 of the total. Coefficients must be real
/// and nonnegative (ValidationError otherwise).
GrowthReport qp_coeff_criterion(const PowerSeries& f, double p, int depth = kDefaultDepth);

/// n a_n at n = 2^j, j = 0..floor(log2 N). Coefficients must be real,
/// nonnegative and nonincreasing (ValidationError otherwise).
GrowthReport coeff_decay_test(const PowerSeries& f);

/// n |a_n| at n = 2^j with no condition on the coefficients. Bounded means
/// a_n = O(1/n); without monotonicity that no longer decides membership in
/// the spaces between the mean Lipschitz and Bloch spaces.
GrowthReport coeff_growth(const PowerSeries& f);

/// Max |f| over the circle |z| = 1 - 2^-12 sampled at M angles.
double hinf_norm(const PowerSeries& f, int angles = 4096);

struct KernelCheck {
    double computed = 0.0;
    double predicted = 0.0;
    double ratio = 0.0;
    bool converged = true;
};

/// (1/2pi) int dt / |1 - z e^-it|^(1+beta) against 1, log(2/(1-|z|^2)) or
/// (1-|z|^2)^-beta for beta < 0, = 0, > 0.
KernelCheck circle_kernel_check(complex z, double beta);

/// int (1-|z|^2)^s / (|1 - conj(a) z|^r |1 - conj(b) z|^t) dA(z) against
///   |1 - conj(a) b|^-(r+t-s-2)                   if r+t-s-2 > 0 and r, t < 2+s
///   (1-|a|^2)^(2+s-r) |1 - conj(a) b|^-t          if t < 2+s < r
/// Throws ParameterError outside both regimes. Integrated after z = sigma_a(w)
/// on a weighted grid, refined until two grids agree to 2%.
KernelCheck two_kernel_check(complex a, complex b, double s, double r, double t,
                             int radial = kDefaultRadialOrder, int angular = kDefaultAngularCount);

}  // namespace cesaro
