#include "cesaro/errors.hpp"
#include "cesaro/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

namespace cesaro {
namespace {

// P_n(x) and P_n'(x) by the three-term recurrence, n >= 1.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

GaussRule make_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.5;
        rule.weights[0] = 1.0;
        return rule;
    }
    // Newton from the Tricomi initial guess; nodes mirrored about the midpoint.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(n, x).second;
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // half the [-1, 1] weight
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    return rule;
}

GaussRule make_jacobi_left(int n, double gamma) {
    // Monic Jacobi recurrence for (1-x)^a (1+x)^b on [-1, 1] with a = 0,
    // b = gamma, shifted to u = (1 + x)/2.
    const double a = 0.0, b = gamma;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) {
        double alpha;
        if (k == 0) {
            alpha = (b - a) / (a + b + 2.0);
        } else {
            const double s = 2.0 * k + a + b;
            alpha = (b * b - a * a) / (s * (s + 2.0));
        }
        diag[k] = 0.5 * (1.0 + alpha);
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        const double beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        sub[k - 1] = 0.5 * std::sqrt(beta);
    }
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mass = 1.0 / (gamma + 1.0);
    if (n == 1) {
        rule.nodes[0] = diag[0];
        rule.weights[0] = mass;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NumericError("Gauss-Jacobi eigen solve failed");
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mass * v0 * v0;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw ParameterError("gauss_legendre: order must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(make_legendre(n));
    return *slot;
}

const GaussRule& gauss_jacobi_left(int n, double gamma) {
    if (n < 1) throw ParameterError("gauss_jacobi: order must be >= 1");
    if (!(gamma > -1.0)) throw ParameterError("gauss_jacobi: exponent must be > -1");
    static std::mutex mutex;
    static std::map<std::pair<int, double>, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, gamma}];
    if (!slot) slot = std::make_unique<GaussRule>(make_jacobi_left(n, gamma));
    return *slot;
}

}  // namespace cesaro
