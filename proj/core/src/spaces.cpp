#include "cesaro/spaces.hpp"

#include "cesaro/errors.hpp"

#include "detail/fft.hpp"
#include "detail/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace cesaro {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The Q_p integral at a sees the whole disk, so truncation at order N
// deflates it by roughly 2^-slack relative (measured: 3.5% at slack 4 for
// log(1/(1-z))). Slack 6 keeps the deflation below 1%.
constexpr int kQpSlack = 6;

bool running_sup_converged(const std::vector<double>& trace) {
    if (trace.size() < 2) return false;
    const double last = *std::max_element(trace.begin(), trace.end());
    const double prev = *std::max_element(trace.begin(), trace.end() - 1);
    return last <= prev * (1.0 + kSeminormTolerance);
}

SeminormEstimate finish(std::vector<int> levels, std::vector<double> trace, bool grid_ok) {
    SeminormEstimate e;
    e.value = trace.empty() ? 0.0 : *std::max_element(trace.begin(), trace.end());
    e.converged = grid_ok && running_sup_converged(trace) && std::isfinite(e.value);
    e.levels = std::move(levels);
    e.trace = std::move(trace);
    return e;
}

int effective_depth(const PowerSeries& f, int depth, int slack, int minimum) {
    if (depth < 1) throw ParameterError("seminorm depth must be >= 1");
    return std::min(depth, std::max(certified_depth(f.order(), slack), minimum));
}

// Real, nonnegative coefficients; returns their real parts.
std::vector<double> nonnegative_coeffs(const PowerSeries& f, const char* who) {
    const double tol = 1e-12 * f.sup_coeff();
    std::vector<double> a;
    a.reserve(f.order() + 1);
    for (const auto& c : f.coeffs()) {
        if (std::abs(c.imag()) > tol) throw ValidationError(std::string(who) + ": coefficients must be real");
        if (c.real() < -tol) throw ValidationError(std::string(who) + ": coefficients must be nonnegative");
        a.push_back(std::max(c.real(), 0.0));
    }
    return a;
}

double relative_gap(double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

int certified_depth(std::size_t order, int slack) {
    if (order == 0) return 0;
    return std::max(0, static_cast<int>(std::bit_width(order)) - 1 - slack);
}

double Mp(const PowerSeries& f, double r, double p) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("Mp: r must lie in (0, 1)");
    if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("Mp: p must be >= 1");
    auto sample = [&](std::size_t k, std::size_t m) {
        return std::pow(std::abs(eval_unchecked(f, std::polar(r, kTwoPi * k / m))), p);
    };
    std::size_t m = 64;
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) sum += sample(k, m);
    double mean = sum / m;
    constexpr std::size_t cap = std::size_t{1} << 22;
    while (m < cap) {
        // The doubled rule reuses the old nodes; only odd indices are new.
        for (std::size_t k = 1; k < 2 * m; k += 2) sum += sample(k, 2 * m);
        m *= 2;
        const double next = sum / m;
        const double a = std::pow(mean, 1.0 / p), b = std::pow(next, 1.0 / p);
        mean = next;
        if (relative_gap(a, b) <= 1e-8) return b;
    }
    throw NumericError("Mp: trapezoid rule did not settle within 2^22 nodes", {std::pow(mean, 1.0 / p)});
}

SeminormEstimate bloch_seminorm(const PowerSeries& f, int depth, int angles) {
    if (angles < 1) throw ParameterError("bloch_seminorm: need at least one angle");
    const int levels = effective_depth(f, depth, 3, 4);
    const PowerSeries fp = derivative(f);
    std::vector<double> trace(levels + 1, 0.0);
    detail::parallel_for(trace.size(), [&](std::size_t j) {
        const double gap = std::ldexp(1.0, -static_cast<int>(j));
        const double r = j == 0 ? 0.0 : 1.0 - gap;
        const double weight = j == 0 ? 1.0 : gap * (2.0 - gap);
        const int m = j == 0 ? 1 : angles;
        double best = 0.0;
        for (int k = 0; k < m; ++k)
            best = std::max(best, weight * std::abs(eval_unchecked(fp, std::polar(r, kTwoPi * k / m))));
        trace[j] = best;
    });
    std::vector<int> lv(trace.size());
    for (std::size_t j = 0; j < lv.size(); ++j) lv[j] = static_cast<int>(j);
    return finish(std::move(lv), std::move(trace), true);
}

namespace {

struct APoint {
    int level;
    complex a;
    double one_minus_abs2;
};

// Per-level suprema of (1-|a|^2)^p sum_n |g_n|^2 B(n+1, p+1), g = f' (1 - conj(a) z)^-p.
// For a = rho e^{i phi}, g_n = e^{-i n phi} sum_k f'_k e^{i k phi} gamma_ratio(n-k, p) rho^(n-k),
// so each level needs one kernel transform and each angle one convolution.
std::vector<double> qp_trace_coefficients(const PowerSeries& fp, double p, int levels, int a_angles) {
    const std::size_t N = fp.order() + 1;
    std::vector<double> trace(levels + 1, 0.0);
    {
        double beta = 1.0 / (p + 1.0);  // B(n+1, p+1)
        for (std::size_t n = 0; n < N; ++n) {
            trace[0] += std::norm(fp[n]) * beta;
            beta *= (n + 1.0) / (n + p + 2.0);
        }
    }
    std::vector<complex> unit(a_angles);
    for (int q = 0; q < a_angles; ++q) unit[q] = std::polar(1.0, kTwoPi * q / a_angles);

    for (int j = 1; j <= levels; ++j) {
        const double gap = std::ldexp(1.0, -j);
        const double rho = 1.0 - gap;
        // gamma_ratio(m, p) rho^m < e^-40 beyond n_max
        const std::size_t extra = static_cast<std::size_t>(std::ceil((40.0 + 4.0 * std::abs(p - 1.0) * j) / gap));
        const std::size_t n_max = N - 1 + extra;
        const std::size_t L = std::bit_ceil(N + n_max + 1);  // no wrap-around below n_max
        const detail::Fft fft(L);

        std::vector<complex> kernel(L);
        double mag = 1.0;
        for (std::size_t m = 0; m <= n_max; ++m) {
            kernel[m] = mag;
            mag *= rho * (m + p) / (m + 1.0);
        }
        fft.forward(kernel);
        std::vector<double> beta(n_max + 1);
        beta[0] = 1.0 / (p + 1.0);
        for (std::size_t n = 0; n < n_max; ++n) beta[n + 1] = beta[n] * (n + 1.0) / (n + p + 2.0);
        const double lead = std::pow(gap * (2.0 - gap), p) / (static_cast<double>(L) * L);

        std::vector<double> per_angle(a_angles);
        detail::parallel_for(a_angles, [&](std::size_t q) {
            std::vector<complex> buf(L);
            for (std::size_t k = 0; k < N; ++k) buf[k] = fp[k] * unit[(k * q) % a_angles];
            fft.forward(buf);
            for (std::size_t i = 0; i < L; ++i) buf[i] *= kernel[i];
            fft.inverse(buf);
            double total = 0.0;
            for (std::size_t n = 0; n <= n_max; ++n) total += std::norm(buf[n]) * beta[n];
            const double last = std::norm(buf[n_max]) * beta[n_max];
            if (last > 1e-12 * total)
                throw NumericError("qp_seminorm: coefficient series did not decay at level " + std::to_string(j));
            per_angle[q] = lead * total;
        });
        trace[j] = *std::max_element(per_angle.begin(), per_angle.end());
    }
    return trace;
}

double qp_point_grid(const PowerSeries& fp, const APoint& pt, const DiskGrid& g) {
    // sigma_a(w) = (a - w)/(1 - conj(a) w), |sigma_a'(w)| = (1 - |a|^2)/|1 - conj(a) w|^2
    const complex ab = std::conj(pt.a);
    return disk_integral(
        [&](complex w) {
            const complex d = 1.0 - ab * w;
            const double jac = pt.one_minus_abs2 / std::norm(d);
            return std::norm(eval_unchecked(fp, (pt.a - w) / d)) * jac * jac;
        },
        g);
}

}  // namespace

SeminormEstimate qp_seminorm(const PowerSeries& f, double p, int depth, const QpOptions& options) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("qp_seminorm: p must be > 0");
    if (options.radial < 2 || options.angular < 2 || options.a_angles < 1)
        throw ParameterError("qp_seminorm: grid too small");
    const int levels = effective_depth(f, depth, kQpSlack, 3);
    const PowerSeries fp = derivative(f);

    std::vector<APoint> points{{0, 0.0, 1.0}};
    for (int j = 1; j <= levels; ++j) {
        const double gap = std::ldexp(1.0, -j);
        for (int k = 0; k < options.a_angles; ++k)
            points.push_back({j, std::polar(1.0 - gap, kTwoPi * k / options.a_angles), gap * (2.0 - gap)});
    }

    auto reduce = [&](const std::vector<double>& per_point) {
        std::vector<double> trace(levels + 1, 0.0);
        for (std::size_t i = 0; i < points.size(); ++i)
            trace[points[i].level] = std::max(trace[points[i].level], per_point[i]);
        return trace;
    };
    std::vector<int> lv(levels + 1);
    for (std::size_t j = 0; j < lv.size(); ++j) lv[j] = static_cast<int>(j);

    if (options.method == QpMethod::Coefficients) {
        return finish(std::move(lv), qp_trace_coefficients(fp, p, levels, options.a_angles), true);
    }

    auto trace_on = [&](int radial, int angular) {
        const DiskGrid g = DiskGrid::weighted(radial, angular, p);
        std::vector<double> per_point(points.size());
        detail::parallel_for(points.size(), [&](std::size_t i) { per_point[i] = qp_point_grid(fp, points[i], g); });
        return reduce(per_point);
    };
    int radial = options.radial, angular = options.angular;
    std::vector<double> coarse = trace_on(std::max(2, radial / 2), std::max(2, angular / 2));
    std::vector<double> fine = trace_on(radial, angular);
    auto grids_agree = [&] {
        for (std::size_t j = 0; j < fine.size(); ++j)
            if (relative_gap(coarse[j], fine[j]) > kSeminormTolerance) return false;
        return true;
    };
    bool agree = grids_agree();
    for (int escalation = 0; !agree && escalation < 2; ++escalation) {
        radial *= 2;
        angular *= 2;
        coarse = std::move(fine);
        fine = trace_on(radial, angular);
        agree = grids_agree();
    }
    return finish(std::move(lv), std::move(fine), agree);
}

SeminormEstimate lambda_norm(const PowerSeries& f, double p, int depth) {
    if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("lambda_norm: p must be > 1");
    const int levels = effective_depth(f, depth, 3, 4);
    const PowerSeries fp = derivative(f);
    std::vector<double> trace(levels + 1, 0.0);
    detail::parallel_for(trace.size(), [&](std::size_t j) {
        if (j == 0) {
            trace[0] = std::abs(fp[0]);
            return;
        }
        const double gap = std::ldexp(1.0, -static_cast<int>(j));
        trace[j] = std::pow(gap, 1.0 - 1.0 / p) * Mp(fp, 1.0 - gap, p);
    });
    std::vector<int> lv(trace.size());
    for (std::size_t j = 0; j < lv.size(); ++j) lv[j] = static_cast<int>(j);
    return finish(std::move(lv), std::move(trace), true);
}

GrowthReport qp_coeff_criterion(const PowerSeries& f, double p, int depth) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("qp_coeff_criterion: p must be > 0");
    const std::vector<double> a = nonnegative_coeffs(f, "qp_coeff_criterion");
    const int levels = effective_depth(f, depth, 3, 4);
    const std::size_t N = f.order();
    // b_k = (k + 1) a_{k+1}, k = 0..N-1
    std::vector<double> b(N);
    for (std::size_t k = 0; k < N; ++k) b[k] = (k + 1.0) * a[k + 1];

    auto F = [&](int j) {
        const double gap = std::ldexp(1.0, -j);
        const double r = 1.0 - gap;
        std::size_t extra = static_cast<std::size_t>(std::ceil(40.0 / gap));
        for (int attempt = 0; attempt < 4; ++attempt, extra *= 2) {
            const std::size_t n_max = N + extra;
            std::vector<double> c(n_max + 1);
            double rm = 1.0;
            for (std::size_t m = 0; m <= n_max; ++m, rm *= r) c[m] = std::pow(m + 1.0, p - 1.0) * rm;
            double total = 0.0, last = 0.0;
            for (std::size_t n = 0; n <= n_max; ++n) {
                double inner = 0.0;
                const std::size_t k_hi = std::min(n + 1, N);
                for (std::size_t k = 0; k < k_hi; ++k) inner += b[k] * c[n - k];
                last = inner * inner / std::pow(n + 1.0, p + 1.0);
                total += last;
            }
            total *= std::pow(gap, p);
            last *= std::pow(gap, p);
            if (last <= 1e-14 * total || total == 0.0) return total;
        }
        throw NumericError("qp_coeff_criterion: outer sum tail did not decay at level " + std::to_string(j));
    };

    std::vector<int> lv;
    for (int j = 1; j <= levels; ++j) lv.push_back(j);
    std::vector<double> values(lv.size());
    detail::parallel_for(lv.size(), [&](std::size_t i) { values[i] = F(lv[i]); });
    return make_growth_report(std::move(lv), std::move(values));
}

GrowthReport coeff_growth(const PowerSeries& f) {
    std::vector<int> levels;
    std::vector<double> values;
    for (int j = 0; (std::size_t{1} << j) <= f.order(); ++j) {
        const std::size_t n = std::size_t{1} << j;
        levels.push_back(j);
        values.push_back(static_cast<double>(n) * std::abs(f[n]));
    }
    if (levels.size() < 4) throw ParameterError("coefficient growth: need order >= 8");
    return make_growth_report(std::move(levels), std::move(values));
}

GrowthReport coeff_decay_test(const PowerSeries& f) {
    const std::vector<double> a = nonnegative_coeffs(f, "coeff_decay_test");
    for (std::size_t n = 1; n < a.size(); ++n)
        if (a[n] > a[n - 1] * (1.0 + 1e-12))
            throw ValidationError("coeff_decay_test: coefficients must be nonincreasing (fails at n = " +
                                  std::to_string(n) + ")");
    return coeff_growth(f);
}

double hinf_norm(const PowerSeries& f, int angles) {
    if (angles < 1) throw ParameterError("hinf_norm: need at least one angle");
    const double r = 1.0 - std::ldexp(1.0, -12);
    // f(r w^k), w = e^{2 pi i / M}, only sees a_n r^n through n mod M: fold,
    // then one inverse transform gives every sample exactly.
    const auto m = static_cast<std::size_t>(angles);
    std::vector<complex> folded(m);
    for (std::size_t n = 0; n <= f.order(); ++n) folded[n % m] += f[n] * std::pow(r, static_cast<double>(n));
    detail::Fft(m).inverse(folded);
    double best = 0.0;
    for (const auto& v : folded) best = std::max(best, std::abs(v));
    return best;
}

KernelCheck circle_kernel_check(complex z, double beta) {
    const double rho = std::abs(z);
    if (!(rho < 1.0)) throw DomainError("circle_kernel_check: |z| must be < 1");
    if (!std::isfinite(beta)) throw ParameterError("circle_kernel_check: beta must be finite");
    // |1 - z e^-it| depends on |z| and t - arg z only; the mean over t is
    // that of ((1-rho)^2 + 4 rho sin^2(t/2))^(-(1+beta)/2).
    const double q = -0.5 * (1.0 + beta);
    const double u = 1.0 - rho;
    auto sample = [&](std::size_t k, std::size_t m) {
        const double h = std::sin(0.5 * kTwoPi * k / m);
        return std::pow(u * u + 4.0 * rho * h * h, q);
    };
    KernelCheck out;
    std::size_t m = 64;
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) sum += sample(k, m);
    double mean = sum / m;
    out.converged = false;
    constexpr std::size_t cap = std::size_t{1} << 24;
    while (m < cap) {
        for (std::size_t k = 1; k < 2 * m; k += 2) sum += sample(k, 2 * m);
        m *= 2;
        const double next = sum / m;
        const bool settled = relative_gap(mean, next) <= 1e-10;
        mean = next;
        if (settled) {
            out.converged = true;
            break;
        }
    }
    out.computed = mean;
    const double g = u * (1.0 + rho);  // 1 - |z|^2
    if (beta < 0.0)
        out.predicted = 1.0;
    else if (beta == 0.0)
        out.predicted = std::log(2.0 / g);
    else
        out.predicted = std::pow(g, -beta);
    out.ratio = out.computed / out.predicted;
    return out;
}

KernelCheck two_kernel_check(complex a, complex b, double s, double r, double t, int radial, int angular) {
    if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0)) throw DomainError("two_kernel_check: |a|, |b| must be < 1");
    if (!(s > -1.0) || !(r > 0.0) || !(t > 0.0))
        throw ParameterError("two_kernel_check: requires s > -1, r > 0, t > 0");
    const double e = 2.0 + s;
    const bool first = r + t - e > 0.0 && r < e && t < e;
    const bool second = t < e && e < r;
    if (!first && !second)
        throw ParameterError("two_kernel_check: parameters lie in neither regime "
                             "(r+t-s-2 > 0 with r, t < 2+s; or t < 2+s < r)");

    const double abs_a = std::abs(a);
    const double ga = (1.0 - abs_a) * (1.0 + abs_a);  // 1 - |a|^2
    const complex ab = std::conj(a), bb = std::conj(b);
    const double abs_1_ab = std::abs(1.0 - ab * b);

    // With z = sigma_a(w): 1 - |z|^2 = ga (1-|w|^2)/|1-conj(a)w|^2,
    // |1 - conj(a) z| = ga / |1 - conj(a) w|, dA(z) = ga^2/|1-conj(a)w|^4 dA(w),
    // 1 - conj(b) z = (ga + (a - w)(conj(a) - conj(b))) / (1 - conj(a) w).
    const double lead = std::pow(ga, s + 2.0 - r);
    auto integrate = [&](int R, int M) {
        const DiskGrid g = DiskGrid::weighted(R, M, s);
        return lead * disk_integral(
                          [&](complex w) {
                              const complex d = 1.0 - ab * w;
                              const double ad = std::abs(d);
                              const double num = std::abs(ga + (a - w) * (ab - bb));
                              return std::pow(ad, r - 2.0 * s - 4.0) * std::pow(num / ad, -t);
                          },
                          g);
    };

    KernelCheck out;
    double coarse = integrate(radial, angular);
    double fine = integrate(2 * radial, 2 * angular);
    out.converged = relative_gap(coarse, fine) <= kSeminormTolerance;
    if (!out.converged) {
        coarse = fine;
        fine = integrate(4 * radial, 4 * angular);
        out.converged = relative_gap(coarse, fine) <= kSeminormTolerance;
    }
    out.computed = fine;
    out.predicted = first ? std::pow(abs_1_ab, -(r + t - s - 2.0)) : std::pow(ga, 2.0 + s - r) * std::pow(abs_1_ab, -t);
    out.ratio = out.computed / out.predicted;
    return out;
}

}  // namespace cesaro
