#include "cesaro/carleson.hpp"

#include "cesaro/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cesaro {
namespace {

void require_positive_s(double s, const char* who) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError(std::string(who) + ": s must be > 0");
}

void require_integral_params(double s, double t, double r, const char* who) {
    require_positive_s(s, who);
    if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError(std::string(who) + ": t must be > 0");
    if (!(r >= 0.0 && r < s)) {
        std::ostringstream os;
        os << who << ": r must satisfy 0 <= r < s (got r = " << r << ", s = " << s << ")";
        throw ParameterError(os.str());
    }
}

// |1 - a x| for a = (1 - gap) e^{i angle}, x = 1 - c, without cancellation.
double one_minus_ax_modulus(double gap, double angle, double x, double c) {
    const double rho = 1.0 - gap;
    const double u = gap + rho * c;  // 1 - rho x
    if (angle == 0.0) return u;
    const double half = std::sin(0.5 * angle);
    const double re = u + 2.0 * rho * x * half * half;
    const double im = rho * x * std::sin(angle);
    return std::hypot(re, im);
}

// With a density part ~ (1 - x)^alpha the inner integral carries
// (1 - x)^(alpha - r) at x = 1 and is infinite for every a once alpha - r <= -1.
bool inner_integral_infinite(const Measure& mu, double r) {
    const auto alpha = endpoint_density_exponent(mu);
    return alpha && *alpha - r <= -1.0;
}

GrowthReport infinite_report() {
    GrowthReport g;
    g.slope = g.exponent = std::numeric_limits<double>::infinity();
    g.verdict = Verdict::Divergent;
    return g;
}

}  // namespace

const char* to_string(Consensus c) noexcept {
    switch (c) {
        case Consensus::Carleson: return "Carleson";
        case Consensus::NotCarleson: return "NotCarleson";
        case Consensus::Disagreement: return "Disagreement";
    }
    return "?";
}

GrowthReport box_test(const Measure& mu, double s, int depth) {
    require_positive_s(s, "box_test");
    if (depth < 4) throw ParameterError("box_test: depth must be >= 4");
    std::vector<int> levels;
    std::vector<double> values;
    for (int j = 1; j <= depth; ++j) {
        levels.push_back(j);
        values.push_back(tail_mass_near_one(mu, std::ldexp(1.0, -j)) * std::exp2(j * s));
    }
    return make_growth_report(std::move(levels), std::move(values));
}

GrowthReport moment_test(const Measure& mu, double s, std::size_t max_order) {
    require_positive_s(s, "moment_test");
    if (max_order < 16) throw ParameterError("moment_test: max order must be >= 16");
    std::vector<int> levels;
    std::vector<double> values;
    for (int j = 0; (std::size_t{1} << j) <= max_order; ++j) {
        const std::size_t n = std::size_t{1} << j;
        levels.push_back(j);
        values.push_back(std::pow(1.0 + static_cast<double>(n), s) * moment(mu, n));
    }
    return make_growth_report(std::move(levels), std::move(values));
}

double integral_kernel_real(const Measure& mu, double s, double t, double r, double gap) {
    const double rho = 1.0 - gap;
    const double lead = std::pow(gap, t);
    const double power = s + t - r;
    QuadOptions opts;
    opts.endpoint_power = -r;
    return quad_measure([&](double, double c) { return lead * std::pow(gap + rho * c, -power); }, mu, opts);
}

double integral_kernel_complex(const Measure& mu, double s, double t, double r, double gap, double angle) {
    const double lead = std::pow(gap, t);
    const double power = s + t - r;
    QuadOptions opts;
    opts.endpoint_power = -r;
    return quad_measure(
        [&](double x, double c) { return lead * std::pow(one_minus_ax_modulus(gap, angle, x, c), -power); }, mu,
        opts);
}

GrowthReport integral_test_real(const Measure& mu, double s, double t, double r, int depth) {
    require_integral_params(s, t, r, "integral_test_real");
    if (inner_integral_infinite(mu, r)) return infinite_report();
    return sup_on_dyadic_boundary(
        [&](const BoundaryPoint& p) { return integral_kernel_real(mu, s, t, r, p.gap); }, depth, 1);
}

GrowthReport integral_test_complex(const Measure& mu, double s, double t, double r, int depth, int angles) {
    require_integral_params(s, t, r, "integral_test_complex");
    if (inner_integral_infinite(mu, r)) return infinite_report();
    return sup_on_dyadic_boundary(
        [&](const BoundaryPoint& p) { return integral_kernel_complex(mu, s, t, r, p.gap, p.angle); }, depth,
        angles);
}

GrowthReport disk_kernel_test(const Measure& mu, double s, double t, int depth, int angles) {
    require_positive_s(s, "disk_kernel_test");
    if (!(t > 0.0)) throw ParameterError("disk_kernel_test: t must be > 0");
    return sup_on_dyadic_boundary(
        [&](const BoundaryPoint& p) {
            const double lead = std::pow(p.gap * (2.0 - p.gap), t);  // (1 - |a|^2)^t
            return quad_measure(
                [&](double x, double c) {
                    return lead * std::pow(one_minus_ax_modulus(p.gap, p.angle, x, c), -(s + t));
                },
                mu);
        },
        depth, angles);
}

CarlesonVerdict is_s_carleson(const Measure& mu, double s, const CarlesonConfig& config) {
    require_positive_s(s, "is_s_carleson");
    if (!(config.t > 0.0)) throw ParameterError("is_s_carleson: t must be > 0");
    std::vector<double> rs = config.r_values.empty() ? std::vector<double>{0.0, 0.5 * s} : config.r_values;
    for (double r : rs)
        if (!(r >= 0.0 && r < s)) throw ParameterError("is_s_carleson: every r must satisfy 0 <= r < s");

    CarlesonVerdict verdict;
    verdict.s = s;
    verdict.t = config.t;

    auto run = [&](std::string name, std::optional<double> r, auto&& fn) {
        CriterionResult c;
        c.name = std::move(name);
        c.r = r;
        try {
            c.report = fn();
        } catch (const NumericError& e) {
            c.error = e.what();
        }
        verdict.criteria.push_back(std::move(c));
    };

    run("box", std::nullopt, [&] { return box_test(mu, s, config.depth); });
    run("moment", std::nullopt, [&] { return moment_test(mu, s, config.moment_order); });
    for (double r : rs)
        run("integral_real", r, [&] { return integral_test_real(mu, s, config.t, r, config.depth); });
    for (double r : rs)
        run("integral_complex", r,
            [&] { return integral_test_complex(mu, s, config.t, r, config.depth, config.angles); });
    run("disk_kernel", std::nullopt, [&] { return disk_kernel_test(mu, s, config.t, config.depth, config.angles); });

    int bounded = 0, divergent = 0;
    for (const auto& c : verdict.criteria) {
        if (!c.ok()) continue;
        (c.report->bounded() ? bounded : divergent)++;
    }
    if (bounded + divergent == 0) throw NumericError("is_s_carleson: every criterion failed numerically");
    if (divergent == 0)
        verdict.consensus = Consensus::Carleson;
    else if (bounded == 0)
        verdict.consensus = Consensus::NotCarleson;
    else
        verdict.consensus = Consensus::Disagreement;
    return verdict;
}

}  // namespace cesaro
