#include "cesaro/errors.hpp"
#include "cesaro/numerics.hpp"

#include "detail/parallel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cesaro {

const char* to_string(Verdict v) noexcept { return v == Verdict::Bounded ? "Bounded" : "Divergent"; }

GrowthFit classify_growth(std::span<const double> values, std::span<const int> levels, double threshold) {
    if (values.size() != levels.size()) throw ParameterError("classify_growth: levels and values differ in length");
    std::size_t finite = 0;
    for (double v : values) {
        if (std::isnan(v) || v < 0.0) throw NumericError("classify_growth: negative or NaN supremum value");
        if (std::isfinite(v)) ++finite;
    }
    if (finite < 4) throw NumericError("classify_growth: fewer than four finite values, inconclusive");
    for (double v : values)
        if (!std::isfinite(v)) throw NumericError("classify_growth: infinite supremum value");

    const std::size_t n = values.size();
    const std::size_t window = (n + 1) / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t i = n - window; i < n; ++i) {
        if (values[i] <= 0.0) continue;
        const double x = levels[i];
        const double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    GrowthFit fit;
    if (used >= 2) {
        const double denom = used * sxx - sx * sx;
        fit.slope = denom > 0 ? (used * sxy - sx * sy) / denom : 0.0;
    }
    fit.exponent = fit.slope / std::numbers::ln2;
    fit.verdict = fit.slope < threshold * std::numbers::ln2 ? Verdict::Bounded : Verdict::Divergent;
    return fit;
}

GrowthReport make_growth_report(std::vector<int> levels, std::vector<double> values, double threshold) {
    const GrowthFit fit = classify_growth(values, levels, threshold);
    GrowthReport r;
    r.levels = std::move(levels);
    r.values = std::move(values);
    r.slope = fit.slope;
    r.exponent = fit.exponent;
    r.verdict = fit.verdict;
    return r;
}

GrowthReport sup_on_dyadic_boundary(const std::function<double(const BoundaryPoint&)>& h, int depth, int angles,
                                    int first_level, double threshold) {
    if (depth < 4) throw ParameterError("sup_on_dyadic_boundary: depth must be >= 4");
    if (angles < 1) throw ParameterError("sup_on_dyadic_boundary: need at least one angle");
    if (first_level < 0 || first_level > depth) throw ParameterError("sup_on_dyadic_boundary: bad first level");

    struct Task {
        int level;
        int angle_index;
    };
    std::vector<Task> tasks;
    std::vector<int> levels;
    for (int j = first_level; j <= depth; ++j) {
        levels.push_back(j);
        const int m = j == 0 ? 1 : angles;
        for (int k = 0; k < m; ++k) tasks.push_back({j, k});
    }
    std::vector<double> results(tasks.size());
    detail::parallel_for(tasks.size(), [&](std::size_t i) {
        const Task& task = tasks[i];
        BoundaryPoint p;
        p.level = task.level;
        p.gap = std::ldexp(1.0, -task.level);
        p.angle = 2.0 * std::numbers::pi * task.angle_index / angles;
        try {
            results[i] = h(p);
            if (std::isnan(results[i])) throw NumericError("supremum integrand returned NaN");
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "at level " << p.level << ", angle " << p.angle << ": " << e.what();
            if (const auto* ne = dynamic_cast<const NumericError*>(&e)) throw NumericError(os.str(), ne->estimates());
            throw NumericError(os.str());
        }
    });
    std::vector<double> values(levels.size(), 0.0);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::size_t slot = tasks[i].level - first_level;
        values[slot] = std::max(values[slot], results[i]);
    }
    return make_growth_report(std::move(levels), std::move(values), threshold);
}

}  // namespace cesaro
