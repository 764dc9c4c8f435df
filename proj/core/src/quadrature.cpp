#include "cesaro/errors.hpp"
#include "cesaro/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cesaro {
namespace {

struct DensityPart {
    double alpha;
    double scale;
};

struct AtomPart {
    double t;
    double complement;
    double weight;
};

void flatten(const Measure& mu, std::vector<AtomPart>& atoms, std::vector<DensityPart>& densities) {
    const auto& v = mu.variant();
    if (const auto* a = std::get_if<Atomic>(&v)) {
        for (std::size_t i = 0; i < a->points.size(); ++i)
            atoms.push_back({a->points[i], 1.0 - a->points[i], a->weights[i]});
    } else if (const auto* d = std::get_if<PowerDensity>(&v)) {
        densities.push_back({d->alpha, d->scale});
    } else if (std::holds_alternative<Lebesgue>(v)) {
        densities.push_back({0.0, 1.0});
    } else {
        for (const auto& c : std::get<Mixture>(v).components) flatten(c, atoms, densities);
    }
}

// Escalation schedule: round k uses 16(k+1) dyadic panels of 12 + 4k nodes.
int panels_for_round(int k) { return 16 * (k + 1); }
int nodes_for_round(int k) { return 12 + 4 * k; }

// One estimate of scale * int_0^1 g(t) (1-t)^gamma dt on `panels` dyadic panels.
// Panel m covers complements c in [2^-(m+1), 2^-m]; the endpoint panel
// c in (0, 2^-panels] carries the weight c^gamma in its Gauss-Jacobi rule.
template <class T, class G>
T density_estimate(const G& g, double gamma, double scale, int panels, int nodes) {
    const GaussRule& gl = gauss_legendre(nodes);
    T sum{};
    for (int m = 0; m < panels; ++m) {
        const double h = std::ldexp(1.0, -(m + 1));
        T panel{};
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double c = h * (1.0 + gl.nodes[i]);
            panel += gl.weights[i] * std::pow(c, gamma) * g(1.0 - c, c);
        }
        sum += h * panel;
    }
    if (gamma > -1.0) {
        const GaussRule& gj = gauss_jacobi_left(nodes, gamma);
        const double h = std::ldexp(1.0, -panels);
        T panel{};
        for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
            const double c = h * gj.nodes[i];
            panel += gj.weights[i] * g(1.0 - c, c);
        }
        sum += std::pow(h, gamma + 1.0) * panel;
    }
    return scale * sum;
}

template <class T, class G>
QuadResult<T> integrate_density(const G& g, const DensityPart& d, const QuadOptions& opts) {
    const double gamma = d.alpha + opts.endpoint_power;
    QuadResult<T> result;
    for (int k = 0; k < opts.max_rounds; ++k) {
        const T est = density_estimate<T>(g, gamma, d.scale, panels_for_round(k), nodes_for_round(k));
        result.estimates.push_back(est);
        result.value = est;
        if (k == 0) continue;
        const T prev = result.estimates[k - 1];
        const double diff = std::abs(est - prev);
        if (std::isfinite(std::abs(est)) && diff <= opts.rtol * std::abs(est)) {
            result.converged = true;
            break;
        }
    }
    return result;
}

template <class T, class G>
QuadResult<T> integrate_impl(const G& g, const Measure& mu, const QuadOptions& opts) {
    std::vector<AtomPart> atoms;
    std::vector<DensityPart> densities;
    flatten(mu, atoms, densities);

    QuadResult<T> result;
    result.converged = true;
    T atom_sum{};
    for (const auto& a : atoms) {
        double w = a.weight;
        if (opts.endpoint_power != 0.0) w *= std::pow(a.complement, opts.endpoint_power);
        atom_sum += w * g(a.t, a.complement);
    }
    result.value = atom_sum;

    // Per-round histories are summed, padding shorter ones with their last value.
    for (const auto& d : densities) {
        auto part = integrate_density<T>(g, d, opts);
        result.value += part.value;
        result.converged = result.converged && part.converged;
        if (result.estimates.size() < part.estimates.size()) {
            const T last = result.estimates.empty() ? T{} : result.estimates.back();
            result.estimates.resize(part.estimates.size(), last);
        }
        for (std::size_t k = 0; k < result.estimates.size(); ++k)
            result.estimates[k] += k < part.estimates.size() ? part.estimates[k] : part.estimates.back();
    }
    for (auto& e : result.estimates) e += atom_sum;
    if (!std::isfinite(std::abs(result.value))) result.converged = false;
    return result;
}

template <class T>
std::vector<double> tail_estimates(const QuadResult<T>& r) {
    std::vector<double> out;
    const std::size_t n = r.estimates.size();
    for (std::size_t k = n >= 2 ? n - 2 : 0; k < n; ++k) {
        if constexpr (std::is_same_v<T, double>)
            out.push_back(r.estimates[k]);
        else
            out.push_back(std::abs(r.estimates[k]));
    }
    return out;
}

template <class T>
[[noreturn]] void throw_nonconvergence(const QuadResult<T>& r) {
    std::ostringstream os;
    os.precision(10);
    os << "quadrature did not converge after " << r.estimates.size() << " rounds";
    const auto last = tail_estimates(r);
    if (last.size() == 2) os << " (last estimates " << last[0] << ", " << last[1] << ")";
    throw NumericError(os.str(), last);
}

}  // namespace

QuadResult<double> integrate_measure(const RealIntegrand& g, const Measure& mu, const QuadOptions& opts) {
    return integrate_impl<double>(g, mu, opts);
}

QuadResult<complex> integrate_measure_complex(const ComplexIntegrand& g, const Measure& mu,
                                              const QuadOptions& opts) {
    return integrate_impl<complex>(g, mu, opts);
}

double quad_measure(const RealIntegrand& g, const Measure& mu, const QuadOptions& opts) {
    auto r = integrate_measure(g, mu, opts);
    if (!r.converged) throw_nonconvergence(r);
    return r.value;
}

complex quad_measure_complex(const ComplexIntegrand& g, const Measure& mu, const QuadOptions& opts) {
    auto r = integrate_measure_complex(g, mu, opts);
    if (!r.converged) throw_nonconvergence(r);
    return r.value;
}

}  // namespace cesaro
