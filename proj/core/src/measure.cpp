#include "cesaro/measure.hpp"

#include "cesaro/errors.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cesaro {
namespace {

void validate(const Atomic& a) {
    if (a.points.empty()) throw ValidationError("atomic measure needs at least one atom");
    if (a.points.size() != a.weights.size())
        throw ValidationError("atomic measure: points and weights differ in length");
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const double t = a.points[i];
        const double w = a.weights[i];
        if (!std::isfinite(t) || t < 0.0 || t >= 1.0) {
            std::ostringstream os;
            os << "atomic measure: point " << t << " is outside [0, 1)";
            throw ValidationError(os.str());
        }
        if (!std::isfinite(w) || w <= 0.0) {
            std::ostringstream os;
            os << "atomic measure: weight " << w << " is not strictly positive";
            throw ValidationError(os.str());
        }
    }
}

void validate(const PowerDensity& d) {
    if (!std::isfinite(d.alpha) || d.alpha <= -1.0)
        throw ValidationError("power density: alpha must be > -1 for finite mass");
    if (!std::isfinite(d.scale) || d.scale <= 0.0)
        throw ValidationError("power density: scale must be > 0");
}

void validate(const Mixture& m) {
    if (m.components.empty()) throw ValidationError("mixture needs at least one component");
    // components are Measures and were validated on construction
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

Measure::Measure() : v_(Lebesgue{}) {}
Measure::Measure(Atomic atomic) : v_(std::move(atomic)) { validate(std::get<Atomic>(v_)); }
Measure::Measure(PowerDensity density) : v_(density) { validate(density); }
Measure::Measure(Lebesgue lebesgue) : v_(lebesgue) {}
Measure::Measure(Mixture mixture) : v_(std::move(mixture)) { validate(std::get<Mixture>(v_)); }

Measure Measure::atoms(std::vector<double> points, std::vector<double> weights) {
    return Measure(Atomic{std::move(points), std::move(weights)});
}

Measure Measure::power_density(double alpha, double scale) {
    return Measure(PowerDensity{alpha, scale});
}

Measure Measure::mixture(std::vector<Measure> components) {
    return Measure(Mixture{std::move(components)});
}

Measure Measure::dyadic_atoms(double weight_exponent, int count) {
    if (count < 1 || count > 52) throw ValidationError("dyadic atoms: count must lie in [1, 52]");
    Atomic a;
    for (int k = 1; k <= count; ++k) {
        a.points.push_back(1.0 - std::ldexp(1.0, -k));
        a.weights.push_back(std::exp2(-k * weight_exponent));
    }
    return Measure(std::move(a));
}

std::string Measure::describe() const {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const Atomic& a) { os << "atomic(" << a.points.size() << " atoms)"; },
                   [&](const PowerDensity& d) {
                       os << "power_density(alpha=" << d.alpha << ", scale=" << d.scale << ")";
                   },
                   [&](const Lebesgue&) { os << "lebesgue"; },
                   [&](const Mixture& m) {
                       os << "mixture(";
                       for (std::size_t i = 0; i < m.components.size(); ++i)
                           os << (i ? ", " : "") << m.components[i].describe();
                       os << ")";
                   },
               },
               v_);
    return os.str();
}

bool operator==(const Atomic& a, const Atomic& b) {
    return a.points == b.points && a.weights == b.weights;
}
bool operator==(const PowerDensity& a, const PowerDensity& b) {
    return a.alpha == b.alpha && a.scale == b.scale;
}
bool operator==(const Mixture& a, const Mixture& b) { return a.components == b.components; }
bool operator==(const Measure& a, const Measure& b) { return a.v_ == b.v_; }

double moment(const Measure& mu, std::size_t n) {
    const double nn = static_cast<double>(n);
    return std::visit(
        overloaded{
            [&](const Atomic& a) {
                double sum = 0.0;
                for (std::size_t i = 0; i < a.points.size(); ++i)
                    sum += a.weights[i] * std::pow(a.points[i], nn);
                return sum;
            },
            [&](const PowerDensity& d) {
                // scale * B(n + 1, alpha + 1)
                return d.scale * boost::math::beta(nn + 1.0, d.alpha + 1.0);
            },
            [&](const Lebesgue&) { return 1.0 / (nn + 1.0); },
            [&](const Mixture& m) {
                double sum = 0.0;
                for (const auto& c : m.components) sum += moment(c, n);
                return sum;
            },
        },
        mu.variant());
}

MomentSequence moments(const Measure& mu, std::size_t order) {
    MomentSequence seq;
    seq.values.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) seq.values.push_back(moment(mu, n));
    seq.methods.assign(order + 1, MomentMethod::ClosedForm);
    return seq;
}

double tail_mass_near_one(const Measure& mu, double gap) {
    if (!(gap > 0.0 && gap <= 1.0)) throw DomainError("tail_mass_near_one: gap must lie in (0, 1]");
    return std::visit(overloaded{
                          [&](const Atomic& a) {
                              double sum = 0.0;
                              for (std::size_t i = 0; i < a.points.size(); ++i)
                                  if (1.0 - a.points[i] <= gap) sum += a.weights[i];
                              return sum;
                          },
                          [&](const PowerDensity& d) {
                              return d.scale * std::pow(gap, d.alpha + 1.0) / (d.alpha + 1.0);
                          },
                          [&](const Lebesgue&) { return gap; },
                          [&](const Mixture& m) {
                              double sum = 0.0;
                              for (const auto& c : m.components) sum += tail_mass_near_one(c, gap);
                              return sum;
                          },
                      },
                      mu.variant());
}

std::optional<double> endpoint_density_exponent(const Measure& mu) {
    return std::visit(overloaded{
                          [](const Atomic&) -> std::optional<double> { return std::nullopt; },
                          [](const PowerDensity& d) -> std::optional<double> { return d.alpha; },
                          [](const Lebesgue&) -> std::optional<double> { return 0.0; },
                          [](const Mixture& m) -> std::optional<double> {
                              std::optional<double> lo;
                              for (const auto& c : m.components)
                                  if (auto e = endpoint_density_exponent(c); e && (!lo || *e < *lo)) lo = e;
                              return lo;
                          },
                      },
                      mu.variant());
}

double tail_mass(const Measure& mu, double t) {
    if (!(t >= 0.0 && t < 1.0)) throw DomainError("tail_mass: t must lie in [0, 1)");
    // Atoms compare against t directly so that tail_mass(mu, 0) counts every atom.
    if (const auto* a = std::get_if<Atomic>(&mu.variant())) {
        double sum = 0.0;
        for (std::size_t i = 0; i < a->points.size(); ++i)
            if (a->points[i] >= t) sum += a->weights[i];
        return sum;
    }
    if (const auto* m = std::get_if<Mixture>(&mu.variant())) {
        double sum = 0.0;
        for (const auto& c : m->components) sum += tail_mass(c, t);
        return sum;
    }
    return tail_mass_near_one(mu, 1.0 - t);
}

double total_mass(const Measure& mu) { return moment(mu, 0); }

}  // namespace cesaro
