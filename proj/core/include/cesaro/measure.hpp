#pragma once

#include <cstddef>
#include <string>
#include <optional>
#include <variant>
#include <vector>

namespace cesaro {

/// Finite sum of point masses w_i at t_i, with 0 <= t_i < 1 and w_i > 0.
struct Atomic {
    std::vector<double> points;
    std::vector<double> weights;
};

/// scale * (1 - t)^alpha dt on [0, 1), alpha > -1.
struct PowerDensity {
    double alpha = 0.0;
    double scale = 1.0;
};

/// dt on [0, 1).
struct Lebesgue {};

class Measure;

/// Sum of its components.
struct Mixture {
    std::vector<Measure> components;
};

/// A finite positive Borel measure on [0, 1).
///
/// Construction validates the representation, so every Measure that exists
/// has finite, strictly positive total mass and no mass at t = 1.
class Measure {
public:
    using Variant = std::variant<Atomic, PowerDensity, Lebesgue, Mixture>;

    Measure();  // Lebesgue
    Measure(Atomic atomic);
    Measure(PowerDensity density);
    Measure(Lebesgue lebesgue);
    Measure(Mixture mixture);

    static Measure lebesgue() { return Measure(Lebesgue{}); }
    static Measure atoms(std::vector<double> points, std::vector<double> weights);
    static Measure power_density(double alpha, double scale = 1.0);
    static Measure mixture(std::vector<Measure> components);

    /// Atoms at 1 - 2^-k with weights 2^(-k * weight_exponent), k = 1..count.
    /// The tail mass near 1 behaves like (1 - t)^weight_exponent down to
    /// scale 2^-count. count is capped at 52 so every point stays below 1.
    static Measure dyadic_atoms(double weight_exponent, int count = 48);

    const Variant& variant() const noexcept { return v_; }

    /// Short human-readable description, e.g. "power_density(alpha=-0.5, scale=1)".
    std::string describe() const;

    friend bool operator==(const Measure& a, const Measure& b);

private:
    Variant v_;
};

bool operator==(const Atomic& a, const Atomic& b);
bool operator==(const PowerDensity& a, const PowerDensity& b);
inline bool operator==(const Lebesgue&, const Lebesgue&) { return true; }
bool operator==(const Mixture& a, const Mixture& b);

enum class MomentMethod { ClosedForm, Quadrature };

struct MomentSequence {
    std::vector<double> values;  // mu_0 .. mu_N
    std::vector<MomentMethod> methods;

    std::size_t order() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// mu_n = integral of t^n d mu(t). Closed form for every representation.
double moment(const Measure& mu, std::size_t n);

MomentSequence moments(const Measure& mu, std::size_t order);

/// mu([t, 1)); throws DomainError unless 0 <= t < 1.
double tail_mass(const Measure& mu, double t);

/// mu([1 - gap, 1)) for gap in (0, 1]. Keeps full relative accuracy when the
/// gap is far below machine epsilon, where 1 - gap would round to 1.
double tail_mass_near_one(const Measure& mu, double gap);

double total_mass(const Measure& mu);

/// Smallest alpha over the density parts, which behave like (1 - t)^alpha dt
/// near 1 (Lebesgue counts as alpha = 0). Empty for purely atomic measures.
std::optional<double> endpoint_density_exponent(const Measure& mu);

}  // namespace cesaro
