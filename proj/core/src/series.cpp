#include "cesaro/series.hpp"

#include "cesaro/errors.hpp"
#include "cesaro/numerics.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace cesaro {

PowerSeries::PowerSeries(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw ValidationError("power series coefficients must be finite");
}

PowerSeries::PowerSeries(std::initializer_list<complex> coeffs) : PowerSeries(std::vector<complex>(coeffs)) {}

PowerSeries PowerSeries::from_real(const std::vector<double>& coeffs) {
    return PowerSeries(std::vector<complex>(coeffs.begin(), coeffs.end()));
}

PowerSeries PowerSeries::monomial(std::size_t k, complex c) {
    std::vector<complex> v(k + 1);
    v[k] = c;
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::resized(std::size_t order) const {
    std::vector<complex> v(order + 1);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), v.size()), v.begin());
    return PowerSeries(std::move(v));
}

double PowerSeries::sup_coeff() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool PowerSeries::is_real(double tol) const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const complex& c) { return std::abs(c.imag()) <= tol; });
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    std::vector<complex> v(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = f[n] + g[n];
    return PowerSeries(std::move(v));
}

PowerSeries operator*(complex c, const PowerSeries& f) {
    std::vector<complex> v(f.coeffs_);
    for (auto& a : v) a *= c;
    return PowerSeries(std::move(v));
}

complex eval_unchecked(const PowerSeries& f, complex z) noexcept {
    // Real arithmetic: std::complex operator* goes through the Annex G
    // inf/nan recovery path, which dominates the cost of long Horner loops.
    const auto& a = f.coeffs();
    const double zr = z.real(), zi = z.imag();
    double re = a.back().real(), im = a.back().imag();
    for (std::size_t n = a.size() - 1; n-- > 0;) {
        const double t = re * zr - im * zi + a[n].real();
        im = re * zi + im * zr + a[n].imag();
        re = t;
    }
    return {re, im};
}

complex eval(const PowerSeries& f, complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("eval: |z| must be < 1");
    return eval_unchecked(f, z);
}

PowerSeries derivative(const PowerSeries& f) {
    const std::size_t n = f.order();
    if (n == 0) return PowerSeries::zero(0);
    std::vector<complex> b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = static_cast<double>(k + 1) * f[k + 1];
    return PowerSeries(std::move(b));
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, std::size_t order) {
    std::vector<complex> c(order + 1);
    const std::size_t nf = std::min(f.order(), order);
    for (std::size_t i = 0; i <= nf; ++i) {
        const complex fi = f[i];
        if (fi == complex{}) continue;
        const std::size_t ng = std::min(g.order(), order - i);
        for (std::size_t j = 0; j <= ng; ++j) c[i + j] += fi * g[j];
    }
    return PowerSeries(std::move(c));
}

double truncation_tail_bound(const PowerSeries& f, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("truncation_tail_bound: r must lie in [0, 1)");
    return f.sup_coeff() * std::pow(r, static_cast<double>(f.order() + 1)) / (1.0 - r);
}

double gamma_ratio(std::size_t n, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("gamma_ratio: s must be > 0");
    // tgamma_ratio keeps full relative accuracy for large n, where a
    // difference of lgammas loses about log10(n log n) digits.
    const double nn = static_cast<double>(n);
    if (s == 1.0) return 1.0;
    return boost::math::tgamma_ratio(nn + s, nn + 1.0) / boost::math::tgamma(s);
}

PowerSeries cesaro_mu(const PowerSeries& f, const Measure& mu, std::size_t order) {
    std::vector<complex> b(order + 1);
    complex partial{};
    for (std::size_t n = 0; n <= order; ++n) {
        partial += f[n];
        b[n] = moment(mu, n) * partial;
    }
    return PowerSeries(std::move(b));
}

PowerSeries cesaro_mu_s(const PowerSeries& f, const Measure& mu, double s, std::size_t order) {
    if (!(s > 0.0)) throw DomainError("cesaro_mu_s: s must be > 0");
    std::vector<double> kernel(order + 1);
    for (std::size_t m = 0; m <= order; ++m) kernel[m] = gamma_ratio(m, s);
    const PowerSeries a = f.resized(order);
    std::vector<complex> b(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        complex conv{};
        for (std::size_t k = 0; k <= n; ++k) conv += kernel[n - k] * a[k];
        b[n] = moment(mu, n) * conv;
    }
    return PowerSeries(std::move(b));
}

PowerSeries f_mu_s(const Measure& mu, double s, std::size_t order) {
    if (!(s > 0.0)) throw DomainError("f_mu_s: s must be > 0");
    std::vector<complex> b(order + 1);
    for (std::size_t n = 0; n <= order; ++n) b[n] = gamma_ratio(n, s) * moment(mu, n);
    return PowerSeries(std::move(b));
}

complex integral_rep_eval(const PowerSeries& f, const Measure& mu, double s, complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("integral_rep_eval: |z| must be < 1");
    if (!(s > 0.0)) throw DomainError("integral_rep_eval: s must be > 0");
    const complex one_minus_z = 1.0 - z;
    return quad_measure_complex(
        [&](double t, double one_minus_t) {
            const complex w = one_minus_t + t * one_minus_z;  // 1 - t z
            return eval_unchecked(f, t * z) * std::pow(w, -s);
        },
        mu);
}

PowerSeries blaschke_factor(complex a, std::size_t order) {
    if (!(std::abs(a) < 1.0)) throw DomainError("blaschke_factor: |a| must be < 1");
    std::vector<complex> c(order + 1);
    c[0] = a;
    const complex ab = std::conj(a);
    const double scale = 1.0 - std::norm(a);
    complex power = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = -scale * power;
        power *= ab;
    }
    return PowerSeries(std::move(c));
}

PowerSeries blaschke_product(const std::vector<complex>& zeros, std::size_t order) {
    // P(z) / Q(z) with P = prod (a_k - z), Q = prod (1 - conj(a_k) z); the
    // recurrence c_n = P_n - sum_i Q_i c_{n-i} is stable since Q has no zeros
    // in the closed disk.
    std::vector<complex> P{1.0}, Q{1.0};
    for (const auto& a : zeros) {
        if (!(std::abs(a) < 1.0)) throw DomainError("blaschke_product: zeros must satisfy |a| < 1");
        std::vector<complex> np(P.size() + 1), nq(Q.size() + 1);
        for (std::size_t i = 0; i < P.size(); ++i) {
            np[i] += a * P[i];
            np[i + 1] -= P[i];
            nq[i] += Q[i];
            nq[i + 1] -= std::conj(a) * Q[i];
        }
        P = std::move(np);
        Q = std::move(nq);
    }
    std::vector<complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        complex v = n < P.size() ? P[n] : complex{};
        for (std::size_t i = 1; i < Q.size() && i <= n; ++i) v -= Q[i] * c[n - i];
        c[n] = v;
    }
    return PowerSeries(std::move(c));
}

PowerSeries compose_automorphism(const PowerSeries& f, complex b, std::size_t order) {
    const PowerSeries sigma = blaschke_factor(b, order);
    PowerSeries acc = PowerSeries::constant(f[f.order()]).resized(order);
    for (std::size_t n = f.order(); n-- > 0;) {
        acc = multiply(acc, sigma, order);
        std::vector<complex> c = acc.coeffs();
        c[0] += f[n];
        acc = PowerSeries(std::move(c));
    }
    return acc;
}

}  // namespace cesaro
