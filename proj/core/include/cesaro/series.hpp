#pragma once

#include "cesaro/measure.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace cesaro {

using complex = std::complex<double>;

/// Truncated Taylor series a_0 + a_1 z + ... + a_N z^N.
///
/// Coefficients past the stored order are exactly zero: a PowerSeries is the
/// polynomial it stores, and operators that ask for a higher order pad with
/// zeros.
class PowerSeries {
public:
    PowerSeries() : coeffs_{0.0} {}
    explicit PowerSeries(std::vector<complex> coeffs);
    PowerSeries(std::initializer_list<complex> coeffs);

    static PowerSeries from_real(const std::vector<double>& coeffs);
    static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<complex>(order + 1)); }
    static PowerSeries constant(complex c) { return PowerSeries({c}); }
    static PowerSeries monomial(std::size_t k, complex c = 1.0);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<complex>& coeffs() const noexcept { return coeffs_; }
    /// a_n, zero past the order.
    complex operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : complex{}; }

    /// Copy truncated or zero-padded to the given order.
    PowerSeries resized(std::size_t order) const;

    /// max |a_n|
    double sup_coeff() const noexcept;
    bool is_real(double tol = 0.0) const noexcept;

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator*(complex c, const PowerSeries& f);
    friend bool operator==(const PowerSeries& f, const PowerSeries& g) { return f.coeffs_ == g.coeffs_; }

private:
    std::vector<complex> coeffs_;
};

/// Horner evaluation; throws DomainError unless |z| < 1.
complex eval(const PowerSeries& f, complex z);

/// Horner evaluation of the polynomial anywhere in the plane. Internal
/// quadrature paths use it after they have checked their own domain.
complex eval_unchecked(const PowerSeries& f, complex z) noexcept;

/// b_n = (n + 1) a_{n+1}; order N - 1 (a constant maps to the zero series of order 0).
PowerSeries derivative(const PowerSeries& f);

/// Truncated product to the given order.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g, std::size_t order);

/// Geometric tail bound sup|a_n| r^(N+1) / (1 - r) for the error of the
/// untruncated function at |z| <= r, assuming coefficients stay bounded by
/// the stored ones.
double truncation_tail_bound(const PowerSeries& f, double r);

/// Gamma(n + s) / (Gamma(s) n!), the binomial series coefficient of (1 - z)^-s.
/// Throws DomainError if s <= 0.
double gamma_ratio(std::size_t n, double s);

/// b_n = mu_n * (a_0 + ... + a_n), n = 0..order.
PowerSeries cesaro_mu(const PowerSeries& f, const Measure& mu, std::size_t order);

/// b_n = mu_n * sum_k gamma_ratio(n - k, s) a_k, n = 0..order. Direct O(N^2)
/// convolution; s = 1 reproduces cesaro_mu bit for bit.
PowerSeries cesaro_mu_s(const PowerSeries& f, const Measure& mu, double s, std::size_t order);

/// Coefficients gamma_ratio(n, s) * mu_n: the series of the integral of
/// (1 - tz)^-s d mu(t). Equals cesaro_mu_s(1, mu, s).
PowerSeries f_mu_s(const Measure& mu, double s, std::size_t order);

/// Integral of f(tz) / (1 - tz)^s d mu(t), by quadrature over the measure.
/// Independent of the coefficient transforms; used to cross-check them.
/// Throws DomainError unless |z| < 1, NumericError if quadrature fails.
complex integral_rep_eval(const PowerSeries& f, const Measure& mu, double s, complex z);

/// (a - z) / (1 - conj(a) z), |a| < 1, truncated at the given order.
PowerSeries blaschke_factor(complex a, std::size_t order);

/// Product of Blaschke factors with the given zeros.
PowerSeries blaschke_product(const std::vector<complex>& zeros, std::size_t order);

/// Coefficients of f o sigma_b with sigma_b(z) = (b - z)/(1 - conj(b) z),
/// truncated at the given order. Cost O(deg f * order^2); meant for
/// low-degree f.
PowerSeries compose_automorphism(const PowerSeries& f, complex b, std::size_t order);

}  // namespace cesaro
