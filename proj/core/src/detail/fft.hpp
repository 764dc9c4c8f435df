#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cesaro::detail {

/// In-place complex FFT of a fixed length (FFTW, estimate-mode plans, so the
/// transform is deterministic). Plans are created under a global lock; the
/// transforms themselves may run concurrently.
class Fft {
public:
    explicit Fft(std::size_t n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::size_t size() const noexcept { return n_; }
    void forward(std::vector<std::complex<double>>& data) const;
    /// Unnormalized inverse: forward then inverse scales by size().
    void inverse(std::vector<std::complex<double>>& data) const;

private:
    std::size_t n_;
    void* forward_;
    void* inverse_;
};

}  // namespace cesaro::detail
