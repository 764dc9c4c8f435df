#include "detail/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace cesaro::detail {
namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(std::vector<std::complex<double>>& v) { return reinterpret_cast<fftw_complex*>(v.data()); }

}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    std::vector<std::complex<double>> scratch(n);
    std::lock_guard lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_ = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(scratch), as_fftw(scratch), FFTW_FORWARD, flags);
    inverse_ = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(scratch), as_fftw(scratch), FFTW_BACKWARD, flags);
    if (!forward_ || !inverse_) throw std::runtime_error("fftw: could not create plan");
}

Fft::~Fft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_));
    fftw_destroy_plan(static_cast<fftw_plan>(inverse_));
}

void Fft::forward(std::vector<std::complex<double>>& data) const {
    if (data.size() != n_) throw std::invalid_argument("fft: length mismatch");
    fftw_execute_dft(static_cast<fftw_plan>(forward_), as_fftw(data), as_fftw(data));
}

void Fft::inverse(std::vector<std::complex<double>>& data) const {
    if (data.size() != n_) throw std::invalid_argument("fft: length mismatch");
    fftw_execute_dft(static_cast<fftw_plan>(inverse_), as_fftw(data), as_fftw(data));
}

}  // namespace cesaro::detail
