#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "jrc/errors.hpp"

namespace jrc::detail {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

FftPlan::FftPlan(std::size_t n, Direction dir) : n_(n), plan_(nullptr) {
    if (n == 0) throw ContractError("FftPlan: size must be positive");
    // Planning with FFTW_ESTIMATE does not touch the buffer contents.
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                             dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan_ == nullptr) throw ContractError("FftPlan: FFTW planning failed");
}

FftPlan::~FftPlan() {
    const std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void FftPlan::execute(std::span<std::complex<double>> data) const {
    if (data.size() != n_) throw ContractError("FftPlan::execute: buffer size mismatch");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan_), buf, buf);
}

}  // namespace jrc::detail
