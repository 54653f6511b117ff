#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace jrc::detail {

/// In-place complex DFT of fixed size backed by FFTW (FFTW_ESTIMATE, so plans
/// are deterministic). Unnormalized in both directions.
/// Planning is serialized internally; execute() is safe to call concurrently
/// on distinct buffers.
class FftPlan {
public:
    enum class Direction { Forward, Inverse };

    FftPlan(std::size_t n, Direction dir);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    std::size_t size() const { return n_; }
    void execute(std::span<std::complex<double>> data) const;

private:
    std::size_t n_;
    void* plan_;
};

}  // namespace jrc::detail
