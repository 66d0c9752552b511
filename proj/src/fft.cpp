#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace hns::detail {

namespace {

// FFTW planning is not thread-safe; executing distinct plans is. Plans are
// created with FFTW_UNALIGNED so the new-array execute calls accept any
// caller buffer.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan forward(int h, int w) {
        std::scoped_lock lock(mutex_);
        auto key = std::pair{h, w};
        auto it = fwd_.find(key);
        if (it != fwd_.end()) return it->second;
        std::vector<double> in(static_cast<std::size_t>(h) * w);
        std::vector<fftw_complex> out(spectrum_size(h, w));
        fftw_plan p = fftw_plan_dft_r2c_2d(h, w, in.data(), out.data(),
                                           FFTW_ESTIMATE | FFTW_UNALIGNED);
        fwd_.emplace(key, p);
        return p;
    }

    fftw_plan inverse(int h, int w) {
        std::scoped_lock lock(mutex_);
        auto key = std::pair{h, w};
        auto it = inv_.find(key);
        if (it != inv_.end()) return it->second;
        std::vector<fftw_complex> in(spectrum_size(h, w));
        std::vector<double> out(static_cast<std::size_t>(h) * w);
        fftw_plan p = fftw_plan_dft_c2r_2d(h, w, in.data(), out.data(),
                                           FFTW_ESTIMATE | FFTW_UNALIGNED);
        inv_.emplace(key, p);
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> fwd_;
    std::map<std::pair<int, int>, fftw_plan> inv_;
};

}  // namespace

std::size_t spectrum_size(int h, int w) {
    return static_cast<std::size_t>(h) * (w / 2 + 1);
}

void fft2_r2c(int h, int w, const double* in, std::complex<double>* out) {
    fftw_plan p = PlanCache::instance().forward(h, w);
    fftw_execute_dft_r2c(p, const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out));
}

void fft2_c2r(int h, int w, std::complex<double>* in, double* out) {
    fftw_plan p = PlanCache::instance().inverse(h, w);
    fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(in), out);
    const double scale = 1.0 / (static_cast<double>(h) * w);
    const std::size_t n = static_cast<std::size_t>(h) * w;
    for (std::size_t i = 0; i < n; ++i) out[i] *= scale;
}

void cross_correlate_accum(int h, int w, const double* kernel, const double* grid,
                           std::vector<double>& out) {
    std::vector<std::complex<double>> ka(spectrum_size(h, w));
    fft2_r2c(h, w, kernel, ka.data());
    cross_correlate_spec(h, w, ka.data(), grid, out);
}

void cross_correlate_spec(int h, int w, const std::complex<double>* kernel_spec,
                          const double* grid, std::vector<double>& out) {
    const std::size_t sz = spectrum_size(h, w);
    std::vector<std::complex<double>> ga(sz);
    fft2_r2c(h, w, grid, ga.data());
    for (std::size_t i = 0; i < sz; ++i) ga[i] *= std::conj(kernel_spec[i]);
    std::vector<double> corr(static_cast<std::size_t>(h) * w);
    fft2_c2r(h, w, ga.data(), corr.data());
    for (std::size_t i = 0; i < corr.size(); ++i) out[i] += corr[i];
}

}  // namespace hns::detail
