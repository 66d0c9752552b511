#pragma once

#include <complex>
#include <vector>

// Thin wrappers over FFTW's real 2-D transforms with an internal plan cache.
// Plan creation is serialized; execution is re-entrant, so these are safe to
// call from multiple threads at once.

namespace hns::detail {

/// Number of complex bins of an h x w real transform: h * (w/2 + 1).
std::size_t spectrum_size(int h, int w);

/// Forward real-to-complex 2-D FFT. `out` must hold spectrum_size(h, w).
void fft2_r2c(int h, int w, const double* in, std::complex<double>* out);

/// Inverse complex-to-real 2-D FFT, scaled by 1/(h*w) so that a round trip
/// is the identity. `in` is clobbered by FFTW; pass a scratch copy.
void fft2_c2r(int h, int w, std::complex<double>* in, double* out);

/// Circular cross-correlation of `kernel` against `grid`, both h x w:
/// out(dy,dx) = sum_p kernel(p) * grid(p + d mod (h,w)). Accumulates into
/// `out` (which must be pre-sized to h*w; zero it for a fresh result).
void cross_correlate_accum(int h, int w, const double* kernel, const double* grid,
                           std::vector<double>& out);

/// Same correlation with the kernel already transformed; lets callers reuse
/// one kernel spectrum across many grids.
void cross_correlate_spec(int h, int w, const std::complex<double>* kernel_spec,
                          const double* grid, std::vector<double>& out);

}  // namespace hns::detail
