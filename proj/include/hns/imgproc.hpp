#pragma once

#include "hns/image.hpp"

namespace hns {

/// Square patch cut from a frame, resampled to a fixed side.
struct Patch {
    Image image;             // side x side
    BoundingBox source_box;  // box the crop was centered on
    double context_factor = 1.0;

    int side() const { return image.width; }
    /// Side of the source-frame region the patch covers, in frame pixels.
    double src_side() const {
        return context_factor * std::max(source_box.w, source_box.h);
    }
};

/// 1-D Hann window of length n; zero at both ends, n == 1 gives {1}.
std::vector<double> hann_window_1d(int n);

/// Outer product of 1-D Hann windows: h rows by w columns, values in [0,1],
/// maximal at the center and zero along the border.
Image hann_window_2d(int h, int w);

/// Cut the square region of side context_factor * max(box.w, box.h) centered
/// on the box and resample it bilinearly to out_side x out_side. Samples that
/// fall outside the frame read the mean intensity of the region's visible
/// part (0.5 when nothing is visible). Half-pixel center alignment, so an
/// integer-aligned unit-scale crop is an exact copy.
Patch crop_resize(const Image& frame, const BoundingBox& box,
                  double context_factor, int out_side);

}  // namespace hns
