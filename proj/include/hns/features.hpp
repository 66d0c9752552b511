#pragma once

#include "hns/imgproc.hpp"

namespace hns {

/// Multi-channel square feature grid, channel-major storage.
struct FeatureMap {
    int channels = 0;
    int side = 0;
    std::vector<double> data;

    FeatureMap() = default;
    FeatureMap(int c, int s)
        : channels(c), side(s),
          data(static_cast<std::size_t>(c) * s * s, 0.0) {}

    double& at(int c, int x, int y) {
        assert(c >= 0 && c < channels && x >= 0 && x < side && y >= 0 && y < side);
        return data[(static_cast<std::size_t>(c) * side + y) * side + x];
    }
    double at(int c, int x, int y) const {
        assert(c >= 0 && c < channels && x >= 0 && x < side && y >= 0 && y < side);
        return data[(static_cast<std::size_t>(c) * side + y) * side + x];
    }
    const double* channel(int c) const {
        return data.data() + static_cast<std::size_t>(c) * side * side;
    }
    double* channel(int c) {
        return data.data() + static_cast<std::size_t>(c) * side * side;
    }
    bool same_shape(const FeatureMap& o) const {
        return channels == o.channels && side == o.side;
    }
};

/// Classical 3-channel extractor standing in for a learned backbone:
/// mean-subtracted intensity plus horizontal and vertical central-difference
/// gradients, each attenuated by a 2-D Hann window. Deterministic.
FeatureMap extract_features(const Patch& patch);

/// Same extractor applied directly to a square image.
FeatureMap extract_features(const Image& img);

/// Embed `src` centered inside a zero map of side `out_side` (>= src.side).
FeatureMap pad_centered(const FeatureMap& src, int out_side);

}  // namespace hns
