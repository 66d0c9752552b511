#include "hns/features.hpp"

#include <algorithm>

namespace hns {

FeatureMap extract_features(const Image& img) {
    if (img.width != img.height)
        throw ShapeError("extract_features: patch must be square");
    const int s = img.width;
    if (s < 16) throw SizeError("extract_features: patch side must be >= 16");

    double mean = 0.0;
    for (double v : img.data) mean += v;
    mean /= static_cast<double>(img.pixel_count());
    // a flat patch carries no signal; return exact zeros (not rounding
    // residue) so degenerate-response detection downstream stays reliable
    const auto [lo, hi] = std::minmax_element(img.data.begin(), img.data.end());
    if (*lo == *hi) return FeatureMap(3, s);

    const Image win = hann_window_2d(s, s);
    FeatureMap f(3, s);
    auto clamp = [&](int v) { return std::clamp(v, 0, s - 1); };
    for (int y = 0; y < s; ++y) {
        for (int x = 0; x < s; ++x) {
            const double w = win.at(x, y);
            f.at(0, x, y) = (img.at(x, y) - mean) * w;
            // central differences with replicated borders
            f.at(1, x, y) = 0.5 * (img.at(clamp(x + 1), y) - img.at(clamp(x - 1), y)) * w;
            f.at(2, x, y) = 0.5 * (img.at(x, clamp(y + 1)) - img.at(x, clamp(y - 1))) * w;
        }
    }
    return f;
}

FeatureMap extract_features(const Patch& patch) {
    return extract_features(patch.image);
}

FeatureMap pad_centered(const FeatureMap& src, int out_side) {
    if (out_side < src.side)
        throw SizeError("pad_centered: output side smaller than input");
    FeatureMap out(src.channels, out_side);
    const int off = (out_side - src.side) / 2;
    for (int c = 0; c < src.channels; ++c)
        for (int y = 0; y < src.side; ++y)
            for (int x = 0; x < src.side; ++x)
                out.at(c, x + off, y + off) = src.at(c, x, y);
    return out;
}

}  // namespace hns
