#include "hns/imgproc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hns {

std::vector<double> hann_window_1d(int n) {
    if (n < 1) throw SizeError("hann_window_1d: length must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(n));
    if (n == 1) {
        w[0] = 1.0;
        return w;
    }
    // Mirror the first half so the window is symmetric to the last bit.
    for (int i = 0; i <= (n - 1) / 2; ++i) {
        const double v =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (n - 1)));
        w[i] = v;
        w[n - 1 - i] = v;
    }
    return w;
}

Image hann_window_2d(int h, int w) {
    if (h < 1 || w < 1) throw SizeError("hann_window_2d: sides must be >= 1");
    const auto wy = hann_window_1d(h);
    const auto wx = hann_window_1d(w);
    Image out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) out.at(x, y) = wy[y] * wx[x];
    return out;
}

namespace {

// Bilinear read at continuous frame position (sx, sy); pixel (i, j) is
// centered at (i + 0.5, j + 0.5). Out-of-frame taps read `fill`.
double sample_bilinear(const Image& img, double sx, double sy, double fill) {
    const double fx = sx - 0.5;
    const double fy = sy - 0.5;
    const int x0 = static_cast<int>(std::floor(fx));
    const int y0 = static_cast<int>(std::floor(fy));
    const double wx = fx - x0;
    const double wy = fy - y0;
    auto tap = [&](int x, int y) {
        return img.in_bounds(x, y) ? img.at(x, y) : fill;
    };
    const double top = tap(x0, y0) * (1.0 - wx) + tap(x0 + 1, y0) * wx;
    const double bot = tap(x0, y0 + 1) * (1.0 - wx) + tap(x0 + 1, y0 + 1) * wx;
    return top * (1.0 - wy) + bot * wy;
}

// Mean intensity of the frame pixels covered by the region; 0.5 if the
// region lies entirely outside the frame.
double visible_mean(const Image& frame, double rx0, double ry0, double side) {
    const int x0 = std::max(0, static_cast<int>(std::floor(rx0)));
    const int y0 = std::max(0, static_cast<int>(std::floor(ry0)));
    const int x1 = std::min(frame.width, static_cast<int>(std::ceil(rx0 + side)));
    const int y1 = std::min(frame.height, static_cast<int>(std::ceil(ry0 + side)));
    if (x0 >= x1 || y0 >= y1) return 0.5;
    double sum = 0.0;
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) sum += frame.at(x, y);
    return sum / (static_cast<double>(x1 - x0) * (y1 - y0));
}

}  // namespace

Patch crop_resize(const Image& frame, const BoundingBox& box,
                  double context_factor, int out_side) {
    if (!box.valid()) throw InvalidBoxError("crop_resize: box sides must be positive");
    if (out_side < 8) throw SizeError("crop_resize: out_side must be >= 8");
    if (context_factor < 1.0)
        throw SizeError("crop_resize: context_factor must be >= 1");

    const double side = context_factor * std::max(box.w, box.h);
    const double rx0 = box.cx - side / 2.0;
    const double ry0 = box.cy - side / 2.0;
    const double fill = visible_mean(frame, rx0, ry0, side);
    const double scale = side / out_side;

    Patch patch;
    patch.image = Image(out_side, out_side);
    patch.source_box = box;
    patch.context_factor = context_factor;
    for (int j = 0; j < out_side; ++j) {
        const double sy = ry0 + (j + 0.5) * scale;
        for (int i = 0; i < out_side; ++i) {
            const double sx = rx0 + (i + 0.5) * scale;
            patch.image.at(i, j) = sample_bilinear(frame, sx, sy, fill);
        }
    }
    return patch;
}

}  // namespace hns
