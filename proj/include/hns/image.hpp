#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hns {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Box with non-positive width or height.
struct InvalidBoxError : Error {
    using Error::Error;
};

/// Operands whose grid shapes do not agree.
struct ShapeError : Error {
    using Error::Error;
};

/// Input smaller than the operation supports.
struct SizeError : Error {
    using Error::Error;
};

/// Heatmap with no usable peak (all zero).
struct DegenerateHeatmapError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Single-channel intensity grid, row-major, values in [0,1].
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    Image() = default;
    Image(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) {
        assert(x >= 0 && x < width && y >= 0 && y < height);
        return data[static_cast<std::size_t>(y) * width + x];
    }
    double at(int x, int y) const {
        assert(x >= 0 && x < width && y >= 0 && y < height);
        return data[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    std::size_t pixel_count() const { return data.size(); }
};

/// Axis-aligned box stored center-based. The center may lie outside the
/// frame; only w > 0 and h > 0 are required.
struct BoundingBox {
    double cx = 0.0;
    double cy = 0.0;
    double w = 0.0;
    double h = 0.0;

    BoundingBox() = default;
    BoundingBox(double cx_, double cy_, double w_, double h_)
        : cx(cx_), cy(cy_), w(w_), h(h_) {}

    static BoundingBox from_corner(double x, double y, double w, double h) {
        return {x + w / 2.0, y + h / 2.0, w, h};
    }

    double x0() const { return cx - w / 2.0; }
    double y0() const { return cy - h / 2.0; }
    double x1() const { return cx + w / 2.0; }
    double y1() const { return cy + h / 2.0; }
    double area() const { return w * h; }
    bool valid() const { return w > 0.0 && h > 0.0; }
};

/// Intersection over union of two boxes; symmetric, in [0,1], 0 when disjoint.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Euclidean distance between box centers, in pixels.
double center_distance(const BoundingBox& a, const BoundingBox& b);

}  // namespace hns
