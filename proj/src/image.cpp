#include "hns/image.hpp"

#include <algorithm>

namespace hns {

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double ix = std::min(a.x1(), b.x1()) - std::max(a.x0(), b.x0());
    const double iy = std::min(a.y1(), b.y1()) - std::max(a.y0(), b.y0());
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

double center_distance(const BoundingBox& a, const BoundingBox& b) {
    return std::hypot(a.cx - b.cx, a.cy - b.cy);
}

}  // namespace hns
