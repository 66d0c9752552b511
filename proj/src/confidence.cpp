#include "hns/confidence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hns/image.hpp"

namespace hns {

namespace {

bool strict_local_max_8(const Heatmap& h, int x, int y) {
    if (x < 1 || y < 1 || x > h.side - 2 || y > h.side - 2) return false;
    const double v = h.at(x, y);
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (h.at(x + dx, y + dy) >= v) return false;
        }
    }
    return true;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> project_profiles(
    const Heatmap& h) {
    if (h.side <= 0 || h.data.empty()) {
        throw ShapeError("project_profiles: empty heatmap");
    }
    std::vector<double> xp(h.side, -std::numeric_limits<double>::infinity());
    std::vector<double> yp(h.side, -std::numeric_limits<double>::infinity());
    for (int y = 0; y < h.side; ++y) {
        for (int x = 0; x < h.side; ++x) {
            const double v = h.at(x, y);
            xp[x] = std::max(xp[x], v);
            yp[y] = std::max(yp[y], v);
        }
    }
    return {std::move(xp), std::move(yp)};
}

std::vector<std::pair<int, double>> find_profile_peaks(
    const std::vector<double>& p) {
    if (p.size() < 3) {
        throw ShapeError("find_profile_peaks: profile shorter than 3");
    }
    std::vector<std::pair<int, double>> peaks;
    const int n = static_cast<int>(p.size());
    for (int i = 1; i + 1 < n; ++i) {
        const double d1 = p[i] - p[i - 1];
        const double d2 = p[i + 1] - p[i];
        if (d1 > 0.0 && d2 <= 0.0 && d2 - d1 < 0.0) {
            peaks.emplace_back(i, p[i]);
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [](const auto& a, const auto& b) {
                         return a.second > b.second;
                     });
    return peaks;
}

std::pair<Peak, std::optional<Peak>> top_two_peaks(const Heatmap& h,
                                                   int min_separation) {
    if (min_separation < 1) {
        throw SizeError("top_two_peaks: min_separation must be >= 1");
    }
    Peak primary;
    double best = -std::numeric_limits<double>::infinity();
    for (int y = 0; y < h.side; ++y) {
        for (int x = 0; x < h.side; ++x) {
            const double v = h.at(x, y);
            if (v > best) {
                best = v;
                primary = Peak{x, y, v};
            }
        }
    }

    auto [xp, yp] = project_profiles(h);
    std::vector<char> x_ok(h.side, 0), y_ok(h.side, 0);
    for (const auto& [i, v] : find_profile_peaks(xp)) x_ok[i] = 1;
    for (const auto& [i, v] : find_profile_peaks(yp)) y_ok[i] = 1;

    std::optional<Peak> secondary;
    for (int y = 1; y < h.side - 1; ++y) {
        for (int x = 1; x < h.side - 1; ++x) {
            const int cheb =
                std::max(std::abs(x - primary.x), std::abs(y - primary.y));
            if (cheb < min_separation) continue;
            if (!x_ok[x] || !y_ok[y]) continue;
            if (!strict_local_max_8(h, x, y)) continue;
            const double v = h.at(x, y);
            if (!secondary || v > secondary->height) {
                secondary = Peak{x, y, v};
            }
        }
    }
    return {primary, secondary};
}

ConfidenceVerdict evaluate_confidence(const Heatmap& h, double threshold,
                                      int min_separation) {
    auto [primary, secondary] = top_two_peaks(h, min_separation);
    if (primary.height <= 0.0) {
        throw DegenerateHeatmapError("evaluate_confidence: all-zero heatmap");
    }
    ConfidenceVerdict v;
    v.primary = primary;
    v.secondary = secondary;
    v.ratio = secondary ? secondary->height / primary.height : 0.0;
    v.ambiguous = v.ratio > threshold;
    return v;
}

}  // namespace hns
