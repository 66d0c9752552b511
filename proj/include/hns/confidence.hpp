#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hns/correlation.hpp"

namespace hns {

struct Peak {
    int x = 0;
    int y = 0;
    double height = 0.0;
};

// NNDR verdict over the two most dominant peaks of a heatmap. ratio is
// secondary/primary height (0 when no secondary qualifies); ambiguous iff
// ratio exceeds the threshold.
struct ConfidenceVerdict {
    Peak primary;
    std::optional<Peak> secondary;
    double ratio = 0.0;
    bool ambiguous = false;
};

// Max-projection of the heatmap onto the two axes: first = per-column
// maxima (indexed by x), second = per-row maxima (indexed by y).
std::pair<std::vector<double>, std::vector<double>> project_profiles(
    const Heatmap& h);

// Interior local maxima of a 1-D profile: rising first difference followed
// by a non-positive one, with negative second difference. Plateaus report
// their first index. Sorted by height descending (stable in index order).
std::vector<std::pair<int, double>> find_profile_peaks(
    const std::vector<double>& p);

// primary: global argmax (row-major first occurrence on ties).
// secondary: highest interior cell strictly greater than its 8 neighbours,
// confirmed by both projected profiles, at Chebyshev distance
// >= min_separation from primary; absent when none qualifies.
std::pair<Peak, std::optional<Peak>> top_two_peaks(const Heatmap& h,
                                                   int min_separation);

// Throws DegenerateHeatmapError when the map is all-zero (no primary peak).
ConfidenceVerdict evaluate_confidence(const Heatmap& h, double threshold,
                                      int min_separation);

}  // namespace hns
