#pragma once

#include <complex>
#include <vector>

#include "hns/features.hpp"
#include "hns/query_model.hpp"

namespace hns {

// Similarity response over circular displacements. The zero-displacement
// score sits at the center cell (side/2, side/2); cell_stride converts a
// cell offset into frame pixels.
struct Heatmap {
    int side = 0;
    double cell_stride = 1.0;
    std::vector<double> data;

    double at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * side + x];
    }
    double& at(int x, int y) {
        return data[static_cast<std::size_t>(y) * side + x];
    }
    std::size_t cell_count() const { return data.size(); }
};

// Frequency-domain image of a template, reusable across frames while the
// template itself does not change (the tracker freezes templates during
// failure runs, so kernel transforms there are paid once per run).
struct TemplateSpectrum {
    int channels = 0;
    int side = 0;
    std::vector<std::complex<double>> spec;  // channel-major
};

TemplateSpectrum prepare_template(const FeatureMap& tmpl);

// Channel-summed circular cross-correlation, shifted so zero displacement is
// centered. No weight window, no min subtraction; scores may be negative.
Heatmap correlate_raw(const FeatureMap& tmpl, const FeatureMap& f,
                      double cell_stride = 1.0);
Heatmap correlate_raw(const TemplateSpectrum& tmpl, const FeatureMap& f,
                      double cell_stride = 1.0);

// Full response pipeline: correlate_raw, element-wise Hann weighting, then
// shift to non-negative by subtracting the minimum.
Heatmap correlate(const FeatureMap& tmpl, const FeatureMap& f,
                  double cell_stride = 1.0);
Heatmap correlate(const QueryModel& q, const FeatureMap& f,
                  double cell_stride = 1.0);
Heatmap correlate(const TemplateSpectrum& tmpl, const FeatureMap& f,
                  double cell_stride = 1.0);

}  // namespace hns
