#include "hns/correlation.hpp"

#include <algorithm>

#include "fft.hpp"
#include "hns/imgproc.hpp"

namespace hns {

namespace {

void require_same_shape(const FeatureMap& a, const FeatureMap& b) {
    if (!a.same_shape(b)) {
        throw ShapeError("correlate: feature map shapes differ");
    }
}

void require_spectrum_shape(const TemplateSpectrum& ts, const FeatureMap& f) {
    if (ts.channels != f.channels || ts.side != f.side) {
        throw ShapeError("correlate: feature map shapes differ");
    }
}

// Sums conj(kernel) * grid spectra over channels, then runs one inverse
// transform and recenters zero displacement on the middle cell.
Heatmap raw_from_spectrum(const TemplateSpectrum& ts, const FeatureMap& f,
                          double cell_stride) {
    const int side = ts.side;
    const std::size_t sz = detail::spectrum_size(side, side);
    std::vector<std::complex<double>> acc(sz, {0.0, 0.0});
    std::vector<std::complex<double>> ga(sz);
    for (int c = 0; c < ts.channels; ++c) {
        detail::fft2_r2c(side, side, f.channel(c), ga.data());
        const std::complex<double>* ka = ts.spec.data() + sz * c;
        for (std::size_t i = 0; i < sz; ++i) acc[i] += std::conj(ka[i]) * ga[i];
    }
    std::vector<double> raw(static_cast<std::size_t>(side) * side);
    detail::fft2_c2r(side, side, acc.data(), raw.data());

    Heatmap hm;
    hm.side = side;
    hm.cell_stride = cell_stride;
    hm.data.resize(raw.size());
    const int half = side / 2;
    for (int y = 0; y < side; ++y) {
        const int sy = (y + side - half) % side;
        for (int x = 0; x < side; ++x) {
            const int sx = (x + side - half) % side;
            hm.at(x, y) = raw[static_cast<std::size_t>(sy) * side + sx];
        }
    }
    return hm;
}

Heatmap finish(Heatmap hm) {
    const Image w = hann_window_2d(hm.side, hm.side);
    for (std::size_t i = 0; i < hm.data.size(); ++i) hm.data[i] *= w.data[i];
    const double lo = *std::min_element(hm.data.begin(), hm.data.end());
    for (double& v : hm.data) v -= lo;
    return hm;
}

}  // namespace

TemplateSpectrum prepare_template(const FeatureMap& tmpl) {
    TemplateSpectrum ts;
    ts.channels = tmpl.channels;
    ts.side = tmpl.side;
    const std::size_t sz = detail::spectrum_size(tmpl.side, tmpl.side);
    ts.spec.resize(sz * tmpl.channels);
    for (int c = 0; c < tmpl.channels; ++c) {
        detail::fft2_r2c(tmpl.side, tmpl.side, tmpl.channel(c),
                         ts.spec.data() + sz * c);
    }
    return ts;
}

Heatmap correlate_raw(const FeatureMap& tmpl, const FeatureMap& f,
                      double cell_stride) {
    require_same_shape(tmpl, f);
    return raw_from_spectrum(prepare_template(tmpl), f, cell_stride);
}

Heatmap correlate_raw(const TemplateSpectrum& tmpl, const FeatureMap& f,
                      double cell_stride) {
    require_spectrum_shape(tmpl, f);
    return raw_from_spectrum(tmpl, f, cell_stride);
}

Heatmap correlate(const FeatureMap& tmpl, const FeatureMap& f,
                  double cell_stride) {
    return finish(correlate_raw(tmpl, f, cell_stride));
}

Heatmap correlate(const QueryModel& q, const FeatureMap& f,
                  double cell_stride) {
    return correlate(q.tmpl, f, cell_stride);
}

Heatmap correlate(const TemplateSpectrum& tmpl, const FeatureMap& f,
                  double cell_stride) {
    return finish(correlate_raw(tmpl, f, cell_stride));
}

}  // namespace hns
