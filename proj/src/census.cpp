#include "hns/census.hpp"

#include <cmath>
#include <cstdlib>

#include "fft.hpp"

namespace hns {

namespace {

constexpr double kVarEps = 1e-12;

std::uint8_t rotl8(std::uint8_t c, int k) {
    return static_cast<std::uint8_t>(((c << k) | (c >> (8 - k))) & 0xff);
}

// Inclusive-exclusive integral image; sums of w x h windows in O(1).
class IntegralImage {
public:
    IntegralImage(const std::vector<double>& grid, int width, int height)
        : width_(width), acc_((width + 1) * (height + 1), 0.0) {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                acc_[idx(x + 1, y + 1)] = grid[static_cast<std::size_t>(y) * width + x] +
                                          acc_[idx(x, y + 1)] +
                                          acc_[idx(x + 1, y)] - acc_[idx(x, y)];
            }
        }
    }

    double window_sum(int x0, int y0, int w, int h) const {
        return acc_[idx(x0 + w, y0 + h)] - acc_[idx(x0, y0 + h)] -
               acc_[idx(x0 + w, y0)] + acc_[idx(x0, y0)];
    }

private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * (width_ + 1) + x;
    }
    int width_;
    std::vector<double> acc_;
};

}  // namespace

CensusMap census_transform(const Image& img) {
    if (img.width < 3 || img.height < 3) {
        throw SizeError("census_transform: image smaller than 3x3");
    }
    // Clockwise 3x3 neighbour offsets, starting top-left.
    static constexpr int kOff[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {1, 0},
                                       {1, 1},   {0, 1},  {-1, 1}, {-1, 0}};
    CensusMap out;
    out.width = img.width;
    out.height = img.height;
    out.codes.assign(static_cast<std::size_t>(img.width) * img.height, 0);
    for (int y = 1; y < img.height - 1; ++y) {
        for (int x = 1; x < img.width - 1; ++x) {
            const double center = img.at(x, y);
            unsigned code = 0;
            for (int k = 0; k < 8; ++k) {
                const double nb = img.at(x + kOff[k][0], y + kOff[k][1]);
                code |= static_cast<unsigned>(nb < center) << (7 - k);
            }
            out.codes[static_cast<std::size_t>(y) * img.width + x] =
                static_cast<std::uint8_t>(code);
        }
    }
    return out;
}

CensusChannels census_channels(const CensusMap& c) {
    CensusChannels out;
    out.width = c.width;
    out.height = c.height;
    const std::size_t n = c.codes.size();
    for (int r = 0; r < 4; ++r) {
        out.channels[r].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.channels[r][i] = rotl8(c.codes[i], 2 * r) / 255.0;
        }
    }
    return out;
}

CensusSearchPlan prepare_census_search(const Image& tmpl, int search_w,
                                       int search_h) {
    if (search_w <= tmpl.width || search_h <= tmpl.height) {
        throw SizeError("census_match: search must be strictly larger than template");
    }
    const CensusChannels tc = census_channels(census_transform(tmpl));
    const int w = tmpl.width, h = tmpl.height;
    const int W = search_w, H = search_h;
    const double n_pix = static_cast<double>(w) * h;
    const std::size_t sz = detail::spectrum_size(H, W);

    CensusSearchPlan plan;
    plan.tmpl_w = w;
    plan.tmpl_h = h;
    plan.search_w = W;
    plan.search_h = H;
    plan.spec.assign(sz * 4, {0.0, 0.0});

    std::vector<double> padded(static_cast<std::size_t>(H) * W);
    for (int r = 0; r < 4; ++r) {
        const std::vector<double>& t = tc.channels[r];
        double t_sum = 0.0;
        for (double v : t) t_sum += v;
        const double t_mean = t_sum / n_pix;
        double t_var = 0.0;
        for (double v : t) t_var += (v - t_mean) * (v - t_mean);
        plan.tmpl_var[r] = t_var;
        if (t_var <= kVarEps) continue;

        // Numerator at displacement d: sum over the window of (T - mean(T)) * S,
        // a circular cross-correlation of the zero-padded centered template.
        std::fill(padded.begin(), padded.end(), 0.0);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                padded[static_cast<std::size_t>(y) * W + x] =
                    t[static_cast<std::size_t>(y) * w + x] - t_mean;
            }
        }
        detail::fft2_r2c(H, W, padded.data(), plan.spec.data() + sz * r);
    }
    return plan;
}

CensusMatch census_match(const Image& tmpl, const Image& search) {
    return census_match(prepare_census_search(tmpl, search.width, search.height),
                        search);
}

CensusMatch census_match(const CensusSearchPlan& plan, const Image& search) {
    if (search.width != plan.search_w || search.height != plan.search_h) {
        throw SizeError("census_match: search size differs from the plan");
    }
    const CensusChannels sc = census_channels(census_transform(search));

    const int w = plan.tmpl_w, h = plan.tmpl_h;
    const int W = plan.search_w, H = plan.search_h;
    const int du = W - w, dv = H - h;  // inclusive displacement ranges
    const double n_pix = static_cast<double>(w) * h;
    const std::size_t sz = detail::spectrum_size(H, W);

    std::vector<double> score(static_cast<std::size_t>(dv + 1) * (du + 1), 0.0);
    std::vector<double> corr(static_cast<std::size_t>(H) * W);
    std::vector<double> sq(static_cast<std::size_t>(H) * W);

    for (int r = 0; r < 4; ++r) {
        const double t_var = plan.tmpl_var[r];
        if (t_var <= kVarEps) continue;
        const std::vector<double>& s = sc.channels[r];

        std::fill(corr.begin(), corr.end(), 0.0);
        detail::cross_correlate_spec(H, W, plan.spec.data() + sz * r, s.data(),
                                     corr);

        for (std::size_t i = 0; i < s.size(); ++i) sq[i] = s[i] * s[i];
        const IntegralImage s_sum(s, W, H);
        const IntegralImage s_sq(sq, W, H);

        for (int v = 0; v <= dv; ++v) {
            for (int u = 0; u <= du; ++u) {
                const double ws = s_sum.window_sum(u, v, w, h);
                const double wv = s_sq.window_sum(u, v, w, h) - ws * ws / n_pix;
                if (wv <= kVarEps) continue;
                const double num = corr[static_cast<std::size_t>(v) * W + u];
                score[static_cast<std::size_t>(v) * (du + 1) + u] +=
                    num / std::sqrt(t_var * wv);
            }
        }
    }

    const int uc = du / 2, vc = dv / 2;
    CensusMatch best;
    best.dx = -uc;
    best.dy = -vc;
    best.score = score[0];
    int best_cheb = std::max(std::abs(uc), std::abs(vc));
    for (int v = 0; v <= dv; ++v) {
        for (int u = 0; u <= du; ++u) {
            const double sc_uv = score[static_cast<std::size_t>(v) * (du + 1) + u];
            const int cheb = std::max(std::abs(u - uc), std::abs(v - vc));
            if (sc_uv > best.score ||
                (sc_uv == best.score && cheb < best_cheb)) {
                best.score = sc_uv;
                best.dx = u - uc;
                best.dy = v - vc;
                best_cheb = cheb;
            }
        }
    }
    return best;
}

}  // namespace hns
