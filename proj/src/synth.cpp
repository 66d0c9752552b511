#include "hns/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <json.hpp>

namespace hns {

namespace {

// Smooth low-contrast background: a coarse random lattice, bilinearly
// interpolated, swinging background_amplitude around 0.5.
Image value_noise_background(int width, int height, double amplitude,
                             std::mt19937_64& rng) {
    constexpr int kSpacing = 8;
    const int gw = width / kSpacing + 2;
    const int gh = height / kSpacing + 2;
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> lattice(static_cast<std::size_t>(gw) * gh);
    for (double& v : lattice) v = uni(rng);

    Image bg(width, height);
    for (int y = 0; y < height; ++y) {
        const double gy = static_cast<double>(y) / kSpacing;
        const int y0 = static_cast<int>(gy);
        const double fy = gy - y0;
        for (int x = 0; x < width; ++x) {
            const double gx = static_cast<double>(x) / kSpacing;
            const int x0 = static_cast<int>(gx);
            const double fx = gx - x0;
            const double v00 = lattice[static_cast<std::size_t>(y0) * gw + x0];
            const double v10 = lattice[static_cast<std::size_t>(y0) * gw + x0 + 1];
            const double v01 = lattice[static_cast<std::size_t>(y0 + 1) * gw + x0];
            const double v11 = lattice[static_cast<std::size_t>(y0 + 1) * gw + x0 + 1];
            const double top = v00 * (1.0 - fx) + v10 * fx;
            const double bot = v01 * (1.0 - fx) + v11 * fx;
            bg.at(x, y) = 0.5 + amplitude * (top * (1.0 - fy) + bot * fy);
        }
    }
    return bg;
}

Image random_texture(int w, int h, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Image tex(w, h);
    for (double& v : tex.data) v = uni(rng);
    return tex;
}

Image box_blur(const Image& img, int passes) {
    Image cur = img;
    for (int p = 0; p < passes; ++p) {
        Image next(cur.width, cur.height);
        for (int y = 0; y < cur.height; ++y) {
            for (int x = 0; x < cur.width; ++x) {
                double sum = 0.0;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = std::clamp(x + dx, 0, cur.width - 1);
                        const int sy = std::clamp(y + dy, 0, cur.height - 1);
                        sum += cur.at(sx, sy);
                    }
                }
                next.at(x, y) = sum / 9.0;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

void draw_patch(Image& frame, const Image& tex, double cx, double cy) {
    const int x0 = static_cast<int>(std::lround(cx - (tex.width - 1) / 2.0));
    const int y0 = static_cast<int>(std::lround(cy - (tex.height - 1) / 2.0));
    for (int ty = 0; ty < tex.height; ++ty) {
        for (int tx = 0; tx < tex.width; ++tx) {
            const int fx = x0 + tx;
            const int fy = y0 + ty;
            if (frame.in_bounds(fx, fy)) frame.at(fx, fy) = tex.at(tx, ty);
        }
    }
}

std::pair<double, double> path_position(const std::vector<SynthKeyframe>& path,
                                        int width, int height, int t) {
    if (path.empty()) {
        return {(width - 1) / 2.0, (height - 1) / 2.0};
    }
    if (t <= path.front().frame) return {path.front().cx, path.front().cy};
    if (t >= path.back().frame) return {path.back().cx, path.back().cy};
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (t <= path[i].frame) {
            const SynthKeyframe& a = path[i - 1];
            const SynthKeyframe& b = path[i];
            if (b.frame == a.frame) return {b.cx, b.cy};
            const double f =
                static_cast<double>(t - a.frame) / (b.frame - a.frame);
            return {a.cx + f * (b.cx - a.cx), a.cy + f * (b.cy - a.cy)};
        }
    }
    return {path.back().cx, path.back().cy};
}

}  // namespace

SynthResult synth_sequence(const SynthSpec& spec, std::uint64_t seed) {
    if (spec.width < 16 || spec.height < 16 || spec.frame_count < 1) {
        throw SizeError("synth_sequence: degenerate frame geometry");
    }
    if (spec.target_w < 3 || spec.target_h < 3) {
        throw SizeError("synth_sequence: target smaller than 3x3");
    }
    for (const SynthOcclusion& occ : spec.occlusions) {
        if (occ.start < 0 || occ.end >= spec.frame_count ||
            occ.start > occ.end) {
            throw SizeError("synth_sequence: occlusion interval outside frame range");
        }
    }
    for (const SynthKeyframe& k : spec.path) {
        if (k.frame < 0 || k.frame >= spec.frame_count) {
            throw SizeError("synth_sequence: path keyframe outside frame range");
        }
    }

    std::mt19937_64 rng(seed);
    const Image background = value_noise_background(
        spec.width, spec.height, spec.background_amplitude, rng);
    const Image texture = random_texture(spec.target_w, spec.target_h, rng);
    const Image degraded =
        spec.initial_blur_frames > 0 ? box_blur(texture, spec.blur_passes)
                                     : Image();

    SynthResult out;
    out.sequence.name = spec.name;
    out.sequence.images.reserve(spec.frame_count);
    out.true_boxes.reserve(spec.frame_count);
    out.visible.reserve(spec.frame_count);

    const auto occluded = [&spec](int t) {
        for (const SynthOcclusion& occ : spec.occlusions) {
            if (t >= occ.start && t <= occ.end) return true;
        }
        return false;
    };

    for (int t = 0; t < spec.frame_count; ++t) {
        const auto [cx, cy] = path_position(spec.path, spec.width, spec.height, t);
        const BoundingBox truth{cx, cy, static_cast<double>(spec.target_w),
                                static_cast<double>(spec.target_h)};
        const bool vis = !occluded(t);

        Image frame = background;
        if (spec.distractor_offset) {
            draw_patch(frame, texture, cx + spec.distractor_offset->first,
                       cy + spec.distractor_offset->second);
        }
        if (vis) {
            const Image& tex =
                t < spec.initial_blur_frames ? degraded : texture;
            draw_patch(frame, tex, cx, cy);
        }

        out.sequence.images.push_back(std::move(frame));
        out.true_boxes.push_back(truth);
        out.visible.push_back(vis ? 1 : 0);
        if (vis || out.sequence.groundtruth.empty()) {
            out.sequence.groundtruth.push_back(truth);
        } else {
            out.sequence.groundtruth.push_back(out.sequence.groundtruth.back());
        }
    }

    std::set<std::string> tags;
    if (!spec.occlusions.empty()) tags.insert("occlusion");
    if (spec.initial_blur_frames > 0) tags.insert("motion-blur");
    out.sequence.attributes.assign(tags.begin(), tags.end());
    return out;
}

SynthSpec parse_synth_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed scenario JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("scenario JSON must be an object");

    SynthSpec spec;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "name") {
                spec.name = value.get<std::string>();
            } else if (key == "width") {
                spec.width = value.get<int>();
            } else if (key == "height") {
                spec.height = value.get<int>();
            } else if (key == "frames") {
                spec.frame_count = value.get<int>();
            } else if (key == "target") {
                spec.target_w = value.at("w").get<int>();
                spec.target_h = value.at("h").get<int>();
            } else if (key == "path") {
                for (const auto& kf : value) {
                    spec.path.push_back({kf.at("frame").get<int>(),
                                         kf.at("cx").get<double>(),
                                         kf.at("cy").get<double>()});
                }
            } else if (key == "occlusions") {
                for (const auto& occ : value) {
                    spec.occlusions.push_back({occ.at("start").get<int>(),
                                               occ.at("end").get<int>()});
                }
            } else if (key == "background_amplitude") {
                spec.background_amplitude = value.get<double>();
            } else if (key == "initial_blur_frames") {
                spec.initial_blur_frames = value.get<int>();
            } else if (key == "blur_passes") {
                spec.blur_passes = value.get<int>();
            } else if (key == "distractor") {
                spec.distractor_offset = {value.at("dx").get<double>(),
                                          value.at("dy").get<double>()};
            } else {
                throw Error("unknown scenario key: " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed scenario JSON: ") + e.what());
    }

    std::stable_sort(spec.path.begin(), spec.path.end(),
                     [](const SynthKeyframe& a, const SynthKeyframe& b) {
                         return a.frame < b.frame;
                     });
    return spec;
}

}  // namespace hns
