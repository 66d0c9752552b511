#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hns/benchmark.hpp"

namespace hns {

struct SynthKeyframe {
    int frame = 0;
    double cx = 0.0;
    double cy = 0.0;
};

// Inclusive frame interval during which the target is hidden.
struct SynthOcclusion {
    int start = 0;
    int end = 0;
};

struct SynthSpec {
    std::string name = "synth";
    int width = 128;
    int height = 128;
    int frame_count = 120;
    int target_w = 16;
    int target_h = 16;
    // Target center path, linearly interpolated between keyframes; constant
    // before the first and after the last. Empty path pins the target to the
    // frame center.
    std::vector<SynthKeyframe> path;
    std::vector<SynthOcclusion> occlusions;
    double background_amplitude = 0.05;  // value-noise swing around 0.5
    // First initial_blur_frames frames draw a degraded (box-blurred) copy of
    // the target texture.
    int initial_blur_frames = 0;
    int blur_passes = 3;
    // Optional second patch with the target's own texture, drawn at a fixed
    // offset from the target path.
    std::optional<std::pair<double, double>> distractor_offset;
};

struct SynthResult {
    Sequence sequence;  // in-memory frames; ground truth holds the last
                        // visible box through occlusions
    std::vector<BoundingBox> true_boxes;  // exact path, every frame
    std::vector<char> visible;
};

// Deterministic for a given (spec, seed) pair.
SynthResult synth_sequence(const SynthSpec& spec, std::uint64_t seed);

// Parse a JSON scenario document; unknown keys are rejected.
SynthSpec parse_synth_spec(const std::string& json_text);

}  // namespace hns
