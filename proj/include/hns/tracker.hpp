#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hns/census.hpp"
#include "hns/confidence.hpp"
#include "hns/correlation.hpp"
#include "hns/query_model.hpp"

namespace hns {

enum class Variant { baseline, hns0, hns1, hns, hnssa };

enum class Mode { normal, failure };

// Where the frame's output box came from: the main heatmap peak, the census
// backup tracker, the held previous box, or linear extrapolation.
enum class StepSource { main, backup, frozen, extrapolated };

struct TrackerConfig {
    Variant variant = Variant::hns;
    double confidence_threshold = 0.9;
    double alpha = 0.005;
    int instance_side = 64;
    double context_factor = 2.0;
    int min_peak_separation = 0;  // 0: a quarter of the heatmap side
    SmoothForm smooth_form = SmoothForm::eq2;
    int max_failure_frames = 0;  // 0: unlimited

    // Census template resolution: the target box sampled at half the main
    // patch's pixel density.
    int census_template_side() const;
    int census_search_side() const;
    int peak_separation(int heatmap_side) const;
};

struct StepDiagnostics {
    ConfidenceVerdict verdict;
    Mode mode_after = Mode::normal;
    Heatmap heatmap;
    StepSource source = StepSource::main;
};

struct TrackerState {
    TrackerConfig cfg;
    Mode mode = Mode::normal;
    BoundingBox box;       // box of the latest processed frame
    BoundingBox prev_box;  // box of the frame before that
    QueryModel query;
    int search_scale = 1;  // 1 normal, 2 while in failure mode
    std::optional<Image> census_template;
    // Query template zero-padded to the doubled window, built on failure
    // entry; the query is frozen during failure so this stays valid, and so
    // do the cached kernel transforms below. They keep failure-mode steps
    // from re-transforming frozen templates every frame.
    std::optional<FeatureMap> enlarged_template;
    std::optional<TemplateSpectrum> enlarged_spectrum;
    std::optional<CensusSearchPlan> census_plan;
    long frame_index = 0;
    int failure_run = 0;  // consecutive ambiguous frames
};

// Per-coordinate linear extrapolation of the center from the last two boxes;
// the size is copied from prev.
BoundingBox extrapolate(const BoundingBox& prev, const BoundingBox& prev2);

TrackerState tracker_init(const Image& frame, const BoundingBox& b0,
                          const TrackerConfig& cfg);

// One frame of the state machine: crop at the current scale, correlate,
// gate on the NNDR verdict, then either follow the peak and update the query
// (confident) or hand the box to the variant's fallback with the query
// frozen (ambiguous). Returns the new box.
std::pair<BoundingBox, StepDiagnostics> tracker_step(TrackerState& state,
                                                     const Image& frame);

struct SequenceRun {
    std::vector<BoundingBox> boxes;           // one per frame; boxes[0] == b0
    std::vector<StepDiagnostics> diagnostics;  // one per stepped frame
    std::vector<double> step_seconds;          // per-step wall time
    double fps = 0.0;  // frames over init+step time, ingestion excluded
};

SequenceRun run_sequence(const std::vector<Image>& frames,
                         const BoundingBox& b0, const TrackerConfig& cfg);

// Streaming form; frame_at(i) is called once per frame outside the timers.
SequenceRun run_sequence(const std::function<Image(int)>& frame_at,
                         int frame_count, const BoundingBox& b0,
                         const TrackerConfig& cfg);

}  // namespace hns
