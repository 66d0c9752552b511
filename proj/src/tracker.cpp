#include "hns/tracker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hns/imgproc.hpp"

namespace hns {

namespace {

bool uses_census(Variant v) {
    return v == Variant::hns || v == Variant::hnssa;
}

double box_scale(const BoundingBox& b) { return std::max(b.w, b.h); }

BoundingBox shifted(const BoundingBox& b, double dx, double dy) {
    return {b.cx + dx, b.cy + dy, b.w, b.h};
}

ConfidenceVerdict degenerate_verdict(int side, bool ambiguous) {
    ConfidenceVerdict v;
    v.primary = Peak{side / 2, side / 2, 0.0};
    v.ratio = ambiguous ? 1.0 : 0.0;
    v.ambiguous = ambiguous;
    return v;
}

Image capture_census_template(const Image& frame, const BoundingBox& box,
                              int side) {
    return crop_resize(frame, box, 1.0, side).image;
}

}  // namespace

int TrackerConfig::census_template_side() const {
    const int side =
        static_cast<int>(std::lround(instance_side / (2.0 * context_factor)));
    return std::max(8, side);
}

int TrackerConfig::census_search_side() const {
    return static_cast<int>(
        std::lround(2.0 * context_factor * census_template_side()));
}

int TrackerConfig::peak_separation(int heatmap_side) const {
    if (min_peak_separation > 0) return min_peak_separation;
    return std::max(1, heatmap_side / 4);
}

BoundingBox extrapolate(const BoundingBox& prev, const BoundingBox& prev2) {
    return {2.0 * prev.cx - prev2.cx, 2.0 * prev.cy - prev2.cy, prev.w,
            prev.h};
}

TrackerState tracker_init(const Image& frame, const BoundingBox& b0,
                          const TrackerConfig& cfg) {
    if (!b0.valid()) {
        throw InvalidBoxError("tracker_init: box needs positive width/height");
    }
    TrackerState s;
    s.cfg = cfg;
    s.box = b0;
    s.prev_box = b0;
    const Patch p0 = crop_resize(frame, b0, cfg.context_factor, cfg.instance_side);
    const UpdateMode mode = cfg.variant == Variant::hnssa ? UpdateMode::smooth
                                                          : UpdateMode::simple;
    s.query = init_query(extract_features(p0), cfg.alpha, mode, cfg.smooth_form);
    if (uses_census(cfg.variant)) {
        s.census_template =
            capture_census_template(frame, b0, cfg.census_template_side());
    }
    return s;
}

std::pair<BoundingBox, StepDiagnostics> tracker_step(TrackerState& state,
                                                     const Image& frame) {
    const TrackerConfig& cfg = state.cfg;
    state.frame_index += 1;

    const int side = cfg.instance_side * state.search_scale;
    const double stride =
        cfg.context_factor * box_scale(state.box) / cfg.instance_side;
    const Patch patch = crop_resize(
        frame, state.box, cfg.context_factor * state.search_scale, side);
    const FeatureMap feats = extract_features(patch);

    Heatmap hm;
    if (state.search_scale == 1) {
        hm = correlate(state.query, feats, stride);
    } else {
        hm = correlate(*state.enlarged_spectrum, feats, stride);
    }

    ConfidenceVerdict verdict;
    bool degenerate = false;
    try {
        verdict = evaluate_confidence(hm, cfg.confidence_threshold,
                                      cfg.peak_separation(side));
    } catch (const DegenerateHeatmapError&) {
        degenerate = true;
    }

    const bool gated = cfg.variant != Variant::baseline;
    const bool ambiguous = gated && (degenerate || verdict.ambiguous);
    if (degenerate) verdict = degenerate_verdict(side, ambiguous);

    StepDiagnostics diag;
    BoundingBox out;

    if (!ambiguous) {
        const double dx = (verdict.primary.x - side / 2) * stride;
        const double dy = (verdict.primary.y - side / 2) * stride;
        out = shifted(state.box, dx, dy);
        state.prev_box = state.box;
        state.box = out;
        if (state.mode == Mode::failure) {
            state.mode = Mode::normal;
            state.search_scale = 1;
            state.enlarged_template.reset();
            state.enlarged_spectrum.reset();
            state.failure_run = 0;
        }
        const Patch refit =
            crop_resize(frame, out, cfg.context_factor, cfg.instance_side);
        update_query(state.query, extract_features(refit));
        if (uses_census(cfg.variant)) {
            state.census_template = capture_census_template(
                frame, out, cfg.census_template_side());
            state.census_plan.reset();
        }
        diag.source = StepSource::main;
    } else {
        switch (cfg.variant) {
            case Variant::hns0:
                out = state.box;
                diag.source = StepSource::frozen;
                break;
            case Variant::hns1:
                out = extrapolate(state.box, state.prev_box);
                diag.source = StepSource::extrapolated;
                break;
            default: {
                const int tside = cfg.census_template_side();
                const int sside = cfg.census_search_side();
                const Image search =
                    crop_resize(frame, state.box, 2.0 * cfg.context_factor,
                                sside)
                        .image;
                if (!state.census_plan) {
                    state.census_plan = prepare_census_search(
                        *state.census_template, sside, sside);
                }
                const CensusMatch m = census_match(*state.census_plan, search);
                const double px_per_cell = box_scale(state.box) / tside;
                out = shifted(state.box, m.dx * px_per_cell, m.dy * px_per_cell);
                diag.source = StepSource::backup;
                break;
            }
        }
        state.prev_box = state.box;
        state.box = out;
        if (state.mode == Mode::normal) {
            state.search_scale = 2;
            state.enlarged_template =
                pad_centered(state.query.tmpl, 2 * cfg.instance_side);
            state.enlarged_spectrum = prepare_template(*state.enlarged_template);
            state.failure_run = 0;
        }
        state.mode = Mode::failure;
        state.failure_run += 1;
        if (cfg.max_failure_frames > 0 &&
            state.failure_run >= cfg.max_failure_frames) {
            state.mode = Mode::normal;
            state.search_scale = 1;
            state.enlarged_template.reset();
            state.enlarged_spectrum.reset();
            state.failure_run = 0;
        }
    }

    diag.verdict = verdict;
    diag.mode_after = state.mode;
    diag.heatmap = std::move(hm);
    return {out, diag};
}

SequenceRun run_sequence(const std::function<Image(int)>& frame_at,
                         int frame_count, const BoundingBox& b0,
                         const TrackerConfig& cfg) {
    if (frame_count < 1) throw SizeError("run_sequence: empty sequence");
    using clock = std::chrono::steady_clock;

    SequenceRun run;
    run.boxes.reserve(frame_count);
    run.diagnostics.reserve(frame_count > 0 ? frame_count - 1 : 0);

    Image frame = frame_at(0);
    double total_seconds = 0.0;

    auto t0 = clock::now();
    TrackerState state = tracker_init(frame, b0, cfg);
    total_seconds += std::chrono::duration<double>(clock::now() - t0).count();
    run.boxes.push_back(b0);

    for (int i = 1; i < frame_count; ++i) {
        frame = frame_at(i);
        auto ts = clock::now();
        auto [box, diag] = tracker_step(state, frame);
        const double dt =
            std::chrono::duration<double>(clock::now() - ts).count();
        total_seconds += dt;
        run.step_seconds.push_back(dt);
        run.boxes.push_back(box);
        run.diagnostics.push_back(std::move(diag));
    }

    run.fps = total_seconds > 0.0 ? frame_count / total_seconds : 0.0;
    return run;
}

SequenceRun run_sequence(const std::vector<Image>& frames,
                         const BoundingBox& b0, const TrackerConfig& cfg) {
    return run_sequence(
        [&frames](int i) -> Image { return frames[static_cast<std::size_t>(i)]; },
        static_cast<int>(frames.size()), b0, cfg);
}

}  // namespace hns
