#include "hns/report.hpp"

#include <json.hpp>

#include "hns/format.hpp"

namespace hns {

namespace {

using nlohmann::json;

double masked(double fps, bool emit) { return emit ? fps : 0.0; }

json score_json(const ProtocolScore& s, bool emit_fps) {
    return {{"precision20", s.precision20},
            {"success_auc", s.success_auc},
            {"fps", masked(s.fps, emit_fps)}};
}

json trial_json(const EvalResult& r, bool emit_fps) {
    return {{"start", r.start},
            {"frames", r.frames},
            {"precision20", r.precision20},
            {"success_auc", r.success_auc},
            {"fps", masked(r.fps, emit_fps)}};
}

ProtocolScore mean_scores(const std::vector<ProtocolScore>& scores) {
    ProtocolScore m;
    if (scores.empty()) return m;
    for (const ProtocolScore& s : scores) {
        m.precision20 += s.precision20;
        m.success_auc += s.success_auc;
        m.fps += s.fps;
    }
    m.precision20 /= scores.size();
    m.success_auc /= scores.size();
    m.fps /= scores.size();
    return m;
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::baseline: return "baseline";
        case Variant::hns0: return "hns0";
        case Variant::hns1: return "hns1";
        case Variant::hns: return "hns";
        case Variant::hnssa: return "hnssa";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "baseline") return Variant::baseline;
    if (s == "hns0") return Variant::hns0;
    if (s == "hns1") return Variant::hns1;
    if (s == "hns") return Variant::hns;
    if (s == "hnssa") return Variant::hnssa;
    throw Error("unknown variant: " + s);
}

std::string protocol_name(Protocol p) {
    switch (p) {
        case Protocol::ope: return "ope";
        case Protocol::tre: return "tre";
        case Protocol::both: return "both";
    }
    return "?";
}

Protocol parse_protocol(const std::string& s) {
    if (s == "ope") return Protocol::ope;
    if (s == "tre") return Protocol::tre;
    if (s == "both") return Protocol::both;
    throw Error("unknown protocol: " + s);
}

std::string smooth_form_name(SmoothForm f) {
    return f == SmoothForm::alg1 ? "alg1" : "eq2";
}

SmoothForm parse_smooth_form(const std::string& s) {
    if (s == "eq2") return SmoothForm::eq2;
    if (s == "alg1") return SmoothForm::alg1;
    throw Error("unknown smooth form: " + s);
}

std::string make_report_json(const BenchmarkResult& result,
                             const std::vector<Sequence>& dataset,
                             const TrackerConfig& cfg, const ReportMeta& meta) {
    const bool emit_fps = meta.emit_fps;

    json per_sequence = json::array();
    std::vector<ProtocolScore> ope_scores;
    std::vector<ProtocolScore> tre_scores;
    std::vector<EvalResult> ope_results;
    std::vector<EvalResult> tre_results;

    for (const SequenceEval& ev : result.sequences) {
        json entry{{"name", ev.name}};
        if (ev.ope) {
            const ProtocolScore s{ev.ope->precision20, ev.ope->success_auc,
                                  ev.ope->fps};
            entry["ope"] = score_json(s, emit_fps);
            ope_scores.push_back(s);
            ope_results.push_back(*ev.ope);
        }
        if (!ev.tre.empty()) {
            const ProtocolScore s = weighted_score(ev.tre);
            json tre = score_json(s, emit_fps);
            json trials = json::array();
            for (const EvalResult& r : ev.tre) {
                trials.push_back(trial_json(r, emit_fps));
            }
            tre["trials"] = std::move(trials);
            entry["tre"] = std::move(tre);
            tre_scores.push_back(s);
            tre_results.insert(tre_results.end(), ev.tre.begin(), ev.tre.end());
        }
        per_sequence.push_back(std::move(entry));
    }

    json aggregate = json::object();
    if (!ope_scores.empty()) {
        aggregate["ope"] = score_json(mean_scores(ope_scores), emit_fps);
    }
    if (!tre_scores.empty()) {
        aggregate["tre"] = score_json(mean_scores(tre_scores), emit_fps);
    }

    json attributes = json::object();
    if (!ope_results.empty()) {
        for (const auto& [tag, s] : attribute_report(ope_results, dataset)) {
            attributes[tag]["ope"] = score_json(s, emit_fps);
        }
    }
    if (!tre_results.empty()) {
        for (const auto& [tag, s] : attribute_report(tre_results, dataset)) {
            attributes[tag]["tre"] = score_json(s, emit_fps);
        }
    }

    double overall_fps = 0.0;
    if (emit_fps) {
        std::vector<ProtocolScore> all = ope_scores;
        all.insert(all.end(), tre_scores.begin(), tre_scores.end());
        overall_fps = mean_scores(all).fps;
    }

    const json config{
        {"variant", variant_name(cfg.variant)},
        {"confidence_threshold", cfg.confidence_threshold},
        {"alpha", cfg.alpha},
        {"instance_side", cfg.instance_side},
        {"context_factor", cfg.context_factor},
        {"min_peak_separation", cfg.min_peak_separation},
        {"smooth_form", smooth_form_name(cfg.smooth_form)},
        {"protocol", protocol_name(meta.protocol)},
        {"tre_trials", meta.trials},
        {"tre_min_segment", 20},
        {"tre_trial_weighting", "frame-count"},
        {"aggregate_over_sequences", "unweighted-mean"},
        {"precision_threshold", meta.precision_threshold},
        {"seed", meta.seed},
        {"jobs", meta.jobs},
        {"emit_fps", emit_fps},
    };

    const json doc{
        {"dataset", meta.dataset},       {"config", config},
        {"per_sequence", per_sequence},  {"aggregate", aggregate},
        {"attributes", attributes},      {"fps", overall_fps},
    };
    return doc.dump(2) + "\n";
}

std::string make_report_csv(const BenchmarkResult& result, bool emit_fps) {
    std::string out = "sequence,protocol,trial,precision20,success_auc,fps\n";
    const auto row = [&out, emit_fps](const std::string& name,
                                      const char* protocol, int trial,
                                      const EvalResult& r) {
        out += name;
        out += ',';
        out += protocol;
        out += ',';
        out += std::to_string(trial);
        out += ',';
        out += format_double(r.precision20);
        out += ',';
        out += format_double(r.success_auc);
        out += ',';
        out += format_double(masked(r.fps, emit_fps));
        out += '\n';
    };
    for (const SequenceEval& ev : result.sequences) {
        if (ev.ope) row(ev.name, "ope", 0, *ev.ope);
        for (std::size_t k = 0; k < ev.tre.size(); ++k) {
            row(ev.name, "tre", static_cast<int>(k), ev.tre[k]);
        }
    }
    return out;
}

std::string make_track_csv(const SequenceRun& run) {
    std::string out = "frame,cx,cy,w,h,mode,nndr_ratio\n";
    for (std::size_t i = 0; i < run.boxes.size(); ++i) {
        const BoundingBox& b = run.boxes[i];
        const char* mode = "normal";
        double ratio = 0.0;
        if (i > 0) {
            const StepDiagnostics& d = run.diagnostics[i - 1];
            mode = d.mode_after == Mode::failure ? "failure" : "normal";
            ratio = d.verdict.ratio;
        }
        out += std::to_string(i);
        out += ',';
        out += format_double(b.cx);
        out += ',';
        out += format_double(b.cy);
        out += ',';
        out += format_double(b.w);
        out += ',';
        out += format_double(b.h);
        out += ',';
        out += mode;
        out += ',';
        out += format_double(ratio);
        out += '\n';
    }
    return out;
}

}  // namespace hns
