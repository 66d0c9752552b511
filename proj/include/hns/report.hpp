#pragma once

#include <cstdint>
#include <string>

#include "hns/benchmark.hpp"

namespace hns {

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

std::string protocol_name(Protocol p);
Protocol parse_protocol(const std::string& s);

std::string smooth_form_name(SmoothForm f);
SmoothForm parse_smooth_form(const std::string& s);

struct ReportMeta {
    std::string dataset;
    Protocol protocol = Protocol::ope;
    int trials = 20;
    std::uint64_t seed = 0;
    int jobs = 1;
    // fps numbers are wall-clock measurements and would break byte-identical
    // reruns; they are written as 0 unless explicitly requested.
    bool emit_fps = false;
    double precision_threshold = 20.0;
};

// Structured report: {dataset, config, per_sequence, aggregate, attributes,
// fps}, serialized with sorted keys and two-space indentation.
std::string make_report_json(const BenchmarkResult& result,
                             const std::vector<Sequence>& dataset,
                             const TrackerConfig& cfg, const ReportMeta& meta);

// Flat per-trial rows: sequence,protocol,trial,precision20,success_auc,fps.
std::string make_report_csv(const BenchmarkResult& result, bool emit_fps);

// Per-frame rows: frame,cx,cy,w,h,mode,nndr_ratio.
std::string make_track_csv(const SequenceRun& run);

}  // namespace hns
