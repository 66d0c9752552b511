#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hns/tracker.hpp"

namespace hns {

// A named frame sequence with per-frame ground truth. Either file-backed
// (frame_paths, loaded lazily) or held in memory (images); the in-memory
// form wins when both are present.
struct Sequence {
    std::string name;
    std::vector<std::string> frame_paths;
    std::vector<Image> images;
    std::vector<BoundingBox> groundtruth;
    std::vector<std::string> attributes;

    int frame_count() const {
        return static_cast<int>(images.empty() ? frame_paths.size()
                                               : images.size());
    }
    Image frame(int i) const;
};

struct EvalResult {
    std::string sequence;
    int start = 0;  // trial start frame
    int frames = 0;  // frames evaluated (start..end)
    std::vector<BoundingBox> boxes;
    double precision20 = 0.0;
    double success_auc = 0.0;
    double fps = 0.0;
};

// Dataset layout: <dir>/img/*.jpg|*.png (lexicographic), groundtruth_rect.txt
// with one "x,y,w,h" per line (comma/tab/space separated), optional
// attributes.txt with one tag per line. Rectangle corners follow the OTB
// convention and convert to center-based boxes as cx = x + (w-1)/2.
// A ground-truth file shorter than the frame list truncates the frames with
// a warning; a longer one is truncated likewise.
Sequence load_otb_sequence(const std::filesystem::path& dir);

// Write an in-memory sequence in the same layout (PNG frames).
void save_sequence(const Sequence& seq, const std::filesystem::path& dir);

// Fraction of frames whose predicted center lies within `threshold` pixels
// of ground truth (inclusive).
double precision_at(const std::vector<BoundingBox>& pred,
                    const std::vector<BoundingBox>& gt,
                    double threshold = 20.0);

// Mean over the 21 thresholds t = 0, 0.05, ..., 1.0 of the fraction of
// frames with IoU strictly greater than t.
double success_auc(const std::vector<BoundingBox>& pred,
                   const std::vector<BoundingBox>& gt);

// Track frames start..end from the ground-truth box at `start` and score
// against the matching ground-truth tail.
EvalResult run_trial(const Sequence& seq, const TrackerConfig& cfg, int start);

EvalResult run_ope(const Sequence& seq, const TrackerConfig& cfg);

// Equispaced trial starts: round(k * (N - 20) / (trials - 1)); a sequence
// shorter than the 20-frame minimum segment yields the single start 0.
// Duplicate starts are kept.
std::vector<int> tre_start_indices(int frame_count, int trials);

std::vector<EvalResult> run_tre(const Sequence& seq, const TrackerConfig& cfg,
                                int trials = 20);

struct ProtocolScore {
    double precision20 = 0.0;
    double success_auc = 0.0;
    double fps = 0.0;
};

// Frame-count-weighted mean over trials (a single trial returns its own
// scores unchanged).
ProtocolScore weighted_score(const std::vector<EvalResult>& trials);

// Per-attribute unweighted mean over the sequences carrying each tag.
// Multiple results for one sequence (TRE trials) are first collapsed with
// frame-count weights. Results naming a sequence absent from the dataset
// raise an error; tags carried by no scored sequence are omitted.
std::map<std::string, ProtocolScore> attribute_report(
    const std::vector<EvalResult>& results,
    const std::vector<Sequence>& dataset);

enum class Protocol { ope, tre, both };

struct SequenceEval {
    std::string name;
    std::optional<EvalResult> ope;
    std::vector<EvalResult> tre;
};

struct BenchmarkResult {
    std::vector<SequenceEval> sequences;
    int tre_trials = 0;
};

// Evaluate every sequence under the chosen protocol(s). jobs > 1 spreads
// sequences over a worker pool; output order follows the dataset order
// regardless of job count.
BenchmarkResult run_benchmark(const std::vector<Sequence>& dataset,
                              const TrackerConfig& cfg, Protocol protocol,
                              int trials, int jobs);

}  // namespace hns
