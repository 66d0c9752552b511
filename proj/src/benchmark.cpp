#include "hns/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "hns/format.hpp"
#include "hns/image_io.hpp"
#include "hns/log.hpp"

namespace fs = std::filesystem;

namespace hns {

namespace {

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".jpg" || ext == ".jpeg" || ext == ".png";
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Image Sequence::frame(int i) const {
    if (!images.empty()) return images[static_cast<std::size_t>(i)];
    return load_image(frame_paths[static_cast<std::size_t>(i)]);
}

Sequence load_otb_sequence(const fs::path& dir) {
    const fs::path img_dir = dir / "img";
    const fs::path gt_file = dir / "groundtruth_rect.txt";
    if (!fs::is_directory(img_dir)) {
        throw IoError("no img/ directory under " + dir.string());
    }
    if (!fs::is_regular_file(gt_file)) {
        throw IoError("missing ground-truth file " + gt_file.string());
    }

    Sequence seq;
    seq.name = dir.filename().string();
    if (seq.name.empty()) seq.name = dir.parent_path().filename().string();

    for (const auto& entry : fs::directory_iterator(img_dir)) {
        if (entry.is_regular_file() && has_image_extension(entry.path())) {
            seq.frame_paths.push_back(entry.path().string());
        }
    }
    std::sort(seq.frame_paths.begin(), seq.frame_paths.end());
    if (seq.frame_paths.empty()) {
        throw IoError("no frames under " + img_dir.string());
    }

    std::ifstream in(gt_file);
    std::string line;
    while (std::getline(in, line)) {
        std::string norm = line;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::replace(norm.begin(), norm.end(), '\t', ' ');
        if (trimmed(norm).empty()) continue;
        std::istringstream ss(norm);
        double x, y, w, h;
        if (!(ss >> x >> y >> w >> h)) {
            throw IoError("malformed rectangle line in " + gt_file.string() +
                          ": " + line);
        }
        seq.groundtruth.push_back(
            {x + (w - 1.0) / 2.0, y + (h - 1.0) / 2.0, w, h});
    }
    if (seq.groundtruth.empty()) {
        throw IoError("empty ground-truth file " + gt_file.string());
    }

    if (seq.groundtruth.size() != seq.frame_paths.size()) {
        const std::size_t n =
            std::min(seq.groundtruth.size(), seq.frame_paths.size());
        log_warn("sequence " + seq.name + ": " +
                 std::to_string(seq.frame_paths.size()) + " frames vs " +
                 std::to_string(seq.groundtruth.size()) +
                 " ground-truth rows; truncating to " + std::to_string(n));
        seq.frame_paths.resize(n);
        seq.groundtruth.resize(n);
    }

    const fs::path attr_file = dir / "attributes.txt";
    if (fs::is_regular_file(attr_file)) {
        std::ifstream af(attr_file);
        std::set<std::string> tags;
        while (std::getline(af, line)) {
            const std::string t = trimmed(line);
            if (!t.empty()) tags.insert(t);
        }
        seq.attributes.assign(tags.begin(), tags.end());
    }
    return seq;
}

void save_sequence(const Sequence& seq, const fs::path& dir) {
    if (seq.images.empty()) {
        throw IoError("save_sequence: sequence holds no in-memory frames");
    }
    if (seq.images.size() != seq.groundtruth.size()) {
        throw ShapeError("save_sequence: frame/ground-truth count mismatch");
    }
    fs::create_directories(dir / "img");

    for (std::size_t i = 0; i < seq.images.size(); ++i) {
        char name[16];
        std::snprintf(name, sizeof(name), "%04zu.png", i + 1);
        save_png((dir / "img" / name).string(), seq.images[i]);
    }

    std::ofstream gt(dir / "groundtruth_rect.txt");
    for (const BoundingBox& b : seq.groundtruth) {
        gt << format_double(b.cx - (b.w - 1.0) / 2.0) << ','
           << format_double(b.cy - (b.h - 1.0) / 2.0) << ','
           << format_double(b.w) << ',' << format_double(b.h) << '\n';
    }
    if (!gt) throw IoError("cannot write ground truth under " + dir.string());

    if (!seq.attributes.empty()) {
        std::ofstream af(dir / "attributes.txt");
        for (const std::string& tag : seq.attributes) af << tag << '\n';
    }
}

double precision_at(const std::vector<BoundingBox>& pred,
                    const std::vector<BoundingBox>& gt, double threshold) {
    if (pred.size() != gt.size()) {
        throw ShapeError("precision_at: list lengths differ");
    }
    if (pred.empty()) return 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (center_distance(pred[i], gt[i]) <= threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(pred.size());
}

double success_auc(const std::vector<BoundingBox>& pred,
                   const std::vector<BoundingBox>& gt) {
    if (pred.size() != gt.size()) {
        throw ShapeError("success_auc: list lengths differ");
    }
    if (pred.empty()) return 0.0;
    std::vector<double> overlaps(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) {
        overlaps[i] = iou(pred[i], gt[i]);
    }
    double sum = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double t = i / 20.0;
        std::size_t hits = 0;
        for (double o : overlaps) {
            if (o > t) ++hits;
        }
        sum += static_cast<double>(hits) / static_cast<double>(pred.size());
    }
    return sum / 21.0;
}

EvalResult run_trial(const Sequence& seq, const TrackerConfig& cfg, int start) {
    const int n = seq.frame_count();
    if (start < 0 || start >= n) {
        throw SizeError("run_trial: start index out of range");
    }
    const int frames = n - start;
    const SequenceRun run = run_sequence(
        [&seq, start](int i) { return seq.frame(start + i); }, frames,
        seq.groundtruth[static_cast<std::size_t>(start)], cfg);

    EvalResult r;
    r.sequence = seq.name;
    r.start = start;
    r.frames = frames;
    r.boxes = run.boxes;
    const std::vector<BoundingBox> gt(seq.groundtruth.begin() + start,
                                      seq.groundtruth.end());
    r.precision20 = precision_at(r.boxes, gt);
    r.success_auc = success_auc(r.boxes, gt);
    r.fps = run.fps;
    return r;
}

EvalResult run_ope(const Sequence& seq, const TrackerConfig& cfg) {
    return run_trial(seq, cfg, 0);
}

std::vector<int> tre_start_indices(int frame_count, int trials) {
    constexpr int kMinSegment = 20;
    if (trials < 1) throw SizeError("tre_start_indices: trials must be >= 1");
    if (trials == 1 || frame_count < kMinSegment) return {0};
    const int span = frame_count - kMinSegment;
    std::vector<int> starts;
    starts.reserve(trials);
    for (int k = 0; k < trials; ++k) {
        starts.push_back(static_cast<int>(
            std::lround(static_cast<double>(k) * span / (trials - 1))));
    }
    return starts;
}

std::vector<EvalResult> run_tre(const Sequence& seq, const TrackerConfig& cfg,
                                int trials) {
    std::vector<EvalResult> results;
    for (int start : tre_start_indices(seq.frame_count(), trials)) {
        results.push_back(run_trial(seq, cfg, start));
    }
    return results;
}

ProtocolScore weighted_score(const std::vector<EvalResult>& trials) {
    ProtocolScore s;
    double weight = 0.0;
    for (const EvalResult& r : trials) {
        s.precision20 += r.precision20 * r.frames;
        s.success_auc += r.success_auc * r.frames;
        s.fps += r.fps * r.frames;
        weight += r.frames;
    }
    if (weight > 0.0) {
        s.precision20 /= weight;
        s.success_auc /= weight;
        s.fps /= weight;
    }
    return s;
}

std::map<std::string, ProtocolScore> attribute_report(
    const std::vector<EvalResult>& results,
    const std::vector<Sequence>& dataset) {
    std::map<std::string, std::vector<EvalResult>> by_sequence;
    for (const EvalResult& r : results) {
        by_sequence[r.sequence].push_back(r);
    }

    std::map<std::string, const Sequence*> index;
    for (const Sequence& s : dataset) index[s.name] = &s;
    for (const auto& [name, rs] : by_sequence) {
        if (!index.count(name)) {
            throw Error("attribute_report: unknown sequence " + name);
        }
    }

    std::map<std::string, std::vector<ProtocolScore>> per_tag;
    for (const auto& [name, rs] : by_sequence) {
        const ProtocolScore collapsed = weighted_score(rs);
        for (const std::string& tag : index[name]->attributes) {
            per_tag[tag].push_back(collapsed);
        }
    }

    std::map<std::string, ProtocolScore> table;
    for (const auto& [tag, scores] : per_tag) {
        ProtocolScore mean;
        for (const ProtocolScore& s : scores) {
            mean.precision20 += s.precision20;
            mean.success_auc += s.success_auc;
            mean.fps += s.fps;
        }
        mean.precision20 /= scores.size();
        mean.success_auc /= scores.size();
        mean.fps /= scores.size();
        table[tag] = mean;
    }
    return table;
}

BenchmarkResult run_benchmark(const std::vector<Sequence>& dataset,
                              const TrackerConfig& cfg, Protocol protocol,
                              int trials, int jobs) {
    BenchmarkResult result;
    result.tre_trials = trials;
    result.sequences.resize(dataset.size());

    const auto evaluate = [&](std::size_t i) {
        SequenceEval& ev = result.sequences[i];
        ev.name = dataset[i].name;
        if (protocol == Protocol::ope || protocol == Protocol::both) {
            ev.ope = run_ope(dataset[i], cfg);
        }
        if (protocol == Protocol::tre || protocol == Protocol::both) {
            ev.tre = run_tre(dataset[i], cfg, trials);
        }
        log_info("evaluated " + ev.name);
    };

    if (jobs <= 1 || dataset.size() <= 1) {
        for (std::size_t i = 0; i < dataset.size(); ++i) evaluate(i);
        return result;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), dataset.size());
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < dataset.size();
                     i = next.fetch_add(1)) {
                    evaluate(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return result;
}

}  // namespace hns
