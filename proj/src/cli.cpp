#include "hns/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hns/benchmark.hpp"
#include "hns/log.hpp"
#include "hns/report.hpp"
#include "hns/synth.hpp"

namespace fs = std::filesystem;

namespace hns {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string config_path;

    std::string variant = "hns";
    double threshold = 0.9;
    double alpha = 0.005;
    int instance_side = 64;
    double context_factor = 2.0;
    int min_peak_separation = 0;
    std::string smooth_form = "eq2";
    std::uint64_t seed = 0;

    std::string seq_dir;
    std::string track_out = "track.csv";

    std::string dataset_dir;
    std::string protocol = "ope";
    std::string report_path = "report.json";
    int trials = 20;
    int jobs = 1;
    bool emit_fps = false;

    std::string spec_path;
    std::string synth_out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw IoError("cannot write " + path);
}

// Configuration precedence is flags > config file > defaults: the config
// file rewrites the defaults before CLI11 parses the command line.
void apply_config_file(Options& o, const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("malformed config " + path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "variant") o.variant = value.get<std::string>();
            else if (key == "threshold" || key == "confidence_threshold")
                o.threshold = value.get<double>();
            else if (key == "alpha") o.alpha = value.get<double>();
            else if (key == "instance_side") o.instance_side = value.get<int>();
            else if (key == "context_factor")
                o.context_factor = value.get<double>();
            else if (key == "min_peak_separation")
                o.min_peak_separation = value.get<int>();
            else if (key == "smooth_form")
                o.smooth_form = value.get<std::string>();
            else if (key == "seed") o.seed = value.get<std::uint64_t>();
            else if (key == "protocol") o.protocol = value.get<std::string>();
            else if (key == "trials") o.trials = value.get<int>();
            else if (key == "jobs") o.jobs = value.get<int>();
            else if (key == "emit_fps") o.emit_fps = value.get<bool>();
            else throw UsageError("unknown config key: " + key);
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("malformed config " + path + ": " + e.what());
    }
}

TrackerConfig tracker_config(const Options& o) {
    TrackerConfig cfg;
    try {
        cfg.variant = parse_variant(o.variant);
        cfg.smooth_form = parse_smooth_form(o.smooth_form);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    cfg.confidence_threshold = o.threshold;
    cfg.alpha = o.alpha;
    cfg.instance_side = o.instance_side;
    cfg.context_factor = o.context_factor;
    cfg.min_peak_separation = o.min_peak_separation;
    return cfg;
}

void add_tracker_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--variant", o.variant,
                    "Tracker variant: baseline|hns0|hns1|hns|hnssa");
    cmd->add_option("--threshold", o.threshold,
                    "NNDR ambiguity threshold (>= 1 disables the gate)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", o.alpha, "Running-average update factor")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--instance-side", o.instance_side,
                    "Search patch side in pixels")
        ->check(CLI::Range(16, 4096));
    cmd->add_option("--context-factor", o.context_factor,
                    "Crop side as a multiple of the target size")
        ->check(CLI::Range(1.0, 64.0));
    cmd->add_option("--min-peak-separation", o.min_peak_separation,
                    "Minimum peak separation in cells (0: side/4)")
        ->check(CLI::Range(0, 4096));
    cmd->add_option("--smooth-form", o.smooth_form,
                    "Smooth update form: eq2|alg1");
    cmd->add_option("--config", o.config_path, "JSON config file");
}

int cmd_track(const Options& o) {
    if (!fs::is_directory(o.seq_dir)) {
        throw UsageError("sequence directory not found: " + o.seq_dir);
    }
    const TrackerConfig cfg = tracker_config(o);
    const Sequence seq = load_otb_sequence(o.seq_dir);
    const SequenceRun run = run_sequence(
        [&seq](int i) { return seq.frame(i); }, seq.frame_count(),
        seq.groundtruth.front(), cfg);
    write_file(o.track_out, make_track_csv(run));
    std::cout << "wrote " << o.track_out << " (" << run.boxes.size()
              << " frames, variant " << variant_name(cfg.variant) << ")\n";
    return 0;
}

std::vector<Sequence> load_dataset(const std::string& dir) {
    if (fs::is_regular_file(fs::path(dir) / "groundtruth_rect.txt")) {
        return {load_otb_sequence(dir)};
    }
    std::vector<fs::path> seq_dirs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_directory() &&
            fs::is_regular_file(entry.path() / "groundtruth_rect.txt")) {
            seq_dirs.push_back(entry.path());
        }
    }
    std::sort(seq_dirs.begin(), seq_dirs.end());
    if (seq_dirs.empty()) {
        throw UsageError("no sequences found under " + dir);
    }
    std::vector<Sequence> dataset;
    dataset.reserve(seq_dirs.size());
    for (const fs::path& p : seq_dirs) dataset.push_back(load_otb_sequence(p));
    return dataset;
}

int cmd_bench(const Options& o) {
    if (!fs::is_directory(o.dataset_dir)) {
        throw UsageError("dataset directory not found: " + o.dataset_dir);
    }
    const TrackerConfig cfg = tracker_config(o);
    Protocol protocol;
    try {
        protocol = parse_protocol(o.protocol);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }

    const std::vector<Sequence> dataset = load_dataset(o.dataset_dir);
    const BenchmarkResult result =
        run_benchmark(dataset, cfg, protocol, o.trials, o.jobs);

    ReportMeta meta;
    meta.dataset = o.dataset_dir;
    meta.protocol = protocol;
    meta.trials = o.trials;
    meta.seed = o.seed;
    meta.jobs = o.jobs;
    meta.emit_fps = o.emit_fps;

    write_file(o.report_path, make_report_json(result, dataset, cfg, meta));
    const std::string csv_path =
        fs::path(o.report_path).replace_extension(".csv").string();
    write_file(csv_path, make_report_csv(result, o.emit_fps));
    std::cout << "wrote " << o.report_path << " and " << csv_path << " ("
              << dataset.size() << " sequences)\n";
    return 0;
}

int cmd_synth(const Options& o) {
    if (!fs::is_regular_file(o.spec_path)) {
        throw UsageError("scenario file not found: " + o.spec_path);
    }
    SynthSpec spec;
    try {
        spec = parse_synth_spec(read_file(o.spec_path));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const SynthResult result = synth_sequence(spec, o.seed);
    save_sequence(result.sequence, o.synth_out);
    std::cout << "wrote " << o.synth_out << " ("
              << result.sequence.images.size() << " frames)\n";
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    Options o;

    // The config file must rewrite defaults before CLI11 parses, so find it
    // by scanning the raw arguments first.
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            o.config_path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            o.config_path = arg.substr(9);
        }
    }

    try {
        if (!o.config_path.empty()) apply_config_file(o, o.config_path);

        CLI::App app{
            "Recovery-gated correlation tracker: tracking, benchmarking and "
            "synthetic-sequence tooling"};
        app.require_subcommand(1);
        app.add_option("--config", o.config_path, "JSON config file");

        CLI::App* track = app.add_subcommand("track", "Track one sequence");
        track->add_option("--seq", o.seq_dir, "Sequence directory")
            ->required();
        track->add_option("--out", o.track_out, "Output CSV path");
        add_tracker_flags(track, o);

        CLI::App* bench =
            app.add_subcommand("bench", "Evaluate a dataset (OPE/TRE)");
        bench->add_option("--dataset", o.dataset_dir, "Dataset directory")
            ->required();
        bench->add_option("--protocol", o.protocol, "ope|tre|both");
        bench->add_option("--report", o.report_path, "Report JSON path");
        bench->add_option("--trials", o.trials, "TRE trial count")
            ->check(CLI::Range(1, 1000));
        bench->add_option("--jobs", o.jobs, "Worker threads over sequences")
            ->check(CLI::Range(1, 256));
        bench->add_flag("--emit-fps", o.emit_fps,
                        "Write measured fps into reports (breaks byte-exact "
                        "reruns)");
        bench->add_option("--seed", o.seed, "Seed recorded in the report");
        add_tracker_flags(bench, o);

        CLI::App* synth =
            app.add_subcommand("synth", "Render a synthetic sequence");
        synth->add_option("--spec", o.spec_path, "Scenario JSON file")
            ->required();
        synth->add_option("--seed", o.seed, "Texture/background seed");
        synth->add_option("--out", o.synth_out, "Output sequence directory")
            ->required();
        synth->add_option("--config", o.config_path, "JSON config file");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }

        if (track->parsed()) return cmd_track(o);
        if (bench->parsed()) return cmd_bench(o);
        if (synth->parsed()) return cmd_synth(o);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hns
