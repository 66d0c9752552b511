#include <doctest.h>

#include <algorithm>

#include "hns/synth.hpp"

using hns::SynthResult;
using hns::SynthSpec;

TEST_SUITE("synth") {

TEST_CASE("ground truth follows the path exactly when nothing is hidden") {
    SynthSpec spec;
    spec.frame_count = 11;
    spec.width = 64;
    spec.height = 64;
    spec.path = {{0, 20.0, 30.0}, {10, 40.0, 30.0}};
    const SynthResult r = hns::synth_sequence(spec, 1);
    REQUIRE(r.sequence.groundtruth.size() == 11);
    for (int t = 0; t <= 10; ++t) {
        CHECK(r.sequence.groundtruth[t].cx == doctest::Approx(20.0 + 2.0 * t));
        CHECK(r.sequence.groundtruth[t].cy == 30.0);
        CHECK(r.sequence.groundtruth[t].w == 16.0);
        CHECK(r.true_boxes[t].cx == r.sequence.groundtruth[t].cx);
        CHECK(r.visible[t] == 1);
    }
    CHECK(r.sequence.attributes.empty());

    // keyframes pin the position outside their span
    SynthSpec tail = spec;
    tail.frame_count = 15;
    const SynthResult rt = hns::synth_sequence(tail, 1);
    CHECK(rt.sequence.groundtruth[14].cx == 40.0);

    // an empty path centers the target
    SynthSpec centered;
    centered.frame_count = 3;
    centered.width = 64;
    centered.height = 48;
    const SynthResult rc = hns::synth_sequence(centered, 2);
    CHECK(rc.sequence.groundtruth[0].cx == 31.5);
    CHECK(rc.sequence.groundtruth[0].cy == 23.5);
}

TEST_CASE("same spec and seed give bit-identical frames") {
    SynthSpec spec;
    spec.frame_count = 6;
    spec.width = 64;
    spec.height = 64;
    spec.occlusions = {{2, 3}};
    const SynthResult a = hns::synth_sequence(spec, 77);
    const SynthResult b = hns::synth_sequence(spec, 77);
    REQUIRE(a.sequence.images.size() == b.sequence.images.size());
    for (std::size_t i = 0; i < a.sequence.images.size(); ++i) {
        CHECK(a.sequence.images[i].data == b.sequence.images[i].data);
    }
    const SynthResult c = hns::synth_sequence(spec, 78);
    CHECK(a.sequence.images[0].data != c.sequence.images[0].data);
}

TEST_CASE("occlusion hides the target and freezes the annotation") {
    SynthSpec spec;
    spec.frame_count = 12;
    spec.width = 64;
    spec.height = 64;
    spec.path = {{0, 20.0, 32.0}, {11, 42.0, 32.0}};
    spec.occlusions = {{4, 6}};
    const SynthResult r = hns::synth_sequence(spec, 5);

    for (int t = 0; t < 12; ++t) {
        const bool hidden = t >= 4 && t <= 6;
        CHECK(r.visible[t] == (hidden ? 0 : 1));
        // exact path is always reported alongside
        CHECK(r.true_boxes[t].cx == doctest::Approx(20.0 + 2.0 * t));
    }
    // annotation holds the last visible box through the gap
    CHECK(r.sequence.groundtruth[4].cx == r.sequence.groundtruth[3].cx);
    CHECK(r.sequence.groundtruth[5].cx == r.sequence.groundtruth[3].cx);
    CHECK(r.sequence.groundtruth[7].cx == doctest::Approx(34.0));

    // hidden frames draw pure background: no trace of the texture
    const auto& bg = r.sequence.images[5];
    const auto& shown = r.sequence.images[3];
    CHECK(bg.data != shown.data);
    REQUIRE(std::count(r.sequence.attributes.begin(),
                       r.sequence.attributes.end(), "occlusion") == 1);
}

TEST_CASE("initial blur marks the sequence and degrades early frames") {
    SynthSpec spec;
    spec.frame_count = 8;
    spec.width = 64;
    spec.height = 64;
    spec.initial_blur_frames = 3;
    const SynthResult r = hns::synth_sequence(spec, 9);
    CHECK(std::count(r.sequence.attributes.begin(), r.sequence.attributes.end(),
                     "motion-blur") == 1);
    // the blurred early frame differs from the sharp steady state
    CHECK(r.sequence.images[0].data != r.sequence.images[4].data);
    CHECK(r.sequence.images[4].data == r.sequence.images[5].data);
}

TEST_CASE("invalid scenarios are rejected") {
    SynthSpec bad;
    bad.frame_count = 10;
    bad.occlusions = {{8, 12}};
    CHECK_THROWS_AS(hns::synth_sequence(bad, 1), hns::SizeError);
    bad.occlusions = {{-1, 3}};
    CHECK_THROWS_AS(hns::synth_sequence(bad, 1), hns::SizeError);
    bad.occlusions = {{5, 3}};
    CHECK_THROWS_AS(hns::synth_sequence(bad, 1), hns::SizeError);

    SynthSpec tiny;
    tiny.width = 8;
    CHECK_THROWS_AS(hns::synth_sequence(tiny, 1), hns::SizeError);

    SynthSpec stray;
    stray.path = {{200, 10.0, 10.0}};
    CHECK_THROWS_AS(hns::synth_sequence(stray, 1), hns::SizeError);
}

TEST_CASE("scenario JSON parses every supported key") {
    const std::string text = R"({
        "name": "demo",
        "width": 96,
        "height": 80,
        "frames": 50,
        "target": {"w": 12, "h": 14},
        "path": [{"frame": 10, "cx": 30.0, "cy": 40.0},
                 {"frame": 0, "cx": 20.0, "cy": 40.0}],
        "occlusions": [{"start": 5, "end": 9}],
        "background_amplitude": 0.1,
        "initial_blur_frames": 4,
        "blur_passes": 2,
        "distractor": {"dx": 24.0, "dy": 0.0}
    })";
    const SynthSpec spec = hns::parse_synth_spec(text);
    CHECK(spec.name == "demo");
    CHECK(spec.width == 96);
    CHECK(spec.height == 80);
    CHECK(spec.frame_count == 50);
    CHECK(spec.target_w == 12);
    CHECK(spec.target_h == 14);
    REQUIRE(spec.path.size() == 2);
    // keyframes are sorted by frame on ingestion
    CHECK(spec.path[0].frame == 0);
    CHECK(spec.path[1].frame == 10);
    REQUIRE(spec.occlusions.size() == 1);
    CHECK(spec.occlusions[0].start == 5);
    CHECK(spec.background_amplitude == 0.1);
    CHECK(spec.initial_blur_frames == 4);
    CHECK(spec.blur_passes == 2);
    REQUIRE(spec.distractor_offset.has_value());
    CHECK(spec.distractor_offset->first == 24.0);
}

TEST_CASE("scenario JSON rejects junk") {
    CHECK_THROWS_AS(hns::parse_synth_spec("{\"bogus\": 1}"), hns::Error);
    CHECK_THROWS_AS(hns::parse_synth_spec("not json"), hns::Error);
    CHECK_THROWS_AS(hns::parse_synth_spec("[1,2]"), hns::Error);
    CHECK_THROWS_AS(hns::parse_synth_spec("{\"width\": \"wide\"}"), hns::Error);
}

}  // TEST_SUITE
