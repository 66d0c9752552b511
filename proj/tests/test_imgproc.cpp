#include <doctest.h>

#include <random>

#include "hns/imgproc.hpp"
#include "oracles.hpp"

using hns::BoundingBox;
using hns::Image;

TEST_SUITE("imgproc") {

TEST_CASE("hann window 1d endpoints and degenerate length") {
    CHECK(hns::hann_window_1d(1) == std::vector<double>{1.0});
    const auto w3 = hns::hann_window_1d(3);
    REQUIRE(w3.size() == 3);
    CHECK(w3[0] == 0.0);
    CHECK(w3[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w3[2] == 0.0);
    CHECK_THROWS_AS(hns::hann_window_1d(0), hns::SizeError);
}

TEST_CASE("hann window 2d shape, border, and exact mirror symmetry") {
    const Image one = hns::hann_window_2d(1, 1);
    CHECK(one.at(0, 0) == 1.0);

    const int h = 9, w = 14;
    const Image win = hns::hann_window_2d(h, w);
    for (int x = 0; x < w; ++x) {
        CHECK(win.at(x, 0) == 0.0);
        CHECK(win.at(x, h - 1) == 0.0);
    }
    for (int y = 0; y < h; ++y) {
        CHECK(win.at(0, y) == 0.0);
        CHECK(win.at(w - 1, y) == 0.0);
    }
    double peak = 0.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            CHECK(win.at(x, y) >= 0.0);
            CHECK(win.at(x, y) <= 1.0);
            peak = std::max(peak, win.at(x, y));
            CHECK(win.at(x, y) == win.at(w - 1 - x, h - 1 - y));
        }
    }
    CHECK(win.at(w / 2, h / 2) == doctest::Approx(peak));
}

TEST_CASE("crop_resize integer-aligned unit-scale crop is an exact copy") {
    auto g = oracle::rng(21);
    const Image frame = oracle::random_image(g, 40, 32);
    // box center chosen so the 16x16 region has integer corners
    const BoundingBox box{12.0, 10.0, 16.0, 16.0};
    const hns::Patch p = hns::crop_resize(frame, box, 1.0, 16);
    REQUIRE(p.side() == 16);
    for (int y = 0; y < 16; ++y) {
        for (int x = 0; x < 16; ++x) {
            CHECK(p.image.at(x, y) == frame.at(4 + x, 2 + y));
        }
    }
}

TEST_CASE("crop_resize fully outside the frame gives uniform 0.5") {
    const Image frame(20, 20, 0.9);
    const BoundingBox box{200.0, 200.0, 10.0, 10.0};
    const hns::Patch p = hns::crop_resize(frame, box, 2.0, 8);
    for (double v : p.image.data) CHECK(v == 0.5);
}

TEST_CASE("crop_resize upsampling matches a bilinear oracle") {
    // 2x2 checkerboard region upsampled to 4x4
    Image frame(2, 2);
    frame.at(0, 0) = 1.0;
    frame.at(1, 0) = 0.0;
    frame.at(0, 1) = 0.0;
    frame.at(1, 1) = 1.0;
    const BoundingBox box{1.0, 1.0, 2.0, 2.0};
    const hns::Patch p = hns::crop_resize(frame, box, 1.0, 8);

    // independent sampler: pixel centers at (i+0.5)*scale in region space
    const double scale = 2.0 / 8.0;
    const double mean = 0.5;  // out-of-frame taps read the region mean
    auto tap = [&](int x, int y) {
        if (x < 0 || y < 0 || x > 1 || y > 1) return mean;
        return frame.at(x, y);
    };
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) {
            const double sx = (i + 0.5) * scale - 0.5;
            const double sy = (j + 0.5) * scale - 0.5;
            const int x0 = static_cast<int>(std::floor(sx));
            const int y0 = static_cast<int>(std::floor(sy));
            const double fx = sx - x0, fy = sy - y0;
            const double v =
                (tap(x0, y0) * (1 - fx) + tap(x0 + 1, y0) * fx) * (1 - fy) +
                (tap(x0, y0 + 1) * (1 - fx) + tap(x0 + 1, y0 + 1) * fx) * fy;
            CHECK(p.image.at(i, j) == doctest::Approx(v).epsilon(1e-12));
        }
    }
}

TEST_CASE("crop_resize is translation-consistent") {
    auto g = oracle::rng(22);
    const Image base = oracle::random_image(g, 48, 48);
    Image shifted_frame(48, 48);
    const int ox = 5, oy = 3;
    for (int y = 0; y < 48; ++y) {
        for (int x = 0; x < 48; ++x) {
            shifted_frame.at(x, y) =
                base.at(((x - ox) % 48 + 48) % 48, ((y - oy) % 48 + 48) % 48);
        }
    }
    const BoundingBox box{20.0, 20.0, 10.0, 8.0};
    const BoundingBox moved{box.cx + ox, box.cy + oy, box.w, box.h};
    // keep both crops fully inside the frames so the fill rule never fires
    const hns::Patch a = hns::crop_resize(base, box, 1.5, 16);
    const hns::Patch b = hns::crop_resize(shifted_frame, moved, 1.5, 16);
    CHECK(a.image.data == b.image.data);
}

TEST_CASE("crop_resize validates its inputs") {
    const Image frame(20, 20, 0.5);
    CHECK_THROWS_AS(
        hns::crop_resize(frame, BoundingBox{5, 5, 0.0, 3.0}, 1.0, 16),
        hns::InvalidBoxError);
    CHECK_THROWS_AS(
        hns::crop_resize(frame, BoundingBox{5, 5, 4.0, 3.0}, 1.0, 7),
        hns::SizeError);
    CHECK_THROWS_AS(
        hns::crop_resize(frame, BoundingBox{5, 5, 4.0, 3.0}, 0.5, 16),
        hns::SizeError);
}

TEST_CASE("patch covers context_factor times the larger box side") {
    const Image frame(64, 64, 0.25);
    const BoundingBox box{32.0, 32.0, 10.0, 6.0};
    const hns::Patch p = hns::crop_resize(frame, box, 2.0, 16);
    CHECK(p.src_side() == 20.0);
    CHECK(p.context_factor == 2.0);
}

}  // TEST_SUITE
