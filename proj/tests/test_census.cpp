#include <doctest.h>

#include <cmath>

#include "hns/census.hpp"
#include "oracles.hpp"

using hns::CensusChannels;
using hns::CensusMap;
using hns::Image;

TEST_SUITE("census") {

TEST_CASE("constant image has all-zero codes") {
    const CensusMap c = hns::census_transform(Image(8, 6, 0.4));
    for (std::uint8_t v : c.codes) CHECK(v == 0);
}

TEST_CASE("alternating 3x3 neighbourhood produces the expected code") {
    Image img(3, 3, 0.0);
    img.at(1, 1) = 0.5;
    // clockwise from top-left: 0.1, 0.9, 0.1, 0.9, 0.1, 0.9, 0.1, 0.9
    img.at(0, 0) = 0.1;
    img.at(1, 0) = 0.9;
    img.at(2, 0) = 0.1;
    img.at(2, 1) = 0.9;
    img.at(2, 2) = 0.1;
    img.at(1, 2) = 0.9;
    img.at(0, 2) = 0.1;
    img.at(0, 1) = 0.9;
    const CensusMap c = hns::census_transform(img);
    CHECK(c.at(1, 1) == 0b10101010);
    // border cells stay 0
    CHECK(c.at(0, 0) == 0);
    CHECK(c.at(2, 2) == 0);
}

TEST_CASE("codes agree with the bit-by-bit oracle") {
    auto g = oracle::rng(60);
    const Image img = oracle::random_image(g, 17, 13);
    const CensusMap got = hns::census_transform(img);
    const CensusMap ref = oracle::census_codes(img);
    CHECK(got.codes == ref.codes);
}

TEST_CASE("codes are invariant under monotone intensity maps") {
    auto g = oracle::rng(61);
    for (int rep = 0; rep < 20; ++rep) {
        const Image img = oracle::random_image(g, 32, 32);
        const CensusMap base = hns::census_transform(img);

        Image affine(32, 32);
        Image gamma(32, 32);
        for (int i = 0; i < 32 * 32; ++i) {
            affine.data[i] = 3.0 * img.data[i] + 0.25;
            gamma.data[i] = std::pow(img.data[i], 2.2);
        }
        CHECK(hns::census_transform(affine).codes == base.codes);
        CHECK(hns::census_transform(gamma).codes == base.codes);
    }
}

TEST_CASE("census_transform rejects sub-3x3 images") {
    CHECK_THROWS_AS(hns::census_transform(Image(2, 5, 0.0)), hns::SizeError);
    CHECK_THROWS_AS(hns::census_transform(Image(5, 2, 0.0)), hns::SizeError);
}

TEST_CASE("census_transform runtime grows linearly with pixel count") {
    auto g = oracle::rng(62);
    const Image small = oracle::random_image(g, 64, 64);
    const Image medium = oracle::random_image(g, 128, 128);
    const Image large = oracle::random_image(g, 256, 256);
    // warm up caches before timing
    hns::census_transform(large);
    const double t0 = oracle::best_of(9, [&] { hns::census_transform(small); });
    const double t1 = oracle::best_of(9, [&] { hns::census_transform(medium); });
    const double t2 = oracle::best_of(9, [&] { hns::census_transform(large); });
    CHECK(t1 <= 5.0 * t0);
    CHECK(t2 <= 5.0 * t1);
}

TEST_CASE("channel encoding rotates codes by two bits per channel") {
    CensusMap c;
    c.width = 2;
    c.height = 1;
    c.codes = {0, 0b00000001};
    const CensusChannels ch = hns::census_channels(c);
    for (int r = 0; r < 4; ++r) CHECK(ch.channels[r][0] == 0.0);
    CHECK(ch.channels[0][1] * 255.0 == doctest::Approx(1.0));
    CHECK(ch.channels[1][1] * 255.0 == doctest::Approx(4.0));
    CHECK(ch.channels[2][1] * 255.0 == doctest::Approx(16.0));
    CHECK(ch.channels[3][1] * 255.0 == doctest::Approx(64.0));

    CensusMap ones;
    ones.width = 1;
    ones.height = 1;
    ones.codes = {255};
    const CensusChannels all = hns::census_channels(ones);
    for (int r = 0; r < 4; ++r) CHECK(all.channels[r][0] == 1.0);
}

TEST_CASE("channel zero equals the raw codes and rotations compose to identity") {
    auto g = oracle::rng(63);
    const Image img = oracle::random_image(g, 12, 12);
    const CensusMap c = hns::census_transform(img);
    const CensusChannels ch = hns::census_channels(c);
    for (std::size_t i = 0; i < c.codes.size(); ++i) {
        CHECK(ch.channels[0][i] == c.codes[i] / 255.0);
        // rotating channel 3 two more bits closes the 8-bit cycle
        const auto v = static_cast<unsigned>(std::lround(ch.channels[3][i] * 255.0));
        const unsigned back = ((v << 2) | (v >> 6)) & 0xff;
        CHECK(back == c.codes[i]);
    }
}

TEST_CASE("census_match recovers a centered template") {
    auto g = oracle::rng(64);
    const Image tmpl = oracle::random_image(g, 16, 16);
    Image search = oracle::random_image(g, 32, 32);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) search.at(8 + x, 8 + y) = tmpl.at(x, y);
    const hns::CensusMatch m = hns::census_match(tmpl, search);
    CHECK(m.dx == 0);
    CHECK(m.dy == 0);
    CHECK(m.score > 0.0);
}

TEST_CASE("census_match recovers a planted displacement") {
    auto g = oracle::rng(65);
    const Image tmpl = oracle::random_image(g, 16, 16);
    Image search(32, 32, 0.5);
    // plant at center offset (+3, -2)
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) search.at(11 + x, 6 + y) = tmpl.at(x, y);
    const hns::CensusMatch m = hns::census_match(tmpl, search);
    CHECK(m.dx == 3);
    CHECK(m.dy == -2);

    // a global brightness shift must not move the match
    Image bright = search;
    for (double& v : bright.data) v += 0.2;
    const hns::CensusMatch mb = hns::census_match(tmpl, bright);
    CHECK(mb.dx == 3);
    CHECK(mb.dy == -2);
}

TEST_CASE("census_match agrees with the exhaustive-scan oracle") {
    auto g = oracle::rng(66);
    const int shapes[][4] = {{8, 6, 13, 11}, {16, 16, 24, 20}, {32, 32, 48, 40}};
    for (const auto& s : shapes) {
        for (int rep = 0; rep < 5; ++rep) {
            const Image tmpl = oracle::random_image(g, s[0], s[1]);
            const Image search = oracle::random_image(g, s[2], s[3]);
            const hns::CensusMatch got = hns::census_match(tmpl, search);
            const hns::CensusMatch ref = oracle::census_match_scan(tmpl, search);
            CHECK(got.dx == ref.dx);
            CHECK(got.dy == ref.dy);
            CHECK(got.score == doctest::Approx(ref.score).epsilon(1e-9));
        }
    }
}

TEST_CASE("census_match score stays within the channel-sum bound") {
    auto g = oracle::rng(67);
    for (int rep = 0; rep < 10; ++rep) {
        const Image tmpl = oracle::random_image(g, 10, 10);
        const Image search = oracle::random_image(g, 21, 17);
        const hns::CensusMatch m = hns::census_match(tmpl, search);
        CHECK(m.score >= -4.0 - 1e-9);
        CHECK(m.score <= 4.0 + 1e-9);
    }
}

TEST_CASE("census_match requires a strictly larger search window") {
    auto g = oracle::rng(68);
    const Image tmpl = oracle::random_image(g, 16, 16);
    const Image same = oracle::random_image(g, 16, 16);
    const Image narrow = oracle::random_image(g, 16, 20);
    CHECK_THROWS_AS(hns::census_match(tmpl, same), hns::SizeError);
    CHECK_THROWS_AS(hns::census_match(tmpl, narrow), hns::SizeError);
}

}  // TEST_SUITE
