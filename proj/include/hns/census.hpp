#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "hns/image.hpp"

namespace hns {

// Per-pixel 8-bit comparison codes over the 3x3 neighbourhood. Bit k (MSB
// first) is set iff the k-th clockwise neighbour, starting top-left, is
// strictly less than the center pixel. Border pixels carry code 0.
struct CensusMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> codes;

    std::uint8_t at(int x, int y) const {
        return codes[static_cast<std::size_t>(y) * width + x];
    }
};

// The four decimal channels derived from the codes: channel r holds the code
// rotated left by 2r bits, scaled to [0,1] by division by 255.
struct CensusChannels {
    int width = 0;
    int height = 0;
    std::array<std::vector<double>, 4> channels;
};

struct CensusMatch {
    int dx = 0;
    int dy = 0;
    double score = 0.0;  // summed per-channel NCC, in [-4, 4]
};

// Template-side work of census_match precomputed against a fixed search
// size: per-channel variances plus kernel spectra for the numerator
// correlations. Valid as long as neither the template nor the search
// dimensions change.
struct CensusSearchPlan {
    int tmpl_w = 0;
    int tmpl_h = 0;
    int search_w = 0;
    int search_h = 0;
    std::array<double, 4> tmpl_var{};  // channels at or below the variance
                                       // floor are skipped entirely
    std::vector<std::complex<double>> spec;  // channel-major kernel spectra
};

CensusMap census_transform(const Image& img);

CensusChannels census_channels(const CensusMap& c);

CensusSearchPlan prepare_census_search(const Image& tmpl, int search_w,
                                       int search_h);

// Zero-mean NCC of the census channels of `tmpl` against every valid integer
// placement inside `search`, summed over the four channels. Returns the
// argmax displacement relative to the centered placement. Ties break toward
// the smallest Chebyshev distance from center, then row-major order.
// Channels or windows with zero variance contribute exactly 0.
CensusMatch census_match(const Image& tmpl, const Image& search);
CensusMatch census_match(const CensusSearchPlan& plan, const Image& search);

}  // namespace hns
