#pragma once

#include <string>

#include "hns/image.hpp"

namespace hns {

/// Read an image file as grayscale (BT.601 luminance for color inputs),
/// scaled to [0,1]. Throws IoError when the file is missing or undecodable.
Image load_image(const std::string& path);

/// Write the image as an 8-bit grayscale PNG; values are clamped to [0,1]
/// and quantized by rounding.
void save_png(const std::string& path, const Image& img);

}  // namespace hns
