#include "hns/image_io.hpp"

#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>

namespace hns {

Image load_image(const std::string& path) {
    cv::Mat m = cv::imread(path, cv::IMREAD_GRAYSCALE);
    if (m.empty()) {
        throw IoError("cannot read image: " + path);
    }
    Image img(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < m.cols; ++x) {
            img.at(x, y) = row[x] / 255.0;
        }
    }
    return img;
}

void save_png(const std::string& path, const Image& img) {
    cv::Mat m(img.height, img.width, CV_8UC1);
    for (int y = 0; y < img.height; ++y) {
        std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < img.width; ++x) {
            const double v = std::clamp(img.at(x, y), 0.0, 1.0);
            row[x] = static_cast<std::uint8_t>(std::lround(v * 255.0));
        }
    }
    if (!cv::imwrite(path, m)) {
        throw IoError("cannot write image: " + path);
    }
}

}  // namespace hns
