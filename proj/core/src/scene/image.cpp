#include "vmg/scene/image.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <algorithm>
#include <cmath>

#include "vmg/util/errors.hpp"

namespace vmg::scene {

Image::Image(int w, int h, Rgb fill) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw ParameterError("image dimensions must be positive");
  data.resize(3 * static_cast<size_t>(w) * h);
  for (size_t i = 0; i < data.size(); i += 3) {
    data[i] = fill[0];
    data[i + 1] = fill[1];
    data[i + 2] = fill[2];
  }
}

void write_png(const Image& image, const std::string& path) {
  cv::Mat bgr(image.height, image.width, CV_8UC3);
  for (int y = 0; y < image.height; ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width; ++x) {
      const float* p = image.pixel(x, y);
      auto to8 = [](float v) {
        return static_cast<unsigned char>(std::lround(std::clamp(v, 0.f, 1.f) * 255.f));
      };
      row[x] = cv::Vec3b(to8(p[2]), to8(p[1]), to8(p[0]));
    }
  }
  if (!cv::imwrite(path, bgr)) throw IoError("failed to write image: " + path);
}

Image read_png(const std::string& path) {
  cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
  if (bgr.empty()) throw IoError("failed to read image: " + path);
  Image image(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      float* p = image.pixel(x, y);
      p[0] = row[x][2] / 255.f;
      p[1] = row[x][1] / 255.f;
      p[2] = row[x][0] / 255.f;
    }
  }
  return image;
}

}  // namespace vmg::scene
