#pragma once

#include <array>
#include <string>
#include <vector>

namespace vmg::scene {

using Rgb = std::array<float, 3>;

// Row-major interleaved RGB image, values in [0, 1].
struct Image {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // 3 * width * height

  Image() = default;
  Image(int w, int h, Rgb fill = {0.f, 0.f, 0.f});

  float* pixel(int x, int y) { return &data[3 * (static_cast<size_t>(y) * width + x)]; }
  const float* pixel(int x, int y) const {
    return &data[3 * (static_cast<size_t>(y) * width + x)];
  }
  void set(int x, int y, const Rgb& c) {
    float* p = pixel(x, y);
    p[0] = c[0];
    p[1] = c[1];
    p[2] = c[2];
  }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// 8-bit PNG round trip.
void write_png(const Image& image, const std::string& path);
Image read_png(const std::string& path);

}  // namespace vmg::scene
