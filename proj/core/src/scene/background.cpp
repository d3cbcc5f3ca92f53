#include "vmg/scene/background.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "vmg/util/rng.hpp"

namespace vmg::scene {

namespace {

// Table-plane (z=0) hit of the viewing ray through a pixel center.
std::optional<Eigen::Vector2d> plane_hit(const CameraModel& camera, const Eigen::Vector3d& eye,
                                         int px, int py) {
  const Eigen::Vector3d dir = camera.pixel_ray(px + 0.5, py + 0.5);
  if (std::abs(dir.z()) < 1e-12) return std::nullopt;
  const double t = -eye.z() / dir.z();
  if (t <= 0.0) return std::nullopt;
  const Eigen::Vector3d p = eye + t * dir;
  return Eigen::Vector2d(p.x(), p.y());
}

float clamp01(double v) { return static_cast<float>(std::clamp(v, 0.0, 1.0)); }

struct Distractor {
  int kind = 0;  // 0 ellipse, 1 annulus, 2 two-disc blob
  double cx = 0, cy = 0;
  double a = 0, b = 0;       // semi-axes / radii, pixels
  double theta = 0;          // ellipse orientation
  double ox = 0, oy = 0;     // second disc offset (blob)
  Rgb color{};

  bool contains(double x, double y) const {
    const double dx = x - cx;
    const double dy = y - cy;
    switch (kind) {
      case 0:
      case 1: {
        const double u = (dx * std::cos(theta) + dy * std::sin(theta)) / a;
        const double v = (-dx * std::sin(theta) + dy * std::cos(theta)) / b;
        const double r2 = u * u + v * v;
        return kind == 0 ? r2 <= 1.0 : (r2 <= 1.0 && r2 >= 0.35);
      }
      default: {
        if (dx * dx + dy * dy <= a * a) return true;
        const double ex = x - (cx + ox);
        const double ey = y - (cy + oy);
        return ex * ex + ey * ey <= b * b;
      }
    }
  }
  double reach() const { return std::max(a, b) + std::max(std::abs(ox), std::abs(oy)); }
};

}  // namespace

std::vector<std::uint8_t> board_mask(const CameraModel& camera, double cell_size_m, int grid) {
  camera.validate();
  const double extent = cell_size_m * grid;
  const Eigen::Vector3d eye = camera.center();
  std::vector<std::uint8_t> mask(static_cast<size_t>(camera.width) * camera.height, 0);
  for (int py = 0; py < camera.height; ++py) {
    for (int px = 0; px < camera.width; ++px) {
      const auto hit = plane_hit(camera, eye, px, py);
      if (hit && hit->x() >= 0.0 && hit->x() <= extent && hit->y() >= 0.0 &&
          hit->y() <= extent) {
        mask[static_cast<size_t>(py) * camera.width + px] = 1;
      }
    }
  }
  return mask;
}

Image synth_background(const CameraModel& camera, std::uint64_t seed,
                       const BackgroundParams& params) {
  camera.validate();
  Rng rng = make_rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  // Low-frequency texture: a coarse random color lattice, bilinearly
  // upsampled. Per-seed luminance and contrast variation.
  constexpr int kLatW = 7;
  constexpr int kLatH = 5;
  const double lum = uniform(0.30, 0.70);
  const double contrast = uniform(0.35, 1.0);
  std::array<std::array<double, 3>, kLatW * kLatH> lattice;
  for (auto& node : lattice) {
    for (double& ch : node) ch = std::clamp(lum + contrast * uniform(-0.22, 0.22), 0.05, 0.95);
  }
  auto lattice_at = [&](double fx, double fy) {
    const double gx = fx * (kLatW - 1);
    const double gy = fy * (kLatH - 1);
    const int x0 = std::min(static_cast<int>(gx), kLatW - 2);
    const int y0 = std::min(static_cast<int>(gy), kLatH - 2);
    const double tx = gx - x0;
    const double ty = gy - y0;
    std::array<double, 3> out;
    for (int c = 0; c < 3; ++c) {
      const double top = lattice[y0 * kLatW + x0][c] * (1 - tx) + lattice[y0 * kLatW + x0 + 1][c] * tx;
      const double bot =
          lattice[(y0 + 1) * kLatW + x0][c] * (1 - tx) + lattice[(y0 + 1) * kLatW + x0 + 1][c] * tx;
      out[c] = top * (1 - ty) + bot * ty;
    }
    return out;
  };

  // Checker shades, jittered per seed.
  const double light_l = uniform(0.68, 0.88);
  const double dark_l = uniform(0.28, 0.48);
  Rgb light{}, dark{};
  for (int c = 0; c < 3; ++c) light[c] = clamp01(light_l + uniform(-0.04, 0.04));
  for (int c = 0; c < 3; ++c) dark[c] = clamp01(dark_l + uniform(-0.04, 0.04));

  const double extent = params.cell_size_m * params.grid;
  const Eigen::Vector3d eye = camera.center();
  Image image(camera.width, camera.height);
  std::vector<std::uint8_t> mask(static_cast<size_t>(camera.width) * camera.height, 0);
  for (int py = 0; py < camera.height; ++py) {
    for (int px = 0; px < camera.width; ++px) {
      const auto hit = plane_hit(camera, eye, px, py);
      if (hit && hit->x() >= 0.0 && hit->x() <= extent && hit->y() >= 0.0 &&
          hit->y() <= extent) {
        const int ix = std::min(static_cast<int>(hit->x() / params.cell_size_m), params.grid - 1);
        const int iy = std::min(static_cast<int>(hit->y() / params.cell_size_m), params.grid - 1);
        image.set(px, py, ((ix + iy) & 1) ? dark : light);
        mask[static_cast<size_t>(py) * camera.width + px] = 1;
      } else {
        const auto c = lattice_at(static_cast<double>(px) / (camera.width - 1),
                                  static_cast<double>(py) / (camera.height - 1));
        image.set(px, py, {clamp01(c[0]), clamp01(c[1]), clamp01(c[2])});
      }
    }
  }

  if (params.distractors) {
    const double sc = camera.height / 198.0;
    const int count = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int d = 0; d < count; ++d) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        Distractor obj;
        obj.kind = std::uniform_int_distribution<int>(0, 2)(rng);
        obj.cx = uniform(0, camera.width);
        obj.cy = uniform(0, camera.height);
        obj.a = uniform(8, 26) * sc;
        obj.b = obj.kind == 2 ? uniform(6, 18) * sc : uniform(8, 26) * sc;
        obj.theta = uniform(0, std::numbers::pi);
        if (obj.kind == 2) {
          obj.ox = uniform(-obj.a, obj.a);
          obj.oy = uniform(-obj.a, obj.a);
        }
        std::array<double, 3> base = {uniform(0.55, 0.95), uniform(0.05, 0.45),
                                      uniform(0.05, 0.45)};
        std::shuffle(base.begin(), base.end(), rng);
        obj.color = {clamp01(base[0]), clamp01(base[1]), clamp01(base[2])};

        const double r = obj.reach();
        const int x0 = std::max(0, static_cast<int>(std::floor(obj.cx - r)));
        const int x1 = std::min(camera.width - 1, static_cast<int>(std::ceil(obj.cx + r)));
        const int y0 = std::max(0, static_cast<int>(std::floor(obj.cy - r)));
        const int y1 = std::min(camera.height - 1, static_cast<int>(std::ceil(obj.cy + r)));

        bool clear = true;
        for (int py = y0; py <= y1 && clear; ++py) {
          for (int px = x0; px <= x1; ++px) {
            if (obj.contains(px + 0.5, py + 0.5) &&
                mask[static_cast<size_t>(py) * camera.width + px]) {
              clear = false;
              break;
            }
          }
        }
        if (!clear) continue;
        for (int py = y0; py <= y1; ++py) {
          for (int px = x0; px <= x1; ++px) {
            if (obj.contains(px + 0.5, py + 0.5)) image.set(px, py, obj.color);
          }
        }
        break;
      }
    }
  }
  return image;
}

}  // namespace vmg::scene
