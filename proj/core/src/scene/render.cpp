#include "vmg/scene/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vmg/util/errors.hpp"
#include "vmg/util/rng.hpp"

namespace vmg::scene {

namespace {

constexpr double kNearClip = 1e-6;

Rgb scale_rgb(const Rgb& c, double f) {
  auto clamp01 = [](double v) { return static_cast<float>(std::clamp(v, 0.0, 1.0)); };
  return {clamp01(c[0] * f), clamp01(c[1] * f), clamp01(c[2] * f)};
}

struct ScreenFace {
  int block = 0;
  int face = 0;
  int n = 0;
  std::array<Eigen::Vector2d, 4> pts;
  double depth = 0.0;  // mean camera-frame Z
  Rgb color{};
};

bool inside_convex(const ScreenFace& f, double px, double py) {
  double sign = 0.0;
  for (int i = 0; i < f.n; ++i) {
    const Eigen::Vector2d& a = f.pts[i];
    const Eigen::Vector2d& b = f.pts[(i + 1) % f.n];
    const double e = (b.x() - a.x()) * (py - a.y()) - (b.y() - a.y()) * (px - a.x());
    if (e != 0.0) {
      if (sign == 0.0) {
        sign = e;
      } else if ((e > 0.0) != (sign > 0.0)) {
        return false;
      }
    }
  }
  return true;
}

template <typename Fn>
void rasterize(const ScreenFace& f, int width, int height, Fn&& emit) {
  double xmin = f.pts[0].x(), xmax = xmin, ymin = f.pts[0].y(), ymax = ymin;
  for (int i = 1; i < f.n; ++i) {
    xmin = std::min(xmin, f.pts[i].x());
    xmax = std::max(xmax, f.pts[i].x());
    ymin = std::min(ymin, f.pts[i].y());
    ymax = std::max(ymax, f.pts[i].y());
  }
  const int x0 = std::max(0, static_cast<int>(std::floor(xmin - 0.5)));
  const int x1 = std::min(width - 1, static_cast<int>(std::ceil(xmax)));
  const int y0 = std::max(0, static_cast<int>(std::floor(ymin - 0.5)));
  const int y1 = std::min(height - 1, static_cast<int>(std::ceil(ymax)));
  for (int py = y0; py <= y1; ++py) {
    for (int px = x0; px <= x1; ++px) {
      if (inside_convex(f, px + 0.5, py + 0.5)) emit(px, py);
    }
  }
}

// Camera-facing faces of one mesh, projected and shaded. Faces touching the
// near plane are dropped (the desk cameras never get that close).
std::vector<ScreenFace> project_faces(const BlockMesh& mesh, const CameraModel& camera,
                                      int block_index, const Rgb& base,
                                      const RenderParams& params,
                                      const Eigen::Vector3d& light) {
  std::vector<ScreenFace> out;
  const Eigen::Vector3d eye = camera.center();
  for (int fi = 0; fi < static_cast<int>(mesh.faces.size()); ++fi) {
    const Face& face = mesh.faces[fi];
    const Eigen::Vector3d normal = mesh.face_normal(face);
    if (normal.dot(eye - mesh.vertices[face.v[0]]) <= 1e-12) continue;
    ScreenFace sf;
    sf.block = block_index;
    sf.face = fi;
    sf.n = face.n;
    bool ok = true;
    double depth_sum = 0.0;
    for (int k = 0; k < face.n; ++k) {
      const Eigen::Vector3d c = camera.to_camera(mesh.vertices[face.v[k]]);
      if (c.z() <= kNearClip) {
        ok = false;
        break;
      }
      sf.pts[k] = {camera.fx * c.x() / c.z() + camera.cx, camera.fy * c.y() / c.z() + camera.cy};
      depth_sum += c.z();
    }
    if (!ok) continue;
    sf.depth = depth_sum / face.n;
    const double shade = params.ambient + params.diffuse * std::max(0.0, normal.dot(light));
    sf.color = scale_rgb(base, shade);
    out.push_back(sf);
  }
  return out;
}

}  // namespace

Rgb color_rgb(world::Color c) {
  static constexpr std::array<Rgb, world::kNumColors> kTable = {{
      {0.90f, 0.85f, 0.10f},  // yellow
      {0.95f, 0.95f, 0.95f},  // white
      {0.50f, 0.50f, 0.50f},  // gray
      {0.85f, 0.10f, 0.75f},  // magenta
      {0.12f, 0.20f, 0.85f},  // blue
      {0.10f, 0.80f, 0.85f},  // cyan
      {0.85f, 0.10f, 0.10f},  // red
      {0.10f, 0.72f, 0.15f},  // green
  }};
  return kTable[static_cast<int>(c)];
}

RenderedScene render_scene(const world::Layout& layout, const CameraModel& camera,
                           const Image& background, const NoiseParams& noise, std::uint64_t seed,
                           const RenderParams& params) {
  camera.validate();
  if (background.width != camera.width || background.height != camera.height) {
    throw ParameterError("background size does not match camera image size");
  }

  RenderedScene scene;
  scene.image = background;
  scene.owner.assign(static_cast<size_t>(camera.width) * camera.height, -1);

  Rng rng = make_rng(mix_seed(seed, 0xB11Full));
  const double jitter =
      std::uniform_real_distribution<double>(1.0 - params.lightness_jitter,
                                             1.0 + params.lightness_jitter)(rng);
  const Eigen::Vector3d light = params.light_toward.normalized();

  std::vector<ScreenFace> faces;
  scene.meshes.reserve(layout.blocks.size());
  for (int i = 0; i < static_cast<int>(layout.blocks.size()); ++i) {
    const world::Block& block = layout.blocks[i];
    const auto c = world::cell_centroid(block.cell, params.cell_size_m);
    BlockMesh mesh =
        make_block_mesh(block.shape, Eigen::Vector3d(c[0], c[1], c[2]), params.cell_size_m);
    apply_noise(mesh, noise, mix_seed(seed, static_cast<std::uint64_t>(i) + 1));
    const Rgb base = scale_rgb(color_rgb(block.color), jitter);
    auto block_faces = project_faces(mesh, camera, i, base, params, light);
    faces.insert(faces.end(), block_faces.begin(), block_faces.end());
    scene.meshes.push_back(std::move(mesh));
  }

  // Painter's algorithm: far to near by mean face depth, deterministic ties.
  std::sort(faces.begin(), faces.end(), [](const ScreenFace& a, const ScreenFace& b) {
    if (a.depth != b.depth) return a.depth > b.depth;
    if (a.block != b.block) return a.block < b.block;
    return a.face < b.face;
  });
  for (const ScreenFace& f : faces) {
    rasterize(f, camera.width, camera.height, [&](int px, int py) {
      scene.image.set(px, py, f.color);
      scene.owner[static_cast<size_t>(py) * camera.width + px] = f.block;
    });
  }

  std::vector<std::int64_t> owned(layout.blocks.size(), 0);
  for (std::int32_t o : scene.owner) {
    if (o >= 0) ++owned[o];
  }

  std::vector<std::uint8_t> stamp;
  for (int i = 0; i < static_cast<int>(layout.blocks.size()); ++i) {
    const world::Block& block = layout.blocks[i];

    // Solo footprint: the pixels this block would own rendered alone.
    stamp.assign(static_cast<size_t>(camera.width) * camera.height, 0);
    std::int64_t solo = 0;
    for (const ScreenFace& f : faces) {
      if (f.block != i) continue;
      rasterize(f, camera.width, camera.height, [&](int px, int py) {
        std::uint8_t& s = stamp[static_cast<size_t>(py) * camera.width + px];
        if (!s) {
          s = 1;
          ++solo;
        }
      });
    }

    Annotation ann;
    ann.block_index = i;
    ann.class_index = world::class_index(block.shape, block.color);
    ann.visible_fraction = solo > 0 ? static_cast<double>(owned[i]) / solo : 0.0;

    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    for (const Eigen::Vector3d& v : scene.meshes[i].vertices) {
      const Eigen::Vector3d c = camera.to_camera(v);
      if (c.z() <= kNearClip) continue;
      xmin = std::min(xmin, camera.fx * c.x() / c.z() + camera.cx);
      xmax = std::max(xmax, camera.fx * c.x() / c.z() + camera.cx);
      ymin = std::min(ymin, camera.fy * c.y() / c.z() + camera.cy);
      ymax = std::max(ymax, camera.fy * c.y() / c.z() + camera.cy);
    }
    ann.x_min = std::clamp(xmin, 0.0, static_cast<double>(camera.width));
    ann.x_max = std::clamp(xmax, 0.0, static_cast<double>(camera.width));
    ann.y_min = std::clamp(ymin, 0.0, static_cast<double>(camera.height));
    ann.y_max = std::clamp(ymax, 0.0, static_cast<double>(camera.height));
    // Blocks entirely outside the frame have no valid box; drop them rather
    // than emit a degenerate one. (Occluded-but-in-frame blocks keep theirs.)
    if (!(ann.x_min < ann.x_max && ann.y_min < ann.y_max)) continue;
    scene.annotations.push_back(ann);
  }
  return scene;
}

}  // namespace vmg::scene
