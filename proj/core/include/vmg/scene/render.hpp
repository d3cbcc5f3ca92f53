#pragma once

#include <cstdint>
#include <vector>

#include "vmg/scene/camera.hpp"
#include "vmg/scene/image.hpp"
#include "vmg/scene/mesh.hpp"
#include "vmg/world/types.hpp"

namespace vmg::scene {

Rgb color_rgb(world::Color c);

struct RenderParams {
  double ambient = 0.55;
  double diffuse = 0.45;
  // Unit-ish vector from surfaces toward the light (normalized internally).
  Eigen::Vector3d light_toward = {0.2, 0.35, 0.9};
  double lightness_jitter = 0.10;  // per-scene multiplier amplitude on block colors
  double cell_size_m = world::kDefaultCellSizeM;
};

struct Annotation {
  int block_index = -1;
  int class_index = -1;
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
  double visible_fraction = 0.0;
};

struct RenderedScene {
  Image image;
  std::vector<Annotation> annotations;
  // Per pixel, index of the block owning it (-1 background); row-major.
  std::vector<std::int32_t> owner;
  // World-space geometry actually drawn (after noise), one mesh per block.
  std::vector<BlockMesh> meshes;
};

// Flat-shaded painter's-algorithm compositor. Faces of all blocks are sorted
// far-to-near by mean camera depth and drawn over the background; ownership
// of each pixel goes to the last face drawn on it. visible_fraction compares
// pixels owned in the full scene against the block's solo footprint. With an
// empty layout the output image is the background, byte for byte.
RenderedScene render_scene(const world::Layout& layout, const CameraModel& camera,
                           const Image& background, const NoiseParams& noise, std::uint64_t seed,
                           const RenderParams& params = {});

}  // namespace vmg::scene
