#pragma once

#include <cstdint>
#include <vector>

#include "vmg/scene/camera.hpp"
#include "vmg/scene/image.hpp"
#include "vmg/world/types.hpp"

namespace vmg::scene {

struct BackgroundParams {
  bool distractors = false;
  double cell_size_m = world::kDefaultCellSizeM;
  int grid = world::kGridSize;
};

// Pixels whose viewing ray hits the table plane inside the checkered board
// region [0, grid*s]^2. Row-major, 1 = on board.
std::vector<std::uint8_t> board_mask(const CameraModel& camera, double cell_size_m,
                                     int grid);

// Deterministic procedural backdrop: low-frequency colored texture with the
// perspective-correct checkered board composited where the table sits, plus
// (optionally) 1-5 rounded distractor silhouettes kept strictly off the
// board region.
Image synth_background(const CameraModel& camera, std::uint64_t seed,
                       const BackgroundParams& params = {});

}  // namespace vmg::scene
