#include "vmg/world/layout_sampler.hpp"

#include <array>

#include "vmg/util/errors.hpp"
#include "vmg/util/rng.hpp"

namespace vmg::world {

Layout sample_layout(std::uint64_t seed, const LayoutParams& params) {
  if (params.max_height < 1 || params.max_height > kGridSize) {
    throw ParameterError("max_height must be in [1, 8]");
  }
  const int capacity_total = kGridSize * kGridSize * params.max_height;
  if (params.min_blocks < 1 || params.min_blocks > params.max_blocks ||
      params.max_blocks > capacity_total) {
    throw ParameterError("infeasible block count range [" +
                         std::to_string(params.min_blocks) + ", " +
                         std::to_string(params.max_blocks) + "] for capacity " +
                         std::to_string(capacity_total));
  }

  Rng rng = make_rng(seed);
  const int n_blocks =
      std::uniform_int_distribution<int>(params.min_blocks, params.max_blocks)(rng);

  // Per-column stack height and whether the column is sealed by a pyramid.
  std::array<std::array<int, kGridSize>, kGridSize> height{};
  std::array<std::array<bool, kGridSize>, kGridSize> sealed{};
  int capacity = capacity_total;

  Layout layout;
  layout.id = "layout-" + std::to_string(seed);
  layout.blocks.reserve(n_blocks);

  for (int k = 0; k < n_blocks; ++k) {
    std::vector<std::pair<int, int>> open;
    open.reserve(kGridSize * kGridSize);
    for (int x = 0; x < kGridSize; ++x) {
      for (int y = 0; y < kGridSize; ++y) {
        if (!sealed[x][y] && height[x][y] < params.max_height) open.emplace_back(x, y);
      }
    }
    // capacity >= n_blocks - k is maintained below, so a placement exists.
    const auto [x, y] =
        open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
    const int z = height[x][y];
    const int remaining = n_blocks - k - 1;

    // A pyramid seals its column; only allowed if enough capacity is left for
    // the blocks still to be placed.
    const bool pyramid_fits = capacity - (params.max_height - z) >= remaining;
    Shape shape = Shape::kCube;
    if (pyramid_fits &&
        std::bernoulli_distribution(params.pyramid_prob)(rng)) {
      shape = Shape::kPyramid;
    }
    const Color color = static_cast<Color>(
        std::uniform_int_distribution<int>(0, kNumColors - 1)(rng));

    layout.blocks.push_back({shape, color, {x, y, z}});
    height[x][y] = z + 1;
    if (shape == Shape::kPyramid) {
      sealed[x][y] = true;
      capacity -= params.max_height - z;
    } else {
      capacity -= 1;
    }
  }
  return layout;
}

}  // namespace vmg::world
