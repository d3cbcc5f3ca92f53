#pragma once

#include <cstdint>

#include "vmg/world/types.hpp"

namespace vmg::world {

struct LayoutParams {
  int min_blocks = 1;
  int max_blocks = 8;
  int max_height = 4;        // tallest allowed stack, <= 8
  double pyramid_prob = 0.3; // chance of a pyramid where one is permissible
};

// Samples a valid layout: blocks rest on the ground or on cubes, pyramids are
// always stack tops. Deterministic for a fixed seed.
//
// Throws ParameterError when params are infeasible (e.g. max_blocks exceeds
// the 64 * max_height capacity).
Layout sample_layout(std::uint64_t seed, const LayoutParams& params);

}  // namespace vmg::world
