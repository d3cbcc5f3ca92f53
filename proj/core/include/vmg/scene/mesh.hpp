#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "vmg/world/types.hpp"

namespace vmg::scene {

// Convex polygon face; vertex indices in outward (counter-clockwise seen from
// outside) order.
struct Face {
  std::array<int, 4> v{};
  int n = 0;
};

struct BlockMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<Face> faces;

  Eigen::Vector3d centroid() const;  // vertex mean
  Eigen::Vector3d face_normal(const Face& f) const;
};

// Axis-aligned block geometry centered on `centroid`, edge length `size_m`.
// Cubes have 8 vertices / 6 quads, pyramids 5 vertices / 1 quad + 4 triangles.
BlockMesh make_block_mesh(world::Shape shape, const Eigen::Vector3d& centroid, double size_m);

struct NoiseParams {
  double scale_frac = 0.10;  // per-axis scale in [1-f, 1+f]
  double rot_xy_deg = 6.0;   // tilt about x and y
  double rot_z_deg = 10.0;   // yaw
  double disp_m = 0.01;      // per-axis displacement bound
};

// Perturbs the mesh in place: per-axis scale, then rotation about the
// centroid (x, y, then z axis), then displacement. Deterministic per seed;
// all-zero params leave the mesh exactly unchanged.
void apply_noise(BlockMesh& mesh, const NoiseParams& noise, std::uint64_t seed);

}  // namespace vmg::scene
