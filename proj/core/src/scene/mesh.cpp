#include "vmg/scene/mesh.hpp"

#include <cmath>
#include <numbers>

#include "vmg/util/errors.hpp"
#include "vmg/util/rng.hpp"

namespace vmg::scene {

Eigen::Vector3d BlockMesh::centroid() const {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& v : vertices) sum += v;
  return sum / static_cast<double>(vertices.size());
}

Eigen::Vector3d BlockMesh::face_normal(const Face& f) const {
  const Eigen::Vector3d& a = vertices[f.v[0]];
  const Eigen::Vector3d& b = vertices[f.v[1]];
  const Eigen::Vector3d& c = vertices[f.v[2]];
  return (b - a).cross(c - a).normalized();
}

BlockMesh make_block_mesh(world::Shape shape, const Eigen::Vector3d& centroid, double size_m) {
  if (size_m <= 0.0) throw ParameterError("block size must be positive");
  const double h = size_m / 2.0;
  BlockMesh mesh;
  if (shape == world::Shape::kCube) {
    mesh.vertices = {
        centroid + Eigen::Vector3d(-h, -h, -h), centroid + Eigen::Vector3d(h, -h, -h),
        centroid + Eigen::Vector3d(h, h, -h),   centroid + Eigen::Vector3d(-h, h, -h),
        centroid + Eigen::Vector3d(-h, -h, h),  centroid + Eigen::Vector3d(h, -h, h),
        centroid + Eigen::Vector3d(h, h, h),    centroid + Eigen::Vector3d(-h, h, h),
    };
    mesh.faces = {
        {{0, 3, 2, 1}, 4},  // bottom
        {{4, 5, 6, 7}, 4},  // top
        {{0, 1, 5, 4}, 4},  // -y
        {{2, 3, 7, 6}, 4},  // +y
        {{0, 4, 7, 3}, 4},  // -x
        {{1, 2, 6, 5}, 4},  // +x
    };
  } else {
    mesh.vertices = {
        centroid + Eigen::Vector3d(-h, -h, -h), centroid + Eigen::Vector3d(h, -h, -h),
        centroid + Eigen::Vector3d(h, h, -h),   centroid + Eigen::Vector3d(-h, h, -h),
        centroid + Eigen::Vector3d(0, 0, h),
    };
    mesh.faces = {
        {{0, 3, 2, 1}, 4},  // base
        {{0, 1, 4, 0}, 3},
        {{1, 2, 4, 0}, 3},
        {{2, 3, 4, 0}, 3},
        {{3, 0, 4, 0}, 3},
    };
  }
  return mesh;
}

void apply_noise(BlockMesh& mesh, const NoiseParams& noise, std::uint64_t seed) {
  if (mesh.vertices.empty()) throw ParameterError("cannot perturb an empty mesh");
  if (noise.scale_frac == 0.0 && noise.rot_xy_deg == 0.0 && noise.rot_z_deg == 0.0 &&
      noise.disp_m == 0.0) {
    return;  // exact identity, bit-for-bit
  }
  Rng rng = make_rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  const double rad = std::numbers::pi / 180.0;
  const Eigen::Vector3d scale(uniform(1.0 - noise.scale_frac, 1.0 + noise.scale_frac),
                              uniform(1.0 - noise.scale_frac, 1.0 + noise.scale_frac),
                              uniform(1.0 - noise.scale_frac, 1.0 + noise.scale_frac));
  const double ax = uniform(-noise.rot_xy_deg, noise.rot_xy_deg) * rad;
  const double ay = uniform(-noise.rot_xy_deg, noise.rot_xy_deg) * rad;
  const double az = uniform(-noise.rot_z_deg, noise.rot_z_deg) * rad;
  const Eigen::Vector3d disp(uniform(-noise.disp_m, noise.disp_m),
                             uniform(-noise.disp_m, noise.disp_m),
                             uniform(-noise.disp_m, noise.disp_m));

  const Eigen::Matrix3d rot =
      (Eigen::AngleAxisd(az, Eigen::Vector3d::UnitZ()) *
       Eigen::AngleAxisd(ay, Eigen::Vector3d::UnitY()) *
       Eigen::AngleAxisd(ax, Eigen::Vector3d::UnitX()))
          .toRotationMatrix();
  const Eigen::Vector3d c = mesh.centroid();
  for (auto& v : mesh.vertices) {
    v = rot * ((v - c).cwiseProduct(scale)) + c + disp;
  }
}

}  // namespace vmg::scene
