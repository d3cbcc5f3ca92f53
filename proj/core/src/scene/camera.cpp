#include "vmg/scene/camera.hpp"

#include "vmg/util/errors.hpp"

namespace vmg::scene {

void CameraModel::validate() const {
  if (fx <= 0.0 || fy <= 0.0) throw ParameterError("focal lengths must be positive");
  if (width <= 0 || height <= 0) throw ParameterError("image size must be positive");
  const Eigen::Matrix3d gram = rotation.transpose() * rotation;
  const double err = (gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (err > 1e-9) throw ParameterError("camera rotation is not orthonormal");
  if (rotation.determinant() < 0.0) throw ParameterError("camera rotation is reflected");
}

Projected CameraModel::project(const Eigen::Vector3d& world) const {
  const Eigen::Vector3d c = to_camera(world);
  if (c.z() <= 0.0) throw DomainError("point behind camera");
  return {fx * c.x() / c.z() + cx, fy * c.y() / c.z() + cy, c.z()};
}

Eigen::Vector3d CameraModel::pixel_ray(double u, double v) const {
  const Eigen::Vector3d dir_cam((u - cx) / fx, (v - cy) / fy, 1.0);
  return (rotation.transpose() * dir_cam).normalized();
}

CameraModel make_look_at_camera(double fx, double fy, double cx, double cy, int width, int height,
                                const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                                const Eigen::Vector3d& up) {
  const Eigen::Vector3d forward = (target - eye).normalized();
  Eigen::Vector3d right = forward.cross(up);
  if (right.norm() < 1e-12) throw ParameterError("look-at direction parallel to up vector");
  right.normalize();
  const Eigen::Vector3d down = forward.cross(right).normalized();

  CameraModel cam;
  cam.fx = fx;
  cam.fy = fy;
  cam.cx = cx;
  cam.cy = cy;
  cam.width = width;
  cam.height = height;
  cam.rotation.row(0) = right;
  cam.rotation.row(1) = down;
  cam.rotation.row(2) = forward;
  cam.translation = -cam.rotation * eye;
  cam.validate();
  return cam;
}

CameraModel desk_camera(int width, int height) {
  const double f = 840.0 * height / 198.0;
  return make_look_at_camera(f, f, width / 2.0, height / 2.0, width, height,
                             {0.16, 1.25, 0.34}, {0.16, 0.14, 0.06});
}

}  // namespace vmg::scene
