#pragma once

#include <Eigen/Dense>

namespace vmg::scene {

struct Projected {
  double u = 0.0;
  double v = 0.0;
  double depth = 0.0;  // camera-frame Z, meters
};

// Pinhole camera. Camera-frame coordinates are Xc = rotation * Xw + translation
// with +Z forward, +X image-right, +Y image-down.
struct CameraModel {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  // Throws ParameterError unless rotation is orthonormal within 1e-9,
  // fx/fy are positive and the image size is positive.
  void validate() const;

  Eigen::Vector3d to_camera(const Eigen::Vector3d& world) const {
    return rotation * world + translation;
  }
  // u = fx*Xc/Zc + cx, v = fy*Yc/Zc + cy. Throws DomainError when Zc <= 0.
  Projected project(const Eigen::Vector3d& world) const;

  Eigen::Vector3d center() const { return -rotation.transpose() * translation; }
  // World-space unit direction of the viewing ray through pixel (u, v).
  Eigen::Vector3d pixel_ray(double u, double v) const;
};

// Rotation/translation from an eye point looking at a target, image-up
// opposite to `up` (camera +Y is image-down).
CameraModel make_look_at_camera(double fx, double fy, double cx, double cy, int width, int height,
                                const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                                const Eigen::Vector3d& up = Eigen::Vector3d::UnitZ());

// Default desk viewpoint: slightly elevated, in front of the table, framing
// the whole 0.32 m board. Focal length scales with resolution so the field of
// view is resolution independent.
CameraModel desk_camera(int width = 352, int height = 198);

}  // namespace vmg::scene
