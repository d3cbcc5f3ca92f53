#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <string>

namespace vmg::kin {

inline constexpr int kNumJoints = 6;

struct Joint {
  std::string name;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  // unit, in the parent frame
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();  // link after the joint, meters
  double lo = -3.14;
  double hi = 3.14;
};

using JointConfig = std::array<double, kNumJoints>;       // radians
using NormalizedJoints = std::array<double, kNumJoints>;  // [0, 1] per joint

struct EePose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity();
};

// Revolute chain: frame_i = frame_{i-1} * Rot(axis_i, q_i) * Trans(offset_i),
// rooted at the base transform. The end effector sits at the origin of the
// last frame.
struct ArmModel {
  std::array<Joint, kNumJoints> joints;
  Eigen::Matrix3d base_rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d base_position = Eigen::Vector3d::Zero();

  // Throws ParameterError on non-unit axes (1e-9) or lo >= hi.
  void validate() const;
  // Sum of link lengths: an upper bound on distance reachable from the base.
  double max_reach() const;
  void check_limits(const JointConfig& q) const;  // DomainError when outside
};

EePose forward_kinematics(const ArmModel& arm, const JointConfig& q);

// Joint pivot positions and world-frame axes for the same chain; used by the
// iterative solver's Jacobian.
struct ChainState {
  std::array<Eigen::Vector3d, kNumJoints> pivot;
  std::array<Eigen::Vector3d, kNumJoints> axis_world;
  Eigen::Vector3d ee;
};
ChainState chain_state(const ArmModel& arm, const JointConfig& q);

NormalizedJoints normalize_joints(const ArmModel& arm, const JointConfig& q);
JointConfig denormalize_joints(const ArmModel& arm, const NormalizedJoints& v);

// Text profile: "base_position x y z", "base_rpy r p y", then six
// "joint <name> axis x y z offset x y z limits lo hi" lines. '#' comments.
ArmModel parse_arm(std::istream& in, const std::string& origin);
ArmModel load_arm_file(const std::string& path);
void save_arm(const ArmModel& arm, std::ostream& out);

// Built-in child-sized desk arm; identical to the shipped profile file.
ArmModel nico_like_arm();

}  // namespace vmg::kin
