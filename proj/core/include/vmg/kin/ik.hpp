#pragma once

#include "vmg/kin/arm_model.hpp"

namespace vmg::kin {

struct IkParams {
  double eps = 1e-3;        // position tolerance, meters
  int max_iters = 200;
  double damping = 1e-2;    // least-squares regularizer
  double step_clamp = 0.2;  // per-joint update bound, radians
};

// Damped least-squares position IK. Iterates from `seed`, clamping to joint
// limits every step. Throws UnreachableError (carrying the best residual)
// when the target lies outside the workspace or the solver fails to reach
// tolerance within max_iters.
JointConfig solve_ik(const ArmModel& arm, const Eigen::Vector3d& target, const JointConfig& seed,
                     const IkParams& params = {});

struct GraspParams {
  double clearance = 0.10;        // waypoint B height above the block
  double lower_clearance = 0.03;  // waypoint C height above the block
  IkParams ik;
};

// Four-phase reach: lift the hand (A), move above the block (B), lower
// toward the surface (C), grasp at the centroid (D). Each phase seeds the
// next solve with the previous configuration.
struct GraspWaypoints {
  JointConfig lift;    // A
  JointConfig above;   // B
  JointConfig lower;   // C
  JointConfig grasp;   // D
};

GraspWaypoints grasp_waypoints(const ArmModel& arm, const Eigen::Vector3d& block_pos,
                               const GraspParams& params = {});

}  // namespace vmg::kin
