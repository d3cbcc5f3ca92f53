#include "vmg/kin/ik.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "vmg/util/errors.hpp"
#include "vmg/util/rng.hpp"

namespace vmg::kin {

namespace {

// One damped least-squares descent from a fixed start. Returns the solution,
// or nullopt after max_iters; updates `best` with the smallest residual seen.
std::optional<JointConfig> descend(const ArmModel& arm, const Eigen::Vector3d& target,
                                   JointConfig q, const IkParams& params, double& best) {
  const double lambda2 = params.damping * params.damping;
  for (int i = 0; i < kNumJoints; ++i) q[i] = std::clamp(q[i], arm.joints[i].lo, arm.joints[i].hi);
  for (int iter = 0; iter <= params.max_iters; ++iter) {
    const ChainState state = chain_state(arm, q);
    const Eigen::Vector3d err = target - state.ee;
    best = std::min(best, err.norm());
    if (err.norm() <= params.eps) return q;
    if (iter == params.max_iters) break;

    Eigen::Matrix<double, 3, kNumJoints> jac;
    for (int i = 0; i < kNumJoints; ++i) {
      jac.col(i) = state.axis_world[i].cross(state.ee - state.pivot[i]);
    }
    const Eigen::Matrix3d lhs = jac * jac.transpose() + lambda2 * Eigen::Matrix3d::Identity();
    const Eigen::Matrix<double, kNumJoints, 1> step = jac.transpose() * lhs.llt().solve(err);
    for (int i = 0; i < kNumJoints; ++i) {
      const double d = std::clamp(step(i), -params.step_clamp, params.step_clamp);
      q[i] = std::clamp(q[i] + d, arm.joints[i].lo, arm.joints[i].hi);
    }
  }
  return std::nullopt;
}

}  // namespace

JointConfig solve_ik(const ArmModel& arm, const Eigen::Vector3d& target, const JointConfig& seed,
                     const IkParams& params) {
  const double dist = (target - arm.base_position).norm();
  const double reach = arm.max_reach();
  if (dist > reach) {
    throw UnreachableError("target " + std::to_string(dist) +
                               " m from base exceeds arm reach " + std::to_string(reach) + " m",
                           dist - reach);
  }

  double best = std::numeric_limits<double>::infinity();
  if (auto q = descend(arm, target, seed, params, best)) return *q;

  // The descent can wedge into a joint-limit corner from an unlucky start;
  // restart from the mid-range pose, then from target-derived random poses.
  // All starts are deterministic in (arm, target, seed).
  JointConfig mid;
  for (int i = 0; i < kNumJoints; ++i) mid[i] = 0.5 * (arm.joints[i].lo + arm.joints[i].hi);
  if (auto q = descend(arm, target, mid, params, best)) return *q;

  const std::uint64_t base = mix_seed(
      static_cast<std::uint64_t>(std::llround(target.x() * 1e6)),
      static_cast<std::uint64_t>(std::llround(target.y() * 1e6)),
      static_cast<std::uint64_t>(std::llround(target.z() * 1e6)));
  for (int attempt = 0; attempt < 6; ++attempt) {
    Rng rng = make_rng(mix_seed(base, static_cast<std::uint64_t>(attempt)));
    JointConfig start;
    for (int i = 0; i < kNumJoints; ++i) {
      start[i] = std::uniform_real_distribution<double>(arm.joints[i].lo, arm.joints[i].hi)(rng);
    }
    if (auto q = descend(arm, target, start, params, best)) return *q;
  }
  throw UnreachableError("no convergence after " + std::to_string(params.max_iters) +
                             " iterations per start, best residual " + std::to_string(best) + " m",
                         best);
}

namespace {

JointConfig solve_phase(const ArmModel& arm, const Eigen::Vector3d& target,
                        const JointConfig& seed, const IkParams& params, char phase) {
  try {
    return solve_ik(arm, target, seed, params);
  } catch (const UnreachableError& e) {
    throw UnreachableError(std::string("phase ") + phase + ": " + e.what(), e.best_residual,
                           phase);
  }
}

}  // namespace

GraspWaypoints grasp_waypoints(const ArmModel& arm, const Eigen::Vector3d& block_pos,
                               const GraspParams& params) {
  // Hand raised in front of the shoulder, fixed in the base frame.
  const Eigen::Vector3d lift_target =
      arm.base_position + arm.base_rotation * Eigen::Vector3d(0.0, -0.20, 0.10);
  GraspWaypoints w;
  w.lift = solve_phase(arm, lift_target, JointConfig{}, params.ik, 'A');
  w.above = solve_phase(arm, block_pos + Eigen::Vector3d(0, 0, params.clearance), w.lift,
                        params.ik, 'B');
  w.lower = solve_phase(arm, block_pos + Eigen::Vector3d(0, 0, params.lower_clearance), w.above,
                        params.ik, 'C');
  w.grasp = solve_phase(arm, block_pos, w.lower, params.ik, 'D');
  return w;
}

}  // namespace vmg::kin
