#include "vmg/kin/arm_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vmg/util/errors.hpp"

namespace vmg::kin {

void ArmModel::validate() const {
  for (const Joint& j : joints) {
    if (std::abs(j.axis.norm() - 1.0) > 1e-9) {
      throw ParameterError("joint axis not unit length: " + j.name);
    }
    if (!(j.lo < j.hi)) throw ParameterError("joint limits must satisfy lo < hi: " + j.name);
  }
  const Eigen::Matrix3d gram = base_rotation.transpose() * base_rotation;
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-9) {
    throw ParameterError("base rotation is not orthonormal");
  }
}

double ArmModel::max_reach() const {
  double sum = 0.0;
  for (const Joint& j : joints) sum += j.offset.norm();
  return sum;
}

void ArmModel::check_limits(const JointConfig& q) const {
  for (int i = 0; i < kNumJoints; ++i) {
    if (q[i] < joints[i].lo || q[i] > joints[i].hi) {
      throw DomainError("joint angle outside limits: " + joints[i].name);
    }
  }
}

ChainState chain_state(const ArmModel& arm, const JointConfig& q) {
  ChainState state;
  Eigen::Matrix3d rot = arm.base_rotation;
  Eigen::Vector3d pos = arm.base_position;
  for (int i = 0; i < kNumJoints; ++i) {
    state.pivot[i] = pos;
    state.axis_world[i] = rot * arm.joints[i].axis;
    rot = rot * Eigen::AngleAxisd(q[i], arm.joints[i].axis).toRotationMatrix();
    pos = pos + rot * arm.joints[i].offset;
  }
  state.ee = pos;
  return state;
}

EePose forward_kinematics(const ArmModel& arm, const JointConfig& q) {
  arm.check_limits(q);
  Eigen::Matrix3d rot = arm.base_rotation;
  Eigen::Vector3d pos = arm.base_position;
  for (int i = 0; i < kNumJoints; ++i) {
    rot = rot * Eigen::AngleAxisd(q[i], arm.joints[i].axis).toRotationMatrix();
    pos = pos + rot * arm.joints[i].offset;
  }
  return {pos, rot};
}

NormalizedJoints normalize_joints(const ArmModel& arm, const JointConfig& q) {
  arm.check_limits(q);
  NormalizedJoints v;
  for (int i = 0; i < kNumJoints; ++i) {
    v[i] = (q[i] - arm.joints[i].lo) / (arm.joints[i].hi - arm.joints[i].lo);
  }
  return v;
}

JointConfig denormalize_joints(const ArmModel& arm, const NormalizedJoints& v) {
  JointConfig q;
  for (int i = 0; i < kNumJoints; ++i) {
    if (v[i] < -1e-9 || v[i] > 1.0 + 1e-9) {
      throw DomainError("normalized joint value outside [0, 1]: " + arm.joints[i].name);
    }
    const double t = std::clamp(v[i], 0.0, 1.0);
    q[i] = arm.joints[i].lo + t * (arm.joints[i].hi - arm.joints[i].lo);
  }
  return q;
}

namespace {

Eigen::Vector3d read_vec3(std::istringstream& in, const std::string& context) {
  double x, y, z;
  if (!(in >> x >> y >> z)) throw ParseError("expected three numbers after " + context);
  return {x, y, z};
}

}  // namespace

ArmModel parse_arm(std::istream& in, const std::string& origin) {
  ArmModel arm;
  int joint_count = 0;
  bool saw_base = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    if (head == "base_position") {
      arm.base_position = read_vec3(ls, where + " base_position");
      saw_base = true;
    } else if (head == "base_rpy") {
      const Eigen::Vector3d rpy = read_vec3(ls, where + " base_rpy");
      arm.base_rotation = (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
                           Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
                           Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
                              .toRotationMatrix();
    } else if (head == "joint") {
      if (joint_count >= kNumJoints) throw ParseError(where + ": more than six joints");
      Joint& j = arm.joints[joint_count];
      std::string name, kw;
      if (!(ls >> name)) throw ParseError(where + ": joint needs a name");
      j.name = name;
      if (!(ls >> kw) || kw != "axis") throw ParseError(where + ": expected 'axis'");
      j.axis = read_vec3(ls, where + " axis");
      if (!(ls >> kw) || kw != "offset") throw ParseError(where + ": expected 'offset'");
      j.offset = read_vec3(ls, where + " offset");
      if (!(ls >> kw) || kw != "limits") throw ParseError(where + ": expected 'limits'");
      if (!(ls >> j.lo >> j.hi)) throw ParseError(where + ": expected two limit values");
      ++joint_count;
    } else {
      throw ParseError(where + ": unknown directive '" + head + "'");
    }
  }
  if (!saw_base) throw ParseError(origin + ": missing base_position");
  if (joint_count != kNumJoints) {
    throw ParseError(origin + ": expected six joints, found " + std::to_string(joint_count));
  }
  arm.validate();
  return arm;
}

ArmModel load_arm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open arm profile: " + path);
  return parse_arm(in, path);
}

void save_arm(const ArmModel& arm, std::ostream& out) {
  const Eigen::Vector3d rpy = arm.base_rotation.eulerAngles(2, 1, 0).reverse();
  out << "base_position " << arm.base_position.x() << " " << arm.base_position.y() << " "
      << arm.base_position.z() << "\n";
  out << "base_rpy " << rpy.x() << " " << rpy.y() << " " << rpy.z() << "\n";
  for (const Joint& j : arm.joints) {
    out << "joint " << j.name << " axis " << j.axis.x() << " " << j.axis.y() << " " << j.axis.z()
        << " offset " << j.offset.x() << " " << j.offset.y() << " " << j.offset.z() << " limits "
        << j.lo << " " << j.hi << "\n";
  }
}

ArmModel nico_like_arm() {
  ArmModel arm;
  arm.base_position = {0.16, 0.44, 0.24};
  arm.joints[0] = {"shoulder_yaw", {0, 0, 1}, {0, 0, 0}, -1.8, 2.2};
  arm.joints[1] = {"shoulder_pitch", {1, 0, 0}, {0, 0, 0}, -2.4, 1.6};
  arm.joints[2] = {"shoulder_roll", {0, 1, 0}, {0, 0, -0.19}, -2.0, 2.0};
  arm.joints[3] = {"elbow", {1, 0, 0}, {0, 0, -0.19}, -2.6, 0.4};
  arm.joints[4] = {"wrist_rotate", {0, 0, 1}, {0, 0, -0.09}, -1.6, 2.0};
  arm.joints[5] = {"wrist_flex", {1, 0, 0}, {0.02, 0.01, -0.05}, -1.2, 2.2};
  arm.validate();
  return arm;
}

}  // namespace vmg::kin
