#pragma once

#include <Eigen/Dense>

#include <functional>

namespace flowlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Scalar observable on the state space. Finite-state backends evaluate it
/// at embedded states (a length-1 vector holding the state index).
using Func = std::function<double(const Vec&)>;

inline Vec vec1(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}

/// State-norm guard: trajectories beyond this are treated as blown up.
inline constexpr double kBlowUpGuard = 1e12;

}  // namespace flowlab
