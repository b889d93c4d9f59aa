#pragma once

#include "gcpr/model.hpp"

namespace gcpr {

/// The estimator scaling matrices. D_d carries the trend powers, D_s the
/// integer regressor powers, L_tau the log-horizon coupling between trend
/// powers and their coefficients, and
///   G = sqrt(h) * blockdiag(D_d, D_d, D_s) * L_tau'^{-1}
/// is the block lower-triangular matrix that normalises the full parameter
/// deviation (theta, tau, phi). Block order throughout: theta, tau, phi.
struct ScalingMatrices {
  Mat D_d;    // d x d
  Mat D_s;    // p x p
  Mat L_tau;  // (2d+p) x (2d+p)
  Mat G;      // (2d+p) x (2d+p)
  Vec theta;
  Vec tau;
  double horizon = 0.0;
};

inline ScalingMatrices scaling_matrices(const Vec& theta, const Vec& tau,
                                        const std::vector<int>& regressor_orders,
                                        double horizon) {
  if (theta.size() != tau.size()) throw std::invalid_argument("theta/tau length mismatch");
  if (!(horizon >= 2.0)) throw std::invalid_argument("horizon must be >= 2");
  const int d = static_cast<int>(theta.size());
  int p = 0;
  for (int pi : regressor_orders) p += pi;
  const int k = 2 * d + p;
  const double lnh = std::log(horizon);
  const double sqrth = std::sqrt(horizon);

  ScalingMatrices s;
  s.theta = theta;
  s.tau = tau;
  s.horizon = horizon;
  s.D_d = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) s.D_d(i, i) = pow_horizon(horizon, theta[i]);
  s.D_s = Mat::Zero(p, p);
  {
    int col = 0;
    for (int pi : regressor_orders)
      for (int j = 1; j <= pi; ++j, ++col) s.D_s(col, col) = pow_int(sqrth, j);
  }
  s.L_tau = Mat::Identity(k, k);
  for (int i = 0; i < d; ++i) s.L_tau(i, d + i) = -tau[i] * lnh;

  s.G = Mat::Zero(k, k);
  for (int i = 0; i < d; ++i) {
    s.G(i, i) = sqrth * s.D_d(i, i);
    s.G(d + i, i) = sqrth * s.D_d(i, i) * tau[i] * lnh;
    s.G(d + i, d + i) = sqrth * s.D_d(i, i);
  }
  for (int j = 0; j < p; ++j) s.G(2 * d + j, 2 * d + j) = sqrth * s.D_s(j, j);
  return s;
}

inline ScalingMatrices scaling_matrices(const ModelSpec& spec, const Vec& theta,
                                        const Vec& tau, double horizon) {
  return scaling_matrices(theta, tau, spec.regressor_orders, horizon);
}

}  // namespace gcpr
