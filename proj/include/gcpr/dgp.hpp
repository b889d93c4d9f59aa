#pragma once

#include "gcpr/lrv.hpp"

namespace gcpr {

/// Serial-correlation settings of the bivariate VAR(1) error process,
/// ordered by increasing persistence.
enum class SerialSetting { A, B, C, D };

inline const char* setting_name(SerialSetting s) {
  switch (s) {
    case SerialSetting::A: return "A";
    case SerialSetting::B: return "B";
    case SerialSetting::C: return "C";
    case SerialSetting::D: return "D";
  }
  return "?";
}

inline Eigen::Vector2d setting_eigenvalues(SerialSetting s) {
  switch (s) {
    case SerialSetting::A: return {0.0, 0.0};
    case SerialSetting::B: return {0.5, 0.3};
    case SerialSetting::C: return {0.7, 0.5};
    case SerialSetting::D: return {0.9, 0.7};
  }
  return {0.0, 0.0};
}

/// Simulation design: y_t = tau1 + tau2 t + tau3 t^theta0 + phi1 x_t
/// + phi2 x_t^2 + u_t with x_t the partial sum of v_t, and (u, v) a VAR(1)
/// with random-rotation autoregressive matrix and innovation correlation rho.
/// Defaults follow the reference simulation design.
struct DgpConfig {
  int T = 100;
  double theta0 = 2.0;
  Eigen::Vector3d tau0{7.0, 0.05, -5e-4};
  double phi1 = 5.0;
  double phi2 = 0.0;
  SerialSetting setting = SerialSetting::A;
  double rho = 0.0;
  int presample = 50;
  std::uint64_t seed = 0;

  void validate() const {
    if (T < 10) throw std::invalid_argument("T too small");
    if (!(rho > -1.0 && rho < 1.0)) throw std::invalid_argument("|rho| < 1 required");
    if (presample < 0) throw std::invalid_argument("presample must be >= 0");
    // identification: all trend coefficients of the DGP nonzero
    for (int i = 0; i < 3; ++i)
      if (tau0[i] == 0.0)
        throw std::invalid_argument("DGP trend coefficients must be nonzero");
  }
};

/// Random orthogonal mixing matrix H = U (U'U)^{-1/2} with U uniform on
/// [0,1]^{2x2}; singular draws are rejected and redrawn.
inline Eigen::Matrix2d draw_mixing_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (;;) {
    Eigen::Matrix2d U;
    U << unif(rng), unif(rng), unif(rng), unif(rng);
    if (std::abs(U.determinant()) < 1e-6) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(U.transpose() * U);
    const Eigen::Matrix2d inv_sqrt = es.eigenvectors() *
                                     es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                     es.eigenvectors().transpose();
    return U * inv_sqrt;
  }
}

inline Eigen::Matrix2d setting_ar_matrix(SerialSetting s, std::mt19937_64& rng) {
  const Eigen::Matrix2d H = draw_mixing_matrix(rng);
  return H * setting_eigenvalues(s).asDiagonal() * H.transpose();
}

/// VAR(1) recursion w_t = A w_{t-1} + zeta_t from the zero initial state with
/// `presample` discarded observations; innovations are bivariate normal with
/// unit variances and correlation rho. Returns (u, v) of length n.
inline std::pair<Vec, Vec> generate_var1_errors(const Eigen::Matrix2d& A, double rho, int n,
                                                int presample, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  const double rho_c = std::sqrt(1.0 - rho * rho);
  Eigen::Vector2d w = Eigen::Vector2d::Zero();
  Vec u(n), v(n);
  for (int t = 0; t < presample + n; ++t) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    Eigen::Vector2d zeta(z1, rho * z1 + rho_c * z2);
    w = A * w + zeta;
    if (t >= presample) {
      u[t - presample] = w[0];
      v[t - presample] = w[1];
    }
  }
  return {u, v};
}

/// Assemble the response and regressor from simulated errors: the regressor
/// is the running sum of the post-presample v's, started at zero.
inline Dataset assemble_sample(const DgpConfig& cfg, const Vec& u, const Vec& v) {
  Dataset ds;
  ds.y.resize(cfg.T);
  ds.x.resize(cfg.T, 1);
  double x = 0.0;
  for (int t = 0; t < cfg.T; ++t) {
    x += v[t];
    ds.x(t, 0) = x;
    const double tt = static_cast<double>(t + 1);
    ds.y[t] = cfg.tau0[0] + cfg.tau0[1] * tt + cfg.tau0[2] * std::pow(tt, cfg.theta0) +
              cfg.phi1 * x + cfg.phi2 * x * x + u[t];
    ds.time_labels.push_back(tt);
  }
  return ds;
}

/// A full sample from the simulation design, deterministic given cfg.seed.
inline Dataset generate_gcpr_sample(const DgpConfig& cfg,
                                    std::optional<Eigen::Matrix2d> fixed_A = {}) {
  cfg.validate();
  auto rng = substream(cfg.seed, 0xD6Bull);
  const Eigen::Matrix2d A =
      fixed_A ? *fixed_A : setting_ar_matrix(cfg.setting, rng);
  auto [u, v] = generate_var1_errors(A, cfg.rho, cfg.T, cfg.presample, rng);
  return assemble_sample(cfg, u, v);
}

/// Closed-form long-run covariances of the VAR(1) error process
/// w_t = A w_{t-1} + zeta_t, Var(zeta) = [[1, rho], [rho, 1]]:
///   sigma = lag-0 covariance (discrete Lyapunov solution),
///   delta = sigma (I - A')^{-1},  omega = (I - A)^{-1} Var(zeta) (I - A')^{-1},
///   delta_minus = sigma - delta'.
inline LrvSet true_lrv(const Eigen::Matrix2d& A, double rho) {
  Eigen::Matrix2d sz;
  sz << 1.0, rho, rho, 1.0;
  // vec(gamma0) = (I4 - A kron A)^{-1} vec(sz)
  Eigen::Matrix4d K = Eigen::Matrix4d::Identity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          K(2 * i + k, 2 * j + l) -= A(i, j) * A(k, l);  // kron(A, A), column-major vec
  Eigen::Vector4d vec_sz(sz(0, 0), sz(1, 0), sz(0, 1), sz(1, 1));
  const Eigen::Vector4d g = K.colPivHouseholderQr().solve(vec_sz);
  Eigen::Matrix2d gamma0;
  gamma0 << g[0], g[2], g[1], g[3];
  gamma0 = 0.5 * (gamma0 + gamma0.transpose().eval());

  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d ima_inv = (I - A).inverse();

  LrvSet out;
  out.sigma = gamma0;
  out.delta = gamma0 * (I - A.transpose()).inverse();
  out.omega = ima_inv * sz * ima_inv.transpose();
  out.delta_minus = out.sigma - out.delta.transpose();
  out.omega_u_dot_v =
      out.omega(0, 0) - out.omega(0, 1) * out.omega(1, 0) / out.omega(1, 1);
  out.source = "closed_form_var1";
  out.bandwidth = 0.0;
  return out;
}

}  // namespace gcpr
