#pragma once

#include "gcpr/lrv.hpp"

namespace gcpr {

/// Fully modified least squares for the polynomial cointegrating regression
/// at a given (estimated or supplied) power vector. Implemented purely as a
/// comparator for the simulated-inference estimator: with an estimated power
/// the ignored estimation error invalidates its nominal size.
struct FmolsFit {
  Vec tau_plus;
  Vec phi_plus;
  Vec theta_used;
  bool theta_estimated = false;
  Vec bias_correction;   // A* on the raw-regressor scale, length d+p
  Vec residuals_plus;    // y_plus - z' [tau_plus; phi_plus] on the used t-range
  Vec design_inv_diag;   // diag((sum_t z_t z_t')^{-1}), raw scale
  double omega_u_dot_v = 0.0;
  int t_start = 2;       // first time index used (1 with include_t1)
};

/// The estimator: [tau+; phi+] = (sum z z')^{-1} (sum z y+ - A*), with
/// y+_t = y_t - omega_uv omega_vv^{-1} dx_t and
/// A*_i = delta_plus_viu [n_obs, 2 sum x_it, ..., p_i sum x_it^{p_i-1}]',
/// delta_plus_vu = delta_vu - delta_vv omega_vv^{-1} omega_vu. Sums run over
/// the same t-range as the residual vector series (t = 2..T by default).
inline FmolsFit fmols_fit(const ModelSpec& spec, const Dataset& data, const Vec& theta,
                          const LrvSet& lrv, bool theta_estimated = false,
                          bool include_t1 = false) {
  spec.validate();
  const int T = data.length();
  const int d = spec.d();
  const int p = spec.p();
  const int m = spec.m();
  if (m < 1) throw std::invalid_argument("fmols needs at least one regressor");
  if (lrv.omega.rows() != m + 1)
    throw std::invalid_argument("lrv dimension does not match the model");

  const int start = include_t1 ? 0 : 1;  // 0-based
  const int n = T - start;
  if (n < d + p + 1) throw std::invalid_argument("too few observations for fmols");

  const Mat ovv = lrv.omega.block(1, 1, m, m);
  Eigen::FullPivLU<Mat> lu(ovv);
  if (!lu.isInvertible()) throw RankDeficientError("omega_vv is singular");
  const Vec w = lu.solve(lrv.omega.block(1, 0, m, 1));                // omega_vv^{-1} omega_vu
  const Vec delta_plus_vu =
      lrv.delta.block(1, 0, m, 1) - lrv.delta.block(1, 1, m, m) * w;  // per regressor

  // Endogeneity-corrected response on the used range.
  Vec y_plus(n);
  for (int t = start; t < T; ++t) {
    double corr = 0.0;
    for (int i = 0; i < m; ++i)
      corr += w[i] * (data.x(t, i) - (t == 0 ? 0.0 : data.x(t - 1, i)));
    y_plus[t - start] = data.y[t] - corr;
  }

  // Additive bias correction on the raw scale.
  Vec a_star = Vec::Zero(d + p);
  {
    int col = d;
    for (int i = 0; i < m; ++i) {
      const int pi = spec.regressor_orders[static_cast<std::size_t>(i)];
      for (int j = 1; j <= pi; ++j, ++col) {
        double s = 0.0;
        for (int t = start; t < T; ++t) s += pow_int(data.x(t, i), j - 1);
        a_star[col] = delta_plus_vu[i] * static_cast<double>(j) * s;
      }
    }
  }

  const DesignMatrix dm = build_design_matrix(spec, data, theta);
  const Mat Z = dm.Z.bottomRows(n);
  Eigen::ColPivHouseholderQR<Mat> qr(Z);
  qr.setThreshold(kRankTolerance);
  if (qr.rank() < d + p) throw RankDeficientError("fmols design is rank deficient");

  // Scaled-space solve: coef_s = LS(Z, y+) - (Z'Z)^{-1} (A*/unscale).
  const Vec a_scaled = a_star.cwiseQuotient(dm.unscale);
  const Vec ls = qr.solve(y_plus);
  const Mat R = qr.matrixQR().topRows(d + p).triangularView<Eigen::Upper>();
  const auto& perm = qr.colsPermutation();
  // (Z'Z)^{-1} v = P R^{-1} R^{-T} P' v
  auto design_inv_apply = [&](const Vec& v) {
    Vec t1 = perm.transpose() * v;
    Vec t2 = R.transpose().triangularView<Eigen::Lower>().solve(t1);
    Vec t3 = R.triangularView<Eigen::Upper>().solve(t2);
    return Vec(perm * t3);
  };
  const Vec coef_scaled = ls - design_inv_apply(a_scaled);

  FmolsFit fit;
  fit.theta_used = theta;
  fit.theta_estimated = theta_estimated;
  fit.bias_correction = a_star;
  fit.omega_u_dot_v = lrv.omega_u_dot_v;
  fit.t_start = start + 1;
  fit.residuals_plus = y_plus - Z * coef_scaled;
  fit.tau_plus.resize(d);
  fit.phi_plus.resize(p);
  for (int i = 0; i < d; ++i) fit.tau_plus[i] = coef_scaled[i] / dm.unscale[i];
  for (int j = 0; j < p; ++j) fit.phi_plus[j] = coef_scaled[d + j] / dm.unscale[d + j];
  fit.design_inv_diag.resize(d + p);
  for (int kcol = 0; kcol < d + p; ++kcol) {
    Vec ek = Vec::Zero(d + p);
    ek[kcol] = 1.0;
    Vec t1 = perm.transpose() * ek;
    Vec t2 = R.transpose().triangularView<Eigen::Lower>().solve(t1);
    fit.design_inv_diag[kcol] = t2.squaredNorm() / (dm.unscale[kcol] * dm.unscale[kcol]);
  }
  return fit;
}

/// t statistic for the phi_index-th polynomial coefficient:
///   t = phi+_k / sqrt(omega_u_dot_v * [(sum z z')^{-1}]_kk),
/// compared against standard normal quantiles.
inline double fmols_t_stat_phi(const FmolsFit& fit, const LrvSet& lrv, int phi_index) {
  const int d = static_cast<int>(fit.tau_plus.size());
  const int p = static_cast<int>(fit.phi_plus.size());
  if (phi_index < 0 || phi_index >= p) throw std::invalid_argument("phi index out of range");
  const double v = lrv.omega_u_dot_v * fit.design_inv_diag[d + phi_index];
  if (!(v > 0.0)) throw DegenerateDataError("non-positive variance in fmols t statistic");
  return fit.phi_plus[phi_index] / std::sqrt(v);
}

/// Two-sided standard-normal p-value for a t statistic.
inline double normal_two_sided_p(double t) {
  return std::erfc(std::abs(t) / std::sqrt(2.0));
}

}  // namespace gcpr
