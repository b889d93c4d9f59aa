#pragma once

#include "gcpr/nls.hpp"

namespace gcpr {

enum class Kernel { Bartlett, Parzen, QuadraticSpectral };

inline std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Bartlett: return "bartlett";
    case Kernel::Parzen: return "parzen";
    case Kernel::QuadraticSpectral: return "quadratic_spectral";
  }
  return "?";
}

/// Kernel weight at x >= 0. Bartlett: 1-x on [0,1]. Parzen: the standard
/// piecewise cubic. Quadratic spectral: sine/cosine form, with a series
/// expansion near zero where the closed form is 0/0.
inline double kernel_weight(Kernel k, double x) {
  if (x < 0.0) throw std::invalid_argument("kernel_weight needs x >= 0");
  switch (k) {
    case Kernel::Bartlett:
      return std::max(1.0 - x, 0.0);
    case Kernel::Parzen:
      if (x <= 0.5) return 1.0 - 6.0 * x * x + 6.0 * x * x * x;
      if (x <= 1.0) return 2.0 * pow_int(1.0 - x, 3);
      return 0.0;
    case Kernel::QuadraticSpectral: {
      const double a = 6.0 * M_PI * x / 5.0;
      if (x < 1e-4) return 1.0 - a * a / 10.0 + a * a * a * a / 280.0;
      return 3.0 / (a * a) * (std::sin(a) / a - std::cos(a));
    }
  }
  return 0.0;
}

/// Long-run covariance estimates of the stacked series V_t. sigma is the
/// lag-0 covariance, delta the one-sided long-run covariance
/// sum_{h>=0} E(V_t V_{t+h}'), omega the two-sided one, and
/// delta_minus = sigma - delta'. omega_u_dot_v is the conditional long-run
/// variance of the first coordinate given the rest.
struct LrvSet {
  Mat sigma;
  Mat delta;
  Mat omega;
  Mat delta_minus;
  double omega_u_dot_v = 0.0;
  Kernel kernel = Kernel::Bartlett;
  double bandwidth = 0.0;
  bool bandwidth_truncated = false;
  std::string source;  // how V_t was built
};

/// Stacked residual/difference series V_t = [u_hat_t, dx_t']'. By default the
/// series starts at t = 2 (x_0 unobserved); with include_t1 the first
/// difference uses x_0 = 0, which is exact for simulated regressors started
/// at zero.
inline Mat residual_vector_series(const GcprFit& fit, const Dataset& data,
                                  bool include_t1 = false) {
  const int T = data.length();
  if (fit.residuals.size() != T)
    throw std::invalid_argument("fit and data are inconsistent");
  const int m = data.n_regressors();
  const int start = include_t1 ? 0 : 1;  // 0-based first row
  const int n = T - start;
  Mat V(n, m + 1);
  for (int t = start; t < T; ++t) {
    V(t - start, 0) = fit.residuals[t];
    for (int i = 0; i < m; ++i)
      V(t - start, 1 + i) = data.x(t, i) - (t == 0 ? 0.0 : data.x(t - 1, i));
  }
  return V;
}

/// AR(1) plug-in bandwidth (one autoregression per column, unit weights).
/// Returns at least 1.0.
inline double andrews_bandwidth(const Mat& V, Kernel kernel) {
  const int n = static_cast<int>(V.rows());
  if (n < 8) throw std::invalid_argument("andrews_bandwidth needs n >= 8");
  double num1 = 0.0, num2 = 0.0, den = 0.0;
  for (int k = 0; k < V.cols(); ++k) {
    double s01 = 0.0, s00 = 0.0;
    for (int t = 1; t < n; ++t) {
      s01 += V(t, k) * V(t - 1, k);
      s00 += V(t - 1, k) * V(t - 1, k);
    }
    double rho = s00 > 0.0 ? s01 / s00 : 0.0;
    rho = std::clamp(rho, -0.97, 0.97);  // guards the (1-rho)^6 blow-up
    double sse = 0.0;
    for (int t = 1; t < n; ++t) {
      const double e = V(t, k) - rho * V(t - 1, k);
      sse += e * e;
    }
    const double sigma2 = sse / static_cast<double>(n - 1);
    const double s4 = sigma2 * sigma2;
    const double omr = 1.0 - rho;
    num1 += 4.0 * rho * rho * s4 / (pow_int(omr, 6) * pow_int(1.0 + rho, 2));
    num2 += 4.0 * rho * rho * s4 / pow_int(omr, 8);
    den += s4 / pow_int(omr, 4);
  }
  if (!(den > 0.0)) return 1.0;
  double b = 1.0;
  switch (kernel) {
    case Kernel::Bartlett:
      b = 1.1447 * std::cbrt((num1 / den) * static_cast<double>(n));
      break;
    case Kernel::Parzen:
      b = 2.6614 * std::pow((num2 / den) * static_cast<double>(n), 0.2);
      break;
    case Kernel::QuadraticSpectral:
      b = 1.3221 * std::pow((num2 / den) * static_cast<double>(n), 0.2);
      break;
  }
  return std::max(b, 1.0);
}

/// Kernel long-run covariance estimation. With bandwidth unset the AR(1)
/// plug-in is used; any bandwidth is clamped to [1, n/2] (flagged when the
/// clamp bites). The identity omega = delta + delta' - sigma holds exactly
/// as computed, and delta_minus = sigma - delta'.
inline LrvSet estimate_lrv(const Mat& V, Kernel kernel = Kernel::Bartlett,
                           std::optional<double> bandwidth = {}) {
  const int n = static_cast<int>(V.rows());
  const int k = static_cast<int>(V.cols());
  if (n < 8) throw std::invalid_argument("estimate_lrv needs series length >= 8");
  if (!V.allFinite()) throw std::invalid_argument("non-finite entries in V");
  if (bandwidth && !(*bandwidth > 0.0))
    throw std::invalid_argument("bandwidth must be positive");

  LrvSet out;
  out.kernel = kernel;
  double b = bandwidth ? *bandwidth : andrews_bandwidth(V, kernel);
  const double b_raw = b;
  b = std::clamp(b, 1.0, 0.5 * static_cast<double>(n));
  out.bandwidth = b;
  out.bandwidth_truncated = (b != b_raw);

  const double dn = static_cast<double>(n);
  out.sigma = (V.transpose() * V) / dn;
  out.delta = out.sigma;
  for (int i = 1; i < n; ++i) {
    const double w = kernel_weight(kernel, static_cast<double>(i) / b);
    if (w == 0.0) {
      if (kernel != Kernel::QuadraticSpectral) break;  // compact support
      continue;
    }
    // gamma_hat(i)' = (1/n) sum_t V_t V_{t+i}', the lead-h cross moments
    Mat gamma_t = (V.topRows(n - i).transpose() * V.bottomRows(n - i)) / dn;
    out.delta.noalias() += w * gamma_t;
  }
  out.omega = out.delta + out.delta.transpose() - out.sigma;
  out.delta_minus = out.sigma - out.delta.transpose();

  if (k == 1) {
    out.omega_u_dot_v = out.omega(0, 0);
  } else {
    const Mat ovv = out.omega.block(1, 1, k - 1, k - 1);
    const Vec ovu = out.omega.block(1, 0, k - 1, 1);
    Eigen::SelfAdjointEigenSolver<Mat> es(ovv);
    Vec lam = es.eigenvalues();
    const double lmax = lam.size() ? lam.maxCoeff() : 0.0;
    Vec proj = es.eigenvectors().transpose() * ovu;
    double quad = 0.0;
    for (int i = 0; i < lam.size(); ++i)
      if (lam[i] > 1e-14 * std::max(lmax, 1e-300)) quad += proj[i] * proj[i] / lam[i];
    out.omega_u_dot_v = out.omega(0, 0) - quad;
  }
  out.source = "u_hat,dx";
  return out;
}

}  // namespace gcpr
