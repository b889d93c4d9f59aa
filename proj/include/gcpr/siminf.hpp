#pragma once

#include "gcpr/lrv.hpp"
#include "gcpr/threads.hpp"

namespace gcpr {

/// Simulated-inference configuration. N = 0 means N = T unless the
/// kappa/alpha_exp rule N = floor(kappa * T^alpha_exp) is given; when
/// theta_tilde is supplied the rule is validated against the admissible rate
/// alpha_exp <= min(1, 1 + 2*theta_tilde), theta_tilde in (-1/2, theta_lower).
struct SimConfig {
  int J = 999;
  int N = 0;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::optional<double> kappa;
  std::optional<double> alpha_exp;
  std::optional<double> theta_tilde;
  int threads = 0;

  void validate(double theta_lower) const {
    if (J < 99) throw std::invalid_argument("J must be >= 99");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha in (0,1) required");
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (kappa.has_value() != alpha_exp.has_value())
      throw std::invalid_argument("kappa and alpha_exp must be given together");
    if (kappa && !(*kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    if (alpha_exp) {
      double cap = 1.0;
      if (theta_tilde) {
        if (!(*theta_tilde > -0.5 && *theta_tilde < theta_lower))
          throw std::invalid_argument("theta_tilde must lie in (-1/2, theta_lower)");
        cap = std::min(1.0, 1.0 + 2.0 * *theta_tilde);
      }
      if (!(*alpha_exp > 0.0 && *alpha_exp <= cap))
        throw std::invalid_argument("alpha_exp violates the admissible path-length rate");
    }
  }

  int resolve_N(int T) const {
    if (N > 0) return N;
    if (kappa && alpha_exp)
      return std::max(2, static_cast<int>(std::floor(*kappa * std::pow(static_cast<double>(T),
                                                                       *alpha_exp))));
    return T;
  }
};

/// The pieces of a fitted model that the draw simulator needs.
struct SimModel {
  Vec theta;                  // all d trend powers (resolved)
  Vec tau;                    // d trend coefficients
  std::vector<int> free_idx;  // which powers are free (estimated)
  std::vector<int> orders;    // integer power order per regressor

  int d() const { return static_cast<int>(theta.size()); }
  int d_free() const { return static_cast<int>(free_idx.size()); }
  int m() const { return static_cast<int>(orders.size()); }
  int p() const {
    int s = 0;
    for (int pi : orders) s += pi;
    return s;
  }
  int n_coords() const { return d_free() + d() + p(); }

  static SimModel from_fit(const GcprFit& fit) {
    return {fit.params.theta, fit.params.tau, fit.spec.free_indices(),
            fit.spec.regressor_orders};
  }
};

/// Simulated draws of the limiting-distribution vector and their mapping to
/// parameter-space deviations. Coordinate layout of each row: free trend
/// powers (in term order), then all trend coefficients, then polynomial
/// coefficients. `deviations` row j is G(gamma_hat, T)^{-1} * draws row j.
struct SimDraws {
  Mat draws;       // (J - n_failed) x k
  Mat deviations;  // same shape
  Vec bias_term;   // the one-sided bias vector added to each draw
  SimConfig config;
  int N_used = 0;
  int horizon_T = 0;
  int n_failed = 0;
  SimModel model;
  std::vector<std::string> coord_names;

  int n_coords() const { return static_cast<int>(draws.cols()); }
  int n_draws() const { return static_cast<int>(draws.rows()); }
};

namespace detail {

/// Matrix square root factor F with F F' = omega: lower Cholesky, or the
/// symmetric eigenvalue root with negative eigenvalues clipped at zero when
/// the Cholesky factorisation fails.
inline Mat omega_sqrt_factor(const Mat& omega) {
  Eigen::LLT<Mat> llt(omega);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  Eigen::SelfAdjointEigenSolver<Mat> es(omega);
  Vec lam = es.eigenvalues();
  const double floor = -1e-8 * std::max(1.0, omega.trace());
  if (lam.minCoeff() < floor)
    throw SimulationError("long-run covariance not positive semidefinite");
  Vec s = lam.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace detail

/// One draw of the simulated limiting-distribution vector: a Gaussian
/// innovation path of length N is split into the error coordinate and the
/// regressor increments via a square root of omega, the increments are
/// cumulated into simulated integrated regressors, and the draw is the
/// scale-normalised least-squares functional of the derivative regressors
/// plus the one-sided bias correction. All powers are evaluated on the unit
/// interval (n/N and partial sums over sqrt(N)), which is algebraically the
/// G-normalised form of the raw sums and stays conditioned for any power.
inline Vec simulate_draw(const SimModel& model, const Mat& omega,
                         const Vec& delta_minus_vu, int N, std::mt19937_64& rng) {
  const int d = model.d();
  const int df = model.d_free();
  const int m = model.m();
  const int p = model.p();
  const int k = df + d + p;
  if (omega.rows() != m + 1 || omega.cols() != m + 1)
    throw std::invalid_argument("omega must be (m+1) x (m+1)");
  if (delta_minus_vu.size() != m)
    throw std::invalid_argument("delta_minus_vu must have one entry per regressor");
  if (N < 2) throw std::invalid_argument("N must be >= 2");

  const Mat F = detail::omega_sqrt_factor(omega);
  std::normal_distribution<double> normal(0.0, 1.0);

  const double dN = static_cast<double>(N);
  const double sqrtN = std::sqrt(dN);
  Mat M = Mat::Zero(k, k);
  Vec v = Vec::Zero(k);
  Vec chi = Vec::Zero(m);
  // running sums of (chi_i/sqrt(N))^q for q = 0..p_i-1, feeding the bias term
  std::vector<Vec> pow_sums(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    pow_sums[static_cast<std::size_t>(i)] =
        Vec::Zero(model.orders[static_cast<std::size_t>(i)]);

  Vec e(m + 1), g(k);
  for (int n = 1; n <= N; ++n) {
    for (int i = 0; i <= m; ++i) e[i] = normal(rng);
    const Vec eps = F * e;
    const double mu = eps[0];
    for (int i = 0; i < m; ++i) chi[i] += eps[1 + i];

    const double r = static_cast<double>(n) / dN;
    const double lnr = std::log(r);
    // The power-derivative coordinate carries a tau factor; it is pulled out
    // here and reapplied after the solve, so the moment matrix stays regular
    // when a trend coefficient is estimated near zero.
    for (int kf = 0; kf < df; ++kf) {
      const int i = model.free_idx[static_cast<std::size_t>(kf)];
      g[kf] = std::pow(r, model.theta[i]) * lnr / sqrtN;
    }
    for (int i = 0; i < d; ++i) g[df + i] = std::pow(r, model.theta[i]) / sqrtN;
    int col = df + d;
    for (int i = 0; i < m; ++i) {
      const double bi = chi[i] / sqrtN;
      const int pi = model.orders[static_cast<std::size_t>(i)];
      double acc = 1.0;
      for (int j = 1; j <= pi; ++j, ++col) {
        pow_sums[static_cast<std::size_t>(i)][j - 1] += acc;  // bi^(j-1)
        acc *= bi;
        g[col] = acc / sqrtN;
      }
    }
    M.selfadjointView<Eigen::Lower>().rankUpdate(g);
    v.noalias() += g * mu;
  }
  const Mat Mfull = M.selfadjointView<Eigen::Lower>();
  M = Mfull;

  Vec bias = Vec::Zero(k);
  {
    int col = df + d;
    for (int i = 0; i < m; ++i) {
      const int pi = model.orders[static_cast<std::size_t>(i)];
      for (int j = 1; j <= pi; ++j, ++col)
        bias[col] = static_cast<double>(j) *
                    (pow_sums[static_cast<std::size_t>(i)][j - 1] / dN) * delta_minus_vu[i];
    }
  }

  Eigen::SelfAdjointEigenSolver<Mat> es(M);
  const Vec lam = es.eigenvalues();
  const double lmax = lam.maxCoeff();
  if (!(lmax > 0.0) || lam.minCoeff() <= 1e-13 * lmax)
    throw SimulationError("singular moment matrix in simulated draw (N too small or "
                          "power at the boundary)");
  const Vec rhs = es.eigenvectors().transpose() * (v + bias);
  Vec draw = es.eigenvectors() * (rhs.array() / lam.array()).matrix();
  for (int kf = 0; kf < df; ++kf) {
    const int i = model.free_idx[static_cast<std::size_t>(kf)];
    draw[kf] /= model.tau[i];
  }
  if (!draw.allFinite())
    throw SimulationError("non-finite simulated draw (zero trend coefficient)");
  return draw;
}

namespace detail {

/// G(gamma, horizon)^{-1} applied to a draw vector, in the reduced coordinate
/// system (free powers, all trend coefficients, polynomial coefficients).
inline Vec map_deviation(const SimModel& model, double horizon, const Vec& draw) {
  const int d = model.d();
  const int df = model.d_free();
  const double sqrtH = std::sqrt(horizon);
  const double lnH = std::log(horizon);
  Vec dev(draw.size());
  std::vector<int> free_pos(static_cast<std::size_t>(d), -1);
  for (int kf = 0; kf < df; ++kf)
    free_pos[static_cast<std::size_t>(model.free_idx[static_cast<std::size_t>(kf)])] = kf;
  for (int kf = 0; kf < df; ++kf) {
    const int i = model.free_idx[static_cast<std::size_t>(kf)];
    dev[kf] = draw[kf] / (sqrtH * pow_horizon(horizon, model.theta[i]));
  }
  for (int i = 0; i < d; ++i) {
    double num = draw[df + i];
    const int kf = free_pos[static_cast<std::size_t>(i)];
    if (kf >= 0) num -= model.tau[i] * lnH * draw[kf];
    dev[df + i] = num / (sqrtH * pow_horizon(horizon, model.theta[i]));
  }
  int col = df + d;
  for (int i = 0; i < model.m(); ++i) {
    const int pi = model.orders[static_cast<std::size_t>(i)];
    for (int j = 1; j <= pi; ++j, ++col)
      dev[col] = draw[col] / (sqrtH * pow_int(sqrtH, j));
  }
  return dev;
}

}  // namespace detail

/// Generate J simulated draws (independent, counter-keyed RNG streams, so the
/// result is identical at any thread count), and map them to parameter-space
/// deviations with the sampling horizon T. A failed draw is retried on fresh
/// substreams up to 3 times; more than 1% failures aborts.
inline SimDraws run_sim_inference(const GcprFit& fit, const LrvSet& lrv,
                                  const SimConfig& config) {
  config.validate(fit.spec.theta_lower);
  const SimModel model = SimModel::from_fit(fit);
  const int m = model.m();
  if (lrv.omega.rows() != m + 1)
    throw std::invalid_argument("lrv dimension does not match the model");
  const int T = fit.spec.sample_length;
  const int N = config.resolve_N(T);
  const int k = model.n_coords();
  const Vec delta_minus_vu = m > 0 ? Vec(lrv.delta_minus.block(1, 0, m, 1)) : Vec(0);

  Mat draws(config.J, k);
  std::vector<char> ok(static_cast<std::size_t>(config.J), 0);
  parallel_for(config.J, config.threads, [&](int j) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      auto rng = substream(config.seed, 0x51D0u, static_cast<std::uint64_t>(j),
                           static_cast<std::uint64_t>(attempt));
      try {
        draws.row(j) = simulate_draw(model, lrv.omega, delta_minus_vu, N, rng).transpose();
        ok[static_cast<std::size_t>(j)] = 1;
        return;
      } catch (const SimulationError&) {
        // resample with a fresh substream
      }
    }
  });

  int n_ok = 0;
  for (char c : ok) n_ok += c;
  const int n_failed = config.J - n_ok;
  if (n_failed > config.J / 100)
    throw SimulationError("more than 1% of simulated draws failed (" +
                          std::to_string(n_failed) + "/" + std::to_string(config.J) + ")");

  SimDraws out;
  out.config = config;
  out.N_used = N;
  out.horizon_T = T;
  out.n_failed = n_failed;
  out.model = model;
  out.draws.resize(n_ok, k);
  out.deviations.resize(n_ok, k);
  {
    int r = 0;
    for (int j = 0; j < config.J; ++j) {
      if (!ok[static_cast<std::size_t>(j)]) continue;
      out.draws.row(r) = draws.row(j);
      out.deviations.row(r) =
          detail::map_deviation(model, static_cast<double>(T), draws.row(j).transpose())
              .transpose();
      ++r;
    }
  }
  // The per-draw bias vector depends on the draw's own simulated path; what is
  // shared across draws is the one-sided covariance ingredient, recorded here
  // on the coordinates it feeds.
  out.bias_term = Vec::Zero(k);
  {
    int col = model.d_free() + model.d();
    for (int i = 0; i < m; ++i)
      for (int j = 1; j <= model.orders[static_cast<std::size_t>(i)]; ++j, ++col)
        out.bias_term[col] = delta_minus_vu[i];
  }
  for (int kf = 0; kf < model.d_free(); ++kf)
    out.coord_names.push_back(
        "theta_" + std::to_string(model.free_idx[static_cast<std::size_t>(kf)] + 1));
  for (int i = 0; i < model.d(); ++i)
    out.coord_names.push_back("tau_" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= model.orders[static_cast<std::size_t>(i)]; ++j)
      out.coord_names.push_back("phi_" + std::to_string(i + 1) + "_" + std::to_string(j));
  return out;
}

namespace detail {

/// Column of the deviation matrix for a coordinate in the full
/// (theta_1..theta_d, tau_1..tau_d, phi_1..phi_p) indexing.
inline int deviation_column(const SimDraws& draws, int coordinate) {
  const int d = draws.model.d();
  const int df = draws.model.d_free();
  const int p = draws.model.p();
  if (coordinate < 0 || coordinate >= 2 * d + p)
    throw std::invalid_argument("coordinate out of range");
  if (coordinate < d) {
    for (int kf = 0; kf < df; ++kf)
      if (draws.model.free_idx[static_cast<std::size_t>(kf)] == coordinate) return kf;
    throw std::invalid_argument("coordinate is a fixed trend power; no distribution");
  }
  if (coordinate < 2 * d) return df + (coordinate - d);
  return df + d + (coordinate - 2 * d);
}

inline double gamma_hat_at(const GcprFit& fit, int coordinate) {
  const int d = fit.spec.d();
  if (coordinate < d) return fit.params.theta[coordinate];
  if (coordinate < 2 * d) return fit.params.tau[coordinate - d];
  return fit.params.phi[coordinate - 2 * d];
}

}  // namespace detail

/// Two-sided equal-tailed confidence interval
/// [gamma_k - q_{1-a/2}(dev), gamma_k - q_{a/2}(dev)] from the empirical
/// deviation quantiles (type-7 interpolation). For a power coordinate this is
/// exactly the draw-quantile interval scaled by T^{-(theta_hat + 1/2)}.
/// truncate_lo clips the lower endpoint (used for power coordinates, where
/// values below the parameter-space floor are impossible).
inline std::pair<double, double> confidence_interval(
    const SimDraws& draws, const GcprFit& fit, int coordinate, double alpha,
    std::optional<double> truncate_lo = {}) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha in (0,1)");
  const int col = detail::deviation_column(draws, coordinate);
  const double est = detail::gamma_hat_at(fit, coordinate);
  std::vector<double> dev(static_cast<std::size_t>(draws.n_draws()));
  for (int j = 0; j < draws.n_draws(); ++j)
    dev[static_cast<std::size_t>(j)] = draws.deviations(j, col);
  std::sort(dev.begin(), dev.end());
  double lo = est - quantile_sorted(dev, 1.0 - alpha / 2.0);
  double hi = est - quantile_sorted(dev, alpha / 2.0);
  if (truncate_lo) lo = std::max(lo, *truncate_lo);
  return {lo, hi};
}

enum class TestSides { TwoSided, Greater, Less };

struct CoefficientTest {
  double statistic = 0.0;  // estimate minus null value
  bool reject = false;
  double p_value = 1.0;
};

/// Test of H0: gamma_k = null_value against the chosen alternative using the
/// empirical deviation distribution. Two-sided: reject iff the null value
/// falls outside the equal-tailed confidence interval; the p-value is the
/// smallest level at which that happens.
inline CoefficientTest test_coefficient(const SimDraws& draws, const GcprFit& fit,
                                        int coordinate, double null_value,
                                        TestSides sides = TestSides::TwoSided,
                                        double alpha = 0.05) {
  const int col = detail::deviation_column(draws, coordinate);
  const double est = detail::gamma_hat_at(fit, coordinate);
  std::vector<double> dev(static_cast<std::size_t>(draws.n_draws()));
  for (int j = 0; j < draws.n_draws(); ++j)
    dev[static_cast<std::size_t>(j)] = draws.deviations(j, col);
  std::sort(dev.begin(), dev.end());

  CoefficientTest res;
  res.statistic = est - null_value;
  const double u = cdf_position(dev, res.statistic);
  switch (sides) {
    case TestSides::TwoSided: {
      res.p_value = std::clamp(2.0 * std::min(u, 1.0 - u), 0.0, 1.0);
      const double qlo = quantile_sorted(dev, alpha / 2.0);
      const double qhi = quantile_sorted(dev, 1.0 - alpha / 2.0);
      res.reject = (res.statistic < qlo) || (res.statistic > qhi);
      break;
    }
    case TestSides::Greater: {
      res.p_value = 1.0 - u;
      res.reject = res.statistic > quantile_sorted(dev, 1.0 - alpha);
      break;
    }
    case TestSides::Less: {
      res.p_value = u;
      res.reject = res.statistic < quantile_sorted(dev, alpha);
      break;
    }
  }
  return res;
}

}  // namespace gcpr
