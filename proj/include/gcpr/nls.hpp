#pragma once

#include "gcpr/design.hpp"

#include <functional>
#include <limits>
#include <optional>

namespace gcpr {

inline constexpr double kRankTolerance = 1e-10;  // pivot threshold, relative to largest

struct OlsResult {
  Vec tau;         // raw-scale trend coefficients
  Vec phi;         // raw-scale polynomial coefficients
  Vec residuals;   // y - Z(theta) [tau; phi], length T
  double rss = 0.0;
  Vec coef_scaled;  // coefficients on the internally rescaled design
};

/// Exact least-squares fit of y on z_t(theta) for a given power vector,
/// solved by column-pivoted QR of the rescaled design (never by normal
/// equations). Throws RankDeficientError when a column pivot falls below
/// kRankTolerance times the largest pivot.
inline OlsResult ols_given_theta(const ModelSpec& spec, const Dataset& data,
                                 const Vec& theta) {
  const DesignMatrix dm = build_design_matrix(spec, data, theta);
  const int k = static_cast<int>(dm.Z.cols());
  Eigen::ColPivHouseholderQR<Mat> qr(dm.Z);
  qr.setThreshold(kRankTolerance);
  if (qr.rank() < k)
    throw RankDeficientError("design rank " + std::to_string(qr.rank()) + " < " +
                             std::to_string(k) + " columns (collinear trend powers?)");
  OlsResult r;
  r.coef_scaled = qr.solve(data.y);
  r.residuals = data.y - dm.Z * r.coef_scaled;
  r.rss = r.residuals.squaredNorm();
  const int d = spec.d();
  r.tau.resize(d);
  r.phi.resize(spec.p());
  for (int i = 0; i < d; ++i) r.tau[i] = r.coef_scaled[i] / dm.unscale[i];
  for (int j = 0; j < spec.p(); ++j)
    r.phi[j] = r.coef_scaled[d + j] / dm.unscale[d + j];
  return r;
}

/// Concentrated residual sum of squares as a function of the free trend
/// powers: the fixed part of the design (fixed trend columns and all
/// regressor columns) is orthogonalised once, each candidate power only costs
/// projecting its trend column on that complement. Returns +inf for
/// infeasible or collinear candidates.
class ConcentratedRss {
 public:
  ConcentratedRss(const ModelSpec& spec, const Dataset& data)
      : spec_(spec), data_(data), T_(data.length()) {
    spec_.validate();
    data_.validate();
    if (T_ != spec_.sample_length)
      throw std::invalid_argument("dataset length differs from spec.sample_length");
    const double Td = static_cast<double>(T_);
    const double sqrtT = std::sqrt(Td);
    rel_t_.resize(T_);
    for (int t = 1; t <= T_; ++t) rel_t_[t - 1] = static_cast<double>(t) / Td;
    ln_rel_t_.resize(T_);
    for (int t = 0; t < T_; ++t) ln_rel_t_[t] = std::log(rel_t_[static_cast<std::size_t>(t)]);

    int k0 = 0;
    for (const auto& term : spec_.trend_terms) k0 += term.fixed ? 1 : 0;
    k0 += spec_.p();
    Mat F(T_, k0);
    int col = 0;
    for (const auto& term : spec_.trend_terms) {
      if (!term.fixed) continue;
      for (int t = 0; t < T_; ++t) F(t, col) = std::pow(rel_t_[t], term.power);
      ++col;
    }
    for (int i = 0; i < spec_.m(); ++i) {
      const int pi = spec_.regressor_orders[static_cast<std::size_t>(i)];
      for (int j = 1; j <= pi; ++j, ++col)
        for (int t = 0; t < T_; ++t) F(t, col) = pow_int(data_.x(t, i) / sqrtT, j);
    }
    if (k0 > 0) {
      Eigen::HouseholderQR<Mat> qr(F);
      Q0_ = qr.householderQ() * Mat::Identity(T_, k0);
      ry_ = data_.y - Q0_ * (Q0_.transpose() * data_.y);
    } else {
      ry_ = data_.y;
    }
    ry2_ = ry_.squaredNorm();
  }

  int n_evals() const { return evals_; }

  double operator()(const Vec& free_theta) const {
    if (!theta_feasible(spec_, free_theta))
      return std::numeric_limits<double>::infinity();
    ++evals_;
    const int df = static_cast<int>(free_theta.size());
    Mat C(T_, df);
    for (int kf = 0; kf < df; ++kf)
      C.col(kf) = (free_theta[kf] * ln_rel_t_).exp().matrix();
    Mat W = C;
    if (Q0_.cols() > 0) W.noalias() -= Q0_ * (Q0_.transpose() * C);
    if (df == 1) {
      const double w2 = W.col(0).squaredNorm();
      if (w2 <= 1e-16 * C.col(0).squaredNorm())
        return std::numeric_limits<double>::infinity();  // collinear with fixed block
      const double proj = W.col(0).dot(ry_);
      return std::max(0.0, ry2_ - proj * proj / w2);
    }
    Eigen::ColPivHouseholderQR<Mat> qr(W);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < df) return std::numeric_limits<double>::infinity();
    Mat Qw = qr.householderQ() * Mat::Identity(T_, df);
    return std::max(0.0, ry2_ - (Qw.transpose() * ry_).squaredNorm());
  }

 private:
  ModelSpec spec_;
  Dataset data_;
  int T_;
  std::vector<double> rel_t_;
  Eigen::ArrayXd ln_rel_t_;
  Mat Q0_;
  Vec ry_;
  double ry2_ = 0.0;
  mutable int evals_ = 0;
};

struct GridSpec {
  double step = 0.01;
  std::optional<std::vector<double>> points;  // explicit grid for the free power
  double refine_tol = 1e-6;
  bool record_profile = false;
};

struct GcprFit {
  ParamVector params;
  Vec residuals;
  double rss = 0.0;
  std::optional<std::vector<std::pair<double, double>>> theta_profile;
  ModelSpec spec;
  bool converged = false;
  double bracket_lo = std::numeric_limits<double>::quiet_NaN();
  double bracket_hi = std::numeric_limits<double>::quiet_NaN();
  double profile_rss = std::numeric_limits<double>::quiet_NaN();
  int n_rss_evals = 0;
};

namespace detail {

inline std::vector<std::vector<double>> build_grid(const ModelSpec& spec, int free_term,
                                                   double step) {
  std::vector<std::vector<double>> grid;  // points per feasible interval
  for (auto [a, b] : feasible_intervals(spec, free_term)) {
    std::vector<double> pts;
    for (double x = a; x < b - 1e-12; x += step) pts.push_back(x);
    pts.push_back(b);
    grid.push_back(std::move(pts));
  }
  return grid;
}

/// Golden-section refinement on [a, b]; fn is evaluated at interior points
/// and (theta_best, rss_best) tracks the best value seen so far.
inline void golden_refine(const std::function<double(double)>& fn, double a, double b,
                          double tol, double& theta_best, double& rss_best) {
  static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (!(b - a > tol)) return;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  auto consider = [&](double x, double f) {
    if (f < rss_best) {
      rss_best = f;
      theta_best = x;
    }
  };
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = fn(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = fn(x2);
      consider(x2, f2);
    }
  }
}

struct NelderMeadResult {
  Vec x;
  double f = std::numeric_limits<double>::infinity();
};

inline NelderMeadResult nelder_mead(const std::function<double(const Vec&)>& fn,
                                    const Vec& x0, double scale, int max_iter = 800,
                                    double xtol = 1e-9, double ftol = 1e-13) {
  const int n = static_cast<int>(x0.size());
  std::vector<Vec> xs(static_cast<std::size_t>(n + 1));
  std::vector<double> fs(static_cast<std::size_t>(n + 1));
  xs[0] = x0;
  fs[0] = fn(x0);
  for (int i = 0; i < n; ++i) {
    Vec v = x0;
    v[i] += scale;
    xs[static_cast<std::size_t>(i + 1)] = v;
    fs[static_cast<std::size_t>(i + 1)] = fn(v);
  }
  auto order = [&]() {
    std::vector<int> idx(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return fs[static_cast<std::size_t>(a)] < fs[static_cast<std::size_t>(b)];
    });
    std::vector<Vec> x2(xs.size());
    std::vector<double> f2(fs.size());
    for (int i = 0; i <= n; ++i) {
      x2[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      f2[static_cast<std::size_t>(i)] = fs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    xs = std::move(x2);
    fs = std::move(f2);
  };
  for (int it = 0; it < max_iter; ++it) {
    order();
    double diam = 0.0;
    for (int i = 1; i <= n; ++i)
      diam = std::max(diam, (xs[static_cast<std::size_t>(i)] - xs[0]).lpNorm<Eigen::Infinity>());
    const bool fflat = std::isfinite(fs[static_cast<std::size_t>(n)]) &&
                       fs[static_cast<std::size_t>(n)] - fs[0] <= ftol * (1.0 + std::abs(fs[0]));
    if (diam <= xtol && fflat) break;
    Vec centroid = Vec::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[static_cast<std::size_t>(i)];
    centroid /= static_cast<double>(n);
    const Vec& worst = xs[static_cast<std::size_t>(n)];
    Vec xr = centroid + (centroid - worst);
    double fr = fn(xr);
    if (fr < fs[0]) {
      Vec xe = centroid + 2.0 * (centroid - worst);
      double fe = fn(xe);
      if (fe < fr) {
        xs[static_cast<std::size_t>(n)] = xe;
        fs[static_cast<std::size_t>(n)] = fe;
      } else {
        xs[static_cast<std::size_t>(n)] = xr;
        fs[static_cast<std::size_t>(n)] = fr;
      }
    } else if (fr < fs[static_cast<std::size_t>(n - 1)]) {
      xs[static_cast<std::size_t>(n)] = xr;
      fs[static_cast<std::size_t>(n)] = fr;
    } else {
      Vec xc = centroid + 0.5 * ((fr < fs[static_cast<std::size_t>(n)] ? xr : worst) - centroid);
      double fc = fn(xc);
      if (fc < std::min(fr, fs[static_cast<std::size_t>(n)])) {
        xs[static_cast<std::size_t>(n)] = xc;
        fs[static_cast<std::size_t>(n)] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          xs[static_cast<std::size_t>(i)] = xs[0] + 0.5 * (xs[static_cast<std::size_t>(i)] - xs[0]);
          fs[static_cast<std::size_t>(i)] = fn(xs[static_cast<std::size_t>(i)]);
        }
      }
    }
  }
  order();
  return {xs[0], fs[0]};
}

}  // namespace detail

/// Concentrated NLS fit. With no free power this is plain OLS. With exactly
/// one free power the concentrated RSS is evaluated on a grid over the
/// feasible set, the grid argmin is refined by golden section inside its
/// bracketing grid cell (never across a feasibility gap), and the final
/// coefficients come from ols_given_theta at the refined power. Grid ties
/// resolve to the smallest power.
inline GcprFit fit_gcpr(const ModelSpec& spec, const Dataset& data,
                        const GridSpec& grid = {}) {
  spec.validate();
  const int df = spec.d_free();
  if (df >= 2)
    throw std::invalid_argument("fit_gcpr handles at most one free power; use "
                                "fit_gcpr_multistart");
  GcprFit fit;
  fit.spec = spec;

  if (df == 0) {
    Vec theta(spec.d());
    for (int i = 0; i < spec.d(); ++i) theta[i] = spec.trend_terms[static_cast<std::size_t>(i)].power;
    OlsResult ols = ols_given_theta(spec, data, theta);
    if (!std::isfinite(ols.rss)) throw OptimizerError("non-finite RSS");
    fit.params = {theta, ols.tau, ols.phi};
    fit.residuals = ols.residuals;
    fit.rss = ols.rss;
    fit.profile_rss = ols.rss;
    fit.converged = true;
    return fit;
  }

  const int free_term = spec.free_indices()[0];
  ConcentratedRss rss_fn(spec, data);
  auto eval1 = [&rss_fn](double th) {
    Vec v(1);
    v[0] = th;
    return rss_fn(v);
  };

  // Grid points grouped by feasible interval.
  std::vector<std::vector<double>> intervals;
  if (grid.points) {
    if (grid.points->empty()) throw OptimizerError("empty grid");
    std::vector<double> pts = *grid.points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (double th : pts) {
      Vec v(1);
      v[0] = th;
      if (!theta_feasible(spec, v))
        throw std::invalid_argument("grid point outside the feasible parameter space: " +
                                    std::to_string(th));
    }
    // split explicit points at feasibility gaps
    const auto iv = feasible_intervals(spec, free_term);
    for (auto [a, b] : iv) {
      std::vector<double> seg;
      for (double th : pts)
        if (th >= a - 1e-12 && th <= b + 1e-12) seg.push_back(th);
      if (!seg.empty()) intervals.push_back(std::move(seg));
    }
  } else {
    intervals = detail::build_grid(spec, free_term, grid.step);
  }
  bool any = false;
  for (const auto& seg : intervals) any = any || !seg.empty();
  if (!any) throw OptimizerError("empty grid");

  double best_theta = 0.0;
  double best_rss = std::numeric_limits<double>::infinity();
  int best_iv = -1, best_pos = -1;
  std::vector<std::pair<double, double>> profile;
  for (std::size_t iv = 0; iv < intervals.size(); ++iv) {
    for (std::size_t j = 0; j < intervals[iv].size(); ++j) {
      const double th = intervals[iv][j];
      const double r = eval1(th);
      if (grid.record_profile && std::isfinite(r)) profile.emplace_back(th, r);
      if (r < best_rss) {  // strict: ties keep the smallest theta
        best_rss = r;
        best_theta = th;
        best_iv = static_cast<int>(iv);
        best_pos = static_cast<int>(j);
      }
    }
  }
  if (!std::isfinite(best_rss))
    throw RankDeficientError("rank-deficient design at every grid point");

  // Refine inside the bracketing cell of the winning interval.
  const auto& seg = intervals[static_cast<std::size_t>(best_iv)];
  double a = best_pos > 0 ? seg[static_cast<std::size_t>(best_pos - 1)] : best_theta;
  double b = best_pos + 1 < static_cast<int>(seg.size())
                 ? seg[static_cast<std::size_t>(best_pos + 1)]
                 : best_theta;
  fit.bracket_lo = a;
  fit.bracket_hi = b;
  if (b - a > grid.refine_tol)
    detail::golden_refine(eval1, a, b, grid.refine_tol, best_theta, best_rss);

  const Vec theta = spec.resolve_theta(Vec::Constant(1, best_theta));
  OlsResult ols = ols_given_theta(spec, data, theta);
  if (!std::isfinite(ols.rss)) throw OptimizerError("non-finite RSS at optimum");
  fit.params = {theta, ols.tau, ols.phi};
  fit.residuals = ols.residuals;
  fit.rss = ols.rss;
  fit.profile_rss = best_rss;
  fit.n_rss_evals = rss_fn.n_evals();
  fit.converged = true;
  if (grid.record_profile) fit.theta_profile = std::move(profile);
  return fit;
}

/// Multistart Nelder-Mead over two or more free powers: Latin-hypercube
/// starting points in the brackets, infeasible candidates penalised with
/// +inf, best run wins.
inline GcprFit fit_gcpr_multistart(const ModelSpec& spec, const Dataset& data, int starts,
                                   std::uint64_t seed = 20260810ull) {
  spec.validate();
  const int df = spec.d_free();
  if (df < 2)
    throw std::invalid_argument("fit_gcpr_multistart needs >= 2 free powers");
  if (starts < 1) throw std::invalid_argument("starts must be >= 1");
  ConcentratedRss rss_fn(spec, data);
  const auto free_idx = spec.free_indices();

  auto rng = substream(seed, 0xA11, static_cast<std::uint64_t>(starts));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  // Latin hypercube: one stratum per start and dimension, shuffled.
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(df));
  for (int k = 0; k < df; ++k) {
    auto& perm = perms[static_cast<std::size_t>(k)];
    perm.resize(static_cast<std::size_t>(starts));
    for (int s = 0; s < starts; ++s) perm[static_cast<std::size_t>(s)] = s;
    std::shuffle(perm.begin(), perm.end(), rng);
  }

  detail::NelderMeadResult best;
  int feasible_starts = 0;
  for (int s = 0; s < starts; ++s) {
    Vec x0(df);
    for (int k = 0; k < df; ++k) {
      auto [lo, hi] = spec.free_bracket(free_idx[static_cast<std::size_t>(k)]);
      const double u = (perms[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] + unif(rng)) /
                       static_cast<double>(starts);
      x0[k] = lo + u * (hi - lo);
    }
    std::sort(x0.data(), x0.data() + df);
    if (!theta_feasible(spec, x0)) continue;
    ++feasible_starts;
    double scale = 0.0;
    for (int k = 0; k < df; ++k) {
      auto [lo, hi] = spec.free_bracket(free_idx[static_cast<std::size_t>(k)]);
      scale = std::max(scale, 0.02 * (hi - lo));
    }
    auto res = detail::nelder_mead([&rss_fn](const Vec& v) { return rss_fn(v); }, x0, scale);
    if (res.f < best.f) best = res;
  }
  if (feasible_starts == 0 || !std::isfinite(best.f))
    throw OptimizerError("all starts infeasible");

  std::sort(best.x.data(), best.x.data() + df);
  const Vec theta = spec.resolve_theta(best.x);
  OlsResult ols = ols_given_theta(spec, data, theta);
  GcprFit fit;
  fit.spec = spec;
  fit.params = {theta, ols.tau, ols.phi};
  fit.residuals = ols.residuals;
  fit.rss = ols.rss;
  fit.profile_rss = best.f;
  fit.n_rss_evals = rss_fn.n_evals();
  fit.converged = true;
  return fit;
}

struct StochasticPowerProfile {
  std::vector<std::pair<double, double>> curve;  // (theta, rss)
  bool used_abs = false;  // regressor had non-positive values, |x| was used
};

/// RSS profile of the auxiliary regression y on [1, t, x, x^theta] over a
/// grid of powers. Real powers require a positive regressor; otherwise |x|
/// is substituted and flagged. The grid must stay outside (0.95, 1.05):
/// at theta = 1 the power column duplicates x.
inline StochasticPowerProfile rss_profile_stochastic_power(const Dataset& data,
                                                           const std::vector<double>& grid) {
  data.validate();
  if (data.n_regressors() != 1)
    throw std::invalid_argument("stochastic-power profile needs exactly one regressor");
  if (grid.empty()) throw std::invalid_argument("empty grid");
  for (double th : grid)
    if (th > 0.95 && th < 1.05)
      throw std::invalid_argument("grid must exclude the neighbourhood (0.95, 1.05) of 1");
  const int T = data.length();
  if (T < 6) throw std::invalid_argument("series too short");
  const double Td = static_cast<double>(T);
  const double sqrtT = std::sqrt(Td);

  StochasticPowerProfile out;
  Vec xs(T);
  for (int t = 0; t < T; ++t) {
    double v = data.x(t, 0);
    if (v <= 0.0) out.used_abs = true;
    xs[t] = std::abs(v) / sqrtT;
  }
  Mat Z(T, 4);
  for (int t = 0; t < T; ++t) {
    Z(t, 0) = 1.0;
    Z(t, 1) = static_cast<double>(t + 1) / Td;
    Z(t, 2) = data.x(t, 0) / sqrtT;
  }
  std::vector<double> sorted_grid = grid;
  std::sort(sorted_grid.begin(), sorted_grid.end());
  for (double th : sorted_grid) {
    for (int t = 0; t < T; ++t) Z(t, 3) = std::pow(xs[t], th);
    Eigen::ColPivHouseholderQR<Mat> qr(Z);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < 4)
      throw RankDeficientError("rank deficiency in stochastic-power profile at theta = " +
                               std::to_string(th));
    const Vec c = qr.solve(data.y);
    out.curve.emplace_back(th, (data.y - Z * c).squaredNorm());
  }
  return out;
}

/// Residuals of the series regressed on an intercept and linear time trend.
inline Vec detrend(const Vec& series) {
  const int n = static_cast<int>(series.size());
  if (n < 3) throw std::invalid_argument("detrend needs length >= 3");
  const double t_mean = (n + 1.0) / 2.0;
  const double ss_t = n * (static_cast<double>(n) * n - 1.0) / 12.0;
  double sum_x = 0.0, sum_tx = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_x += series[i];
    sum_tx += (i + 1.0) * series[i];
  }
  const double x_mean = sum_x / n;
  const double b = (sum_tx - n * x_mean * t_mean) / ss_t;
  const double a = x_mean - b * t_mean;
  Vec resid(n);
  for (int i = 0; i < n; ++i) resid[i] = series[i] - a - b * (i + 1.0);
  return resid;
}

}  // namespace gcpr
