#pragma once

#include "gcpr/lrv.hpp"
#include "gcpr/detail/kpss_cv_table.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace gcpr {

/// Quantile table of the integral of squared standard Brownian motion,
/// indexed by upper-tail probability. Interpolation is linear in the log of
/// the tail probability. The embedded table is generated once by simulation
/// (see tools/gen_cv_table.cpp) and also shipped as data/kpss_cv_table.csv.
class CriticalValueTable {
 public:
  CriticalValueTable(std::vector<double> tail_prob, std::vector<double> quantile)
      : tp_(std::move(tail_prob)), q_(std::move(quantile)) {
    if (tp_.size() != q_.size() || tp_.size() < 2)
      throw std::invalid_argument("malformed critical value table");
  }

  static const CriticalValueTable& embedded() {
    static const CriticalValueTable table(
        std::vector<double>(detail::kCvTailProb, detail::kCvTailProb + detail::kCvTableSize),
        std::vector<double>(detail::kCvQuantile, detail::kCvQuantile + detail::kCvTableSize));
    return table;
  }

  static CriticalValueTable from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string line;
    std::vector<double> tp, q;
    bool header_seen = false;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (!header_seen) {
        header_seen = true;  // tail_prob,quantile
        continue;
      }
      std::istringstream ss(line);
      std::string a, b;
      if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
        throw ParseError(path + ": malformed row: " + line);
      tp.push_back(std::stod(a));
      q.push_back(std::stod(b));
    }
    return CriticalValueTable(std::move(tp), std::move(q));
  }

  double min_tail_prob() const { return tp_.front(); }

  /// Quantile c with P(X >= c) = tail_prob.
  double quantile(double tail_prob) const {
    if (!(tail_prob >= tp_.front() && tail_prob <= tp_.back()))
      throw std::invalid_argument("tail probability outside table resolution [" +
                                  std::to_string(tp_.front()) + ", " +
                                  std::to_string(tp_.back()) + "]");
    const auto it = std::lower_bound(tp_.begin(), tp_.end(), tail_prob);
    auto hi = static_cast<std::size_t>(it - tp_.begin());
    if (hi == 0) return q_.front();
    const std::size_t lo = hi - 1;
    const double la = std::log(tp_[lo]), lb = std::log(tp_[hi]);
    const double w = lb > la ? (std::log(tail_prob) - la) / (lb - la) : 0.0;
    return q_[lo] * (1.0 - w) + q_[hi] * w;
  }

  /// Mean implied by the quantile grid (trapezoid over the CDF positions).
  /// Used to validate the table against the exact value 1/2.
  double implied_mean() const {
    // integrate q over u = 1 - tail_prob, ascending in u
    double mean = 0.0;
    std::vector<std::pair<double, double>> uq;
    for (std::size_t i = 0; i < tp_.size(); ++i) uq.emplace_back(1.0 - tp_[i], q_[i]);
    std::sort(uq.begin(), uq.end());
    mean += uq.front().first * uq.front().second * 0.5;  // below the table: q -> 0 at u -> 0
    for (std::size_t i = 1; i < uq.size(); ++i)
      mean += (uq[i].first - uq[i - 1].first) * 0.5 * (uq[i].second + uq[i - 1].second);
    mean += (1.0 - uq.back().first) * uq.back().second;  // flat extension into the far tail
    return mean;
  }

 private:
  std::vector<double> tp_, q_;
};

/// c with P(int_0^1 W(r)^2 dr >= c) = alpha / M, from the embedded table.
inline double critical_value(double alpha, int M) {
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  const double tp = alpha / static_cast<double>(M);
  if (!(tp > 0.0 && tp < 0.5))
    throw std::invalid_argument("alpha/M must lie in (0, 0.5)");
  return CriticalValueTable::embedded().quantile(tp);
}

/// Endogeneity-corrected residuals u_hat_plus_t = u_hat_t - omega_uv
/// omega_vv^{-1} dx_t on the same t-range as the residual vector series.
/// With no regressors the correction vanishes.
inline Vec fm_residuals(const GcprFit& fit, const Dataset& data, const LrvSet& lrv,
                        bool include_t1 = false) {
  const int T = data.length();
  if (fit.residuals.size() != T)
    throw std::invalid_argument("fit and data are inconsistent");
  const int m = data.n_regressors();
  const int start = include_t1 ? 0 : 1;
  const int n = T - start;
  if (m == 0) return fit.residuals.segment(start, n);
  if (lrv.omega.rows() != m + 1)
    throw std::invalid_argument("lrv dimension does not match the data");
  const Mat ovv = lrv.omega.block(1, 1, m, m);
  Eigen::FullPivLU<Mat> lu(ovv);
  if (!lu.isInvertible()) throw DegenerateDataError("omega_vv is singular");
  const Vec w = lu.solve(lrv.omega.block(0, 1, 1, m).transpose());  // omega_vv^{-1} omega_vu
  Vec out(n);
  for (int t = start; t < T; ++t) {
    double corr = 0.0;
    for (int i = 0; i < m; ++i)
      corr += w[i] * (data.x(t, i) - (t == 0 ? 0.0 : data.x(t - 1, i)));
    out[t - start] = fit.residuals[t] - corr;
  }
  return out;
}

/// KPSS-type statistic on one residual segment of length q:
///   K = omega_u_dot_v^{-1} q^{-1} sum_t (q^{-1/2} sum_{i<=t} u_i)^2.
inline double kpss_statistic(const Eigen::Ref<const Vec>& segment, double omega_u_dot_v) {
  const int q = static_cast<int>(segment.size());
  if (q < 4) throw std::invalid_argument("segment length must be >= 4");
  if (!(omega_u_dot_v > 0.0))
    throw DegenerateDataError("zero-variance input: omega_u_dot_v must be positive");
  double s = 0.0, acc = 0.0;
  for (int t = 0; t < q; ++t) {
    s += segment[t];
    acc += s * s;
  }
  return acc / (static_cast<double>(q) * static_cast<double>(q) * omega_u_dot_v);
}

struct BlockRange {
  int lo = 0, hi = 0;  // 1-based inclusive
};

/// M = floor(n/q) disjoint blocks of length q, alternating between the start
/// and the end of the sample; leftover middle observations stay unused.
inline std::vector<BlockRange> subsample_blocks(int n, int q) {
  if (q < 1 || q > n) throw std::invalid_argument("need 1 <= q <= n");
  const int M = n / q;
  std::vector<BlockRange> out;
  int from_start = 0, from_end = 0;
  for (int b = 0; b < M; ++b) {
    if (b % 2 == 0) {
      out.push_back({from_start * q + 1, (from_start + 1) * q});
      ++from_start;
    } else {
      out.push_back({n - (from_end + 1) * q + 1, n - from_end * q});
      ++from_end;
    }
  }
  return out;
}

struct VolatilityRow {
  int q = 0;
  double max_stat = 0.0;
  double volatility = 0.0;
};

struct MinVolatility {
  int q_chosen = 0;
  std::vector<VolatilityRow> trace;
};

/// Minimum-volatility block-size selection: for each candidate q the maximal
/// block statistic s(q) is computed, its sample standard deviation over a
/// window of neighbours (shrunk at the grid edges) is the volatility, and the
/// q with the smallest volatility wins (ties to the smaller q).
inline MinVolatility min_volatility_q(const Vec& u_plus, double omega_u_dot_v,
                                      std::vector<int> q_grid, int window = 2) {
  const int n = static_cast<int>(u_plus.size());
  std::sort(q_grid.begin(), q_grid.end());
  q_grid.erase(std::unique(q_grid.begin(), q_grid.end()), q_grid.end());
  std::vector<int> grid;
  for (int q : q_grid)
    if (q >= 4 && q <= n / 2) grid.push_back(q);
  if (grid.empty()) throw std::invalid_argument("empty candidate grid after feasibility");
  if (static_cast<int>(grid.size()) < 2 * window + 1)
    throw std::invalid_argument("candidate grid smaller than the volatility window");

  std::vector<double> smax(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double mx = 0.0;
    for (const auto& blk : subsample_blocks(n, grid[i]))
      mx = std::max(mx, kpss_statistic(u_plus.segment(blk.lo - 1, blk.hi - blk.lo + 1),
                                       omega_u_dot_v));
    smax[i] = mx;
  }
  MinVolatility out;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto lo = i >= static_cast<std::size_t>(window) ? i - static_cast<std::size_t>(window) : 0;
    const auto hi = std::min(grid.size() - 1, i + static_cast<std::size_t>(window));
    std::vector<double> win(smax.begin() + static_cast<std::ptrdiff_t>(lo),
                            smax.begin() + static_cast<std::ptrdiff_t>(hi + 1));
    const double vol = sample_stddev(win);
    out.trace.push_back({grid[i], smax[i], vol});
    if (vol < best) {
      best = vol;
      out.q_chosen = grid[i];
    }
  }
  return out;
}

/// Default block-size candidates: ~15 evenly spaced integers between
/// ceil(1.5 n^{1/3}) and floor(n/4).
inline std::vector<int> default_q_grid(int n) {
  const int lo = std::max(4, static_cast<int>(std::ceil(1.5 * std::cbrt(static_cast<double>(n)))));
  const int hi = std::max(lo, n / 4);
  std::vector<int> grid;
  const int pts = 15;
  for (int i = 0; i < pts; ++i) {
    const int q = lo + static_cast<int>(std::lround(static_cast<double>(i) *
                                                    (hi - lo) / (pts - 1.0)));
    if (grid.empty() || grid.back() != q) grid.push_back(q);
  }
  return grid;
}

struct KpssResult {
  int q_chosen = 0;
  int M = 0;
  Vec block_stats;
  double max_stat = 0.0;
  double critical = 0.0;
  bool reject = false;
  std::vector<VolatilityRow> volatility_trace;
  double omega_u_dot_v = 0.0;
  double alpha = 0.05;
};

/// Full subsampling cointegration test: endogeneity-corrected residuals,
/// minimum-volatility block size, block statistics, and the union-bound
/// decision max K_i > c_{alpha/M}. The conditional long-run variance is held
/// at its full-sample value across blocks. Deterministic given inputs.
inline KpssResult run_kpss(const GcprFit& fit, const Dataset& data, const LrvSet& lrv,
                           double alpha = 0.05, std::vector<int> q_grid = {},
                           int window = 2, bool include_t1 = false) {
  const Vec u_plus = fm_residuals(fit, data, lrv, include_t1);
  const int n = static_cast<int>(u_plus.size());
  // residuals at rounding level relative to the data are an exact fit
  if (!(lrv.omega_u_dot_v > 0.0) ||
      u_plus.squaredNorm() <= 1e-24 * (data.y.squaredNorm() + 1.0))
    throw DegenerateDataError("degenerate residuals: conditional long-run variance is zero");
  if (q_grid.empty()) q_grid = default_q_grid(n);

  KpssResult res;
  res.alpha = alpha;
  res.omega_u_dot_v = lrv.omega_u_dot_v;
  auto mv = min_volatility_q(u_plus, lrv.omega_u_dot_v, q_grid, window);
  res.q_chosen = mv.q_chosen;
  res.volatility_trace = std::move(mv.trace);
  const auto blocks = subsample_blocks(n, res.q_chosen);
  res.M = static_cast<int>(blocks.size());
  res.block_stats.resize(res.M);
  for (int b = 0; b < res.M; ++b) {
    const auto& blk = blocks[static_cast<std::size_t>(b)];
    res.block_stats[b] =
        kpss_statistic(u_plus.segment(blk.lo - 1, blk.hi - blk.lo + 1), lrv.omega_u_dot_v);
  }
  res.max_stat = res.block_stats.maxCoeff();
  res.critical = critical_value(alpha, res.M);
  res.reject = res.max_stat > res.critical;
  return res;
}

}  // namespace gcpr
