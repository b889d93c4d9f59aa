#pragma once

#include "gcpr/common.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gcpr {

/// One deterministic trend term t^theta. The power is either fixed by the
/// model or estimated ("free"), in which case an optional search bracket
/// narrows the model-wide bounds.
struct TrendTerm {
  bool fixed = true;
  double power = 0.0;  // exponent when fixed
  double bracket_lo = std::numeric_limits<double>::quiet_NaN();
  double bracket_hi = std::numeric_limits<double>::quiet_NaN();

  static TrendTerm fixed_power(double p) {
    TrendTerm t;
    t.fixed = true;
    t.power = p;
    return t;
  }
  static TrendTerm free_power() {
    TrendTerm t;
    t.fixed = false;
    return t;
  }
  static TrendTerm free_power(double lo, double hi) {
    TrendTerm t;
    t.fixed = false;
    t.bracket_lo = lo;
    t.bracket_hi = hi;
    return t;
  }
};

/// Model description: which trend powers exist (fixed or free), the integer
/// power orders of each integrated regressor, and the parameter-space bounds
/// for free powers. theta_lower must stay above -1/2; consecutive powers must
/// keep a gap of at least min_gap.
struct ModelSpec {
  std::vector<TrendTerm> trend_terms;
  std::vector<int> regressor_orders;
  int sample_length = 0;
  double theta_lower = 0.05;
  double theta_upper = 10.0;
  double min_gap = 0.05;

  int d() const { return static_cast<int>(trend_terms.size()); }
  int m() const { return static_cast<int>(regressor_orders.size()); }
  int p() const {
    int s = 0;
    for (int pi : regressor_orders) s += pi;
    return s;
  }
  int d_free() const {
    int s = 0;
    for (const auto& t : trend_terms) s += t.fixed ? 0 : 1;
    return s;
  }
  std::vector<int> free_indices() const {
    std::vector<int> idx;
    for (int i = 0; i < d(); ++i)
      if (!trend_terms[static_cast<std::size_t>(i)].fixed) idx.push_back(i);
    return idx;
  }
  std::vector<double> fixed_powers() const {
    std::vector<double> v;
    for (const auto& t : trend_terms)
      if (t.fixed) v.push_back(t.power);
    return v;
  }

  /// Effective search bracket for free term i, clipped to the model bounds.
  std::pair<double, double> free_bracket(int i) const {
    const auto& t = trend_terms[static_cast<std::size_t>(i)];
    double lo = std::isnan(t.bracket_lo) ? theta_lower : std::max(t.bracket_lo, theta_lower);
    double hi = std::isnan(t.bracket_hi) ? theta_upper : std::min(t.bracket_hi, theta_upper);
    return {lo, hi};
  }

  /// Fill the free slots of the full power vector with the given values.
  Vec resolve_theta(const Vec& free_values) const {
    const auto idx = free_indices();
    if (free_values.size() != static_cast<Eigen::Index>(idx.size()))
      throw std::invalid_argument("resolve_theta: wrong number of free values");
    Vec theta(d());
    for (int i = 0; i < d(); ++i) theta[i] = trend_terms[static_cast<std::size_t>(i)].power;
    for (std::size_t k = 0; k < idx.size(); ++k)
      theta[idx[k]] = free_values[static_cast<Eigen::Index>(k)];
    return theta;
  }

  void validate() const {
    if (d() == 0 && m() == 0)
      throw std::invalid_argument("model needs at least one trend or regressor");
    for (int pi : regressor_orders)
      if (pi < 1) throw std::invalid_argument("regressor order must be >= 1");
    if (!(theta_lower > -0.5))
      throw std::invalid_argument("theta_lower must exceed -1/2");
    if (!(theta_upper >= theta_lower))
      throw std::invalid_argument("theta_upper below theta_lower");
    if (!(min_gap > 0.0)) throw std::invalid_argument("min_gap must be positive");
    if (sample_length < d() + p() + 2)
      throw std::invalid_argument("sample too short: T >= d + p + 2 required");
    // Fixed powers must respect the gap among themselves.
    auto fp = fixed_powers();
    std::sort(fp.begin(), fp.end());
    for (std::size_t i = 1; i < fp.size(); ++i)
      if (fp[i] - fp[i - 1] < min_gap)
        throw std::invalid_argument("fixed trend powers closer than min_gap");
    for (int i = 0; i < d(); ++i) {
      if (!trend_terms[static_cast<std::size_t>(i)].fixed) {
        auto [lo, hi] = free_bracket(i);
        if (!(lo <= hi))
          throw std::invalid_argument("empty search bracket for a free power");
      }
    }
  }
};

/// Full parameter vector: trend powers, trend coefficients, polynomial
/// coefficients of the integrated regressors.
struct ParamVector {
  Vec theta;
  Vec tau;
  Vec phi;
};

/// Observed series. The time index is renumbered 1..T internally; the
/// original labels are retained only for reporting.
struct Dataset {
  std::vector<double> time_labels;
  Vec y;
  Mat x;  // T x m

  int length() const { return static_cast<int>(y.size()); }
  int n_regressors() const { return static_cast<int>(x.cols()); }

  void validate() const {
    if (x.rows() > 0 && x.rows() != y.size())
      throw std::invalid_argument("y and x lengths differ");
    if (!y.allFinite() || !x.allFinite())
      throw std::invalid_argument("dataset contains non-finite values");
  }
};

struct ThetaReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Check a full power vector against the parameter-space constraints:
/// lower bound on the first power, minimum gap between consecutive powers,
/// upper bound on the last. Total function: never throws.
inline ThetaReport validate_theta(const ModelSpec& spec, const Vec& theta) {
  ThetaReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  const int d = static_cast<int>(theta.size());
  if (d == 0) return rep;
  for (int i = 0; i < d; ++i)
    if (!std::isfinite(theta[i])) fail("theta[" + std::to_string(i + 1) + "] not finite");
  if (!rep.ok) return rep;
  if (theta[0] < spec.theta_lower)
    fail("lower bound: theta_1 = " + std::to_string(theta[0]) + " < " +
         std::to_string(spec.theta_lower));
  for (int j = 1; j < d; ++j) {
    if (theta[j] - theta[j - 1] < spec.min_gap)
      fail("gap constraint: theta_" + std::to_string(j + 1) + " - theta_" +
           std::to_string(j) + " < " + std::to_string(spec.min_gap));
  }
  if (theta[d - 1] > spec.theta_upper)
    fail("upper bound: theta_" + std::to_string(d) + " = " +
         std::to_string(theta[d - 1]) + " > " + std::to_string(spec.theta_upper));
  return rep;
}

/// Closed feasible intervals for a single free power given the fixed powers:
/// the bracket minus an open min_gap neighbourhood around every fixed power.
inline std::vector<std::pair<double, double>> feasible_intervals(const ModelSpec& spec,
                                                                 int free_term) {
  auto [lo, hi] = spec.free_bracket(free_term);
  std::vector<std::pair<double, double>> iv{{lo, hi}};
  auto fp = spec.fixed_powers();
  std::sort(fp.begin(), fp.end());
  for (double c : fp) {
    std::vector<std::pair<double, double>> next;
    for (auto [a, b] : iv) {
      const double gap_lo = c - spec.min_gap;
      const double gap_hi = c + spec.min_gap;
      if (b < gap_lo + 0.0 || a > gap_hi - 0.0) {
        next.emplace_back(a, b);
        continue;
      }
      if (a <= gap_lo) next.emplace_back(a, std::min(b, gap_lo));
      if (b >= gap_hi) next.emplace_back(std::max(a, gap_hi), b);
    }
    iv = std::move(next);
  }
  std::vector<std::pair<double, double>> out;
  for (auto [a, b] : iv)
    if (b >= a) out.emplace_back(a, b);
  return out;
}

/// Feasibility of a set of free power values: each value inside its bracket,
/// and the combined (fixed + free) sorted powers keep gaps >= min_gap.
inline bool theta_feasible(const ModelSpec& spec, const Vec& free_values) {
  const auto idx = spec.free_indices();
  if (free_values.size() != static_cast<Eigen::Index>(idx.size())) return false;
  std::vector<double> all = spec.fixed_powers();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double v = free_values[static_cast<Eigen::Index>(k)];
    if (!std::isfinite(v)) return false;
    auto [lo, hi] = spec.free_bracket(idx[k]);
    if (v < lo || v > hi) return false;
    all.push_back(v);
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i] - all[i - 1] < spec.min_gap) return false;
  return true;
}

}  // namespace gcpr
