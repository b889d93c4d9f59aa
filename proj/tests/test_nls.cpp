#include "gcpr/nls.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gcpr;

namespace {

Dataset make_dataset(const Vec& y, const Mat& x) {
  Dataset d;
  d.y = y;
  d.x = x;
  for (int t = 1; t <= y.size(); ++t) d.time_labels.push_back(t);
  return d;
}

Mat random_walk(int T, int m, std::uint64_t seed) {
  auto rng = substream(seed, 0xF1);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat x(T, m);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int t = 0; t < T; ++t) {
      acc += normal(rng);
      x(t, i) = acc;
    }
  }
  return x;
}

// Long-double OLS on the raw (unrescaled) design, via normal equations with
// full pivoting. Oracle only; accurate enough at T <= 50 and powers <= 3.
Vec raw_ols_longdouble(const ModelSpec& spec, const Dataset& data, const Vec& theta) {
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const int T = data.length();
  const int d = spec.d();
  const int p = spec.p();
  MatL Z(T, d + p);
  for (int i = 0; i < d; ++i)
    for (int t = 1; t <= T; ++t)
      Z(t - 1, i) = std::pow(static_cast<long double>(t), static_cast<long double>(theta[i]));
  int col = d;
  for (int i = 0; i < spec.m(); ++i)
    for (int j = 1; j <= spec.regressor_orders[static_cast<std::size_t>(i)]; ++j, ++col)
      for (int t = 0; t < T; ++t)
        Z(t, col) = std::pow(static_cast<long double>(data.x(t, i)), static_cast<long double>(j));
  VecL yl = data.y.cast<long double>();
  MatL ztz = Z.transpose() * Z;
  VecL zty = Z.transpose() * yl;
  VecL sol = ztz.fullPivLu().solve(zty);
  Vec out(d + p);
  for (int i = 0; i < d + p; ++i) out[i] = static_cast<double>(sol[i]);
  return out;
}

}  // namespace

TEST_CASE("ols_given_theta exact interpolation") {
  const int T = 12;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0)};
  spec.sample_length = T;
  Vec y(T);
  for (int t = 1; t <= T; ++t) y[t - 1] = 3.0 + 2.0 * t;
  Dataset data = make_dataset(y, Mat(T, 0));
  Vec th(2);
  th << 0.0, 1.0;
  auto r = ols_given_theta(spec, data, th);
  REQUIRE(r.tau[0] == Catch::Approx(3.0).margin(1e-10));
  REQUIRE(r.tau[1] == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(r.rss < 1e-18);
}

TEST_CASE("ols_given_theta against long-double raw-design oracle") {
  const int T = 30;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::free_power()};
  spec.regressor_orders = {2};
  spec.sample_length = T;
  Mat x = random_walk(T, 1, 99);
  auto rng = substream(99, 0x0A);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec y(T);
  for (int t = 0; t < T; ++t)
    y[t] = 1.0 + 0.3 * std::pow(t + 1.0, 2.2) - 0.5 * x(t, 0) + normal(rng);
  Dataset data = make_dataset(y, x);
  Vec th(2);
  th << 0.0, 2.2;
  auto r = ols_given_theta(spec, data, th);
  const Vec oracle = raw_ols_longdouble(spec, data, th);
  REQUIRE(r.tau[0] == Catch::Approx(oracle[0]).margin(1e-8));
  REQUIRE(r.tau[1] == Catch::Approx(oracle[1]).epsilon(1e-8));
  REQUIRE(r.phi[0] == Catch::Approx(oracle[2]).epsilon(1e-8).margin(1e-8));
  REQUIRE(r.phi[1] == Catch::Approx(oracle[3]).epsilon(1e-8).margin(1e-8));
  // orthogonality: residuals orthogonal to every design column
  const auto dm = build_design_matrix(spec, data, th);
  const double bound = 1e-6 * data.y.norm() * dm.Z.norm();
  REQUIRE((dm.Z.transpose() * r.residuals).lpNorm<Eigen::Infinity>() <= bound);
  // residual identity on the raw scale
  Vec fitted = Vec::Zero(T);
  for (int t = 0; t < T; ++t)
    fitted[t] = r.tau[0] + r.tau[1] * std::pow(t + 1.0, 2.2) + r.phi[0] * x(t, 0) +
                r.phi[1] * x(t, 0) * x(t, 0);
  REQUIRE((data.y - fitted - r.residuals).lpNorm<Eigen::Infinity>() <
          1e-8 * (1.0 + data.y.lpNorm<Eigen::Infinity>()));
  REQUIRE(r.rss == Catch::Approx(r.residuals.squaredNorm()).epsilon(1e-10));
}

TEST_CASE("unscaling round-trip property") {
  auto rng = substream(5, 0xB0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> upow(0.1, 3.0);
  for (int rep = 0; rep < 10; ++rep) {
    const int T = 20 + 3 * rep;
    ModelSpec spec;
    spec.trend_terms = {TrendTerm::free_power()};
    spec.regressor_orders = {1};
    spec.sample_length = T;
    Mat x = random_walk(T, 1, 1000 + static_cast<std::uint64_t>(rep));
    Vec y(T);
    for (int t = 0; t < T; ++t) y[t] = normal(rng) + 0.1 * x(t, 0);
    Dataset data = make_dataset(y, x);
    Vec th(1);
    th << upow(rng);
    auto r = ols_given_theta(spec, data, th);
    const Vec oracle = raw_ols_longdouble(spec, data, th);
    for (int i = 0; i < 2; ++i) {
      const double got = i == 0 ? r.tau[0] : r.phi[0];
      REQUIRE(got == Catch::Approx(oracle[i]).epsilon(1e-8).margin(1e-10));
    }
  }
}

TEST_CASE("rank deficiency detected") {
  const int T = 20;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power(), TrendTerm::free_power()};
  spec.sample_length = T;
  Dataset data = make_dataset(Vec::Random(T), Mat(T, 0));
  Vec th(2);
  th << 1.0, 1.0;  // duplicate trend columns
  REQUIRE_THROWS_AS(ols_given_theta(spec, data, th), RankDeficientError);
}

TEST_CASE("fit_gcpr recovers a noise-free power") {
  const int T = 100;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power()};
  spec.sample_length = T;
  Vec y(T);
  for (int t = 1; t <= T; ++t) y[t - 1] = std::pow(t, 1.7);
  Dataset data = make_dataset(y, Mat(T, 0));
  auto fit = fit_gcpr(spec, data);
  REQUIRE(fit.converged);
  REQUIRE(fit.params.theta[0] == Catch::Approx(1.7).margin(1e-4));
  REQUIRE(fit.rss <= 1e-12 * y.squaredNorm());
  REQUIRE(fit.params.tau[0] == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("fit_gcpr concentration identity and profile optimality") {
  const int T = 80;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                      TrendTerm::free_power()};
  spec.regressor_orders = {1};
  spec.sample_length = T;
  Mat x = random_walk(T, 1, 31);
  auto rng = substream(31, 0xCC);
  std::normal_distribution<double> normal(0.0, 0.3);
  Vec y(T);
  for (int t = 1; t <= T; ++t)
    y[t - 1] = 2.0 + 0.1 * t + 3e-3 * std::pow(t, 1.8) + 0.4 * x(t - 1, 0) + normal(rng);
  Dataset data = make_dataset(y, x);
  GridSpec grid;
  grid.record_profile = true;
  auto fit = fit_gcpr(spec, data, grid);

  // concentration identity: same code path as ols_given_theta at theta_hat
  auto refit = ols_given_theta(spec, data, fit.params.theta);
  REQUIRE(refit.tau == fit.params.tau);
  REQUIRE(refit.phi == fit.params.phi);
  REQUIRE(refit.rss == fit.rss);

  // profile optimality: refined value never exceeds any evaluated grid point
  REQUIRE(fit.theta_profile.has_value());
  double grid_min = std::numeric_limits<double>::infinity();
  for (auto [th, rss] : *fit.theta_profile) grid_min = std::min(grid_min, rss);
  REQUIRE(fit.profile_rss <= grid_min);
  // the two RSS paths agree
  REQUIRE(fit.rss == Catch::Approx(fit.profile_rss).epsilon(1e-10));
  // refinement stayed inside its bracketing cell
  REQUIRE(fit.params.theta[2] >= fit.bracket_lo);
  REQUIRE(fit.params.theta[2] <= fit.bracket_hi);
}

TEST_CASE("fit_gcpr equivariance: scaling y leaves the argmin alone") {
  const int T = 60;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::free_power()};
  spec.sample_length = T;
  auto rng = substream(77, 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec y(T);
  for (int t = 1; t <= T; ++t) y[t - 1] = 1.0 + 0.02 * std::pow(t, 2.1) + normal(rng);
  Dataset d1 = make_dataset(y, Mat(T, 0));
  Dataset d2 = make_dataset(3.7 * y, Mat(T, 0));
  GridSpec grid;
  grid.record_profile = true;
  auto f1 = fit_gcpr(spec, d1, grid);
  auto f2 = fit_gcpr(spec, d2, grid);
  REQUIRE(f1.params.theta[1] == Catch::Approx(f2.params.theta[1]).margin(1e-9));
  REQUIRE(f2.params.tau[1] == Catch::Approx(3.7 * f1.params.tau[1]).epsilon(1e-9));
  // profiles scale by c^2, argmin position identical
  std::size_t am1 = 0, am2 = 0;
  for (std::size_t i = 0; i < f1.theta_profile->size(); ++i) {
    if ((*f1.theta_profile)[i].second < (*f1.theta_profile)[am1].second) am1 = i;
    if ((*f2.theta_profile)[i].second < (*f2.theta_profile)[am2].second) am2 = i;
  }
  REQUIRE(am1 == am2);
}

TEST_CASE("fit_gcpr seeded recovery of a quadratic trend power") {
  // DGP: y_t = 7 + 0.05 t - 5e-4 t^2 + u_t, u ~ N(0, 0.01), T = 500.
  const int T = 500;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                      TrendTerm::free_power(1.5, 2.5)};
  spec.sample_length = T;
  int hits = 0;
  const int runs = 200;
  for (int rep = 0; rep < runs; ++rep) {
    auto rng = substream(2024, static_cast<std::uint64_t>(rep));
    std::normal_distribution<double> normal(0.0, 0.1);
    Vec y(T);
    for (int t = 1; t <= T; ++t)
      y[t - 1] = 7.0 + 0.05 * t - 5e-4 * t * t + normal(rng);
    Dataset data = make_dataset(y, Mat(T, 0));
    auto fit = fit_gcpr(spec, data);
    const double th = fit.params.theta[2];
    if (th >= 1.95 && th <= 2.05) ++hits;
  }
  REQUIRE(hits >= 198);  // >= 99% of 200 seeded runs
}

TEST_CASE("fit_gcpr error paths") {
  const int T = 30;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power()};
  spec.sample_length = T;
  Dataset data = make_dataset(Vec::Random(T), Mat(T, 0));
  GridSpec grid;
  grid.points = std::vector<double>{};  // empty explicit grid
  REQUIRE_THROWS_AS(fit_gcpr(spec, data, grid), OptimizerError);
  GridSpec bad;
  bad.points = std::vector<double>{12.0};  // outside the bracket
  REQUIRE_THROWS_AS(fit_gcpr(spec, data, bad), std::invalid_argument);
}

TEST_CASE("multistart recovers two powers") {
  const int T = 120;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power(), TrendTerm::free_power()};
  spec.sample_length = T;
  Vec y(T);
  for (int t = 1; t <= T; ++t) y[t - 1] = std::pow(t, 0.5) + std::pow(t, 2.0);
  Dataset data = make_dataset(y, Mat(T, 0));
  auto fit = fit_gcpr_multistart(spec, data, 20);
  std::vector<double> th{fit.params.theta[0], fit.params.theta[1]};
  std::sort(th.begin(), th.end());
  REQUIRE(th[0] == Catch::Approx(0.5).margin(1e-3));
  REQUIRE(th[1] == Catch::Approx(2.0).margin(1e-3));
}

TEST_CASE("multistart respects an infeasible true gap") {
  const int T = 120;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power(), TrendTerm::free_power()};
  spec.min_gap = 3.0;  // true gap is 1.5: the truth is infeasible
  spec.sample_length = T;
  Vec y(T);
  for (int t = 1; t <= T; ++t) y[t - 1] = std::pow(t, 0.5) + std::pow(t, 2.0);
  Dataset data = make_dataset(y, Mat(T, 0));
  auto fit = fit_gcpr_multistart(spec, data, 20);
  std::vector<double> th{fit.params.theta[0], fit.params.theta[1]};
  std::sort(th.begin(), th.end());
  REQUIRE(th[1] - th[0] >= 3.0 - 1e-9);
}

TEST_CASE("multistart beats a dense grid oracle") {
  const int T = 60;
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power(), TrendTerm::free_power()};
  spec.sample_length = T;
  auto rng = substream(12, 9);
  std::normal_distribution<double> normal(0.0, 0.5);
  Vec y(T);
  for (int t = 1; t <= T; ++t)
    y[t - 1] = 2.0 * std::pow(t, 0.7) - 0.01 * std::pow(t, 1.9) + normal(rng);
  Dataset data = make_dataset(y, Mat(T, 0));
  auto fit = fit_gcpr_multistart(spec, data, 20);

  ConcentratedRss f(spec, data);
  double grid_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      Vec v(2);
      v << 0.05 + i * (9.95 / 49.0), 0.05 + j * (9.95 / 49.0);
      grid_min = std::min(grid_min, f(v));
    }
  }
  REQUIRE(fit.profile_rss <= grid_min + 1e-8);
}

TEST_CASE("stochastic power profile") {
  const int T = 90;
  auto rng = substream(61, 2);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat x(T, 1);
  double acc = 1.0;
  for (int t = 0; t < T; ++t) {
    acc += std::abs(normal(rng)) + 0.05;  // strictly positive, increasing
    x(t, 0) = acc;
  }
  Vec y(T);
  for (int t = 0; t < T; ++t) y[t] = 1.0 + x(t, 0) * x(t, 0);
  Dataset data = make_dataset(y, x);

  SECTION("exact power has zero RSS") {
    auto prof = rss_profile_stochastic_power(data, {1.5, 2.0, 2.5});
    REQUIRE_FALSE(prof.used_abs);
    REQUIRE(prof.curve[1].second <= 1e-10 * y.squaredNorm());
    REQUIRE(prof.curve[0].second > prof.curve[1].second);
    REQUIRE(prof.curve[2].second > prof.curve[1].second);
  }
  SECTION("per-point OLS oracle") {
    auto prof = rss_profile_stochastic_power(data, {1.4, 2.6, 5.0});
    for (auto [th, rss] : prof.curve) {
      Mat Z(T, 4);
      for (int t = 0; t < T; ++t) {
        Z(t, 0) = 1.0;
        Z(t, 1) = t + 1.0;
        Z(t, 2) = x(t, 0);
        Z(t, 3) = std::pow(x(t, 0), th);
      }
      // column scaling as in the implementation contract
      for (int c = 0; c < 4; ++c) Z.col(c) /= Z.col(c).norm();
      const Vec beta = Z.colPivHouseholderQr().solve(y);
      const double oracle = (y - Z * beta).squaredNorm();
      REQUIRE(rss == Catch::Approx(oracle).epsilon(1e-10).margin(1e-10));
    }
  }
  SECTION("neighbourhood of one rejected") {
    REQUIRE_THROWS_AS(rss_profile_stochastic_power(data, {1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(rss_profile_stochastic_power(data, {0.99}), std::invalid_argument);
  }
  SECTION("negative regressor flagged") {
    Mat xneg = x;
    xneg(0, 0) = -1.0;
    Dataset d2 = make_dataset(y, xneg);
    auto prof = rss_profile_stochastic_power(d2, {2.0});
    REQUIRE(prof.used_abs);
  }
}

TEST_CASE("detrend") {
  SECTION("exact line maps to zero") {
    Vec s(6);
    for (int t = 1; t <= 6; ++t) s[t - 1] = 5.0 + 3.0 * t;
    REQUIRE(detrend(s).lpNorm<Eigen::Infinity>() < 1e-12);
  }
  SECTION("quadratic on T=5 matches the hand projection") {
    Vec s(5);
    for (int t = 1; t <= 5; ++t) s[t - 1] = t * t;
    // OLS of (1,4,9,16,25) on [1,t]: slope = 6, intercept = -7 -> residuals
    Vec expect(5);
    for (int t = 1; t <= 5; ++t) expect[t - 1] = t * t - (-7.0 + 6.0 * t);
    REQUIRE((detrend(s) - expect).lpNorm<Eigen::Infinity>() < 1e-10);
  }
  SECTION("residual mean vanishes") {
    auto rng = substream(3, 3);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec s(40);
    for (int i = 0; i < 40; ++i) s[i] = normal(rng);
    const Vec r = detrend(s);
    REQUIRE(std::abs(r.mean()) < 1e-12);
    double dot_t = 0.0;
    for (int i = 0; i < 40; ++i) dot_t += (i + 1.0) * r[i];
    REQUIRE(std::abs(dot_t) < 1e-8 * s.norm() * 40.0);
  }
}
