#include "gcpr/fmols.hpp"

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

struct Fixture {
  ModelSpec spec;
  Dataset data;
  Vec theta;
};

Fixture quadratic_fixture(int T, std::uint64_t seed) {
  Fixture f;
  f.spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0)};
  f.spec.regressor_orders = {2};
  f.spec.sample_length = T;
  auto rng = substream(seed, 0xF0);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat x(T, 1);
  Vec y(T);
  double acc = 0.0;
  for (int t = 0; t < T; ++t) {
    acc += normal(rng);
    x(t, 0) = acc;
    y[t] = 1.0 + 0.05 * (t + 1) + 2.0 * acc - 0.1 * acc * acc + normal(rng);
  }
  f.data = make_dataset(y, x);
  f.theta = Vec(2);
  f.theta << 0.0, 1.0;
  return f;
}

}  // namespace

TEST_CASE("no-correction identity") {
  auto f = quadratic_fixture(20, 5);
  LrvSet lrv;
  lrv.omega = Mat::Identity(2, 2);   // omega_uv = 0
  lrv.delta = Mat::Zero(2, 2);       // delta_vu = 0
  lrv.delta(1, 1) = 1.0;             // keep delta_vv harmless
  lrv.omega_u_dot_v = 1.0;
  auto fm = fmols_fit(f.spec, f.data, f.theta, lrv);
  // plain OLS on the same t range (2..T)
  ModelSpec sub = f.spec;
  sub.sample_length = 19;
  Dataset tail;
  tail.y = f.data.y.tail(19);
  tail.x = f.data.x.bottomRows(19);
  for (int t = 2; t <= 20; ++t) tail.time_labels.push_back(t);
  // the design uses t = 2..T as rows; rebuild raw OLS directly
  Mat Z(19, 4);
  for (int t = 2; t <= 20; ++t) {
    Z(t - 2, 0) = 1.0;
    Z(t - 2, 1) = t;
    Z(t - 2, 2) = f.data.x(t - 1, 0);
    Z(t - 2, 3) = f.data.x(t - 1, 0) * f.data.x(t - 1, 0);
  }
  const Vec beta = (Z.transpose() * Z).ldlt().solve(Z.transpose() * tail.y);
  REQUIRE(fm.tau_plus[0] == Catch::Approx(beta[0]).epsilon(1e-10).margin(1e-10));
  REQUIRE(fm.tau_plus[1] == Catch::Approx(beta[1]).epsilon(1e-10));
  REQUIRE(fm.phi_plus[0] == Catch::Approx(beta[2]).epsilon(1e-10));
  REQUIRE(fm.phi_plus[1] == Catch::Approx(beta[3]).epsilon(1e-10).margin(1e-12));
  REQUIRE(fm.bias_correction.lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("transcription oracle with hand-specified long-run covariances") {
  auto f = quadratic_fixture(20, 9);
  LrvSet lrv;
  lrv.omega.resize(2, 2);
  lrv.omega << 1.0, 0.3, 0.3, 1.5;
  lrv.delta.resize(2, 2);
  lrv.delta << 0.8, 0.2, 0.4, 1.1;
  lrv.omega_u_dot_v = 1.0 - 0.3 * 0.3 / 1.5;
  auto fm = fmols_fit(f.spec, f.data, f.theta, lrv);

  // scripted formula: y+ = y - (0.3/1.5) dx; delta_plus = 0.4 - 1.1*0.3/1.5
  const int T = 20;
  Mat Z(T - 1, 4);
  Vec yp(T - 1);
  for (int t = 1; t < T; ++t) {
    const double dx = f.data.x(t, 0) - f.data.x(t - 1, 0);
    yp[t - 1] = f.data.y[t] - 0.3 / 1.5 * dx;
    Z(t - 1, 0) = 1.0;
    Z(t - 1, 1) = t + 1;
    Z(t - 1, 2) = f.data.x(t, 0);
    Z(t - 1, 3) = f.data.x(t, 0) * f.data.x(t, 0);
  }
  const double delta_plus = 0.4 - 1.1 * 0.3 / 1.5;
  Vec a_star = Vec::Zero(4);
  double s0 = 0.0, s1 = 0.0;
  for (int t = 1; t < T; ++t) {
    s0 += 1.0;
    s1 += f.data.x(t, 0);
  }
  a_star[2] = delta_plus * 1.0 * s0;
  a_star[3] = delta_plus * 2.0 * s1;
  const Vec oracle =
      (Z.transpose() * Z).fullPivLu().solve(Z.transpose() * yp - a_star);
  REQUIRE(fm.tau_plus[0] == Catch::Approx(oracle[0]).epsilon(1e-8).margin(1e-8));
  REQUIRE(fm.tau_plus[1] == Catch::Approx(oracle[1]).epsilon(1e-8));
  REQUIRE(fm.phi_plus[0] == Catch::Approx(oracle[2]).epsilon(1e-8));
  REQUIRE(fm.phi_plus[1] == Catch::Approx(oracle[3]).epsilon(1e-8).margin(1e-10));

  // t statistic transcription
  const Mat ztz_inv = (Z.transpose() * Z).inverse();
  const double t_oracle =
      oracle[3] / std::sqrt(lrv.omega_u_dot_v * ztz_inv(3, 3));
  REQUIRE(fmols_t_stat_phi(fm, lrv, 1) == Catch::Approx(t_oracle).epsilon(1e-6));
}

TEST_CASE("zero coefficient gives zero t statistic") {
  auto f = quadratic_fixture(30, 11);
  LrvSet lrv;
  lrv.omega = Mat::Identity(2, 2);
  lrv.delta = Mat::Zero(2, 2);
  lrv.omega_u_dot_v = 1.0;
  auto fm = fmols_fit(f.spec, f.data, f.theta, lrv);
  fm.phi_plus[1] = 0.0;  // inject
  REQUIRE(fmols_t_stat_phi(fm, lrv, 1) == 0.0);
}

TEST_CASE("supplied theta equal to the estimate gives identical output") {
  auto f = quadratic_fixture(60, 13);
  // first-stage fit with a free power, then feed its estimate back
  ModelSpec free_spec = f.spec;
  free_spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::free_power()};
  auto fit = fit_gcpr(free_spec, f.data, GridSpec{});
  auto lrv = estimate_lrv(residual_vector_series(fit, f.data));
  auto fm_est = fmols_fit(free_spec, f.data, fit.params.theta, lrv, true);
  auto fm_sup = fmols_fit(free_spec, f.data, fit.params.theta, lrv, false);
  REQUIRE(fm_est.tau_plus == fm_sup.tau_plus);
  REQUIRE(fm_est.phi_plus == fm_sup.phi_plus);
  REQUIRE(fm_est.theta_estimated);
  REQUIRE_FALSE(fm_sup.theta_estimated);
}

TEST_CASE("fmols input validation") {
  auto f = quadratic_fixture(20, 15);
  LrvSet lrv;
  lrv.omega = Mat::Zero(2, 2);  // singular omega_vv
  lrv.delta = Mat::Zero(2, 2);
  REQUIRE_THROWS_AS(fmols_fit(f.spec, f.data, f.theta, lrv), RankDeficientError);
  ModelSpec no_reg;
  no_reg.trend_terms = {TrendTerm::fixed_power(0.0)};
  no_reg.sample_length = 20;
  LrvSet ok;
  ok.omega = Mat::Identity(2, 2);
  ok.delta = Mat::Zero(2, 2);
  Dataset d0 = f.data;
  d0.x = Mat(20, 0);
  REQUIRE_THROWS_AS(fmols_fit(no_reg, d0, Vec::Zero(1), ok), std::invalid_argument);
}
