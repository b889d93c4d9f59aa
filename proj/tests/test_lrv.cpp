#include "gcpr/lrv.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gcpr;

namespace {

Mat random_series(int n, int k, std::uint64_t seed) {
  auto rng = substream(seed, 0x77);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat V(n, k);
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < k; ++j) V(t, j) = normal(rng);
  return V;
}

// Literal double-sum transcription of the estimator definitions:
//   sigma = n^{-1} sum_t V_t V_t'
//   delta = n^{-1} sum_t sum_{s<=t} k(|t-s|/b) V_s V_t'
//   omega = n^{-1} sum_t sum_s k(|t-s|/b) V_t V_s'
struct BruteLrv {
  Mat sigma, delta, omega;
};

BruteLrv brute_force_lrv(const Mat& V, Kernel kern, double b) {
  const int n = static_cast<int>(V.rows());
  const int k = static_cast<int>(V.cols());
  BruteLrv out;
  out.sigma = Mat::Zero(k, k);
  out.delta = Mat::Zero(k, k);
  out.omega = Mat::Zero(k, k);
  for (int t = 0; t < n; ++t) {
    out.sigma += V.row(t).transpose() * V.row(t);
    for (int s = 0; s < n; ++s) {
      const double w = kernel_weight(kern, std::abs(t - s) / b);
      out.omega += w * V.row(t).transpose() * V.row(s);
      if (s <= t) out.delta += w * V.row(s).transpose() * V.row(t);
    }
  }
  out.sigma /= n;
  out.delta /= n;
  out.omega /= n;
  return out;
}

}  // namespace

TEST_CASE("kernel weights") {
  REQUIRE(kernel_weight(Kernel::Bartlett, 0.0) == 1.0);
  REQUIRE(kernel_weight(Kernel::Bartlett, 1.0) == 0.0);
  REQUIRE(kernel_weight(Kernel::Bartlett, 2.0) == 0.0);
  REQUIRE(kernel_weight(Kernel::Bartlett, 0.25) == Catch::Approx(0.75));
  REQUIRE(kernel_weight(Kernel::Parzen, 0.0) == 1.0);
  REQUIRE(kernel_weight(Kernel::Parzen, 0.25) == Catch::Approx(1 - 6 * 0.0625 + 6 * 0.015625));
  REQUIRE(kernel_weight(Kernel::Parzen, 0.75) == Catch::Approx(2 * std::pow(0.25, 3)));
  REQUIRE(kernel_weight(Kernel::Parzen, 1.5) == 0.0);
  REQUIRE(kernel_weight(Kernel::QuadraticSpectral, 0.0) == 1.0);
  // series expansion and closed form agree across the switch point
  const double lo = kernel_weight(Kernel::QuadraticSpectral, 9.9e-5);
  const double hi = kernel_weight(Kernel::QuadraticSpectral, 1.01e-4);
  REQUIRE(std::abs(lo - hi) < 1e-8);
}

TEST_CASE("residual vector series") {
  GcprFit fit;
  fit.residuals = Vec::Zero(3);
  fit.residuals << 0.5, -1.0, 2.0;
  Dataset data;
  data.y = Vec::Zero(3);
  data.x.resize(3, 1);
  data.x << 1.0, 3.0, 6.0;
  const Mat V = residual_vector_series(fit, data);
  REQUIRE(V.rows() == 2);
  REQUIRE(V(0, 0) == -1.0);
  REQUIRE(V(0, 1) == 2.0);  // 3 - 1
  REQUIRE(V(1, 1) == 3.0);  // 6 - 3
  const Mat V1 = residual_vector_series(fit, data, true);
  REQUIRE(V1.rows() == 3);
  REQUIRE(V1(0, 1) == 1.0);  // x_0 = 0 convention
}

TEST_CASE("bartlett bandwidth 1 keeps only the lag-0 term") {
  const Mat V = random_series(64, 2, 3);
  auto lrv = estimate_lrv(V, Kernel::Bartlett, 1.0);
  REQUIRE((lrv.omega - lrv.sigma).lpNorm<Eigen::Infinity>() == 0.0);
  REQUIRE((lrv.delta - lrv.sigma).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("brute-force double-sum equivalence") {
  for (auto kern : {Kernel::Bartlett, Kernel::Parzen, Kernel::QuadraticSpectral}) {
    for (double b : {1.0, 3.0, 5.5}) {
      const Mat V = random_series(12, 2, 11 + static_cast<std::uint64_t>(b * 10));
      auto lrv = estimate_lrv(V, kern, b);
      auto oracle = brute_force_lrv(V, kern, b);
      const double tol = 1e-12 * (1.0 + oracle.omega.lpNorm<Eigen::Infinity>());
      REQUIRE((lrv.sigma - oracle.sigma).lpNorm<Eigen::Infinity>() < tol);
      REQUIRE((lrv.delta - oracle.delta).lpNorm<Eigen::Infinity>() < tol);
      REQUIRE((lrv.omega - oracle.omega).lpNorm<Eigen::Infinity>() < tol);
    }
  }
  // out-of-range bandwidths are clamped to n/2 and match the double sum there
  const Mat V = random_series(12, 2, 321);
  auto lrv = estimate_lrv(V, Kernel::Bartlett, 100.0);
  auto oracle = brute_force_lrv(V, Kernel::Bartlett, 6.0);
  REQUIRE(lrv.bandwidth_truncated);
  REQUIRE((lrv.delta - oracle.delta).lpNorm<Eigen::Infinity>() <
          1e-12 * (1.0 + oracle.omega.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("identities hold exactly as computed") {
  const Mat V = random_series(40, 3, 17);
  auto lrv = estimate_lrv(V, Kernel::Bartlett, 5.0);
  REQUIRE((lrv.omega - (lrv.delta + lrv.delta.transpose() - lrv.sigma))
              .lpNorm<Eigen::Infinity>() == 0.0);
  REQUIRE((lrv.delta_minus - (lrv.sigma - lrv.delta.transpose()))
              .lpNorm<Eigen::Infinity>() == 0.0);
  REQUIRE((lrv.omega - lrv.omega.transpose()).lpNorm<Eigen::Infinity>() < 1e-12);
  // Bartlett long-run covariance is positive semidefinite
  Eigen::SelfAdjointEigenSolver<Mat> es(lrv.omega);
  REQUIRE(es.eigenvalues().minCoeff() >= -1e-10 * lrv.omega.trace());
  REQUIRE(lrv.omega_u_dot_v >= -1e-10);
}

TEST_CASE("one-sided estimator orientation") {
  // v leads u by one period: E(u_t v_{t+1}) = 1, E(v_t u_{t+1}) = 0.
  // delta = sum_{h>=0} E(V_t V_{t+h}') puts that mass in the (u, v) entry.
  const int n = 200000;
  auto rng = substream(23, 5);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat V(n, 2);
  double prev = normal(rng);
  for (int t = 0; t < n; ++t) {
    const double e = normal(rng);
    V(t, 0) = e;     // u_t = e_t
    V(t, 1) = prev;  // v_t = e_{t-1}
    prev = e;
  }
  auto lrv = estimate_lrv(V, Kernel::Bartlett, 4.0);
  const double w1 = kernel_weight(Kernel::Bartlett, 0.25);
  REQUIRE(lrv.delta(0, 1) == Catch::Approx(w1).margin(0.02));  // E(u_t v_{t+1}) weighted
  REQUIRE(lrv.delta(1, 0) == Catch::Approx(0.0).margin(0.02));
  // delta_minus_vu = -sum_{h>=1} E(u_t v_{t+h}): here about -w1
  REQUIRE(lrv.delta_minus(1, 0) == Catch::Approx(-w1).margin(0.02));
  REQUIRE(lrv.delta_minus(0, 1) == Catch::Approx(0.0).margin(0.02));
}

TEST_CASE("AR(1) long-run variance within 10%") {
  const int n = 100000;
  auto rng = substream(29, 7);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat V(n, 1);
  double u = 0.0;
  for (int t = 0; t < n; ++t) {
    u = 0.5 * u + normal(rng);
    V(t, 0) = u;
  }
  auto lrv = estimate_lrv(V, Kernel::Bartlett, std::cbrt(static_cast<double>(n)));
  REQUIRE(lrv.omega(0, 0) == Catch::Approx(4.0).epsilon(0.10));
}

TEST_CASE("degenerate all-zero residual column") {
  Mat V = random_series(50, 2, 31);
  V.col(0).setZero();  // zero residuals, nonzero regressor differences
  auto lrv = estimate_lrv(V, Kernel::Bartlett, 3.0);
  REQUIRE(lrv.sigma.row(0).lpNorm<Eigen::Infinity>() == 0.0);
  REQUIRE(lrv.omega.row(0).lpNorm<Eigen::Infinity>() == 0.0);
  REQUIRE(lrv.omega_u_dot_v == 0.0);
}

TEST_CASE("andrews bandwidth") {
  SECTION("iid series floors at 1") {
    const Mat V = random_series(400, 1, 41);
    const double b = andrews_bandwidth(V, Kernel::Bartlett);
    REQUIRE(b >= 1.0);
    REQUIRE(b < 4.0);  // near-zero fitted autocorrelation
  }
  SECTION("single AR(1) column matches the hand formula") {
    const int n = 200;
    auto rng = substream(43, 8);
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat V(n, 1);
    double u = 0.0;
    for (int t = 0; t < n; ++t) {
      u = 0.5 * u + normal(rng);
      V(t, 0) = u;
    }
    // hand transcription with the fitted rho and innovation variance
    double s01 = 0.0, s00 = 0.0;
    for (int t = 1; t < n; ++t) {
      s01 += V(t, 0) * V(t - 1, 0);
      s00 += V(t - 1, 0) * V(t - 1, 0);
    }
    const double rho = s01 / s00;
    double sse = 0.0;
    for (int t = 1; t < n; ++t) sse += std::pow(V(t, 0) - rho * V(t - 1, 0), 2);
    const double s2 = sse / (n - 1);
    const double a1 = 4.0 * rho * rho * s2 * s2 /
                      (std::pow(1 - rho, 6) * std::pow(1 + rho, 2)) /
                      (s2 * s2 / std::pow(1 - rho, 4));
    const double expect = std::max(1.0, 1.1447 * std::cbrt(a1 * n));
    REQUIRE(andrews_bandwidth(V, Kernel::Bartlett) == Catch::Approx(expect).epsilon(1e-10));
  }
  SECTION("two-column pooled formula") {
    const int n = 300;
    auto rng = substream(47, 9);
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat V(n, 2);
    double a = 0.0, b2 = 0.0;
    for (int t = 0; t < n; ++t) {
      a = 0.6 * a + normal(rng);
      b2 = -0.2 * b2 + normal(rng);
      V(t, 0) = a;
      V(t, 1) = 2.0 * b2;
    }
    double num = 0.0, den = 0.0;
    for (int c = 0; c < 2; ++c) {
      double s01 = 0.0, s00 = 0.0;
      for (int t = 1; t < n; ++t) {
        s01 += V(t, c) * V(t - 1, c);
        s00 += V(t - 1, c) * V(t - 1, c);
      }
      const double rho = std::clamp(s01 / s00, -0.97, 0.97);
      double sse = 0.0;
      for (int t = 1; t < n; ++t) sse += std::pow(V(t, c) - rho * V(t - 1, c), 2);
      const double s2 = sse / (n - 1);
      num += 4.0 * rho * rho * s2 * s2 / (std::pow(1 - rho, 6) * std::pow(1 + rho, 2));
      den += s2 * s2 / std::pow(1 - rho, 4);
    }
    const double expect = std::max(1.0, 1.1447 * std::cbrt(num / den * n));
    REQUIRE(andrews_bandwidth(V, Kernel::Bartlett) == Catch::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("bandwidth truncation and monotonicity") {
  const Mat V = random_series(24, 1, 53);
  auto lrv = estimate_lrv(V, Kernel::Bartlett, 100.0);  // >= n
  REQUIRE(lrv.bandwidth == 12.0);                       // capped at n/2
  REQUIRE(lrv.bandwidth_truncated);

  // increasing b only adds lag terms
  auto l1 = estimate_lrv(V, Kernel::Bartlett, 1.0);
  auto l2 = estimate_lrv(V, Kernel::Bartlett, 2.0);
  const int n = 24;
  Mat lag1 = Mat::Zero(1, 1);
  for (int t = 0; t < n - 1; ++t) lag1(0, 0) += V(t, 0) * V(t + 1, 0);
  lag1 /= n;
  const Mat expect = l1.delta + kernel_weight(Kernel::Bartlett, 0.5) * lag1;
  REQUIRE((l2.delta - expect).lpNorm<Eigen::Infinity>() < 1e-14);
}

TEST_CASE("input validation") {
  REQUIRE_THROWS_AS(estimate_lrv(random_series(5, 1, 1), Kernel::Bartlett, 2.0),
                    std::invalid_argument);
  Mat V = random_series(20, 1, 2);
  V(3, 0) = std::nan("");
  REQUIRE_THROWS_AS(estimate_lrv(V, Kernel::Bartlett, 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(estimate_lrv(random_series(20, 1, 3), Kernel::Bartlett, -1.0),
                    std::invalid_argument);
}
