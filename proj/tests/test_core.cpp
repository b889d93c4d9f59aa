#include "gcpr/csv.hpp"
#include "gcpr/design.hpp"
#include "gcpr/scaling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>

using namespace gcpr;

namespace {

ModelSpec trend_only_spec(std::vector<TrendTerm> terms, int T) {
  ModelSpec s;
  s.trend_terms = std::move(terms);
  s.sample_length = T;
  return s;
}

Dataset dataset_from(const Vec& y, const Mat& x) {
  Dataset d;
  d.y = y;
  d.x = x;
  for (int t = 1; t <= y.size(); ++t) d.time_labels.push_back(t);
  return d;
}

}  // namespace

TEST_CASE("validate_theta basics") {
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::free_power()};
  spec.sample_length = 50;

  SECTION("interior point passes") {
    Vec th(1);
    th << 0.5;
    REQUIRE(validate_theta(spec, th).ok);
  }
  SECTION("gap violation") {
    ModelSpec two = spec;
    two.trend_terms = {TrendTerm::free_power(), TrendTerm::free_power()};
    two.min_gap = 0.1;
    Vec th(2);
    th << 1.0, 1.0;
    auto rep = validate_theta(two, th);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    REQUIRE(rep.violations[0].find("gap") != std::string::npos);
  }
  SECTION("lower bound violation") {
    ModelSpec lb = spec;
    lb.theta_lower = -0.45;
    Vec th(1);
    th << -0.6;
    auto rep = validate_theta(lb, th);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violations[0].find("lower bound") != std::string::npos);
  }
}

TEST_CASE("design matrix basic shapes") {
  SECTION("constant column at T=2") {
    auto spec = trend_only_spec({TrendTerm::fixed_power(0.0)}, 2);
    Dataset d = dataset_from(Vec::Zero(2), Mat(2, 0));
    Vec th(1);
    th << 0.0;
    auto dm = build_design_matrix(spec, d, th);
    REQUIRE(dm.Z.col(0).isApprox(Vec::Ones(2)));
    REQUIRE(dm.unscale[0] == 1.0);
  }
  SECTION("linear trend at T=4 is stored rescaled") {
    auto spec = trend_only_spec({TrendTerm::fixed_power(1.0)}, 4);
    Dataset d = dataset_from(Vec::Zero(4), Mat(4, 0));
    Vec th(1);
    th << 1.0;
    auto dm = build_design_matrix(spec, d, th);
    Vec expect(4);
    expect << 0.25, 0.5, 0.75, 1.0;
    REQUIRE((dm.Z.col(0) - expect).lpNorm<Eigen::Infinity>() < 1e-15);
    REQUIRE(dm.unscale[0] == 4.0);
  }
}

TEST_CASE("design matrix matches direct unscaled construction") {
  const int T = 100;
  auto rng = substream(42, 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat x(T, 1);
  double acc = 0.0;
  for (int t = 0; t < T; ++t) {
    acc += normal(rng);
    x(t, 0) = acc;
  }
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::free_power()};
  spec.regressor_orders = {2};
  spec.sample_length = T;
  Dataset d = dataset_from(Vec::Zero(T), x);
  Vec th(2);
  th << 0.0, 1.7;
  auto dm = build_design_matrix(spec, d, th);

  // oracle: raw columns, no rescaling
  for (int t = 0; t < T; ++t) {
    const double tt = t + 1.0;
    REQUIRE(dm.Z(t, 0) * dm.unscale[0] == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(dm.Z(t, 1) * dm.unscale[1] ==
            Catch::Approx(std::pow(tt, 1.7)).epsilon(1e-10));
    REQUIRE(dm.Z(t, 2) * dm.unscale[2] == Catch::Approx(x(t, 0)).margin(1e-10));
    REQUIRE(dm.Z(t, 3) * dm.unscale[3] ==
            Catch::Approx(x(t, 0) * x(t, 0)).epsilon(1e-10).margin(1e-10));
  }
}

TEST_CASE("design matrix input validation") {
  auto spec = trend_only_spec({TrendTerm::free_power()}, 8);
  Dataset d = dataset_from(Vec::Zero(8), Mat(8, 0));
  Vec bad(1);
  bad << 42.0;  // outside [theta_lower, theta_upper]
  REQUIRE_THROWS_AS(build_design_matrix(spec, d, bad), std::invalid_argument);
  Vec wrong_len(2);
  wrong_len << 0.5, 1.5;
  REQUIRE_THROWS_AS(build_design_matrix(spec, d, wrong_len), std::invalid_argument);
  Dataset nan_data = d;
  nan_data.y[3] = std::nan("");
  Vec ok(1);
  ok << 0.5;
  REQUIRE_THROWS_AS(build_design_matrix(spec, nan_data, ok), std::invalid_argument);
}

TEST_CASE("scaling matrices") {
  SECTION("pure cointegration: G = diag(T)") {
    Vec empty(0);
    auto s = scaling_matrices(empty, empty, {1}, 100.0);
    REQUIRE(s.G.rows() == 1);
    REQUIRE(s.G(0, 0) == Catch::Approx(100.0));
  }
  SECTION("power 2 with log coupling at T=100") {
    Vec th(1), ta(1);
    th << 2.0;
    ta << -5e-4;
    auto s = scaling_matrices(th, ta, {}, 100.0);
    REQUIRE(s.G(0, 0) == Catch::Approx(1e5).epsilon(1e-12));
    REQUIRE(s.G(1, 0) == Catch::Approx(1e5 * (-5e-4) * std::log(100.0)).epsilon(1e-12));
    REQUIRE(s.G(1, 1) == Catch::Approx(1e5).epsilon(1e-12));
    REQUIRE(s.G(0, 1) == 0.0);
  }
  SECTION("reconstruction from D and L") {
    auto rng = substream(7, 2);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
      const int d = 1 + rep % 3;
      Vec th(d), ta(d);
      for (int i = 0; i < d; ++i) {
        th[i] = 0.2 + 3.0 * i + unif(rng);  // keep powers spread out
        ta[i] = unif(rng) * (rep % 2 ? 1.0 : -1.0);
      }
      const double horizon = rep % 2 ? 144.0 : 1e4;
      auto s = scaling_matrices(th, ta, {2}, horizon);
      const int k = 2 * d + 2;
      Mat D = Mat::Zero(k, k);
      D.block(0, 0, d, d) = s.D_d;
      D.block(d, d, d, d) = s.D_d;
      D.block(2 * d, 2 * d, 2, 2) = s.D_s;
      const Mat G2 = std::sqrt(horizon) * D * s.L_tau.transpose().inverse();
      REQUIRE((G2 - s.G).norm() <= 1e-12 * s.G.norm());
      // invertibility at scale
      const Mat prod = s.G * s.G.inverse();
      REQUIRE((prod - Mat::Identity(k, k)).lpNorm<Eigen::Infinity>() < 1e-10);
    }
  }
  SECTION("theta = 10 at horizon 1e4 stays finite") {
    Vec th(1), ta(1);
    th << 10.0;
    ta << 1.0;
    auto s = scaling_matrices(th, ta, {}, 1e4);
    REQUIRE(std::isfinite(s.G(0, 0)));
    const Mat prod = s.G * s.G.inverse();
    REQUIRE((prod - Mat::Identity(2, 2)).lpNorm<Eigen::Infinity>() < 1e-10);
  }
  SECTION("overflow guard") {
    Vec th(1), ta(1);
    th << 50.0;
    ta << 1.0;
    REQUIRE_THROWS_AS(scaling_matrices(th, ta, {}, 1e9), std::overflow_error);
  }
}

TEST_CASE("csv ingestion") {
  const std::string dir = std::string(GCPR_SOURCE_DIR) + "/build";
  auto write_tmp = [&](const std::string& name, const std::string& content) {
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
  };

  SECTION("well-formed file round-trips") {
    auto p = write_tmp("csv_ok.csv", "t,y,x1\n1,1.5,0.1\n2,2.5,0.3\n3,3.5,-0.2\n");
    Dataset d = load_dataset_csv(p);
    REQUIRE(d.length() == 3);
    REQUIRE(d.n_regressors() == 1);
    REQUIRE(d.y[1] == 2.5);
    REQUIRE(d.x(2, 0) == -0.2);
    REQUIRE(d.time_labels[0] == 1.0);
  }
  SECTION("blank cell rejected with line number") {
    auto p = write_tmp("csv_blank.csv", "t,y,x1\n1,1.5,0.1\n2,,0.3\n");
    try {
      load_dataset_csv(p);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SECTION("nan rejected") {
    auto p = write_tmp("csv_nan.csv", "t,y,x1\n1,nan,0.1\n");
    REQUIRE_THROWS_AS(load_dataset_csv(p), ParseError);
  }
  SECTION("unsorted rows rejected") {
    auto p = write_tmp("csv_unsorted.csv", "t,y,x1\n2,1.0,0.1\n1,2.0,0.2\n");
    REQUIRE_THROWS_AS(load_dataset_csv(p), ParseError);
  }
  SECTION("bad header rejected") {
    auto p = write_tmp("csv_head.csv", "time,y,x1\n1,1.0,0.1\n");
    REQUIRE_THROWS_AS(load_dataset_csv(p), ParseError);
  }
}

TEST_CASE("feasible intervals subtract gap neighbourhoods") {
  ModelSpec spec;
  spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                      TrendTerm::free_power()};
  spec.sample_length = 50;
  auto iv = feasible_intervals(spec, 2);
  REQUIRE(iv.size() == 2);
  REQUIRE(iv[0].first == Catch::Approx(0.05));
  REQUIRE(iv[0].second == Catch::Approx(0.95));
  REQUIRE(iv[1].first == Catch::Approx(1.05));
  REQUIRE(iv[1].second == Catch::Approx(10.0));
}
