#pragma once

#include "gcpr/dgp.hpp"
#include "gcpr/fmols.hpp"
#include "gcpr/kpss.hpp"
#include "gcpr/siminf.hpp"
#include "gcpr/threads.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace gcpr {

enum class McTable { Table1, Size2, Coverage4, Kpss5, PowerCurve };

inline std::string table_name(McTable t) {
  switch (t) {
    case McTable::Table1: return "table1";
    case McTable::Size2: return "size2";
    case McTable::Coverage4: return "coverage4";
    case McTable::Kpss5: return "kpss5";
    case McTable::PowerCurve: return "power";
  }
  return "?";
}

struct McScope {
  std::vector<SerialSetting> settings{SerialSetting::A, SerialSetting::B,
                                      SerialSetting::C, SerialSetting::D};
  std::vector<double> rhos{0.0, 0.25, 0.5};
  std::vector<int> Ts{100, 200, 500};
};

struct McOptions {
  int reps = 2000;   // reduced-scale default; full scale is 25000
  int J = 399;       // reduced-scale default; full scale is 999
  std::uint64_t seed = 1;
  int threads = 0;
  bool fixed_H = false;  // freeze the random rotation across replications
  double alpha = 0.05;
  double grid_step = 0.01;
  std::vector<double> phi2_grid{0.025, 0.05, 0.075, 0.1, 0.125, 0.15};
};

struct McCell {
  std::string table;
  std::string setting;
  double rho = 0.0;
  int T = 0;
  std::string estimator;
  double phi2 = 0.0;
  double value = 0.0;  // percentage for rates/coverage, data units for lengths
  double se = 0.0;
  int reps_used = 0;
  int n_failed = 0;
  int J = 0;
};

struct TableReport {
  std::string table;
  std::vector<McCell> cells;
  McOptions options;
};

namespace detail {

inline ModelSpec mc_spec_free(int T, int regressor_order) {
  ModelSpec s;
  s.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                   TrendTerm::free_power()};
  s.regressor_orders = {regressor_order};
  s.sample_length = T;
  return s;
}

inline ModelSpec mc_spec_theta0(int T, double theta0, int regressor_order) {
  ModelSpec s;
  s.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                   TrendTerm::fixed_power(theta0)};
  s.regressor_orders = {regressor_order};
  s.sample_length = T;
  return s;
}

inline std::uint64_t cell_key(McTable table, SerialSetting st, double rho, int T,
                              int extra = 0) {
  return (static_cast<std::uint64_t>(table) << 56) ^
         (static_cast<std::uint64_t>(st) << 48) ^
         (static_cast<std::uint64_t>(std::llround(rho * 100.0)) << 32) ^
         (static_cast<std::uint64_t>(T) << 8) ^ static_cast<std::uint64_t>(extra);
}

inline double pct_se(double phat, int n) {
  return n > 0 ? 100.0 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(n)) : 0.0;
}

/// Full-vector coordinate index of the quadratic regressor coefficient in the
/// simulation model (three trend terms, orders {1, 2}-style layouts).
inline int phi2_coordinate(const ModelSpec& spec) {
  return 2 * spec.d() + 1;  // (theta..., tau..., phi_1_1, phi_1_2)
}

}  // namespace detail

/// The omitted-nonlinear-trend illustration: y_t = -tau0 t^2 + u_t with an
/// independent random-walk regressor, OLS of y on [1, t, x, x^2], one-sided
/// t-test of the x^2 coefficient against the lower normal 5% quantile.
/// Returns rejection percentages indexed by (tau0, T).
inline TableReport table1_experiment(const std::vector<double>& tau0_grid,
                                     const std::vector<int>& T_grid, int reps,
                                     std::uint64_t seed = 1, int threads = 0) {
  if (reps < 100) throw std::invalid_argument("reps must be >= 100");
  constexpr double kNorm5 = -1.6448536269514722;
  TableReport report;
  report.table = "table1";
  report.options.reps = reps;
  report.options.seed = seed;
  for (int T : T_grid) {
    for (std::size_t gi = 0; gi < tau0_grid.size(); ++gi) {
      const double tau0 = tau0_grid[gi];
      std::vector<char> rej(static_cast<std::size_t>(reps), 0);
      parallel_for(reps, threads, [&](int rep) {
        auto rng = substream(seed, detail::cell_key(McTable::Table1, SerialSetting::A,
                                                    tau0 * 1e6, T, static_cast<int>(gi)),
                             static_cast<std::uint64_t>(rep));
        std::normal_distribution<double> normal(0.0, 1.0);
        Mat X(T, 4);
        Vec y(T);
        double x = 0.0;
        for (int t = 0; t < T; ++t) {
          const double u = normal(rng);
          x += normal(rng);
          const double tt = static_cast<double>(t + 1);
          X(t, 0) = 1.0;
          X(t, 1) = tt;
          X(t, 2) = x;
          X(t, 3) = x * x;
          y[t] = -tau0 * tt * tt + u;
        }
        Eigen::ColPivHouseholderQR<Mat> qr(X);
        const Vec c = qr.solve(y);
        const double sigma2 = (y - X * c).squaredNorm() / static_cast<double>(T);
        const Mat R = qr.matrixQR().topRows(4).triangularView<Eigen::Upper>();
        Vec e4 = Vec::Zero(4);
        e4[3] = 1.0;
        const Vec pe = qr.colsPermutation().transpose() * e4;
        const Vec t2 = R.transpose().triangularView<Eigen::Lower>().solve(pe);
        const double inv44 = t2.squaredNorm();
        const double tstat = c[3] / std::sqrt(sigma2 * inv44);
        rej[static_cast<std::size_t>(rep)] = tstat < kNorm5 ? 1 : 0;
      });
      int cnt = 0;
      for (char v : rej) cnt += v;
      const double phat = static_cast<double>(cnt) / static_cast<double>(reps);
      McCell cell;
      cell.table = "table1";
      cell.setting = "iid";
      cell.T = T;
      cell.estimator = "ols_t";
      cell.phi2 = tau0;  // reused as the grid coordinate
      cell.value = 100.0 * phat;
      cell.se = detail::pct_se(phat, reps);
      cell.reps_used = reps;
      report.cells.push_back(cell);
    }
  }
  return report;
}

namespace detail {

struct RepFlags {
  // one slot per estimator row evaluated on a shared dataset
  std::array<char, 4> ok{0, 0, 0, 0};
  std::array<char, 4> reject{0, 0, 0, 0};
  std::array<double, 2> aux{0.0, 0.0};  // lengths etc.
};

}  // namespace detail

/// One Monte Carlo table at the requested scope. Every replication runs the
/// full estimation pipeline; comparator rows share the replication's dataset.
/// Cell failures are counted per row and reported, never silently dropped.
/// Deterministic given (seed, reps, J) at any thread count.
inline TableReport table_experiment(McTable table, const McScope& scope,
                                    const McOptions& opt) {
  if (table == McTable::Table1)
    throw std::invalid_argument("table1 has its own entry point");
  TableReport report;
  report.table = table_name(table);
  report.options = opt;
  const GridSpec grid{opt.grid_step, {}, 1e-6, false};

  auto run_cell = [&](SerialSetting st, double rho, int T, double phi2) {
    DgpConfig cfg;
    cfg.T = T;
    cfg.setting = st;
    cfg.rho = rho;
    cfg.phi2 = (table == McTable::PowerCurve) ? phi2 : 0.0;
    const std::uint64_t ck = detail::cell_key(table, st, rho, T,
                                              static_cast<int>(std::llround(phi2 * 1e4)));
    const int xorder = 2;
    const ModelSpec spec_free = detail::mc_spec_free(T, xorder);
    const ModelSpec spec_fix = detail::mc_spec_theta0(T, cfg.theta0, xorder);
    const int coord_phi2 = detail::phi2_coordinate(spec_free);

    // With fixed_H the rotation is drawn once per cell from its own stream.
    std::optional<Eigen::Matrix2d> frozen_A;
    if (opt.fixed_H) {
      auto rng = substream(opt.seed, ck, 0xF12EDull);
      frozen_A = setting_ar_matrix(st, rng);
    }

    std::vector<detail::RepFlags> results(static_cast<std::size_t>(opt.reps));
    parallel_for(opt.reps, opt.threads, [&](int rep) {
      auto& out = results[static_cast<std::size_t>(rep)];
      auto rng = substream(opt.seed, ck, static_cast<std::uint64_t>(rep));
      const Eigen::Matrix2d A = frozen_A ? *frozen_A : setting_ar_matrix(st, rng);
      auto [u, v] = generate_var1_errors(A, rho, T, cfg.presample, rng);
      const Dataset data = assemble_sample(cfg, u, v);

      auto sim_seed = [&](int est) {
        return derive_seed(opt.seed, ck, static_cast<std::uint64_t>(rep),
                           0xE57ull + static_cast<std::uint64_t>(est));
      };

      GcprFit fit_free;
      LrvSet lrv_free;
      bool have_free = false;
      try {
        fit_free = fit_gcpr(spec_free, data, grid);
        lrv_free = estimate_lrv(residual_vector_series(fit_free, data));
        have_free = true;
      } catch (const std::exception&) {
      }

      switch (table) {
        case McTable::Size2:
        case McTable::PowerCurve: {
          if (have_free) {
            try {  // simulated inference, power estimated
              SimConfig sc;
              sc.J = opt.J;
              sc.alpha = opt.alpha;
              sc.seed = sim_seed(0);
              auto draws = run_sim_inference(fit_free, lrv_free, sc);
              auto t = test_coefficient(draws, fit_free, coord_phi2, 0.0,
                                        TestSides::TwoSided, opt.alpha);
              out.ok[0] = 1;
              out.reject[0] = t.reject ? 1 : 0;
            } catch (const std::exception&) {
            }
          }
          if (table == McTable::PowerCurve) break;
          try {  // simulated inference, power supplied
            GcprFit fit_fix = fit_gcpr(spec_fix, data, grid);
            LrvSet lrv_fix = estimate_lrv(residual_vector_series(fit_fix, data));
            SimConfig sc;
            sc.J = opt.J;
            sc.alpha = opt.alpha;
            sc.seed = sim_seed(1);
            auto draws = run_sim_inference(fit_fix, lrv_fix, sc);
            auto t = test_coefficient(draws, fit_fix, coord_phi2, 0.0,
                                      TestSides::TwoSided, opt.alpha);
            out.ok[1] = 1;
            out.reject[1] = t.reject ? 1 : 0;
            // fully modified comparator at the supplied power
            auto fm0 = fmols_fit(spec_fix, data, fit_fix.params.theta, lrv_fix, false);
            const double t0 = fmols_t_stat_phi(fm0, lrv_fix, 1);
            out.ok[3] = 1;
            out.reject[3] = std::abs(t0) > 1.9599639845400545 ? 1 : 0;
          } catch (const std::exception&) {
          }
          if (have_free) {
            try {  // fully modified comparator at the estimated power
              auto fm = fmols_fit(spec_free, data, fit_free.params.theta, lrv_free, true);
              const double t1 = fmols_t_stat_phi(fm, lrv_free, 1);
              out.ok[2] = 1;
              out.reject[2] = std::abs(t1) > 1.9599639845400545 ? 1 : 0;
            } catch (const std::exception&) {
            }
          }
          break;
        }
        case McTable::Coverage4: {
          if (!have_free) break;
          const int coord_theta = 2;  // the free power is the third trend term
          try {
            SimConfig sc;
            sc.J = opt.J;
            sc.alpha = opt.alpha;
            sc.seed = sim_seed(0);
            auto draws = run_sim_inference(fit_free, lrv_free, sc);
            auto [lo, hi] = confidence_interval(draws, fit_free, coord_theta, opt.alpha);
            out.ok[0] = 1;
            out.reject[0] = (cfg.theta0 >= lo && cfg.theta0 <= hi) ? 1 : 0;
            out.aux[0] = hi - lo;
          } catch (const std::exception&) {
          }
          try {
            const LrvSet lrv_true = true_lrv(A, rho);
            SimConfig sc;
            sc.J = opt.J;
            sc.alpha = opt.alpha;
            sc.seed = sim_seed(1);
            auto draws = run_sim_inference(fit_free, lrv_true, sc);
            auto [lo, hi] = confidence_interval(draws, fit_free, coord_theta, opt.alpha);
            out.ok[1] = 1;
            out.reject[1] = (cfg.theta0 >= lo && cfg.theta0 <= hi) ? 1 : 0;
          } catch (const std::exception&) {
          }
          break;
        }
        case McTable::Kpss5: {
          if (have_free) {
            try {
              auto res = run_kpss(fit_free, data, lrv_free, opt.alpha);
              out.ok[0] = 1;
              out.reject[0] = res.reject ? 1 : 0;
            } catch (const std::exception&) {
            }
          }
          try {
            GcprFit fit_fix = fit_gcpr(spec_fix, data, grid);
            LrvSet lrv_fix = estimate_lrv(residual_vector_series(fit_fix, data));
            auto res = run_kpss(fit_fix, data, lrv_fix, opt.alpha);
            out.ok[1] = 1;
            out.reject[1] = res.reject ? 1 : 0;
          } catch (const std::exception&) {
          }
          break;
        }
        default:
          break;
      }
    });

    auto emit = [&](int slot, const std::string& estimator, bool as_rate) {
      int n_ok = 0, n_hit = 0;
      double aux_sum = 0.0, aux_ss = 0.0;
      for (const auto& r : results) {
        if (!r.ok[static_cast<std::size_t>(slot)]) continue;
        ++n_ok;
        n_hit += r.reject[static_cast<std::size_t>(slot)];
        aux_sum += r.aux[0];
        aux_ss += r.aux[0] * r.aux[0];
      }
      McCell cell;
      cell.table = report.table;
      cell.setting = setting_name(st);
      cell.rho = rho;
      cell.T = T;
      cell.estimator = estimator;
      cell.phi2 = phi2;
      cell.reps_used = n_ok;
      cell.n_failed = opt.reps - n_ok;
      cell.J = opt.J;
      if (as_rate) {
        const double phat = n_ok > 0 ? static_cast<double>(n_hit) / n_ok : 0.0;
        cell.value = 100.0 * phat;
        cell.se = detail::pct_se(phat, n_ok);
      } else {
        const double mean = n_ok > 0 ? aux_sum / n_ok : 0.0;
        cell.value = mean;
        cell.se = n_ok > 1 ? std::sqrt(std::max(0.0, aux_ss / n_ok - mean * mean) /
                                       static_cast<double>(n_ok - 1))
                           : 0.0;
      }
      report.cells.push_back(cell);
    };

    switch (table) {
      case McTable::Size2:
        emit(0, "SimNLS", true);
        emit(1, "SimNLS(theta0)", true);
        emit(2, "FMOLS", true);
        emit(3, "FMOLS(theta0)", true);
        break;
      case McTable::Coverage4:
        emit(0, "coverage", true);
        emit(1, "coverage(true_lrv)", true);
        emit(0, "length", false);
        break;
      case McTable::Kpss5:
        emit(0, "KPSS", true);
        emit(1, "KPSS(theta0)", true);
        break;
      case McTable::PowerCurve:
        emit(0, "SimNLS", true);
        break;
      default:
        break;
    }
  };

  if (table == McTable::PowerCurve) {
    for (SerialSetting st : scope.settings)
      for (double rho : scope.rhos)
        for (int T : scope.Ts)
          for (double phi2 : opt.phi2_grid) run_cell(st, rho, T, phi2);
  } else {
    for (SerialSetting st : scope.settings)
      for (double rho : scope.rhos)
        for (int T : scope.Ts) run_cell(st, rho, T, 0.0);
  }
  return report;
}

/// CSV export, one row per cell. A manifest comment line documents the run.
inline void write_table_csv(const TableReport& report, const std::string& path,
                            const std::string& manifest_comment = "") {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(10);
  if (!manifest_comment.empty()) out << "# " << manifest_comment << "\n";
  if (report.table == "power") {
    out << "phi2,power,T,setting,rho,se,reps,n_failed\n";
    for (const auto& c : report.cells)
      out << c.phi2 << "," << c.value << "," << c.T << "," << c.setting << "," << c.rho
          << "," << c.se << "," << c.reps_used << "," << c.n_failed << "\n";
    return;
  }
  out << "table,setting,rho,T,estimator,value,se,reps,n_failed,J\n";
  for (const auto& c : report.cells)
    out << c.table << "," << c.setting << "," << c.rho << "," << c.T << "," << c.estimator
        << "," << c.value << "," << c.se << "," << c.reps_used << "," << c.n_failed << ","
        << c.J << "\n";
}

/// Pretty text rendering mirroring the reference table layout: estimator rows,
/// (setting, rho) columns, one panel per T.
inline std::string format_table_text(const TableReport& report) {
  std::ostringstream os;
  os << "== " << report.table << " (reps=" << report.options.reps
     << ", J=" << report.options.J << ", seed=" << report.options.seed << ") ==\n";
  std::vector<int> Ts;
  std::vector<std::string> estimators;
  std::vector<std::pair<std::string, double>> cols;
  for (const auto& c : report.cells) {
    if (std::find(Ts.begin(), Ts.end(), c.T) == Ts.end()) Ts.push_back(c.T);
    if (std::find(estimators.begin(), estimators.end(), c.estimator) == estimators.end())
      estimators.push_back(c.estimator);
    std::pair<std::string, double> col{c.setting, c.rho};
    if (std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(col);
  }
  std::sort(Ts.begin(), Ts.end());
  auto find_cell = [&](int T, const std::string& est, const std::pair<std::string, double>& col,
                       double phi2) -> const McCell* {
    for (const auto& c : report.cells)
      if (c.T == T && c.estimator == est && c.setting == col.first && c.rho == col.second &&
          c.phi2 == phi2)
        return &c;
    return nullptr;
  };
  std::vector<double> phi2s;
  for (const auto& c : report.cells)
    if (std::find(phi2s.begin(), phi2s.end(), c.phi2) == phi2s.end()) phi2s.push_back(c.phi2);
  std::sort(phi2s.begin(), phi2s.end());

  for (int T : Ts) {
    os << "\nT = " << T << "\n";
    os << std::left << std::setw(22) << (report.table == "power" ? "phi2" : "estimator");
    for (const auto& col : cols) {
      std::ostringstream h;
      h << "(" << col.first << ") rho=" << col.second;
      os << std::right << std::setw(16) << h.str();
    }
    os << "\n";
    if (report.table == "power") {
      for (double f2 : phi2s) {
        os << std::left << std::setw(22) << f2;
        for (const auto& col : cols) {
          const McCell* c = find_cell(T, "SimNLS", col, f2);
          std::ostringstream val;
          if (c) val << std::fixed << std::setprecision(2) << c->value;
          os << std::right << std::setw(16) << (c ? val.str() : "-");
        }
        os << "\n";
      }
    } else {
      for (const auto& est : estimators) {
        os << std::left << std::setw(22) << est;
        for (const auto& col : cols) {
          const McCell* c = nullptr;
          for (double f2 : phi2s)
            if ((c = find_cell(T, est, col, f2))) break;
          std::ostringstream val;
          if (c) val << std::fixed << std::setprecision(2) << c->value;
          os << std::right << std::setw(16) << (c ? val.str() : "-");
        }
        os << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace gcpr
