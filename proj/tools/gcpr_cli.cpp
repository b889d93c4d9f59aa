// Command-line front end: dataset ingestion, model fitting, simulated
// inference, stationarity testing, RSS profiles, and the Monte Carlo table
// harness. All reports are pure functions of the run manifest: rerunning a
// command reproduces its output files byte for byte.

#include "gcpr/csv.hpp"
#include "gcpr/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace gcpr;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRank = 3;
constexpr int kExitOptimizer = 4;
constexpr int kExitDegenerate = 5;

int env_threads() {
  const char* v = std::getenv("GCPR_THREADS");
  return v ? std::atoi(v) : 0;
}

struct SpecFlags {
  std::string model;  // m1..m4 preset
  std::vector<std::string> trends;
  std::string xpow;
  double theta_lower = 0.05;
  double theta_upper = 10.0;
  double min_gap = 0.05;
  double grid_step = 0.01;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "preset: m1|m2|m3|m4")
        ->check(CLI::IsMember({"m1", "m2", "m3", "m4"}));
    cmd->add_option("--trend", trends,
                    "trend power: a number, 'free', or 'free:lo:hi' (repeatable)");
    cmd->add_option("--xpow", xpow, "integer power order per regressor, comma separated");
    cmd->add_option("--theta-lower", theta_lower, "lower bound for free powers");
    cmd->add_option("--theta-upper", theta_upper, "upper bound for free powers");
    cmd->add_option("--gap", min_gap, "minimum gap between trend powers");
    cmd->add_option("--grid-step", grid_step, "profile grid step for the free power");
  }

  ModelSpec build(int T, int m) const {
    ModelSpec spec;
    spec.sample_length = T;
    spec.theta_lower = theta_lower;
    spec.theta_upper = theta_upper;
    spec.min_gap = min_gap;
    if (!model.empty()) {
      if (model == "m1") {
        spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0)};
        spec.regressor_orders = {2};
      } else if (model == "m2") {
        spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                            TrendTerm::fixed_power(2.0)};
        spec.regressor_orders = {2};
      } else if (model == "m3") {
        spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                            TrendTerm::free_power()};
        spec.regressor_orders = {2};
      } else {  // m4: linear cointegrating relation around a flexible trend
        spec.trend_terms = {TrendTerm::fixed_power(0.0), TrendTerm::fixed_power(1.0),
                            TrendTerm::free_power()};
        spec.regressor_orders = {1};
      }
    } else {
      for (const auto& t : trends) {
        if (t == "free") {
          spec.trend_terms.push_back(TrendTerm::free_power());
        } else if (t.rfind("free:", 0) == 0) {
          const auto rest = t.substr(5);
          const auto colon = rest.find(':');
          if (colon == std::string::npos)
            throw ParseError("bad --trend value: " + t + " (want free:lo:hi)");
          spec.trend_terms.push_back(TrendTerm::free_power(
              std::stod(rest.substr(0, colon)), std::stod(rest.substr(colon + 1))));
        } else {
          try {
            spec.trend_terms.push_back(TrendTerm::fixed_power(std::stod(t)));
          } catch (const std::exception&) {
            throw ParseError("bad --trend value: " + t);
          }
        }
      }
      if (!xpow.empty()) {
        std::stringstream ss(xpow);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          try {
            spec.regressor_orders.push_back(std::stoi(tok));
          } catch (const std::exception&) {
            throw ParseError("bad --xpow value: " + tok);
          }
        }
      }
    }
    if (static_cast<int>(spec.regressor_orders.size()) != m)
      throw ParseError("model expects " + std::to_string(spec.regressor_orders.size()) +
                       " regressor(s) but the dataset has " + std::to_string(m));
    spec.validate();
    return spec;
  }

  json flags_json() const {
    return json{{"model", model},
                {"trends", trends},
                {"xpow", xpow},
                {"theta_lower", theta_lower},
                {"theta_upper", theta_upper},
                {"min_gap", min_gap},
                {"grid_step", grid_step}};
  }
};

std::vector<double> parse_grid_string(const std::string& s) {
  // "lo:step:hi" or a comma-separated list
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    double lo = 0, step = 0, hi = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3 || step <= 0)
      throw ParseError("bad grid string: " + s + " (want lo:step:hi)");
    for (double x = lo; x <= hi + 1e-12; x += step) out.push_back(x);
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        out.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ParseError("bad grid value: " + tok);
      }
    }
  }
  if (out.empty()) throw ParseError("empty grid: " + s);
  return out;
}

McScope parse_scope(const std::string& s) {
  McScope scope;
  if (s.empty() || s == "all") return scope;
  std::stringstream ss(s);
  std::string part;
  bool have_settings = false;
  while (std::getline(ss, part, ':')) {
    if (part.rfind("rho=", 0) == 0) {
      scope.rhos.clear();
      std::stringstream rr(part.substr(4));
      std::string tok;
      while (std::getline(rr, tok, ',')) {
        try {
          scope.rhos.push_back(std::stod(tok));
        } catch (const std::exception&) {
          throw ParseError("bad rho in scope: " + tok);
        }
      }
    } else if (part.rfind("T=", 0) == 0) {
      scope.Ts.clear();
      std::stringstream tt(part.substr(2));
      std::string tok;
      while (std::getline(tt, tok, ',')) {
        try {
          scope.Ts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw ParseError("bad T in scope: " + tok);
        }
      }
    } else if (!part.empty()) {
      if (have_settings) throw ParseError("bad scope: " + s);
      scope.settings.clear();
      std::stringstream st(part);
      std::string tok;
      while (std::getline(st, tok, ',')) {
        if (tok == "A") scope.settings.push_back(SerialSetting::A);
        else if (tok == "B") scope.settings.push_back(SerialSetting::B);
        else if (tok == "C") scope.settings.push_back(SerialSetting::C);
        else if (tok == "D") scope.settings.push_back(SerialSetting::D);
        else throw ParseError("bad setting in scope: " + tok);
      }
      have_settings = true;
    }
  }
  if (scope.settings.empty() || scope.rhos.empty() || scope.Ts.empty())
    throw ParseError("bad scope: " + s);
  return scope;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

Kernel parse_kernel(const std::string& s) {
  if (s == "bartlett") return Kernel::Bartlett;
  if (s == "parzen") return Kernel::Parzen;
  if (s == "qs" || s == "quadratic_spectral") return Kernel::QuadraticSpectral;
  throw ParseError("unknown kernel: " + s);
}

int run(int argc, char** argv) {
  CLI::App app{"Power-law trend cointegrating polynomial regression toolkit"};
  app.require_subcommand(1);
  int threads = env_threads();
  app.add_option("--threads", threads, "worker thread cap (0 = hardware)");

  // ---- fit ----------------------------------------------------------------
  auto* fit_cmd = app.add_subcommand("fit", "estimate a model from a CSV dataset");
  std::string fit_csv, fit_out, fit_residuals;
  SpecFlags fit_flags;
  fit_cmd->add_option("--csv", fit_csv, "dataset CSV (t,y,x1[,x2,...])")->required();
  fit_flags.attach(fit_cmd);
  fit_cmd->add_option("--out", fit_out, "JSON report path");
  fit_cmd->add_option("--residuals", fit_residuals, "write residuals CSV here");

  // ---- infer --------------------------------------------------------------
  auto* infer_cmd =
      app.add_subcommand("infer", "fit + simulated confidence intervals and tests");
  std::string infer_csv, infer_out, infer_kernel = "bartlett", infer_bandwidth = "auto";
  SpecFlags infer_flags;
  double infer_alpha = 0.05;
  int infer_J = 999, infer_N = 0;
  std::uint64_t infer_seed = 0;
  infer_cmd->add_option("--csv", infer_csv)->required();
  infer_flags.attach(infer_cmd);
  infer_cmd->add_option("--alpha", infer_alpha, "significance level");
  infer_cmd->add_option("--J", infer_J, "simulated draws");
  infer_cmd->add_option("--N", infer_N, "simulated path length (0 = T)");
  infer_cmd->add_option("--seed", infer_seed, "RNG seed")->required();
  infer_cmd->add_option("--kernel", infer_kernel, "bartlett|parzen|qs");
  infer_cmd->add_option("--bandwidth", infer_bandwidth, "auto or a positive number");
  infer_cmd->add_option("--out", infer_out, "JSON report path");

  // ---- kpss ---------------------------------------------------------------
  auto* kpss_cmd =
      app.add_subcommand("kpss", "subsampling stationarity test on model residuals");
  std::string kpss_csv, kpss_out, kpss_qgrid;
  SpecFlags kpss_flags;
  double kpss_alpha = 0.05;
  kpss_cmd->add_option("--csv", kpss_csv)->required();
  kpss_flags.attach(kpss_cmd);
  kpss_cmd->add_option("--alpha", kpss_alpha, "significance level");
  kpss_cmd->add_option("--q-grid", kpss_qgrid, "comma-separated block sizes");
  kpss_cmd->add_option("--out", kpss_out, "JSON report path");

  // ---- mc -----------------------------------------------------------------
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo table harness");
  std::string mc_table, mc_scope = "all", mc_outdir = ".";
  int mc_reps = 2000, mc_J = 399;
  std::uint64_t mc_seed = 0;
  bool mc_full = false, mc_fixed_H = false;
  mc_cmd->add_option("--table", mc_table, "1|2|4|5|power")->required();
  mc_cmd->add_option("--scope", mc_scope, "e.g. A:rho=0:T=100 or all");
  mc_cmd->add_option("--reps", mc_reps, "replications per cell");
  mc_cmd->add_option("--J", mc_J, "simulated draws per replication");
  mc_cmd->add_option("--seed", mc_seed, "RNG seed")->required();
  mc_cmd->add_option("--out-dir", mc_outdir, "output directory");
  mc_cmd->add_flag("--full-scale", mc_full, "reference scale: reps=25000, J=999");
  mc_cmd->add_flag("--fixed-H", mc_fixed_H, "freeze the error-rotation matrix per cell");

  // ---- profile ------------------------------------------------------------
  auto* prof_cmd = app.add_subcommand("profile", "RSS profile curves");
  std::string prof_csv, prof_kind = "trend", prof_grid, prof_out = "profile.csv";
  SpecFlags prof_flags;
  prof_cmd->add_option("--csv", prof_csv)->required();
  prof_cmd->add_option("--kind", prof_kind, "trend|xpow")
      ->check(CLI::IsMember({"trend", "xpow"}));
  prof_cmd->add_option("--grid", prof_grid, "lo:step:hi or comma list");
  prof_cmd->add_option("--out", prof_out, "output CSV");
  prof_flags.attach(prof_cmd);

  CLI11_PARSE(app, argc, argv);

  if (fit_cmd->parsed()) {
    const Dataset data = load_dataset_csv(fit_csv);
    const ModelSpec spec = fit_flags.build(data.length(), data.n_regressors());
    GridSpec grid;
    grid.step = fit_flags.grid_step;
    const GcprFit fit = spec.d_free() >= 2 ? fit_gcpr_multistart(spec, data, 20)
                                           : fit_gcpr(spec, data, grid);
    RunManifest man;
    man.command = "fit";
    man.dataset_path = fit_csv;
    man.dataset_hash = file_hash_hex(fit_csv);
    man.model = fit_flags.flags_json();
    json rep;
    rep["manifest"] = man.to_json();
    rep["model"] = model_spec_to_json(spec);
    rep["fit"] = fit_to_json(fit);
    if (!fit_residuals.empty()) {
      std::ostringstream out;
      out.precision(17);
      out << "t,residual\n";
      for (int t = 0; t < fit.residuals.size(); ++t)
        out << data.time_labels[static_cast<std::size_t>(t)] << "," << fit.residuals[t]
            << "\n";
      write_file(fit_residuals, out.str());
      rep["residuals_path"] = fit_residuals;
    }
    std::ostringstream text;
    text.precision(10);
    text << "theta_hat: " << fit.params.theta.transpose() << "\n"
         << "tau_hat:   " << fit.params.tau.transpose() << "\n"
         << "phi_hat:   " << fit.params.phi.transpose() << "\n"
         << "rss:       " << fit.rss << "\n";
    std::cout << text.str();
    if (!fit_out.empty()) write_file(fit_out, rep.dump(2) + "\n");
    return kExitOk;
  }

  if (infer_cmd->parsed()) {
    const Dataset data = load_dataset_csv(infer_csv);
    const ModelSpec spec = infer_flags.build(data.length(), data.n_regressors());
    GridSpec grid;
    grid.step = infer_flags.grid_step;
    const GcprFit fit = spec.d_free() >= 2 ? fit_gcpr_multistart(spec, data, 20)
                                           : fit_gcpr(spec, data, grid);
    const Kernel kernel = parse_kernel(infer_kernel);
    std::optional<double> bw;
    if (infer_bandwidth != "auto") bw = std::stod(infer_bandwidth);
    const LrvSet lrv = estimate_lrv(residual_vector_series(fit, data), kernel, bw);
    SimConfig sc;
    sc.J = infer_J;
    sc.N = infer_N;
    sc.alpha = infer_alpha;
    sc.seed = infer_seed;
    sc.threads = threads;
    const SimDraws draws = run_sim_inference(fit, lrv, sc);

    RunManifest man;
    man.command = "infer";
    man.dataset_path = infer_csv;
    man.dataset_hash = file_hash_hex(infer_csv);
    man.model = infer_flags.flags_json();
    man.sim = json{{"J", sc.J},
                   {"N", draws.N_used},
                   {"alpha", sc.alpha},
                   {"kernel", infer_kernel},
                   {"bandwidth", infer_bandwidth}};
    man.seed = infer_seed;

    const int d = spec.d();
    const int p = spec.p();
    json coords = json::array();
    std::ostringstream text;
    text.precision(6);
    text << "coordinate      estimate        ci_lo           ci_hi\n";
    auto add_coord = [&](int full_idx, const std::string& name, double est, bool has_ci,
                         bool is_theta) {
      json jc;
      jc["name"] = name;
      jc["estimate"] = est;
      if (has_ci) {
        std::optional<double> floor;
        if (is_theta) floor = spec.theta_lower;  // truncate impossible power values
        auto [lo, hi] = confidence_interval(draws, fit, full_idx, infer_alpha, floor);
        jc["ci"] = json::array({lo, hi});
        text << std::left << std::setw(16) << name << std::setw(16) << est << std::setw(16)
             << lo << std::setw(16) << hi << "\n";
      } else {
        text << std::left << std::setw(16) << name << std::setw(16) << est << "(fixed)\n";
      }
      coords.push_back(jc);
    };
    for (int i = 0; i < d; ++i)
      add_coord(i, "theta_" + std::to_string(i + 1), fit.params.theta[i],
                !spec.trend_terms[static_cast<std::size_t>(i)].fixed, true);
    for (int i = 0; i < d; ++i)
      add_coord(d + i, "tau_" + std::to_string(i + 1), fit.params.tau[i], true, false);
    for (int j = 0; j < p; ++j)
      add_coord(2 * d + j, "phi_" + std::to_string(j + 1), fit.params.phi[j], true, false);

    json tests = json::array();
    for (int j = 0; j < p; ++j) {
      const auto t =
          test_coefficient(draws, fit, 2 * d + j, 0.0, TestSides::TwoSided, infer_alpha);
      json jt;
      jt["name"] = "phi_" + std::to_string(j + 1) + " = 0";
      jt["statistic"] = t.statistic;
      jt["p_value"] = t.p_value;
      jt["reject"] = t.reject;
      jt["stars"] = significance_stars(t.p_value);
      tests.push_back(jt);
      text << "test " << jt["name"].get<std::string>() << ": p = " << t.p_value << " "
           << significance_stars(t.p_value) << "\n";
    }

    json rep;
    rep["manifest"] = man.to_json();
    rep["model"] = model_spec_to_json(spec);
    rep["fit"] = fit_to_json(fit);
    rep["lrv"] = lrv_to_json(lrv);
    rep["coordinates"] = coords;
    rep["tests"] = tests;
    rep["n_failed_draws"] = draws.n_failed;
    std::cout << text.str();
    if (!infer_out.empty()) write_file(infer_out, rep.dump(2) + "\n");
    return kExitOk;
  }

  if (kpss_cmd->parsed()) {
    const Dataset data = load_dataset_csv(kpss_csv);
    const ModelSpec spec = kpss_flags.build(data.length(), data.n_regressors());
    GridSpec grid;
    grid.step = kpss_flags.grid_step;
    const GcprFit fit = spec.d_free() >= 2 ? fit_gcpr_multistart(spec, data, 20)
                                           : fit_gcpr(spec, data, grid);
    const LrvSet lrv = estimate_lrv(residual_vector_series(fit, data));
    std::vector<int> q_grid;
    if (!kpss_qgrid.empty())
      for (double q : parse_grid_string(kpss_qgrid)) q_grid.push_back(static_cast<int>(q));
    const KpssResult res = run_kpss(fit, data, lrv, kpss_alpha, q_grid);

    RunManifest man;
    man.command = "kpss";
    man.dataset_path = kpss_csv;
    man.dataset_hash = file_hash_hex(kpss_csv);
    man.model = kpss_flags.flags_json();
    man.q_grid = q_grid;
    json rep;
    rep["manifest"] = man.to_json();
    rep["model"] = model_spec_to_json(spec);
    rep["fit"] = fit_to_json(fit);
    rep["kpss"] = kpss_to_json(res);
    std::cout << "KPSS max statistic " << res.max_stat << " over M=" << res.M
              << " blocks (q=" << res.q_chosen << "), critical " << res.critical << " -> "
              << (res.reject ? "reject" : "no rejection") << "\n";
    if (!kpss_out.empty()) write_file(kpss_out, rep.dump(2) + "\n");
    return kExitOk;
  }

  if (mc_cmd->parsed()) {
    McOptions opt;
    opt.reps = mc_full ? 25000 : mc_reps;
    opt.J = mc_full ? 999 : mc_J;
    opt.seed = mc_seed;
    opt.threads = threads;
    opt.fixed_H = mc_fixed_H;
    const McScope scope = parse_scope(mc_scope);
    TableReport report;
    if (mc_table == "1") {
      report = table1_experiment({0.0, 1e-4, 2e-4, 3e-4, 4e-4, 5e-4, 6e-4}, scope.Ts,
                                 opt.reps, opt.seed, opt.threads);
    } else if (mc_table == "2") {
      report = table_experiment(McTable::Size2, scope, opt);
    } else if (mc_table == "4") {
      report = table_experiment(McTable::Coverage4, scope, opt);
    } else if (mc_table == "5") {
      report = table_experiment(McTable::Kpss5, scope, opt);
    } else if (mc_table == "power") {
      McScope pscope = scope;
      if (mc_scope == "all") {  // reference design for power curves
        pscope.rhos = {0.5};
        pscope.Ts = {100, 200, 300};
      }
      report = table_experiment(McTable::PowerCurve, pscope, opt);
    } else {
      throw ParseError("unknown table: " + mc_table);
    }
    RunManifest man;
    man.command = "mc --table " + mc_table + " --scope " + mc_scope;
    man.seed = opt.seed;
    man.sim = json{{"reps", opt.reps}, {"J", opt.J}, {"fixed_H", opt.fixed_H}};
    const std::string base = mc_outdir + "/" + report.table;
    write_table_csv(report, base + ".csv", man.to_json().dump());
    write_file(base + ".txt", format_table_text(report));
    std::cout << format_table_text(report);
    return kExitOk;
  }

  if (prof_cmd->parsed()) {
    const Dataset data = load_dataset_csv(prof_csv);
    std::vector<double> grid_pts;
    if (!prof_grid.empty()) grid_pts = parse_grid_string(prof_grid);
    RunManifest man;
    man.command = "profile --kind " + prof_kind;
    man.dataset_path = prof_csv;
    man.dataset_hash = file_hash_hex(prof_csv);
    if (prof_kind == "xpow") {
      if (grid_pts.empty()) grid_pts = parse_grid_string("1.05:0.05:10");
      for (double th : grid_pts)
        if (th > 0.95 && th < 1.05) throw ParseError("xpow grid must exclude (0.95, 1.05)");
      const auto prof = rss_profile_stochastic_power(data, grid_pts);
      write_profile_csv(prof_out, prof.curve, man.to_json().dump());
      if (prof.used_abs)
        std::cerr << "warning: regressor has non-positive values; |x| was used\n";
    } else {
      SpecFlags f = prof_flags;
      if (f.model.empty() && f.trends.empty()) f.model = "m4";
      const ModelSpec spec = f.build(data.length(), data.n_regressors());
      if (spec.d_free() != 1) throw ParseError("trend profile needs exactly one free power");
      GridSpec grid;
      grid.step = f.grid_step;
      grid.record_profile = true;
      if (!grid_pts.empty()) grid.points = grid_pts;
      const GcprFit fit = fit_gcpr(spec, data, grid);
      write_profile_csv(prof_out, *fit.theta_profile, man.to_json().dump());
    }
    std::cout << "wrote " << prof_out << "\n";
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gcpr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gcpr::RankDeficientError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRank;
  } catch (const gcpr::OptimizerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOptimizer;
  } catch (const gcpr::SimulationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOptimizer;
  } catch (const gcpr::DegenerateDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
