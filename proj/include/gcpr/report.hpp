#pragma once

#include "gcpr/fmols.hpp"
#include "gcpr/kpss.hpp"
#include "gcpr/mc.hpp"
#include "gcpr/siminf.hpp"

#include <json.hpp>

#include <fstream>

namespace gcpr {

using json = nlohmann::json;

inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline json vector_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline std::string file_hash_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes.data(), bytes.size())));
  return buf;
}

inline json model_spec_to_json(const ModelSpec& spec) {
  json terms = json::array();
  for (const auto& t : spec.trend_terms) {
    json jt;
    jt["fixed"] = t.fixed;
    if (t.fixed) {
      jt["power"] = t.power;
    } else {
      jt["power"] = "free";
      if (!std::isnan(t.bracket_lo)) jt["bracket_lo"] = t.bracket_lo;
      if (!std::isnan(t.bracket_hi)) jt["bracket_hi"] = t.bracket_hi;
    }
    terms.push_back(jt);
  }
  return json{{"trend_terms", terms},
              {"regressor_orders", spec.regressor_orders},
              {"sample_length", spec.sample_length},
              {"theta_lower", spec.theta_lower},
              {"theta_upper", spec.theta_upper},
              {"min_gap", spec.min_gap}};
}

/// Everything needed to reproduce an output file bit for bit.
struct RunManifest {
  std::string command;
  std::string dataset_path;
  std::string dataset_hash;
  json model;
  json sim;
  std::vector<int> q_grid;
  std::uint64_t seed = 0;

  json to_json() const {
    json j;
    j["command"] = command;
    if (!dataset_path.empty())
      j["dataset"] = json{{"path", dataset_path}, {"fnv1a64", dataset_hash}};
    if (!model.is_null()) j["model"] = model;
    if (!sim.is_null()) j["sim"] = sim;
    if (!q_grid.empty()) j["q_grid"] = q_grid;
    j["seed"] = seed;
    j["library_version"] = kVersion;
    return j;
  }
};

inline json lrv_to_json(const LrvSet& lrv) {
  return json{{"sigma", matrix_to_json(lrv.sigma)},
              {"delta", matrix_to_json(lrv.delta)},
              {"omega", matrix_to_json(lrv.omega)},
              {"delta_minus", matrix_to_json(lrv.delta_minus)},
              {"omega_u_dot_v", lrv.omega_u_dot_v},
              {"kernel", kernel_name(lrv.kernel)},
              {"bandwidth", lrv.bandwidth},
              {"bandwidth_truncated", lrv.bandwidth_truncated},
              {"source", lrv.source}};
}

inline json kpss_to_json(const KpssResult& res) {
  json trace = json::array();
  for (const auto& row : res.volatility_trace)
    trace.push_back(json{{"q", row.q}, {"max_stat", row.max_stat},
                         {"volatility", row.volatility}});
  return json{{"q_chosen", res.q_chosen},
              {"M", res.M},
              {"block_stats", vector_to_json(res.block_stats)},
              {"max_stat", res.max_stat},
              {"critical", res.critical},
              {"reject", res.reject},
              {"alpha", res.alpha},
              {"omega_u_dot_v", res.omega_u_dot_v},
              {"volatility_trace", trace}};
}

inline json fit_to_json(const GcprFit& fit) {
  return json{{"theta", vector_to_json(fit.params.theta)},
              {"tau", vector_to_json(fit.params.tau)},
              {"phi", vector_to_json(fit.params.phi)},
              {"rss", fit.rss},
              {"converged", fit.converged},
              {"bracket", json::array({fit.bracket_lo, fit.bracket_hi})},
              {"n_rss_evals", fit.n_rss_evals}};
}

inline std::string significance_stars(double p) {
  if (p <= 0.01) return "***";
  if (p <= 0.05) return "**";
  if (p <= 0.10) return "*";
  return "";
}

}  // namespace gcpr
