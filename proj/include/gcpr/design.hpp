#pragma once

#include "gcpr/model.hpp"

namespace gcpr {

/// Regression design with internal column rescaling. Trend columns hold
/// (t/T)^theta_i, regressor columns (x_it/sqrt(T))^j; unscale[k] converts the
/// k-th fitted coefficient back to the raw t^theta_i / x^j regressors
/// (raw column = unscale[k] * stored column). The rescaling is an internal
/// conditioning device only; reported coefficients always refer to raw
/// regressors.
struct DesignMatrix {
  Mat Z;        // T x (d+p)
  Vec unscale;  // d+p
  Vec theta;    // powers the trend columns were built at
  std::vector<std::string> col_names;
};

inline DesignMatrix build_design_matrix(const ModelSpec& spec, const Dataset& data,
                                        const Vec& theta) {
  const int T = data.length();
  const int d = spec.d();
  const int p = spec.p();
  if (theta.size() != d) throw std::invalid_argument("theta length != d");
  if (T != spec.sample_length)
    throw std::invalid_argument("dataset length differs from spec.sample_length");
  if (data.n_regressors() != spec.m())
    throw std::invalid_argument("regressor count differs from spec");
  data.validate();
  for (int i = 0; i < d; ++i) {
    if (!std::isfinite(theta[i])) throw std::invalid_argument("non-finite theta");
    const auto& term = spec.trend_terms[static_cast<std::size_t>(i)];
    if (term.fixed) {
      if (theta[i] != term.power)
        throw std::invalid_argument("theta differs from fixed trend power");
    } else {
      auto [lo, hi] = spec.free_bracket(i);
      if (theta[i] < lo || theta[i] > hi)
        throw std::invalid_argument("theta outside parameter space");
    }
  }

  DesignMatrix out;
  out.Z.resize(T, d + p);
  out.unscale.resize(d + p);
  out.theta = theta;
  const double Td = static_cast<double>(T);
  const double sqrtT = std::sqrt(Td);

  for (int i = 0; i < d; ++i) {
    out.unscale[i] = pow_horizon(Td, theta[i]);  // overflow-guarded
    for (int t = 1; t <= T; ++t)
      out.Z(t - 1, i) = std::pow(static_cast<double>(t) / Td, theta[i]);
    out.col_names.push_back("t^" + std::to_string(theta[i]));
  }
  int col = d;
  for (int i = 0; i < spec.m(); ++i) {
    const int pi = spec.regressor_orders[static_cast<std::size_t>(i)];
    for (int j = 1; j <= pi; ++j, ++col) {
      out.unscale[col] = pow_int(sqrtT, j);
      for (int t = 0; t < T; ++t) out.Z(t, col) = pow_int(data.x(t, i) / sqrtT, j);
      out.col_names.push_back("x" + std::to_string(i + 1) + "^" + std::to_string(j));
    }
  }
  return out;
}

}  // namespace gcpr
