#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcpr {

inline constexpr const char* kVersion = "0.1.0";

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Input that could not be parsed (CSV, grid strings, ...).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Design matrix lost full column rank at the working tolerance.
struct RankDeficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grid/derivative-free optimisation could not produce a usable minimum.
struct OptimizerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Data degenerate for the requested statistic (e.g. zero-variance residuals).
struct DegenerateDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A simulated draw (or batch of draws) failed irrecoverably.
struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// x^k by repeated multiplication for small non-negative integer k.
inline double pow_int(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

/// h^theta evaluated in log space. Throws when the exponent would overflow
/// a double (|theta * ln h| > 700).
inline double pow_horizon(double h, double theta) {
  const double e = theta * std::log(h);
  if (!(std::abs(e) <= 700.0)) {
    throw std::overflow_error("power overflow: |theta * ln(horizon)| > 700");
  }
  return std::exp(e);
}

/// Type-7 quantile (linear interpolation of order statistics) on sorted data.
inline double quantile_sorted(const std::vector<double>& s, double p) {
  if (s.empty()) throw std::invalid_argument("quantile of empty sample");
  if (p <= 0.0) return s.front();
  if (p >= 1.0) return s.back();
  const double pos = p * static_cast<double>(s.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= s.size()) return s.back();
  return s[lo] * (1.0 - frac) + s[lo + 1] * frac;
}

inline double quantile_type7(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  return quantile_sorted(v, p);
}

/// Inverse of the type-7 quantile on sorted data, clipped to [0, 1].
inline double cdf_position(const std::vector<double>& s, double x) {
  if (s.empty()) throw std::invalid_argument("cdf of empty sample");
  if (x <= s.front()) return 0.0;
  if (x >= s.back()) return 1.0;
  const auto it = std::upper_bound(s.begin(), s.end(), x);
  const auto hi = static_cast<std::size_t>(it - s.begin());  // s[hi-1] <= x < s[hi]
  const std::size_t lo = hi - 1;
  double frac = 0.0;
  if (s[hi] > s[lo]) frac = (x - s[lo]) / (s[hi] - s[lo]);
  return (static_cast<double>(lo) + frac) / static_cast<double>(s.size() - 1);
}

/// FNV-1a 64-bit hash, used for dataset content hashes in run manifests.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(p[i]);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derive an independent stream seed from a master seed and up to three
/// counter ids. Used everywhere randomness must be schedule-independent:
/// each unit of work owns the stream keyed by its ids.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t z = mix64(seed ^ 0x517cc1b727220a95ull);
  z = mix64(z ^ mix64(a));
  z = mix64(z ^ mix64(b));
  z = mix64(z ^ mix64(c));
  return z;
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  return std::mt19937_64(derive_seed(seed, a, b, c));
}

inline double sample_stddev(const std::vector<double>& v) {
  const auto n = v.size();
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace gcpr
