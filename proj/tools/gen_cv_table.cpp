// Generates the quantile table of the integral of squared standard Brownian
// motion over [0,1], approximated by scaled partial sums of iid standard
// normals. Emits both the CSV data file (tail_prob,quantile) and the embedded
// C++ header the library compiles in.
//
// Usage: gen_cv_table <out.csv> <out.hpp> [reps] [steps] [seed] [threads]

#include "gcpr/common.hpp"
#include "gcpr/threads.hpp"

#include <fstream>
#include <iostream>

namespace {

// Tail-probability grid: log-spaced in both tails down to 5e-5, uniform core.
std::vector<double> tail_prob_grid() {
  constexpr int kTailPts = 200;
  constexpr int kCorePts = 1601;  // total 2001
  constexpr double kTailMin = 5e-5;
  constexpr double kCoreLo = 0.02;
  constexpr double kCoreHi = 0.98;
  std::vector<double> tp;
  const double lmin = std::log(kTailMin), lcore = std::log(kCoreLo);
  for (int i = 0; i < kTailPts; ++i)
    tp.push_back(std::exp(lmin + (lcore - lmin) * i / static_cast<double>(kTailPts)));
  for (int i = 0; i < kCorePts; ++i)
    tp.push_back(kCoreLo + (kCoreHi - kCoreLo) * i / static_cast<double>(kCorePts - 1));
  for (int i = kTailPts - 1; i >= 0; --i)
    tp.push_back(1.0 - std::exp(lmin + (lcore - lmin) * i / static_cast<double>(kTailPts)));
  std::sort(tp.begin(), tp.end());
  return tp;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: gen_cv_table <out.csv> <out.hpp> [reps] [steps] [seed] [threads]\n";
    return 2;
  }
  const std::string csv_path = argv[1];
  const std::string hpp_path = argv[2];
  const long reps = argc > 3 ? std::stol(argv[3]) : 2000000L;
  const int steps = argc > 4 ? std::stoi(argv[4]) : 10000;
  const std::uint64_t seed = argc > 5 ? std::stoull(argv[5]) : 20260810ull;
  const int threads = argc > 6 ? std::stoi(argv[6]) : 0;

  std::vector<double> stats(static_cast<std::size_t>(reps));
  const int n_chunks = 256;
  const long chunk = (reps + n_chunks - 1) / n_chunks;
  gcpr::parallel_for(n_chunks, threads, [&](int c) {
    const long lo = static_cast<long>(c) * chunk;
    const long hi = std::min(reps, lo + chunk);
    for (long r = lo; r < hi; ++r) {
      auto rng = gcpr::substream(seed, 0xCF7AB1Eull, static_cast<std::uint64_t>(r));
      std::normal_distribution<double> normal(0.0, 1.0);
      double s = 0.0, acc = 0.0;
      for (int t = 0; t < steps; ++t) {
        s += normal(rng);
        acc += s * s;
      }
      stats[static_cast<std::size_t>(r)] =
          acc / (static_cast<double>(steps) * static_cast<double>(steps));
    }
  });

  double mean = 0.0;
  for (double v : stats) mean += v;
  mean /= static_cast<double>(reps);

  std::sort(stats.begin(), stats.end());
  const auto tp = tail_prob_grid();
  std::vector<double> q(tp.size());
  for (std::size_t i = 0; i < tp.size(); ++i)
    q[i] = gcpr::quantile_sorted(stats, 1.0 - tp[i]);

  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << csv_path << "\n";
      return 2;
    }
    out.precision(12);
    out << "# quantiles of int_0^1 W(r)^2 dr; generator: gen_cv_table seed=" << seed
        << " steps=" << steps << " reps=" << reps << " sample_mean=" << mean << "\n";
    out << "tail_prob,quantile\n";
    for (std::size_t i = 0; i < tp.size(); ++i) out << tp[i] << "," << q[i] << "\n";
  }
  {
    std::ofstream out(hpp_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << hpp_path << "\n";
      return 2;
    }
    out.precision(12);
    out << "#pragma once\n\n"
        << "// Generated by tools/gen_cv_table.cpp: quantiles of the integral of\n"
        << "// squared standard Brownian motion over [0,1].\n"
        << "// seed=" << seed << " steps=" << steps << " reps=" << reps
        << " sample_mean=" << mean << "\n\n"
        << "namespace gcpr::detail {\n\n"
        << "inline constexpr int kCvTableSize = " << tp.size() << ";\n\n";
    out << "inline constexpr double kCvTailProb[kCvTableSize] = {\n";
    for (std::size_t i = 0; i < tp.size(); ++i)
      out << "    " << tp[i] << (i + 1 < tp.size() ? "," : "") << "\n";
    out << "};\n\ninline constexpr double kCvQuantile[kCvTableSize] = {\n";
    for (std::size_t i = 0; i < q.size(); ++i)
      out << "    " << q[i] << (i + 1 < q.size() ? "," : "") << "\n";
    out << "};\n\n}  // namespace gcpr::detail\n";
  }
  std::cout << "wrote " << csv_path << " and " << hpp_path << " (sample mean " << mean
            << ")\n";
  return 0;
}
