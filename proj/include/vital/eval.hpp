#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vital/centrality.hpp"
#include "vital/epidemic.hpp"
#include "vital/graph.hpp"

namespace vital {

enum class TauVariant {
  /// 2(c+ - c-) / (n(n-1)); tied pairs count as neither.
  A,
  /// Tie-corrected; 0 when either argument is constant.
  B,
};

/// Kendall rank correlation in O(n log n). Throws ComputeError on length
/// mismatch, fewer than 2 values, or NaN input.
double kendall_tau(std::span<const double> x, std::span<const double> y, TauVariant variant = TauVariant::A);

inline double kendall_tau(const Eigen::VectorXd& x, const Eigen::VectorXd& y, TauVariant variant = TauVariant::A) {
  return kendall_tau(std::span<const double>(x.data(), x.size()), std::span<const double>(y.data(), y.size()), variant);
}

/// Scores with every +inf replaced by finite values above the largest
/// finite score, ordered by the tie-break key. Ranking order is unchanged.
Eigen::VectorXd order_preserving_scores(const CentralityScores& scores);

/// 0.1, 0.2, ..., 1.0
std::vector<double> default_betas();

struct SweepConfig {
  std::vector<double> betas = default_betas();
  int t_max = 10;
  int runs = 100;
  std::uint64_t rng_seed = 1;
  TauVariant variant = TauVariant::A;
  unsigned threads = 1;
};

struct TauSweep {
  std::vector<double> betas;
  std::vector<std::string> methods;
  /// tau(method m, beta b) at (m, b).
  Eigen::MatrixXd tau;
  /// Per-node spreading ability for each beta, shared by all methods.
  std::vector<Eigen::VectorXd> spreading;
  SweepConfig config;
};

/// Stream seed for the spreading-ability batch at one beta.
std::uint64_t sweep_seed(std::uint64_t rng_seed, double beta);

/// Correlates each method's scores with SI spreading ability for every beta.
TauSweep tau_vs_beta_sweep(const Graph& g, std::span<const CentralityScores> methods, const SweepConfig& config);

struct TopKConfig {
  std::size_t k = 10;
  double beta = 0.1;
  int t_max = 25;
  int runs = 100;
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};

struct SpreadingCurveSet {
  std::vector<std::string> methods;
  std::vector<std::vector<NodeId>> seeds;
  std::vector<SiOutcome> curves;
  TopKConfig config;
  std::vector<std::string> warnings;
};

/// Seeds an SI run with each method's top-k nodes.
SpreadingCurveSet topk_spreading(const Graph& g, std::span<const CentralityScores> methods, const TopKConfig& config);

}  // namespace vital
