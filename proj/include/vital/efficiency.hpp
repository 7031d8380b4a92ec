#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "vital/graph.hpp"

namespace vital {

/// Count of ordered node pairs at each hop distance; index 0 is unused.
/// Sums of 1/d over such a histogram do not depend on node order.
using DistanceHistogram = std::vector<std::int64_t>;

/// Pairs are ordered and unreachable pairs contribute nothing.
double efficiency_from_histogram(const DistanceHistogram& histogram, std::int64_t node_count);

/// Mean inverse hop distance over ordered pairs: sum_{i!=j} 1/d_ij / (N(N-1)).
/// Unreachable pairs contribute 0. Throws ComputeError for N < 2.
double network_efficiency(const Graph& g, unsigned threads = 1);
double network_efficiency(const DistanceMatrix& d);

/// Efficiency of the graph with node `removed` deleted, measured as a graph
/// on N-1 nodes. Throws ComputeError for N < 3.
double deleted_efficiency(const Graph& g, NodeId removed, unsigned threads = 1);

struct EfficiencyReport {
  double global_efficiency = 0.0;
  Eigen::VectorXd deleted_efficiency;
  /// global / deleted; +inf where the deleted efficiency is 0.
  Eigen::VectorXd ratio;
};

EfficiencyReport efficiency_ratios(const Graph& g, unsigned threads = 1);

}  // namespace vital
