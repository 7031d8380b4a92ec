#include "vital/efficiency.hpp"

#include <algorithm>
#include <limits>
#include <span>

#include "vital/error.hpp"
#include "vital/parallel.hpp"

namespace vital {

namespace {

void accumulate_source(const Graph& g, NodeId source, NodeId skip, std::vector<std::int32_t>& dist,
                       std::vector<NodeId>& queue, DistanceHistogram& histogram) {
  bfs_distances(g, source, dist, queue, skip);
  // Queue holds reached nodes in nondecreasing distance order.
  for (NodeId v : queue) {
    const auto hops = static_cast<std::size_t>(dist[v]);
    if (hops == 0) continue;
    if (histogram.size() <= hops) histogram.resize(hops + 1, 0);
    ++histogram[hops];
  }
}

void merge_into(DistanceHistogram& total, const DistanceHistogram& part) {
  if (total.size() < part.size()) total.resize(part.size(), 0);
  for (std::size_t k = 0; k < part.size(); ++k) total[k] += part[k];
}

// Histogram over all sources with `skip` deleted (skip < 0 keeps every node).
DistanceHistogram parallel_histogram(const Graph& g, NodeId skip, unsigned threads) {
  const auto n = static_cast<std::size_t>(g.node_count());
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<DistanceHistogram> parts(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::vector<std::int32_t> dist(n);
    std::vector<NodeId> queue;
    const std::size_t end = std::min(n, (b + 1) * kReductionBlock);
    for (std::size_t s = b * kReductionBlock; s < end; ++s)
      if (static_cast<NodeId>(s) != skip) accumulate_source(g, static_cast<NodeId>(s), skip, dist, queue, parts[b]);
  });
  DistanceHistogram total(2, 0);
  for (const auto& part : parts) merge_into(total, part);
  return total;
}

}  // namespace

double efficiency_from_histogram(const DistanceHistogram& histogram, std::int64_t node_count) {
  double sum = 0.0;
  for (std::size_t hops = 1; hops < histogram.size(); ++hops)
    sum += static_cast<double>(histogram[hops]) / static_cast<double>(hops);
  return sum / (static_cast<double>(node_count) * static_cast<double>(node_count - 1));
}

double network_efficiency(const Graph& g, unsigned threads) {
  if (g.node_count() < 2) throw ComputeError("network efficiency needs at least 2 nodes");
  return efficiency_from_histogram(parallel_histogram(g, -1, threads), g.node_count());
}

double network_efficiency(const DistanceMatrix& d) {
  if (d.size() < 2) throw ComputeError("network efficiency needs at least 2 nodes");
  DistanceHistogram histogram(2, 0);
  for (const std::int32_t hops : d.matrix().reshaped()) {
    if (hops <= 0) continue;
    if (histogram.size() <= static_cast<std::size_t>(hops)) histogram.resize(hops + 1, 0);
    ++histogram[hops];
  }
  return efficiency_from_histogram(histogram, d.size());
}

double deleted_efficiency(const Graph& g, NodeId removed, unsigned threads) {
  if (g.node_count() < 3) throw ComputeError("node deletion needs at least 3 nodes");
  if (removed < 0 || removed >= g.node_count()) throw ComputeError("node index out of range");
  return efficiency_from_histogram(parallel_histogram(g, removed, threads), g.node_count() - 1);
}

EfficiencyReport efficiency_ratios(const Graph& g, unsigned threads) {
  const NodeId n = g.node_count();
  if (n < 3) throw ComputeError("efficiency ratios need at least 3 nodes");

  EfficiencyReport report;
  report.global_efficiency = network_efficiency(g, threads);
  report.deleted_efficiency.resize(n);
  report.ratio.resize(n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    const auto node = static_cast<NodeId>(i);
    report.deleted_efficiency[node] = efficiency_from_histogram(parallel_histogram(g, node, 1), n - 1);
  });
  for (NodeId i = 0; i < n; ++i) {
    const double remaining = report.deleted_efficiency[i];
    report.ratio[i] = remaining == 0.0 ? std::numeric_limits<double>::infinity()
                                       : report.global_efficiency / remaining;
  }
  return report;
}

}  // namespace vital
