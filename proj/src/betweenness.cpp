#include <algorithm>

#include "vital/centrality.hpp"
#include "vital/parallel.hpp"

namespace vital {

namespace {

// Brandes accumulation for unweighted graphs, one source at a time. The
// pair (s, t) is visited from both ends, so totals are halved at the end.
struct BrandesWorkspace {
  explicit BrandesWorkspace(NodeId n) : dist(n), paths(n), dependency(n) { order.reserve(n); }

  void accumulate(const Graph& g, NodeId source, Eigen::VectorXd& into) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(paths.begin(), paths.end(), 0.0);
    std::fill(dependency.begin(), dependency.end(), 0.0);
    order.clear();

    dist[source] = 0;
    paths[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          order.push_back(v);
        }
        if (dist[v] == dist[u] + 1) paths[v] += paths[u];
      }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) dependency[v] += paths[v] / paths[w] * (1.0 + dependency[w]);
      if (w != source) into[w] += dependency[w];
    }
  }

  std::vector<std::int32_t> dist;
  std::vector<double> paths;
  std::vector<double> dependency;
  std::vector<NodeId> order;
};

}  // namespace

CentralityScores betweenness(const Graph& g, unsigned threads) {
  const NodeId n = g.node_count();
  const std::size_t blocks = (static_cast<std::size_t>(n) + kReductionBlock - 1) / kReductionBlock;
  std::vector<Eigen::VectorXd> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    BrandesWorkspace work(n);
    partial[b] = Eigen::VectorXd::Zero(n);
    const auto end = std::min<std::size_t>(n, (b + 1) * kReductionBlock);
    for (std::size_t s = b * kReductionBlock; s < end; ++s) work.accumulate(g, static_cast<NodeId>(s), partial[b]);
  });

  Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
  for (const auto& part : partial) total += part;

  CentralityScores out;
  out.method = "bc";
  out.scores = total / 2.0;
  out.tie_break = Eigen::VectorXd::Zero(n);
  out.ranking = rank_nodes(g, out.scores, out.tie_break);
  return out;
}

}  // namespace vital
