#include "vital/centrality.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "vital/error.hpp"

namespace vital {

namespace {

constexpr std::array kMethods{Method::Degree,      Method::Gravity,            Method::WeightedGravity,
                              Method::GeneralizedGravity, Method::Betweenness, Method::ResourceAllocation,
                              Method::QuasiLaplacian, Method::Neg};

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Degree: return "degree";
    case Method::Gravity: return "g";
    case Method::WeightedGravity: return "wg";
    case Method::GeneralizedGravity: return "gg";
    case Method::Betweenness: return "bc";
    case Method::ResourceAllocation: return "ira";
    case Method::QuasiLaplacian: return "ql";
    case Method::Neg: return "neg";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::span<const Method> all_methods() { return kMethods; }

NodeId CentralityScores::rank_of(NodeId node) const {
  const auto it = std::find(ranking.begin(), ranking.end(), node);
  return it == ranking.end() ? -1 : static_cast<NodeId>(it - ranking.begin());
}

std::vector<NodeId> rank_nodes(const Graph& g, const Eigen::VectorXd& scores, const Eigen::VectorXd& tie_break) {
  std::vector<NodeId> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), 0);
  const bool secondary = tie_break.size() == scores.size();
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (secondary && tie_break[a] != tie_break[b]) return tie_break[a] > tie_break[b];
    return g.label_rank(a) < g.label_rank(b);
  });
  return order;
}

double resolve_radius(const Radius& radius, const DistanceMatrix& d) {
  switch (radius.kind) {
    case Radius::Kind::Auto: return mean_shortest_path(d) / 2.0;
    case Radius::Kind::None: return std::numeric_limits<double>::infinity();
    case Radius::Kind::Fixed: return radius.value;
  }
  return radius.value;
}

CentralityScores degree_centrality(const Graph& g) {
  CentralityScores out;
  out.method = "degree";
  out.scores.resize(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out.scores[i] = g.degree(i);
  out.tie_break = Eigen::VectorXd::Zero(g.node_count());
  out.ranking = rank_nodes(g, out.scores, out.tie_break);
  return out;
}

double quasi_laplacian_energy(const Graph& g) {
  double energy = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double k = g.degree(i);
    energy += k + k * k;
  }
  return energy;
}

CentralityScores quasi_laplacian(const Graph& g) {
  if (g.node_count() < 2) throw ComputeError("quasi-Laplacian centrality needs at least 2 nodes");
  CentralityScores out;
  out.method = "ql";
  out.scores.resize(g.node_count());
  // Deleting i drops k_i + k_i^2 and lowers each neighbor's k + k^2 by 2 k_j.
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double k = g.degree(i);
    double neighbor_loss = 0.0;
    for (NodeId j : g.neighbors(i)) neighbor_loss += 2.0 * g.degree(j);
    out.scores[i] = k + k * k + neighbor_loss;
  }
  out.tie_break = Eigen::VectorXd::Zero(g.node_count());
  out.ranking = rank_nodes(g, out.scores, out.tie_break);
  return out;
}

const DistanceMatrix& Ranker::distances() {
  if (!distances_) distances_ = all_pairs_shortest_paths(graph_, threads_);
  return *distances_;
}

const EfficiencyReport& Ranker::efficiency() {
  if (!efficiency_) efficiency_ = efficiency_ratios(graph_, threads_);
  return *efficiency_;
}

CentralityScores Ranker::run(Method method, const MethodOptions& options) {
  switch (method) {
    case Method::Degree: return degree_centrality(graph_);
    case Method::Gravity: return gravity(graph_, distances(), options.radius.value_or(Radius::automatic()));
    case Method::WeightedGravity:
      return weighted_gravity(graph_, distances(), options.radius.value_or(Radius::automatic()), options.power);
    case Method::GeneralizedGravity:
      return generalized_gravity(graph_, distances(), options.alpha, options.radius.value_or(Radius::automatic()));
    case Method::Betweenness: return betweenness(graph_, threads_);
    case Method::ResourceAllocation: return iterative_resource_allocation(graph_, options.resource);
    case Method::QuasiLaplacian: return quasi_laplacian(graph_);
    case Method::Neg: return neg(graph_, distances(), efficiency(), options.radius.value_or(Radius::none()));
  }
  throw ComputeError("unknown method");
}

}  // namespace vital
