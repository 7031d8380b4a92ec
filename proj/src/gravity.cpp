#include <algorithm>
#include <cmath>
#include <limits>

#include "vital/centrality.hpp"
#include "vital/error.hpp"

namespace vital {

Eigen::VectorXd gravity_sums(const Graph& g, const DistanceMatrix& d, double radius, const Eigen::VectorXd& weights) {
  const NodeId n = g.node_count();
  const bool weighted = weights.size() != 0;
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(n);
  for (NodeId i = 0; i < n; ++i) {
    const double ki = g.degree(i);
    const auto column = d.matrix().col(i);
    double total = 0.0;
    for (NodeId j = 0; j < n; ++j) {
      const std::int32_t hops = column[j];
      if (hops <= 0 || static_cast<double>(hops) > radius) continue;
      const double base = ki * static_cast<double>(g.degree(j)) / (static_cast<double>(hops) * hops);
      total += weighted ? weights[i] * weights[j] * base : base;
    }
    sums[i] = total;
  }
  return sums;
}

namespace {

void warn_if_empty_radius(const DistanceMatrix& d, double radius, CentralityScores& out) {
  if (radius >= 1.0) return;
  for (NodeId j = 0; j < d.size(); ++j)
    for (NodeId i = 0; i < d.size(); ++i)
      if (i != j && d.reachable(i, j) && d(i, j) <= radius) return;
  out.warnings.push_back("truncation radius " + std::to_string(radius) +
                         " excludes every node pair; all gravity scores are zero");
}

CentralityScores finish(const Graph& g, std::string method, Eigen::VectorXd scores) {
  CentralityScores out;
  out.method = std::move(method);
  out.scores = std::move(scores);
  out.tie_break = Eigen::VectorXd::Zero(g.node_count());
  out.ranking = rank_nodes(g, out.scores, out.tie_break);
  return out;
}

}  // namespace

CentralityScores gravity(const Graph& g, const DistanceMatrix& d, Radius radius) {
  const double r = resolve_radius(radius, d);
  auto out = finish(g, "g", gravity_sums(g, d, r));
  out.params["radius"] = r;
  warn_if_empty_radius(d, r, out);
  return out;
}

Eigen::VectorXd principal_eigenvector(const Graph& g, const PowerIterationOptions& options) {
  const NodeId n = g.node_count();
  const auto component = connected_components(g);
  const NodeId components = n == 0 ? 0 : *std::max_element(component.begin(), component.end()) + 1;

  auto normalize = [&](Eigen::VectorXd& v) {
    Eigen::VectorXd norms = Eigen::VectorXd::Zero(components);
    for (NodeId i = 0; i < n; ++i) norms[component[i]] += v[i] * v[i];
    norms = norms.cwiseSqrt();
    for (NodeId i = 0; i < n; ++i) v[i] /= norms[component[i]];
  };

  const Eigen::SparseMatrix<double> a = g.adjacency_matrix();
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  normalize(x);
  constexpr double kRoundoff = 1e-15;
  double change = std::numeric_limits<double>::infinity();
  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    Eigen::VectorXd next = a * x + x;
    normalize(next);
    const double previous = change;
    change = (next - x).lpNorm<Eigen::Infinity>();
    x = std::move(next);
    // Distance to the fixed point is about change * rate / (1 - rate).
    const double rate = change / previous;
    const double remaining = rate < 1.0 ? change * rate / (1.0 - rate) : change;
    if (change < kRoundoff || (change < options.tolerance && remaining < options.tolerance)) return x;
  }
  throw ConvergenceError("principal eigenvector did not converge", change, options.max_iterations);
}

CentralityScores weighted_gravity(const Graph& g, const DistanceMatrix& d, Radius radius,
                                  const PowerIterationOptions& options) {
  const double r = resolve_radius(radius, d);
  const Eigen::VectorXd e = principal_eigenvector(g, options);
  auto out = finish(g, "wg", e.cwiseProduct(gravity_sums(g, d, r)));
  out.params["radius"] = r;
  warn_if_empty_radius(d, r, out);
  return out;
}

CentralityScores generalized_gravity(const Graph& g, const DistanceMatrix& d, double alpha, Radius radius) {
  if (!std::isfinite(alpha)) throw ComputeError("alpha must be finite");
  const double r = resolve_radius(radius, d);
  const Eigen::VectorXd damping = (-alpha * local_clustering(g)).array().exp();
  auto out = finish(g, "gg", gravity_sums(g, d, r, damping));
  out.params["alpha"] = alpha;
  out.params["radius"] = r;
  warn_if_empty_radius(d, r, out);
  return out;
}

CentralityScores neg(const Graph& g, const DistanceMatrix& d, const EfficiencyReport& efficiency, Radius radius) {
  const NodeId n = g.node_count();
  if (n < 3) throw ComputeError("NEG needs at least 3 nodes");
  if (efficiency.ratio.size() != n) throw ComputeError("efficiency report does not match graph");

  const double r = radius.kind == Radius::Kind::None ? std::numeric_limits<double>::infinity()
                                                     : resolve_radius(radius, d);
  const Eigen::VectorXd sums = gravity_sums(g, d, r);
  Eigen::VectorXd scores(n);
  Eigen::VectorXd tie_break = Eigen::VectorXd::Zero(n);
  for (NodeId i = 0; i < n; ++i) {
    const double ratio = efficiency.ratio[i];
    if (std::isinf(ratio)) {
      scores[i] = ratio;
      tie_break[i] = sums[i];
    } else {
      scores[i] = ratio * sums[i];
    }
  }

  CentralityScores out;
  out.method = "neg";
  out.scores = std::move(scores);
  out.tie_break = std::move(tie_break);
  out.ranking = rank_nodes(g, out.scores, out.tie_break);
  if (std::isfinite(r)) out.params["radius"] = r;
  return out;
}

}  // namespace vital
