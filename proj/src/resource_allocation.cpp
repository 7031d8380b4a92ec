#include <Eigen/SparseCore>

#include <algorithm>
#include <vector>

#include "vital/centrality.hpp"
#include "vital/error.hpp"

namespace vital {

namespace {

// Column-stochastic transfer matrix: x_ij = a_ij k_i / sum_{l in N(j)} k_l.
// An isolated node gets x_jj = 1 and keeps its resource.
Eigen::SparseMatrix<double> transfer_matrix(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(2 * g.edge_count() + n);
  for (NodeId j = 0; j < n; ++j) {
    if (g.degree(j) == 0) {
      entries.emplace_back(j, j, 1.0);
      continue;
    }
    double neighborhood = 0.0;
    for (NodeId l : g.neighbors(j)) neighborhood += g.degree(l);
    for (NodeId i : g.neighbors(j)) entries.emplace_back(i, j, g.degree(i) / neighborhood);
  }
  Eigen::SparseMatrix<double> x(n, n);
  x.setFromTriplets(entries.begin(), entries.end());
  return x;
}

}  // namespace

Eigen::VectorXd resource_allocation_step(const Graph& g, const Eigen::VectorXd& resource) {
  if (resource.size() != g.node_count()) throw ComputeError("resource vector does not match graph");
  return transfer_matrix(g) * resource;
}

CentralityScores iterative_resource_allocation(const Graph& g, const ResourcePolicy& policy,
                                               std::vector<Eigen::VectorXd>* trajectory) {
  if (policy.max_steps < 1) throw ComputeError("resource allocation needs at least one step");
  const NodeId n = g.node_count();
  const Eigen::SparseMatrix<double> transfer = transfer_matrix(g);

  Eigen::VectorXd previous = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd current = previous;
  if (trajectory) trajectory->assign(1, previous);

  bool converged = false;
  int steps = 0;
  for (steps = 1; steps <= policy.max_steps; ++steps) {
    current = transfer * previous;
    if (trajectory) trajectory->push_back(current);
    if ((current - previous).lpNorm<Eigen::Infinity>() < policy.tolerance) {
      converged = true;
      break;
    }
    if (steps < policy.max_steps) previous = current;
  }
  steps = std::min(steps, policy.max_steps);

  CentralityScores out;
  out.method = "ira";
  out.params["steps"] = steps;
  out.params["max_steps"] = policy.max_steps;
  out.params["tolerance"] = policy.tolerance;
  out.converged = converged;
  out.scores = 0.5 * (previous + current);
  out.tie_break = Eigen::VectorXd::Zero(n);
  out.ranking = rank_nodes(g, out.scores, out.tie_break);
  if (!converged)
    out.warnings.push_back("resource allocation did not converge within " + std::to_string(policy.max_steps) +
                           " steps; scores average the last two iterates");
  return out;
}

}  // namespace vital
