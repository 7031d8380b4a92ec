#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vital/efficiency.hpp"
#include "vital/graph.hpp"

namespace vital {

enum class Method { Degree, Gravity, WeightedGravity, GeneralizedGravity, Betweenness, ResourceAllocation, QuasiLaplacian, Neg };

/// Short names used on the command line and in output files:
/// degree, g, wg, gg, bc, ira, ql, neg.
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::span<const Method> all_methods();

/// Per-node scores for one ranking method.
struct CentralityScores {
  std::string method;
  std::map<std::string, double> params;
  Eigen::VectorXd scores;
  /// Secondary key, compared only when scores tie. Zero unless the method
  /// emits infinite scores (NEG uses its gravity sum).
  Eigen::VectorXd tie_break;
  /// Node indices ordered best first.
  std::vector<NodeId> ranking;
  std::vector<std::string> warnings;
  bool converged = true;

  NodeId rank_of(NodeId node) const;
};

/// Descending score, then descending tie-break, then ascending label.
std::vector<NodeId> rank_nodes(const Graph& g, const Eigen::VectorXd& scores, const Eigen::VectorXd& tie_break);

/// Truncation radius for the gravity sums.
struct Radius {
  enum class Kind { Auto, None, Fixed };
  Kind kind = Kind::Auto;
  double value = 0.0;

  static Radius automatic() { return {Kind::Auto, 0.0}; }
  static Radius none() { return {Kind::None, 0.0}; }
  static Radius fixed(double r) { return {Kind::Fixed, r}; }
};

/// Auto resolves to half the mean shortest-path length; None to +inf.
double resolve_radius(const Radius& radius, const DistanceMatrix& d);

/// sum_{j != i, d_ij <= r} w_i w_j k_i k_j / d_ij^2 with w = 1 when `weights` is empty.
Eigen::VectorXd gravity_sums(const Graph& g, const DistanceMatrix& d, double radius,
                             const Eigen::VectorXd& weights = {});

CentralityScores degree_centrality(const Graph& g);

CentralityScores gravity(const Graph& g, const DistanceMatrix& d, Radius radius = Radius::automatic());

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

/// Nonnegative principal eigenvector of the adjacency matrix, unit
/// Euclidean norm within each connected component. Iterates on A + I so
/// bipartite graphs converge. Throws ConvergenceError on failure.
Eigen::VectorXd principal_eigenvector(const Graph& g, const PowerIterationOptions& options = {});

CentralityScores weighted_gravity(const Graph& g, const DistanceMatrix& d, Radius radius = Radius::automatic(),
                                  const PowerIterationOptions& options = {});

CentralityScores generalized_gravity(const Graph& g, const DistanceMatrix& d, double alpha = 1.0,
                                     Radius radius = Radius::automatic());

/// Shortest-path betweenness over unordered pairs, endpoints excluded.
CentralityScores betweenness(const Graph& g, unsigned threads = 1);

struct ResourcePolicy {
  int max_steps = 100;
  double tolerance = 1e-10;
};

/// One transfer of resource: node j hands its resource to its neighbors
/// in proportion to their degree. Isolated nodes keep theirs.
Eigen::VectorXd resource_allocation_step(const Graph& g, const Eigen::VectorXd& resource);

/// Starts from one unit per node and iterates until the L-inf change drops
/// below tolerance or max_steps transfers happen. Scores are the mean of
/// the last two iterates. `trajectory`, when given, receives every iterate
/// including the initial one.
CentralityScores iterative_resource_allocation(const Graph& g, const ResourcePolicy& policy = {},
                                               std::vector<Eigen::VectorXd>* trajectory = nullptr);

/// Sum of degrees plus sum of squared degrees.
double quasi_laplacian_energy(const Graph& g);
CentralityScores quasi_laplacian(const Graph& g);

/// E(G)/E(G-i) times the gravity sum; no truncation radius by default.
CentralityScores neg(const Graph& g, const DistanceMatrix& d, const EfficiencyReport& efficiency,
                     Radius radius = Radius::none());

struct MethodOptions {
  double alpha = 1.0;
  /// Overrides the method's default radius (auto for g/wg/gg, none for neg).
  std::optional<Radius> radius;
  ResourcePolicy resource;
  PowerIterationOptions power;
};

/// Computes any method on one graph, sharing the distance matrix and
/// efficiency report across calls.
class Ranker {
 public:
  explicit Ranker(const Graph& g, unsigned threads = 1) : graph_(g), threads_(threads) {}

  const DistanceMatrix& distances();
  const EfficiencyReport& efficiency();
  CentralityScores run(Method method, const MethodOptions& options = {});

 private:
  const Graph& graph_;
  unsigned threads_;
  std::optional<DistanceMatrix> distances_;
  std::optional<EfficiencyReport> efficiency_;
};

}  // namespace vital
