#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vital/centrality.hpp"
#include "vital/error.hpp"

using namespace vital;
using namespace vital::testing;

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// The K4 on nodes 0..3 with node 4 hanging off node 0.
Graph k4_with_pendant() {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}};
  return Graph::from_edges(5, edges);
}

// Cut vertices by brute force: removal increases the component count.
std::vector<bool> cut_vertices(const Graph& g) {
  auto count = [](const Graph& x) {
    const auto c = connected_components(x);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  };
  const NodeId base = count(g);
  std::vector<bool> cut(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const NodeId isolated_self = g.degree(i) == 0 ? 1 : 0;
    cut[i] = count(g.without_node(i)) > base - isolated_self;
  }
  return cut;
}

}  // namespace

TEST_CASE("method names round-trip") {
  for (Method m : all_methods()) CHECK(parse_method(method_name(m)) == m);
  CHECK_FALSE(parse_method("bogus").has_value());
  CHECK(all_methods().size() == 8);
}

TEST_CASE("degree centrality") {
  CHECK(to_std(degree_centrality(star_graph(3)).scores) == std::vector<double>{3, 1, 1, 1});
  CHECK(to_std(degree_centrality(complete_graph(4)).scores) == std::vector<double>{3, 3, 3, 3});
  CHECK(to_std(degree_centrality(path_graph(5)).scores) == std::vector<double>{1, 2, 2, 2, 1});
}

TEST_CASE("ranking breaks ties by ascending label") {
  const auto g = parse_edge_list("10 2\n2 3\n3 10\n").graph;  // triangle, labels 10, 2, 3
  const auto scores = degree_centrality(g);
  std::vector<std::string> order;
  for (NodeId i : scores.ranking) order.push_back(g.label(i));
  CHECK(order == std::vector<std::string>{"2", "3", "10"});
}

TEST_CASE("gravity on P5 and K3") {
  const auto p5 = path_graph(5);
  const auto d = all_pairs_shortest_paths(p5);
  const auto g = gravity(p5, d);
  CHECK(g.params.at("radius") == 1.0);
  CHECK(g.scores[2] == 8.0);
  CHECK(g.scores[0] == 2.0);
  CHECK(g.warnings.empty());

  const auto k3 = complete_graph(3);
  const auto gk = gravity(k3, all_pairs_shortest_paths(k3));
  CHECK(gk.scores.isZero());
  CHECK(gk.warnings.size() == 1);
}

TEST_CASE("gravity matches direct evaluation for every radius policy") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi(25, 0.12, rng);
    const auto d = all_pairs_shortest_paths(g);
    if (g.edge_count() == 0) continue;
    for (const auto radius : {Radius::automatic(), Radius::none(), Radius::fixed(2.0), Radius::fixed(2.5)}) {
      const double r = resolve_radius(radius, d);
      const auto got = gravity(g, d, radius);
      const auto want = oracle::gravity(g, r);
      for (NodeId i = 0; i < g.node_count(); ++i) CHECK(got.scores[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("principal eigenvector of P5 is the sine mode") {
  const auto e = principal_eigenvector(path_graph(5));
  for (NodeId k = 0; k < 5; ++k)
    CHECK(e[k] == doctest::Approx(std::sin((k + 1) * std::numbers::pi / 6.0) / std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("principal eigenvector agrees with a dense symmetric solver") {
  Rng rng(55);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = random_connected(30, 0.08, rng);
    const Eigen::MatrixXd a = Eigen::MatrixXd(g.adjacency_matrix());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    Eigen::VectorXd want = solver.eigenvectors().col(a.rows() - 1);
    if (want.sum() < 0) want = -want;
    const auto got = principal_eigenvector(g);
    CHECK((got - want).lpNorm<Eigen::Infinity>() < 1e-9);
    CHECK(got.minCoeff() >= 0.0);
  }
}

TEST_CASE("principal eigenvector normalizes each component") {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {3, 4}};
  const auto e = principal_eigenvector(Graph::from_edges(6, edges));
  CHECK(e.head(3).norm() == doctest::Approx(1.0));
  CHECK(e.segment(3, 2).norm() == doctest::Approx(1.0));
  CHECK(e[5] == doctest::Approx(1.0));
}

TEST_CASE("power iteration reports non-convergence") {
  PowerIterationOptions tight;
  tight.max_iterations = 2;
  CHECK_THROWS_AS(principal_eigenvector(path_graph(30), tight), ConvergenceError);
}

TEST_CASE("weighted gravity") {
  const auto p5 = path_graph(5);
  const auto wg = weighted_gravity(p5, all_pairs_shortest_paths(p5));
  CHECK(wg.scores[2] == doctest::Approx(8.0 / std::sqrt(3.0)).epsilon(1e-10));
  CHECK(wg.scores[2] == doctest::Approx(4.618802).epsilon(1e-6));

  const auto k4 = complete_graph(4);
  CHECK(principal_eigenvector(k4).isApprox(Eigen::VectorXd::Constant(4, 0.5), 1e-12));
  const auto wk4 = weighted_gravity(k4, all_pairs_shortest_paths(k4), Radius::none());
  CHECK((wk4.scores.array() - wk4.scores[0]).abs().maxCoeff() < 1e-12);

  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = trial == 0 ? star_graph(3) : random_connected(20, 0.1, rng);
    const auto d = all_pairs_shortest_paths(g);
    const auto e = principal_eigenvector(g);
    const auto plain = gravity(g, d);
    const auto weighted = weighted_gravity(g, d);
    for (NodeId i = 0; i < g.node_count(); ++i) CHECK(std::abs(weighted.scores[i] - e[i] * plain.scores[i]) <= 1e-9);
  }
}

TEST_CASE("generalized gravity reductions") {
  Rng rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = erdos_renyi(20, 0.25, rng);
    if (g.edge_count() == 0) continue;
    const auto d = all_pairs_shortest_paths(g);
    CHECK(generalized_gravity(g, d, 0.0).scores == gravity(g, d).scores);

    const auto tree = random_tree(20, rng);
    const auto dt = all_pairs_shortest_paths(tree);
    for (double alpha : {0.5, 1.0, 3.0}) CHECK(generalized_gravity(tree, dt, alpha).scores == gravity(tree, dt).scores);
  }
  const auto p5 = path_graph(5);
  const auto d5 = all_pairs_shortest_paths(p5);
  CHECK(generalized_gravity(p5, d5, 2.0).scores == gravity(p5, d5).scores);
  CHECK_THROWS_AS(generalized_gravity(p5, d5, std::numeric_limits<double>::infinity()), ComputeError);
}

TEST_CASE("generalized gravity on K4 with a pendant matches brute force") {
  const auto g = k4_with_pendant();
  const auto d = all_pairs_shortest_paths(g);
  for (double alpha : {1.0, 0.3}) {
    for (const auto radius : {Radius::automatic(), Radius::none()}) {
      const double r = resolve_radius(radius, d);
      std::vector<double> damping;
      for (NodeId i = 0; i < g.node_count(); ++i) damping.push_back(std::exp(-alpha * oracle::clustering(g, i)));
      const auto want = oracle::gravity(g, r, damping);
      const auto got = generalized_gravity(g, d, alpha, radius);
      for (NodeId i = 0; i < g.node_count(); ++i) CHECK(got.scores[i] == doctest::Approx(want[i]).epsilon(1e-13));
    }
  }
  // LCC(0) = 3 / (4 * 3) = 1/4, the others 3 / 6 = 1/2 or 0 for the pendant.
  CHECK(oracle::clustering(g, 0) == 0.25);
  CHECK(local_clustering(g, 0) == 0.25);
  CHECK(local_clustering(g, 1) == 0.5);
  CHECK(local_clustering(g, 4) == 0.0);
}

TEST_CASE("betweenness examples") {
  CHECK(betweenness(path_graph(3)).scores[1] == 1.0);
  const auto star = betweenness(star_graph(4));
  CHECK(star.scores[0] == 6.0);
  for (NodeId leaf = 1; leaf <= 4; ++leaf) CHECK(star.scores[leaf] == 0.0);
}

TEST_CASE("betweenness matches shortest-path enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const NodeId n = std::uniform_int_distribution<NodeId>(2, 8)(rng);
    const auto g = trial % 3 == 0 ? erdos_renyi(n, 0.4, rng) : random_connected(n, 0.3, rng);
    const auto got = betweenness(g);
    const auto want = oracle::betweenness_by_enumeration(g);
    for (NodeId i = 0; i < n; ++i) REQUIRE(std::abs(got.scores[i] - want[i].value()) <= 1e-12);
  }
}

TEST_CASE("betweenness does not depend on the thread count") {
  Rng rng(71);
  const auto g = random_connected(150, 0.02, rng);
  CHECK(betweenness(g, 1).scores == betweenness(g, 3).scores);
}

TEST_CASE("resource allocation steps") {
  const auto p3 = path_graph(3);
  const auto one = resource_allocation_step(p3, Eigen::VectorXd::Ones(3));
  CHECK(to_std(one) == std::vector<double>{0.5, 2.0, 0.5});

  std::vector<Eigen::VectorXd> trajectory;
  const auto k4 = iterative_resource_allocation(complete_graph(4), {}, &trajectory);
  CHECK(k4.converged);
  for (const auto& step : trajectory) CHECK(step == Eigen::VectorXd::Ones(4));
  CHECK(k4.scores == Eigen::VectorXd::Ones(4));

  // P3 alternates between (1,1,1) and (0.5,2,0.5) forever.
  const auto oscillating = iterative_resource_allocation(p3);
  CHECK_FALSE(oscillating.converged);
  CHECK(oscillating.warnings.size() == 1);
  CHECK(oscillating.params.at("steps") == 100);
  CHECK(oscillating.scores.isApprox(Eigen::Vector3d(0.75, 1.5, 0.75)));
}

TEST_CASE("resource allocation matches a dense transfer-matrix oracle") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_connected(15, 0.15, rng);
    const NodeId n = g.node_count();
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    const auto a = oracle::adjacency(g);
    for (NodeId j = 0; j < n; ++j) {
      double column = 0.0;
      for (NodeId l = 0; l < n; ++l) column += a[l][j] * g.degree(l);
      for (NodeId i = 0; i < n; ++i) x(i, j) = a[i][j] * g.degree(i) / column;
    }
    Eigen::VectorXd state = Eigen::VectorXd::Ones(n);
    std::vector<Eigen::VectorXd> trajectory;
    iterative_resource_allocation(g, {}, &trajectory);
    for (std::size_t t = 1; t < trajectory.size(); ++t) {
      state = x * state;
      CHECK((trajectory[t] - state).lpNorm<Eigen::Infinity>() < 1e-12);
    }
  }
}

TEST_CASE("resource allocation conserves total resource") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi(40, 0.08, rng);
    std::vector<Eigen::VectorXd> trajectory;
    iterative_resource_allocation(g, {}, &trajectory);
    for (const auto& step : trajectory) CHECK(std::abs(step.sum() - g.node_count()) <= 1e-9);
  }
}

TEST_CASE("isolated nodes keep their resource") {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 0}};
  const auto result = iterative_resource_allocation(Graph::from_edges(4, edges));
  CHECK(result.scores[3] == 1.0);
}

TEST_CASE("quasi-Laplacian centrality") {
  const auto star = star_graph(3);
  CHECK(quasi_laplacian_energy(star) == 18.0);
  const auto ql = quasi_laplacian(star);
  CHECK(ql.scores[0] == 18.0);
  CHECK(ql.scores[1] == 8.0);

  const std::vector<Edge> none;
  CHECK(quasi_laplacian(Graph::from_edges(3, none)).scores.isZero());

  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = erdos_renyi(20, 0.2, rng);
    const auto scores = quasi_laplacian(g);
    for (NodeId i = 0; i < g.node_count(); ++i)
      CHECK(scores.scores[i] == quasi_laplacian_energy(g) - quasi_laplacian_energy(g.without_node(i)));
  }
}

TEST_CASE("NEG examples") {
  const auto star = star_graph(3);
  const auto d = all_pairs_shortest_paths(star);
  const auto s = neg(star, d, efficiency_ratios(star));
  CHECK(std::isinf(s.scores[0]));
  CHECK(s.ranking.front() == 0);
  for (NodeId leaf = 1; leaf <= 3; ++leaf) CHECK(std::abs(s.scores[leaf] - 3.15) <= 1e-9);

  const auto k4 = complete_graph(4);
  const auto sk = neg(k4, all_pairs_shortest_paths(k4), efficiency_ratios(k4));
  for (NodeId i = 0; i < 4; ++i) CHECK(sk.scores[i] == 27.0);
  CHECK(sk.ranking == std::vector<NodeId>{0, 1, 2, 3});

  CHECK_THROWS_AS(neg(path_graph(2), all_pairs_shortest_paths(path_graph(2)), EfficiencyReport{}), ComputeError);
}

TEST_CASE("NEG matches direct evaluation") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = erdos_renyi(18, 0.15, rng);
    const auto report = efficiency_ratios(g);
    const auto s = neg(g, all_pairs_shortest_paths(g), report);
    const auto sums = oracle::gravity(g, std::numeric_limits<double>::infinity());
    const double global = oracle::efficiency(g);
    for (NodeId i = 0; i < g.node_count(); ++i) {
      const double deleted = oracle::efficiency(g.without_node(i));
      if (deleted == 0.0) {
        CHECK(std::isinf(s.scores[i]));
      } else {
        CHECK(s.scores[i] == doctest::Approx(global / deleted * sums[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("NEG infinite scores and their ordering") {
  // Star plus two isolated nodes: only the center leaves an edgeless graph.
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}};
  const auto g = Graph::from_edges(6, edges);
  const auto s = neg(g, all_pairs_shortest_paths(g), efficiency_ratios(g));
  CHECK(std::isinf(s.scores[0]));
  CHECK(s.ranking.front() == 0);
  for (NodeId i = 1; i < 6; ++i) CHECK(std::isfinite(s.scores[i]));
  CHECK(s.tie_break[0] == 3.0 * 3 / 1);

  // A single edge plus an isolate: both endpoints are infinite and tie on
  // the gravity sum, so labels decide.
  const std::vector<Edge> one = {{1, 2}};
  const auto h = Graph::from_edges(3, one);
  const auto sh = neg(h, all_pairs_shortest_paths(h), efficiency_ratios(h));
  CHECK(sh.ranking == std::vector<NodeId>{1, 2, 0});

  // Edgeless: every ratio is infinite, ties fall to label order.
  const std::vector<Edge> none;
  const auto empty = Graph::from_edges(4, none);
  const auto se = neg(empty, all_pairs_shortest_paths(empty), efficiency_ratios(empty));
  CHECK(se.ranking == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("NEG puts isolating cut vertices above every non-cut vertex") {
  Rng rng(67);
  int sentinel_cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g;
    if (trial % 3 == 0) {
      g = star_graph(std::uniform_int_distribution<NodeId>(2, 12)(rng));
      g = relabel(g, random_permutation(g.node_count(), rng));
    } else {
      g = random_tree(std::uniform_int_distribution<NodeId>(3, 30)(rng), rng);
    }
    const auto report = efficiency_ratios(g);
    const auto s = neg(g, all_pairs_shortest_paths(g), report);
    const auto cut = cut_vertices(g);
    for (NodeId i = 0; i < g.node_count(); ++i) {
      if (report.deleted_efficiency[i] != 0.0) continue;
      ++sentinel_cases;
      for (NodeId j = 0; j < g.node_count(); ++j)
        if (!cut[j]) CHECK(s.rank_of(i) < s.rank_of(j));
    }
  }
  CHECK(sentinel_cases >= 20);
}

TEST_CASE("vertex-transitive graphs give uniform scores for every method") {
  for (const auto& g : {complete_graph(5), cycle_graph(6), cycle_graph(7)}) {
    Ranker ranker(g);
    for (Method m : all_methods()) {
      MethodOptions options;
      options.radius = Radius::none();
      const auto s = ranker.run(m, options);
      const double spread = s.scores.maxCoeff() - s.scores.minCoeff();
      CAPTURE(method_name(m));
      CHECK(spread <= 1e-9 * std::max(1.0, std::abs(s.scores.maxCoeff())));
    }
  }
}

TEST_CASE("scores are permutation-equivariant") {
  Rng rng(73);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = random_connected(16, 0.12, rng);
    const auto perm = random_permutation(g.node_count(), rng);
    const auto h = relabel(g, perm);
    Ranker rg(g), rh(h);
    for (Method m : all_methods()) {
      const auto a = rg.run(m);
      const auto b = rh.run(m);
      CAPTURE(method_name(m));
      for (NodeId i = 0; i < g.node_count(); ++i) {
        if (std::isinf(a.scores[i])) {
          CHECK(b.scores[perm[i]] == a.scores[i]);
        } else {
          CHECK(b.scores[perm[i]] == doctest::Approx(a.scores[i]).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("ranker applies method options") {
  const auto p5 = path_graph(5);
  Ranker ranker(p5);
  MethodOptions options;
  options.alpha = 0.0;
  CHECK(ranker.run(Method::GeneralizedGravity, options).scores == ranker.run(Method::Gravity).scores);
  options.radius = Radius::fixed(4);
  CHECK(ranker.run(Method::Gravity, options).scores.isApprox(
      ranker.run(Method::Neg).scores.cwiseQuotient(ranker.efficiency().ratio), 1e-14));
  const auto s = ranker.run(Method::Neg, options);
  CHECK(s.params.at("radius") == 4.0);
}
