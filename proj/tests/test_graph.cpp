#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vital/error.hpp"
#include "vital/graph.hpp"

using namespace vital;
using namespace vital::testing;

namespace {

std::vector<NodeId> degrees(const Graph& g) {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < g.node_count(); ++i) out.push_back(g.degree(i));
  return out;
}

}  // namespace

TEST_CASE("parse_edge_list builds a path from two lines") {
  const auto parsed = parse_edge_list("1 2\n2 3");
  CHECK(parsed.graph.node_count() == 3);
  CHECK(parsed.graph.edge_count() == 2);
  CHECK(parsed.graph.has_edge(0, 1));
  CHECK(parsed.graph.has_edge(1, 2));
  CHECK_FALSE(parsed.graph.has_edge(0, 2));
}

TEST_CASE("parse_edge_list drops duplicates and self-loops") {
  const auto parsed = parse_edge_list("a b\nb a\na a");
  CHECK(parsed.graph.node_count() == 2);
  CHECK(parsed.graph.edge_count() == 1);
  CHECK(parsed.report.self_loops_dropped == 1);
  CHECK(parsed.report.duplicates_dropped == 1);
  CHECK(parsed.graph.label(0) == "a");
  CHECK(parsed.graph.label(1) == "b");
}

TEST_CASE("parse_edge_list maps labels in first-appearance order") {
  const auto parsed = parse_edge_list("1 2\n1 3\n1 4");
  const auto& g = parsed.graph;
  CHECK(degrees(g) == std::vector<NodeId>{3, 1, 1, 1});
  CHECK(g.label(0) == "1");
  CHECK(*g.find("4") == 3);
  CHECK_FALSE(g.find("5").has_value());
}

TEST_CASE("parse_edge_list skips comments and blank lines") {
  const auto parsed = parse_edge_list("# header\n% konect style\n\n   \n  # indented\nx y\r\n\ty z\n");
  CHECK(parsed.graph.node_count() == 3);
  CHECK(parsed.graph.edge_count() == 2);
  CHECK(parsed.report.data_lines == 2);
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  try {
    parse_edge_list("1 2\n# fine\n3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list("/nonexistent/edges.txt"), ParseError);
}

TEST_CASE("label ordering is numeric for integers") {
  CHECK(label_less("2", "10"));
  CHECK_FALSE(label_less("10", "2"));
  CHECK(label_less("-3", "1"));
  CHECK(label_less("99", "a"));
  CHECK(label_less("alpha", "beta"));
  const auto parsed = parse_edge_list("10 2\n2 b\n");
  const auto& g = parsed.graph;
  CHECK(g.label_rank(*g.find("2")) == 0);
  CHECK(g.label_rank(*g.find("10")) == 1);
  CHECK(g.label_rank(*g.find("b")) == 2);
}

TEST_CASE("shortest paths on small graphs") {
  const auto p3 = all_pairs_shortest_paths(path_graph(3));
  CHECK(p3(0, 2) == 2);
  CHECK(p3(2, 0) == 2);
  CHECK(p3(1, 1) == 0);

  const auto star = all_pairs_shortest_paths(star_graph(3));
  for (NodeId i = 1; i <= 3; ++i)
    for (NodeId j = 1; j <= 3; ++j)
      if (i != j) CHECK(star(i, j) == 2);

  const std::vector<Edge> split = {{0, 1}, {2, 3}};
  const auto two = all_pairs_shortest_paths(Graph::from_edges(4, split));
  CHECK(two(0, 2) == DistanceMatrix::kUnreachable);
  CHECK_FALSE(two.reachable(1, 3));
  CHECK(two(0, 1) == 1);
}

TEST_CASE("mean shortest path") {
  CHECK(mean_shortest_path(all_pairs_shortest_paths(path_graph(5))) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(mean_shortest_path(all_pairs_shortest_paths(complete_graph(3))) == 1.0);
  CHECK(mean_shortest_path(all_pairs_shortest_paths(star_graph(4))) == doctest::Approx(1.6).epsilon(1e-15));

  const std::vector<Edge> none;
  CHECK_THROWS_AS(mean_shortest_path(all_pairs_shortest_paths(Graph::from_edges(3, none))), ComputeError);

  // Only reachable pairs count: two disjoint edges give mean 1.
  const std::vector<Edge> split = {{0, 1}, {2, 3}};
  CHECK(mean_shortest_path(all_pairs_shortest_paths(Graph::from_edges(4, split))) == 1.0);
}

TEST_CASE("local clustering uses n_i over k_i(k_i-1)") {
  const auto k3 = complete_graph(3);
  for (NodeId i = 0; i < 3; ++i) CHECK(local_clustering(k3, i) == 0.5);
  const auto k4 = complete_graph(4);
  for (NodeId i = 0; i < 4; ++i) CHECK(local_clustering(k4, i) == 0.5);

  Rng rng(7);
  const auto tree = random_tree(20, rng);
  for (NodeId i = 0; i < tree.node_count(); ++i) CHECK(local_clustering(tree, i) == 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi(15, 0.4, rng);
    for (NodeId i = 0; i < g.node_count(); ++i) CHECK(local_clustering(g, i) == oracle::clustering(g, i));
  }
}

TEST_CASE("BFS distances match the relaxation oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const NodeId n = std::uniform_int_distribution<NodeId>(1, 40)(rng);
    const auto g = erdos_renyi(n, 0.1, rng);
    const auto d = all_pairs_shortest_paths(g);
    const auto expected = oracle::relaxation_distances(g);
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = 0; j < n; ++j) {
        const int want = expected[i][j] >= oracle::kInf ? DistanceMatrix::kUnreachable : expected[i][j];
        REQUIRE(d(i, j) == want);
      }
  }
}

TEST_CASE("distance matrix invariants on random graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi(25, 0.12, rng);
    const auto d = all_pairs_shortest_paths(g, 3);
    CHECK(d.matrix() == d.matrix().transpose());
    for (NodeId i = 0; i < g.node_count(); ++i) {
      CHECK(d(i, i) == 0);
      for (NodeId j = 0; j < g.node_count(); ++j)
        for (NodeId k = 0; k < g.node_count(); ++k)
          if (d.reachable(i, j) && d.reachable(j, k)) CHECK(d(i, k) <= d(i, j) + d(j, k));
    }
  }
}

TEST_CASE("degree sum is twice the edge count") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = erdos_renyi(30, 0.2, rng);
    std::size_t total = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) total += g.degree(i);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("input line order does not change the graph up to isomorphism") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = erdos_renyi(20, 0.2, rng);
    auto edges = g.edges();
    if (edges.empty()) continue;
    std::ostringstream a, b;
    for (const auto& [u, v] : edges) a << "n" << u << " n" << v << '\n';
    std::shuffle(edges.begin(), edges.end(), rng);
    for (const auto& [u, v] : edges) b << "n" << v << " n" << u << '\n';
    const auto ga = parse_edge_list(a.str()).graph;
    const auto gb = parse_edge_list(b.str()).graph;

    auto sorted_degrees = [](const Graph& x) {
      auto d = degrees(x);
      std::sort(d.begin(), d.end());
      return d;
    };
    CHECK(sorted_degrees(ga) == sorted_degrees(gb));

    auto distance_multiset = [](const Graph& x) {
      const auto d = all_pairs_shortest_paths(x);
      std::vector<std::int32_t> all(d.matrix().data(), d.matrix().data() + d.matrix().size());
      std::sort(all.begin(), all.end());
      return all;
    };
    CHECK(distance_multiset(ga) == distance_multiset(gb));

    // Same labels, same neighborhoods.
    for (NodeId i = 0; i < ga.node_count(); ++i) {
      const auto j = *gb.find(ga.label(i));
      std::vector<std::string> na, nb;
      for (NodeId v : ga.neighbors(i)) na.push_back(ga.label(v));
      for (NodeId v : gb.neighbors(j)) nb.push_back(gb.label(v));
      std::sort(na.begin(), na.end());
      std::sort(nb.begin(), nb.end());
      CHECK(na == nb);
    }
  }
}

TEST_CASE("induced subgraph keeps labels and internal edges") {
  const auto g = parse_edge_list("a b\nb c\nc d\nd a\na c\n").graph;
  const auto h = g.without_node(*g.find("c"));
  CHECK(h.node_count() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_edge(*h.find("a"), *h.find("b")));
  CHECK(h.has_edge(*h.find("a"), *h.find("d")));
  CHECK_FALSE(h.has_edge(*h.find("b"), *h.find("d")));
}

TEST_CASE("connected components and diameter") {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {3, 4}};
  const auto g = Graph::from_edges(6, edges);
  const auto c = connected_components(g);
  CHECK(c == std::vector<NodeId>{0, 0, 0, 1, 1, 2});
  CHECK(diameter(all_pairs_shortest_paths(g)) == 2);
  CHECK(diameter(all_pairs_shortest_paths(path_graph(7))) == 6);
}
