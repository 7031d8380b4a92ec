#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vital {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Orders node labels: integer-valued labels numerically, integers before
/// other strings, everything else lexicographically.
bool label_less(std::string_view a, std::string_view b);

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Nodes are dense indices [0, N) mapped to external string labels.
/// Neighbor lists are sorted and free of self-loops and duplicates.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `labels.size()` nodes. Self-loops and repeated
  /// edges in `edges` are dropped.
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Nodes labelled "0" .. "n-1".
  static Graph from_edges(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const noexcept { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId i) const noexcept {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  NodeId degree(NodeId i) const noexcept { return offsets_[i + 1] - offsets_[i]; }
  bool has_edge(NodeId i, NodeId j) const;

  /// Position of neighbor list i inside the flat target array; the pair
  /// (i, neighbors(i)[k]) has directed-edge index `adjacency_offset(i) + k`.
  NodeId adjacency_offset(NodeId i) const noexcept { return offsets_[i]; }

  const std::string& label(NodeId i) const { return labels_[i]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  /// Position of node i when all labels are sorted with `label_less`.
  NodeId label_rank(NodeId i) const noexcept { return label_rank_[i]; }

  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (any order, no repeats), labels carried over.
  Graph induced_subgraph(std::span<const NodeId> keep) const;
  Graph without_node(NodeId removed) const;

  Eigen::SparseMatrix<double> adjacency_matrix() const;

 private:
  std::vector<NodeId> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::string> labels_;
  std::vector<NodeId> label_rank_;
  std::unordered_map<std::string, NodeId> index_;
};

struct EdgeListReport {
  std::size_t data_lines = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

struct ParsedGraph {
  Graph graph;
  EdgeListReport report;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// and blank lines are skipped. Labels are assigned dense indices in order
/// of first appearance. Throws ParseError on a line without exactly two
/// tokens or when no edge lines are present.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph read_edge_list(const std::filesystem::path& path);

/// All-pairs hop distances. Stored column-major, column s holding the BFS
/// distances from source s.
class DistanceMatrix {
 public:
  using Storage = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>;
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(Storage hops) : hops_(std::move(hops)) {}

  NodeId size() const noexcept { return static_cast<NodeId>(hops_.rows()); }
  std::int32_t operator()(NodeId i, NodeId j) const { return hops_(i, j); }
  bool reachable(NodeId i, NodeId j) const { return hops_(i, j) != kUnreachable; }
  const Storage& matrix() const noexcept { return hops_; }

 private:
  Storage hops_;
};

/// Hop distances from `source`; unreachable nodes get kUnreachable.
/// `skip` (if in range) is treated as deleted from the graph.
void bfs_distances(const Graph& g, NodeId source, std::span<std::int32_t> out,
                   std::vector<NodeId>& queue, NodeId skip = -1);

DistanceMatrix all_pairs_shortest_paths(const Graph& g, unsigned threads = 1);

/// Mean hop distance over unordered reachable pairs i != j. Throws
/// ComputeError when no pair is reachable.
double mean_shortest_path(const DistanceMatrix& d);

/// n_i / (k_i (k_i - 1)), where n_i counts edges among the neighbors of i.
/// This is half the textbook clustering coefficient. Zero when k_i <= 1.
double local_clustering(const Graph& g, NodeId i);
Eigen::VectorXd local_clustering(const Graph& g);

/// Component id per node, ids numbered in order of lowest member index.
std::vector<NodeId> connected_components(const Graph& g);

/// Largest eccentricity among reachable pairs.
std::int32_t diameter(const DistanceMatrix& d);

}  // namespace vital
