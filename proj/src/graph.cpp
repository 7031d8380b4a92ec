#include "vital/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vital/error.hpp"
#include "vital/parallel.hpp"

namespace vital {

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const auto ia = as_integer(a);
  const auto ib = as_integer(b);
  if (ia && ib) {
    if (*ia != *ib) return *ia < *ib;
    return a < b;
  }
  if (ia != ib && (ia || ib)) return ia.has_value();
  return a < b;
}

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  Graph g;
  const auto n = static_cast<NodeId>(labels.size());
  std::vector<std::vector<NodeId>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ComputeError("edge endpoint out of range");
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  g.offsets_.assign(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    auto& list = adjacency[i];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[i + 1] = g.offsets_[i] + static_cast<NodeId>(list.size());
  }
  g.targets_.reserve(g.offsets_[n]);
  for (const auto& list : adjacency) g.targets_.insert(g.targets_.end(), list.begin(), list.end());

  g.index_.reserve(labels.size());
  for (NodeId i = 0; i < n; ++i) {
    if (!g.index_.emplace(labels[i], i).second) throw ComputeError("duplicate node label '" + labels[i] + "'");
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return label_less(labels[a], labels[b]); });
  g.label_rank_.resize(n);
  for (NodeId r = 0; r < n; ++r) g.label_rank_[order[r]] = r;

  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::from_edges(NodeId node_count, std::span<const Edge> edges) {
  std::vector<std::string> labels(node_count);
  for (NodeId i = 0; i < node_count; ++i) labels[i] = std::to_string(i);
  return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  const auto list = neighbors(i);
  return std::binary_search(list.begin(), list.end(), j);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced_subgraph(std::span<const NodeId> keep) const {
  std::vector<NodeId> remap(node_count(), -1);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (NodeId i : keep) {
    remap[i] = static_cast<NodeId>(labels.size());
    labels.push_back(labels_[i]);
  }
  std::vector<Edge> kept;
  for (NodeId u : keep)
    for (NodeId v : neighbors(u))
      if (remap[v] >= 0 && u < v) kept.emplace_back(remap[u], remap[v]);
  return from_edges(std::move(labels), kept);
}

Graph Graph::without_node(NodeId removed) const {
  std::vector<NodeId> keep;
  keep.reserve(node_count());
  for (NodeId i = 0; i < node_count(); ++i)
    if (i != removed) keep.push_back(i);
  return induced_subgraph(keep);
}

Eigen::SparseMatrix<double> Graph::adjacency_matrix() const {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(targets_.size());
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u)) entries.emplace_back(u, v, 1.0);
  Eigen::SparseMatrix<double> a(node_count(), node_count());
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

ParsedGraph parse_edge_list(std::istream& in) {
  ParsedGraph parsed;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;

  auto intern = [&](std::string token) {
    auto [it, inserted] = index.emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(std::move(token));
    return it->second;
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto start = line.find_first_not_of(" \t\r\f\v");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    tokens >> a >> b;
    if (b.empty() || (tokens >> extra)) throw ParseError("expected exactly two node labels", line_number);

    ++parsed.report.data_lines;
    const NodeId u = intern(std::move(a));
    const NodeId v = intern(std::move(b));
    if (u == v) {
      ++parsed.report.self_loops_dropped;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (in.bad()) throw ParseError("read failure", 0);
  if (parsed.report.data_lines == 0) throw ParseError("edge list is empty", 0);

  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  parsed.report.duplicates_dropped =
      static_cast<std::size_t>(sorted.end() - std::unique(sorted.begin(), sorted.end()));

  parsed.graph = Graph::from_edges(std::move(labels), edges);
  return parsed;
}

ParsedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

ParsedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return parse_edge_list(in);
}

void bfs_distances(const Graph& g, NodeId source, std::span<std::int32_t> out,
                   std::vector<NodeId>& queue, NodeId skip) {
  std::fill(out.begin(), out.end(), DistanceMatrix::kUnreachable);
  queue.clear();
  if (source == skip) return;
  out[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::int32_t next = out[u] + 1;
    for (NodeId v : g.neighbors(u)) {
      if (v == skip || out[v] != DistanceMatrix::kUnreachable) continue;
      out[v] = next;
      queue.push_back(v);
    }
  }
}

DistanceMatrix all_pairs_shortest_paths(const Graph& g, unsigned threads) {
  const NodeId n = g.node_count();
  DistanceMatrix::Storage hops(n, n);
  // Columns are disjoint, so sources can run concurrently.
  const std::size_t blocks = (static_cast<std::size_t>(n) + kReductionBlock - 1) / kReductionBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::vector<NodeId> queue;
    const auto begin = static_cast<NodeId>(b * kReductionBlock);
    const auto end = std::min<NodeId>(n, begin + static_cast<NodeId>(kReductionBlock));
    for (NodeId s = begin; s < end; ++s)
      bfs_distances(g, s, std::span<std::int32_t>(hops.col(s).data(), n), queue);
  });
  return DistanceMatrix(std::move(hops));
}

double mean_shortest_path(const DistanceMatrix& d) {
  std::int64_t total = 0;
  std::int64_t pairs = 0;
  const NodeId n = d.size();
  for (NodeId j = 0; j < n; ++j)
    for (NodeId i = j + 1; i < n; ++i)
      if (d.reachable(i, j)) {
        total += d(i, j);
        ++pairs;
      }
  if (pairs == 0) throw ComputeError("mean shortest path undefined: no reachable node pairs");
  return static_cast<double>(total) / static_cast<double>(pairs);
}

double local_clustering(const Graph& g, NodeId i) {
  const std::int64_t k = g.degree(i);
  if (k <= 1) return 0.0;
  const auto around = g.neighbors(i);
  std::int64_t links = 0;
  for (NodeId u : around) {
    // Count each neighbor-neighbor edge once via u < v.
    const auto theirs = g.neighbors(u);
    auto a = std::upper_bound(around.begin(), around.end(), u);
    auto b = std::upper_bound(theirs.begin(), theirs.end(), u);
    while (a != around.end() && b != theirs.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

Eigen::VectorXd local_clustering(const Graph& g) {
  Eigen::VectorXd lcc(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) lcc[i] = local_clustering(g, i);
  return lcc;
}

std::vector<NodeId> connected_components(const Graph& g) {
  std::vector<NodeId> component(g.node_count(), -1);
  std::vector<NodeId> stack;
  NodeId next_id = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (component[s] >= 0) continue;
    component[s] = next_id;
    stack.assign(1, s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u))
        if (component[v] < 0) {
          component[v] = next_id;
          stack.push_back(v);
        }
    }
    ++next_id;
  }
  return component;
}

std::int32_t diameter(const DistanceMatrix& d) {
  return d.size() == 0 ? 0 : d.matrix().maxCoeff();
}

}  // namespace vital
