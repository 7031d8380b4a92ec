#include "vital/epidemic.hpp"

#include <algorithm>
#include <cmath>

#include "vital/error.hpp"
#include "vital/parallel.hpp"

namespace vital {

void SiConfig::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ComputeError("beta must lie in [0, 1]");
  if (t_max < 1) throw ComputeError("t_max must be at least 1");
  if (runs < 1) throw ComputeError("runs must be at least 1");
}

namespace {

enum State : std::uint8_t { kSusceptible = 0, kInfected = 1, kPending = 2 };

// Infected count after each step of one run.
void simulate_run(const Graph& g, std::span<const NodeId> seeds, double beta, int t_max, std::uint64_t run_key,
                  std::span<std::int32_t> counts) {
  std::vector<std::uint8_t> state(g.node_count(), kSusceptible);
  std::vector<NodeId> infected(seeds.begin(), seeds.end());
  for (NodeId s : seeds) state[s] = kInfected;
  counts[0] = static_cast<std::int32_t>(infected.size());

  std::vector<NodeId> fresh;
  for (int t = 1; t <= t_max; ++t) {
    const std::uint64_t step_key = hash_combine(run_key, static_cast<std::uint64_t>(t));
    fresh.clear();
    for (NodeId u : infected) {
      const auto around = g.neighbors(u);
      const NodeId base = g.adjacency_offset(u);
      for (std::size_t k = 0; k < around.size(); ++k) {
        const NodeId v = around[k];
        if (state[v] != kSusceptible) continue;
        const auto edge = static_cast<std::uint64_t>(base) + k;
        if (unit_interval(hash_combine(step_key, edge)) < beta) {
          state[v] = kPending;
          fresh.push_back(v);
        }
      }
    }
    for (NodeId v : fresh) state[v] = kInfected;
    infected.insert(infected.end(), fresh.begin(), fresh.end());
    counts[t] = static_cast<std::int32_t>(infected.size());
  }
}

}  // namespace

SiOutcome si_simulate(const Graph& g, std::span<const NodeId> seeds, const SiConfig& config, unsigned threads) {
  config.validate();
  if (seeds.empty()) throw ComputeError("SI simulation needs at least one seed node");
  std::vector<NodeId> seed_set(seeds.begin(), seeds.end());
  std::sort(seed_set.begin(), seed_set.end());
  seed_set.erase(std::unique(seed_set.begin(), seed_set.end()), seed_set.end());
  for (NodeId s : seed_set)
    if (s < 0 || s >= g.node_count()) throw ComputeError("seed node out of range");

  std::uint64_t key = hash_combine(config.rng_seed, seed_set.size());
  for (NodeId s : seed_set) key = hash_combine(key, static_cast<std::uint64_t>(s));

  const auto width = static_cast<std::size_t>(config.t_max) + 1;
  const auto runs = static_cast<std::size_t>(config.runs);
  std::vector<std::int32_t> counts(width * runs);
  parallel_for(runs, threads, [&](std::size_t r) {
    simulate_run(g, seed_set, config.beta, config.t_max, hash_combine(key, r),
                 std::span<std::int32_t>(counts.data() + r * width, width));
  });

  SiOutcome out;
  out.seed_count = seed_set.size();
  out.mean_infected.resize(width);
  out.stddev.resize(width);
  out.final_counts.resize(runs);
  for (std::size_t t = 0; t < width; ++t) {
    // Integer sums keep the reduction exact and order-free.
    std::int64_t sum = 0;
    std::int64_t squares = 0;
    for (std::size_t r = 0; r < runs; ++r) {
      const std::int64_t c = counts[r * width + t];
      sum += c;
      squares += c * c;
    }
    const double k = static_cast<double>(runs);
    const double mean = static_cast<double>(sum) / k;
    out.mean_infected[t] = mean;
    out.stddev[t] = runs > 1 ? std::sqrt(std::max(0.0, (static_cast<double>(squares) - mean * static_cast<double>(sum)) / (k - 1.0)))
                             : 0.0;
  }
  for (std::size_t r = 0; r < runs; ++r) out.final_counts[r] = counts[r * width + width - 1];
  return out;
}

double spreading_ability(const Graph& g, NodeId node, const SiConfig& config) {
  const NodeId seeds[] = {node};
  return si_simulate(g, seeds, config).final_mean();
}

Eigen::VectorXd spreading_abilities(const Graph& g, const SiConfig& config, unsigned threads) {
  config.validate();
  Eigen::VectorXd out(g.node_count());
  parallel_for(static_cast<std::size_t>(g.node_count()), threads,
               [&](std::size_t i) { out[static_cast<Eigen::Index>(i)] = spreading_ability(g, static_cast<NodeId>(i), config); });
  return out;
}

}  // namespace vital
