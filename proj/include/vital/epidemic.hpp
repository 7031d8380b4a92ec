#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "vital/graph.hpp"

namespace vital {

/// SplitMix64 finalizer; the building block of every random stream here.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t key, std::uint64_t value) noexcept {
  return splitmix64(key ^ splitmix64(value));
}

/// Uniform double in [0, 1) from the top 53 bits of a hash.
constexpr double unit_interval(std::uint64_t h) noexcept { return static_cast<double>(h >> 11) * 0x1.0p-53; }

struct SiConfig {
  double beta = 0.1;
  int t_max = 10;
  int runs = 100;
  std::uint64_t rng_seed = 1;

  /// Throws ComputeError unless 0 <= beta <= 1, t_max >= 1, runs >= 1.
  void validate() const;
};

/// Infected counts averaged over independent runs.
struct SiOutcome {
  /// Entry t is the mean infected count after t steps; entry 0 is the seed count.
  std::vector<double> mean_infected;
  /// Sample standard deviation across runs for each t (0 for a single run).
  std::vector<double> stddev;
  std::vector<std::int32_t> final_counts;
  std::size_t seed_count = 0;

  double final_mean() const { return mean_infected.back(); }
};

/// Discrete-time SI dynamics. Each step every infected node independently
/// infects each susceptible neighbor with probability beta; new infections
/// take effect at the end of the step.
///
/// Every Bernoulli trial draws from a counter-based stream keyed by
/// (rng_seed, seed set, run, step, directed edge), so results do not
/// depend on the thread count, and raising beta with everything else fixed
/// can only add infections.
SiOutcome si_simulate(const Graph& g, std::span<const NodeId> seeds, const SiConfig& config, unsigned threads = 1);

/// Mean infected count at t_max when seeding the single node `node`.
double spreading_ability(const Graph& g, NodeId node, const SiConfig& config);

/// spreading_ability for every node, parallel over nodes.
Eigen::VectorXd spreading_abilities(const Graph& g, const SiConfig& config, unsigned threads = 1);

}  // namespace vital
