#include <algorithm>
#include <bit>

#include "vital/error.hpp"
#include "vital/eval.hpp"
#include "vital/parallel.hpp"

namespace vital {

std::vector<double> default_betas() {
  std::vector<double> betas;
  for (int k = 1; k <= 10; ++k) betas.push_back(k / 10.0);
  return betas;
}

std::uint64_t sweep_seed(std::uint64_t rng_seed, double beta) {
  return hash_combine(rng_seed, std::bit_cast<std::uint64_t>(beta));
}

TauSweep tau_vs_beta_sweep(const Graph& g, std::span<const CentralityScores> methods, const SweepConfig& config) {
  if (config.betas.empty()) throw ComputeError("tau sweep needs at least one beta");
  if (!std::is_sorted(config.betas.begin(), config.betas.end()) ||
      std::adjacent_find(config.betas.begin(), config.betas.end()) != config.betas.end())
    throw ComputeError("tau sweep betas must be strictly increasing");
  for (const auto& m : methods)
    if (m.scores.size() != g.node_count()) throw ComputeError("scores for '" + m.method + "' do not match graph");

  TauSweep sweep;
  sweep.config = config;
  sweep.betas = config.betas;
  for (const auto& m : methods) sweep.methods.push_back(m.method);

  std::vector<Eigen::VectorXd> comparable;
  for (const auto& m : methods) comparable.push_back(order_preserving_scores(m));

  sweep.tau.resize(static_cast<Eigen::Index>(methods.size()), static_cast<Eigen::Index>(config.betas.size()));
  for (std::size_t b = 0; b < config.betas.size(); ++b) {
    SiConfig si;
    si.beta = config.betas[b];
    si.t_max = config.t_max;
    si.runs = config.runs;
    si.rng_seed = sweep_seed(config.rng_seed, si.beta);
    sweep.spreading.push_back(spreading_abilities(g, si, config.threads));
    for (std::size_t m = 0; m < methods.size(); ++m)
      sweep.tau(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(b)) =
          kendall_tau(comparable[m], sweep.spreading.back(), config.variant);
  }
  return sweep;
}

SpreadingCurveSet topk_spreading(const Graph& g, std::span<const CentralityScores> methods, const TopKConfig& config) {
  SpreadingCurveSet out;
  out.config = config;
  const auto n = static_cast<std::size_t>(g.node_count());
  std::size_t k = config.k;
  if (k == 0) throw ComputeError("top-k needs k >= 1");
  if (n < k) {
    out.warnings.push_back("graph has " + std::to_string(n) + " nodes, fewer than k=" + std::to_string(k) +
                           "; seeding every node");
    k = n;
  }

  SiConfig si;
  si.beta = config.beta;
  si.t_max = config.t_max;
  si.runs = config.runs;
  si.rng_seed = config.rng_seed;
  for (const auto& m : methods) {
    if (m.ranking.size() != n) throw ComputeError("ranking for '" + m.method + "' does not match graph");
    std::vector<NodeId> seeds(m.ranking.begin(), m.ranking.begin() + static_cast<std::ptrdiff_t>(k));
    out.methods.push_back(m.method);
    out.curves.push_back(si_simulate(g, seeds, si, config.threads));
    out.seeds.push_back(std::move(seeds));
  }
  return out;
}

}  // namespace vital
