#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "vital/centrality.hpp"
#include "vital/efficiency.hpp"
#include "vital/epidemic.hpp"
#include "vital/eval.hpp"
#include "vital/graph.hpp"

namespace vital {

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// Shortest round-trip decimal; "inf", "-inf", "nan" for non-finite values.
std::string format_real(double value);

// Score files: `node_label,score,rank`, rows in rank order, rank from 1.
void write_scores(std::ostream& out, const Graph& g, const CentralityScores& scores, Format format);

// `# global_efficiency=...` then `node_label,deleted_efficiency,ratio`.
void write_efficiency(std::ostream& out, const Graph& g, const EfficiencyReport& report, Format format);

// `# config: ...` then `t,N_t,stddev`.
void write_si(std::ostream& out, const Graph& g, std::span<const NodeId> seeds, const SiConfig& config,
              const SiOutcome& outcome, Format format);

// `# config: ...` then `method,beta,tau`.
void write_tau_sweep(std::ostream& out, const TauSweep& sweep, Format format);

// `# config: ...`, one `# seeds` line per method, then `method,t,N_t`.
void write_spreading(std::ostream& out, const Graph& g, const SpreadingCurveSet& curves, Format format);

}  // namespace vital
