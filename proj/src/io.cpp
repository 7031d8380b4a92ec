#include "vital/io.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "json.hpp"

namespace vital {

namespace {

using nlohmann::ordered_json;

// JSON has no infinities, so non-finite values travel as strings.
ordered_json json_real(double value) {
  if (std::isfinite(value)) return value;
  return format_real(value);
}

std::string join_labels(const Graph& g, std::span<const NodeId> nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ';';
    out += g.label(nodes[i]);
  }
  return out;
}

std::string_view tau_name(TauVariant v) { return v == TauVariant::A ? "a" : "b"; }

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

void write_scores(std::ostream& out, const Graph& g, const CentralityScores& scores, Format format) {
  if (format == Format::Csv) {
    out << "node_label,score,rank\n";
    for (std::size_t r = 0; r < scores.ranking.size(); ++r) {
      const NodeId i = scores.ranking[r];
      out << g.label(i) << ',' << format_real(scores.scores[i]) << ',' << r + 1 << '\n';
    }
    return;
  }
  ordered_json doc;
  doc["method"] = scores.method;
  doc["params"] = ordered_json::object();
  for (const auto& [key, value] : scores.params) doc["params"][key] = json_real(value);
  doc["converged"] = scores.converged;
  doc["warnings"] = scores.warnings;
  doc["nodes"] = ordered_json::array();
  for (std::size_t r = 0; r < scores.ranking.size(); ++r) {
    const NodeId i = scores.ranking[r];
    doc["nodes"].push_back({{"node_label", g.label(i)}, {"score", json_real(scores.scores[i])}, {"rank", r + 1}});
  }
  out << doc.dump(2) << '\n';
}

void write_efficiency(std::ostream& out, const Graph& g, const EfficiencyReport& report, Format format) {
  if (format == Format::Csv) {
    out << "# global_efficiency=" << format_real(report.global_efficiency) << '\n';
    out << "node_label,deleted_efficiency,ratio\n";
    for (NodeId i = 0; i < g.node_count(); ++i)
      out << g.label(i) << ',' << format_real(report.deleted_efficiency[i]) << ',' << format_real(report.ratio[i])
          << '\n';
    return;
  }
  ordered_json doc;
  doc["global_efficiency"] = report.global_efficiency;
  doc["nodes"] = ordered_json::array();
  for (NodeId i = 0; i < g.node_count(); ++i)
    doc["nodes"].push_back({{"node_label", g.label(i)},
                            {"deleted_efficiency", report.deleted_efficiency[i]},
                            {"ratio", json_real(report.ratio[i])}});
  out << doc.dump(2) << '\n';
}

void write_si(std::ostream& out, const Graph& g, std::span<const NodeId> seeds, const SiConfig& config,
              const SiOutcome& outcome, Format format) {
  if (format == Format::Csv) {
    out << "# config: beta=" << format_real(config.beta) << " T=" << config.t_max << " K=" << config.runs
        << " rng_seed=" << config.rng_seed << " seeds=" << join_labels(g, seeds) << '\n';
    out << "t,N_t,stddev\n";
    for (std::size_t t = 0; t < outcome.mean_infected.size(); ++t)
      out << t << ',' << format_real(outcome.mean_infected[t]) << ',' << format_real(outcome.stddev[t]) << '\n';
    return;
  }
  ordered_json doc;
  doc["config"] = {{"beta", config.beta}, {"T", config.t_max}, {"K", config.runs}, {"rng_seed", config.rng_seed}};
  doc["seeds"] = ordered_json::array();
  for (NodeId s : seeds) doc["seeds"].push_back(g.label(s));
  doc["N_t"] = outcome.mean_infected;
  doc["stddev"] = outcome.stddev;
  out << doc.dump(2) << '\n';
}

void write_tau_sweep(std::ostream& out, const TauSweep& sweep, Format format) {
  const auto& c = sweep.config;
  if (format == Format::Csv) {
    out << "# config: T=" << c.t_max << " K=" << c.runs << " rng_seed=" << c.rng_seed << " tau=" << tau_name(c.variant)
        << '\n';
    out << "method,beta,tau\n";
    for (std::size_t m = 0; m < sweep.methods.size(); ++m)
      for (std::size_t b = 0; b < sweep.betas.size(); ++b)
        out << sweep.methods[m] << ',' << format_real(sweep.betas[b]) << ','
            << format_real(sweep.tau(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(b))) << '\n';
    return;
  }
  ordered_json doc;
  doc["config"] = {{"T", c.t_max}, {"K", c.runs}, {"rng_seed", c.rng_seed}, {"tau", tau_name(c.variant)}};
  doc["betas"] = sweep.betas;
  doc["methods"] = ordered_json::object();
  for (std::size_t m = 0; m < sweep.methods.size(); ++m) {
    std::vector<double> row(sweep.betas.size());
    for (std::size_t b = 0; b < row.size(); ++b)
      row[b] = sweep.tau(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(b));
    doc["methods"][sweep.methods[m]] = row;
  }
  out << doc.dump(2) << '\n';
}

void write_spreading(std::ostream& out, const Graph& g, const SpreadingCurveSet& curves, Format format) {
  const auto& c = curves.config;
  if (format == Format::Csv) {
    out << "# config: k=" << c.k << " beta=" << format_real(c.beta) << " T=" << c.t_max << " K=" << c.runs
        << " rng_seed=" << c.rng_seed << '\n';
    for (std::size_t m = 0; m < curves.methods.size(); ++m)
      out << "# seeds " << curves.methods[m] << ": " << join_labels(g, curves.seeds[m]) << '\n';
    out << "method,t,N_t\n";
    for (std::size_t m = 0; m < curves.methods.size(); ++m)
      for (std::size_t t = 0; t < curves.curves[m].mean_infected.size(); ++t)
        out << curves.methods[m] << ',' << t << ',' << format_real(curves.curves[m].mean_infected[t]) << '\n';
    return;
  }
  ordered_json doc;
  doc["config"] = {{"k", c.k}, {"beta", c.beta}, {"T", c.t_max}, {"K", c.runs}, {"rng_seed", c.rng_seed}};
  doc["methods"] = ordered_json::object();
  for (std::size_t m = 0; m < curves.methods.size(); ++m) {
    ordered_json entry;
    entry["seeds"] = ordered_json::array();
    for (NodeId s : curves.seeds[m]) entry["seeds"].push_back(g.label(s));
    entry["N_t"] = curves.curves[m].mean_infected;
    doc["methods"][curves.methods[m]] = entry;
  }
  out << doc.dump(2) << '\n';
}

}  // namespace vital
