#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "vital/centrality.hpp"
#include "vital/epidemic.hpp"
#include "vital/error.hpp"
#include "vital/eval.hpp"
#include "vital/graph.hpp"
#include "vital/io.hpp"

namespace vital::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output = "-";
  std::string format = "csv";
  std::uint64_t rng_seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  std::string method;
  std::string methods = "g,wg,gg,bc,ira,ql,neg";
  std::string topk_methods;
  double alpha = 1.0;
  std::string radius;
  int ira_steps = 100;

  std::string seed_nodes;
  double beta = 0.1;
  int si_t_max = 10;
  int runs = 100;

  std::string betas;
  int sweep_t_max = 10;
  std::string tau = "a";

  std::size_t k = 10;
  double topk_beta = 0.1;
  int topk_t_max = 25;
};

std::vector<std::string> split(const std::string& text, char delimiter) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == delimiter) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value))
    throw UsageError("invalid " + what + " '" + text + "'");
  return value;
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  for (const auto& name : split(list, ',')) {
    const auto m = parse_method(name);
    if (!m) throw UsageError("unknown method '" + name + "' (expected degree, g, wg, gg, bc, ira, ql or neg)");
    out.push_back(*m);
  }
  return out;
}

std::optional<Radius> parse_radius(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "auto") return Radius::automatic();
  if (text == "none") return Radius::none();
  const double r = parse_real(text, "radius");
  if (r < 0) throw UsageError("radius must be nonnegative");
  return Radius::fixed(r);
}

std::vector<double> parse_betas(const std::string& text) {
  if (text.empty()) return default_betas();
  std::vector<double> betas;
  for (const auto& part : split(text, ',')) {
    const double b = parse_real(part, "beta");
    if (b < 0.0 || b > 1.0) throw UsageError("beta must lie in [0, 1]");
    betas.push_back(b);
  }
  return betas;
}

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw UsageError("beta must lie in [0, 1]");
}

Format parse_output_format(const std::string& text) {
  const auto f = parse_format(text);
  if (!f) throw UsageError("unknown format '" + text + "' (expected csv or json)");
  return *f;
}

MethodOptions method_options(const Options& o) {
  MethodOptions m;
  m.alpha = o.alpha;
  m.radius = parse_radius(o.radius);
  m.resource.max_steps = o.ira_steps;
  return m;
}

void write_to(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  body(file);
  if (!file) throw OutputError("failed writing '" + path + "'");
}

ParsedGraph load(const Options& o, std::ostream& err) {
  auto parsed = read_edge_list(o.input);
  const auto& g = parsed.graph;
  const auto components = connected_components(g);
  const NodeId count = components.empty() ? 0 : *std::max_element(components.begin(), components.end()) + 1;
  err << "read " << g.node_count() << " nodes, " << g.edge_count() << " edges, " << count << " component"
      << (count == 1 ? "" : "s");
  if (parsed.report.self_loops_dropped) err << ", " << parsed.report.self_loops_dropped << " self-loops dropped";
  if (parsed.report.duplicates_dropped) err << ", " << parsed.report.duplicates_dropped << " duplicate edges dropped";
  err << '\n';
  return parsed;
}

void report_warnings(const std::vector<std::string>& warnings, std::string_view context, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << context << ": " << w << '\n';
}

std::vector<CentralityScores> rank_all(const Graph& g, const std::vector<Method>& methods, const MethodOptions& options,
                                       unsigned threads, std::ostream& err) {
  Ranker ranker(g, threads);
  std::vector<CentralityScores> out;
  for (Method m : methods) {
    out.push_back(ranker.run(m, options));
    report_warnings(out.back().warnings, out.back().method, err);
  }
  return out;
}

std::vector<CentralityScores> select(const std::vector<CentralityScores>& all, const std::vector<Method>& wanted) {
  std::vector<CentralityScores> out;
  for (Method m : wanted)
    for (const auto& s : all)
      if (s.method == method_name(m)) {
        out.push_back(s);
        break;
      }
  return out;
}

int cmd_rank(const Options& o, std::ostream& out, std::ostream& err) {
  const auto method = parse_methods(o.method);
  if (method.size() != 1) throw UsageError("rank takes exactly one --method");
  const auto format = parse_output_format(o.format);
  const auto options = method_options(o);
  const auto parsed = load(o, err);
  Ranker ranker(parsed.graph, o.threads);
  const auto scores = ranker.run(method.front(), options);
  report_warnings(scores.warnings, scores.method, err);
  write_to(o.output, out, [&](std::ostream& s) { write_scores(s, parsed.graph, scores, format); });
  return kOk;
}

int cmd_efficiency(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = parse_output_format(o.format);
  const auto parsed = load(o, err);
  const auto report = efficiency_ratios(parsed.graph, o.threads);
  write_to(o.output, out, [&](std::ostream& s) { write_efficiency(s, parsed.graph, report, format); });
  return kOk;
}

int cmd_si(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = parse_output_format(o.format);
  check_beta(o.beta);
  const auto parsed = load(o, err);
  std::vector<NodeId> seeds;
  for (const auto& label : split(o.seed_nodes, ',')) {
    const auto id = parsed.graph.find(label);
    if (!id) throw UsageError("seed node '" + label + "' is not in the graph");
    seeds.push_back(*id);
  }
  SiConfig config{o.beta, o.si_t_max, o.runs, o.rng_seed};
  const auto outcome = si_simulate(parsed.graph, seeds, config, o.threads);
  write_to(o.output, out, [&](std::ostream& s) { write_si(s, parsed.graph, seeds, config, outcome, format); });
  return kOk;
}

SweepConfig sweep_config(const Options& o) {
  SweepConfig c;
  c.betas = parse_betas(o.betas);
  c.t_max = o.sweep_t_max;
  c.runs = o.runs;
  c.rng_seed = o.rng_seed;
  c.threads = o.threads;
  if (o.tau == "a") {
    c.variant = TauVariant::A;
  } else if (o.tau == "b") {
    c.variant = TauVariant::B;
  } else {
    throw UsageError("unknown tau variant '" + o.tau + "' (expected a or b)");
  }
  return c;
}

TopKConfig topk_config(const Options& o) {
  check_beta(o.topk_beta);
  TopKConfig c;
  c.k = o.k;
  c.beta = o.topk_beta;
  c.t_max = o.topk_t_max;
  c.runs = o.runs;
  c.rng_seed = o.rng_seed;
  c.threads = o.threads;
  return c;
}

int cmd_tau_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const auto methods = parse_methods(o.methods);
  const auto format = parse_output_format(o.format);
  const auto options = method_options(o);
  const auto config = sweep_config(o);
  const auto parsed = load(o, err);
  const auto scores = rank_all(parsed.graph, methods, options, o.threads, err);
  const auto sweep = tau_vs_beta_sweep(parsed.graph, scores, config);
  write_to(o.output, out, [&](std::ostream& s) { write_tau_sweep(s, sweep, format); });
  return kOk;
}

int cmd_topk(const Options& o, std::ostream& out, std::ostream& err) {
  const auto methods = parse_methods(o.topk_methods.empty() ? o.methods : o.topk_methods);
  const auto format = parse_output_format(o.format);
  const auto options = method_options(o);
  const auto config = topk_config(o);
  const auto parsed = load(o, err);
  const auto scores = rank_all(parsed.graph, methods, options, o.threads, err);
  const auto curves = topk_spreading(parsed.graph, scores, config);
  report_warnings(curves.warnings, "topk-spread", err);
  write_to(o.output, out, [&](std::ostream& s) { write_spreading(s, parsed.graph, curves, format); });
  return kOk;
}

int cmd_experiment(const Options& o, std::ostream& err) {
  const auto methods = parse_methods(o.methods);
  const auto topk_methods = o.topk_methods.empty() ? methods : parse_methods(o.topk_methods);
  const auto format = parse_output_format(o.format);
  const auto options = method_options(o);
  const auto sweep_cfg = sweep_config(o);
  const auto topk_cfg = topk_config(o);
  const std::filesystem::path dir = o.output == "-" ? std::filesystem::path(".") : std::filesystem::path(o.output);
  const auto parsed = load(o, err);

  std::vector<Method> needed = methods;
  for (Method m : topk_methods)
    if (std::find(needed.begin(), needed.end(), m) == needed.end()) needed.push_back(m);
  const auto scores = rank_all(parsed.graph, needed, options, o.threads, err);

  const auto sweep = tau_vs_beta_sweep(parsed.graph, select(scores, methods), sweep_cfg);
  const auto curves = topk_spreading(parsed.graph, select(scores, topk_methods), topk_cfg);
  report_warnings(curves.warnings, "topk-spread", err);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw OutputError("cannot create directory '" + dir.string() + "': " + ec.message());
  const std::string ext = format == Format::Csv ? ".csv" : ".json";
  std::ostringstream unused;
  write_to((dir / ("tau_sweep" + ext)).string(), unused, [&](std::ostream& s) { write_tau_sweep(s, sweep, format); });
  write_to((dir / ("topk_spread" + ext)).string(), unused,
           [&](std::ostream& s) { write_spreading(s, parsed.graph, curves, format); });
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool randomized) {
  sub->add_option("--input,-i", o.input, "Edge list file")->required();
  sub->add_option("--output,-o", o.output, "Output path, '-' for stdout");
  sub->add_option("--format", o.format, "csv or json");
  sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  if (randomized) sub->add_option("--rng-seed", o.rng_seed, "Seed for all random streams");
}

void add_method_params(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "Clustering damping for gg");
  sub->add_option("--radius", o.radius, "Truncation radius: auto, none or a number");
  sub->add_option("--ira-steps", o.ira_steps, "Maximum resource-allocation steps")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vital node ranking and SI spreading experiments", "vital"};
  app.require_subcommand(1);
  Options o;

  auto* rank = app.add_subcommand("rank", "Score and rank nodes with one method");
  add_common(rank, o, false);
  rank->add_option("--method,-m", o.method, "degree, g, wg, gg, bc, ira, ql or neg")->required();
  add_method_params(rank, o);

  auto* efficiency = app.add_subcommand("efficiency", "Network efficiency and node-deletion ratios");
  add_common(efficiency, o, false);

  auto* si = app.add_subcommand("si", "Simulate SI spreading from a seed set");
  add_common(si, o, true);
  si->add_option("--seed-nodes", o.seed_nodes, "Comma-separated seed labels")->required();
  si->add_option("--beta", o.beta, "Infection probability per contact");
  si->add_option("--t-max", o.si_t_max, "Steps")->check(CLI::PositiveNumber);
  si->add_option("--runs", o.runs, "Independent runs")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("tau-sweep", "Kendall tau of each method against spreading ability");
  add_common(sweep, o, true);
  sweep->add_option("--methods", o.methods, "Comma-separated methods");
  add_method_params(sweep, o);
  sweep->add_option("--betas", o.betas, "Comma-separated betas (default 0.1..1.0)");
  sweep->add_option("--t-max", o.sweep_t_max, "SI steps per spreading-ability run")->check(CLI::PositiveNumber);
  sweep->add_option("--runs", o.runs, "Runs per node")->check(CLI::PositiveNumber);
  sweep->add_option("--tau", o.tau, "a (as printed) or b (tie-corrected)");

  auto* topk = app.add_subcommand("topk-spread", "SI curves seeded by each method's top-k nodes");
  add_common(topk, o, true);
  topk->add_option("--methods", o.topk_methods, "Comma-separated methods (default g,wg,gg,bc,ira,ql,neg)");
  add_method_params(topk, o);
  topk->add_option("--k", o.k, "Seed set size")->check(CLI::PositiveNumber);
  topk->add_option("--beta", o.topk_beta, "Infection probability");
  topk->add_option("--t-max", o.topk_t_max, "Steps")->check(CLI::PositiveNumber);
  topk->add_option("--runs", o.runs, "Independent runs")->check(CLI::PositiveNumber);

  auto* experiment = app.add_subcommand("experiment", "Run the tau sweep and the top-k spreading protocol");
  add_common(experiment, o, true);
  experiment->add_option("--methods", o.methods, "Methods for the tau sweep");
  experiment->add_option("--topk-methods", o.topk_methods, "Methods for top-k spreading (default: --methods)");
  add_method_params(experiment, o);
  experiment->add_option("--betas", o.betas, "Comma-separated sweep betas");
  experiment->add_option("--t-max", o.sweep_t_max, "SI steps in the tau sweep")->check(CLI::PositiveNumber);
  experiment->add_option("--runs", o.runs, "Independent runs")->check(CLI::PositiveNumber);
  experiment->add_option("--tau", o.tau, "a or b");
  experiment->add_option("--k", o.k, "Top-k seed set size")->check(CLI::PositiveNumber);
  experiment->add_option("--topk-beta", o.topk_beta, "Infection probability for top-k spreading");
  experiment->add_option("--topk-t-max", o.topk_t_max, "Steps for top-k spreading")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << active->help();
    return kUsageError;
  }

  try {
    if (rank->parsed()) return cmd_rank(o, out, err);
    if (efficiency->parsed()) return cmd_efficiency(o, out, err);
    if (si->parsed()) return cmd_si(o, out, err);
    if (sweep->parsed()) return cmd_tau_sweep(o, out, err);
    if (topk->parsed()) return cmd_topk(o, out, err);
    if (experiment->parsed()) return cmd_experiment(o, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "compute error: " << e.what() << '\n';
    return kComputeError;
  }
  return kUsageError;
}

}  // namespace vital::cli
