#include "mtdchain/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mtdchain/assessment.hpp"
#include "mtdchain/chart.hpp"
#include "mtdchain/ledger.hpp"
#include "mtdchain/model.hpp"
#include "mtdchain/model_io.hpp"

namespace mtdchain {

namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string states = "W,D,L";
  bool states_explicit = false;
  std::uint64_t seed = 0;
  bool quiet = false;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

// A "# states:" header wins over the default alphabet; an explicit --states
// that disagrees with the header is an input error.
Sequence load_sequence(const fs::path& path, const GlobalOptions& g) {
  const std::string text = read_text(path);
  StateSpace space = StateSpace::parse(g.states);
  if (auto header = read_states_header(text)) {
    if (g.states_explicit && !(*header == space)) {
      throw Error(Errc::InvalidStateSpace, "--states disagrees with the file's states header");
    }
    space = std::move(*header);
  }
  return parse_sequence(text, space);
}

History parse_history(const std::string& text, const StateSpace& space) {
  History h;
  const auto seq = parse_sequence(text, space);
  h.recent.assign(seq.states().begin(), seq.states().end());
  return h;
}

std::string format_prob(double p, std::optional<int> digits) {
  if (!digits) return format_double(p);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", *digits, p);
  return buf;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

std::string labelled(const StateSpace& space, std::span<const double> probs,
                     std::optional<int> digits = std::nullopt) {
  std::string out;
  for (State s = 0; s < space.size(); ++s) {
    if (s > 0) out += ' ';
    out += space.label(s) + ' ' + format_prob(probs[s], digits);
  }
  return out;
}

// --- fit -------------------------------------------------------------------

struct FitOptions {
  std::string input;
  long long order = 1;
  std::string out_path;
};

int cmd_fit(const FitOptions& o, const GlobalOptions& g, std::ostream& out) {
  const Sequence seq = load_sequence(o.input, g);
  if (o.order < 1) throw Error(Errc::OrderNotPositive, "order must be >= 1");
  const MtdModel model = fit(seq, static_cast<std::size_t>(o.order));
  if (!o.out_path.empty()) save_model(model, o.out_path);
  out << "order " << model.order() << '\n';
  out << "lambda " << join_doubles(model.lambda()) << '\n';
  out << "lp_residual " << format_double(model.lp_residual()) << '\n';
  out << "stationary_hat " << labelled(model.space(), model.stationary_hat().probs()) << '\n';
  return kExitOk;
}

// --- predict ---------------------------------------------------------------

struct PredictOptions {
  std::string model_path;
  std::string history;
  std::optional<int> digits;
};

int cmd_predict(const PredictOptions& o, std::ostream& out) {
  const MtdModel model = load_model(o.model_path);
  const History hist = parse_history(o.history, model.space());
  const Distribution dist = predict_distribution(model, hist);
  out << labelled(model.space(), dist.probs(), o.digits) << '\n';
  return kExitOk;
}

// --- simulate --------------------------------------------------------------

struct SimulateOptions {
  std::string model_path;
  std::string init;
  std::size_t steps = 0;
};

int cmd_simulate(const SimulateOptions& o, const GlobalOptions& g, std::ostream& out) {
  const MtdModel model = load_model(o.model_path);
  const History init = parse_history(o.init, model.space());
  Rng rng(g.seed);
  const auto states = simulate(model, init, o.steps, rng);
  if (states.empty()) return kExitOk;
  out << Sequence(model.space(), states).render(/*compact=*/true) << '\n';
  return kExitOk;
}

// --- assess ----------------------------------------------------------------

struct AssessOptions {
  std::string input;
  std::string ledger;
  std::string team;
  std::size_t k_min = 1;
  std::size_t k_max = 13;
  std::size_t n_eval = 10;
  std::size_t window = 100;
  std::size_t last = 100;
  std::size_t reps = 1;
  std::size_t jobs = 1;
  std::string report_path;
  std::string chart_path;
  std::string chart_dir;
  bool svg = false;
  std::string trace_path;
};

struct TeamInput {
  std::string team;
  Sequence sequence;
};

std::vector<TeamInput> assessment_inputs(const AssessOptions& o, const GlobalOptions& g,
                                         std::ostream& err) {
  std::vector<TeamInput> inputs;
  if (!o.ledger.empty()) {
    const Ledger ledger = Ledger::read_file(o.ledger, StateSpace::parse(g.states));
    const auto teams = o.team.empty() ? ledger.teams() : std::vector<std::string>{o.team};
    for (const auto& team : teams) {
      auto ingested = ingest_ledger(ledger, team, o.last);
      if (ingested.warning && !g.quiet) err << "warning: " << *ingested.warning << '\n';
      inputs.push_back({team, std::move(ingested.sequence)});
    }
  } else {
    const std::string team = o.team.empty() ? fs::path(o.input).stem().string() : o.team;
    inputs.push_back({team, load_sequence(o.input, g)});
  }
  return inputs;
}

int cmd_assess(const AssessOptions& o, const GlobalOptions& g, std::ostream& out,
               std::ostream& err) {
  if (o.input.empty() == o.ledger.empty()) {
    throw Error(Errc::EmptyInput, "give exactly one of a sequence file or --ledger");
  }
  if (o.k_min < 1 || o.k_max < o.k_min) {
    throw Error(Errc::ConfigInvalid, "need 1 <= --k-min <= --k-max");
  }
  AssessmentConfig cfg;
  cfg.k_values.resize(o.k_max - o.k_min + 1);
  std::iota(cfg.k_values.begin(), cfg.k_values.end(), o.k_min);
  cfg.n_eval = o.n_eval;
  cfg.window = o.window;
  cfg.seed = g.seed;
  cfg.repetitions = o.reps;
  cfg.validate();

  const auto inputs = assessment_inputs(o, g, err);

  // Teams are independent; derived seeds make the schedule irrelevant.
  std::vector<AssessmentReport> reports(inputs.size());
  const std::size_t jobs = std::max<std::size_t>(o.jobs, 1);
  for (std::size_t begin = 0; begin < inputs.size(); begin += jobs) {
    const std::size_t end = std::min(inputs.size(), begin + jobs);
    if (jobs == 1) {
      reports[begin] = run_assessment(inputs[begin].sequence, cfg, inputs[begin].team);
      continue;
    }
    std::vector<std::future<AssessmentReport>> pending;
    for (std::size_t i = begin; i < end; ++i) {
      pending.push_back(std::async(std::launch::async, [&, i] {
        return run_assessment(inputs[i].sequence, cfg, inputs[i].team);
      }));
    }
    for (std::size_t i = begin; i < end; ++i) reports[i] = pending[i - begin].get();
  }

  std::vector<ChartData> charts;
  for (const auto& r : reports) charts.push_back(chart_from_report(r));

  for (const auto& r : reports) {
    out << "team " << r.team << " (games " << r.window_offset + 1 << ".."
        << r.window_offset + r.config.window << ", seed " << r.config.seed << ")\n";
    out << "k\taccuracy\n";
    for (const auto& [k, acc] : r.per_k) out << k << '\t' << format_double(acc) << '\n';
    const auto ranked = rank_orders(r);
    out << "best k " << ranked.front().first << " (" << format_double(ranked.front().second)
        << ")\n";
  }

  if (!o.report_path.empty()) {
    std::ostringstream csv;
    write_report_csv(csv, reports);
    write_text(o.report_path, csv.str());
  }
  if (!o.trace_path.empty()) {
    std::ostringstream csv;
    write_trace_csv(csv, reports, inputs.front().sequence.space());
    write_text(o.trace_path, csv.str());
  }
  if (!o.chart_path.empty()) {
    std::ostringstream csv;
    write_chart_csv(csv, charts);
    write_text(o.chart_path, csv.str());
  }
  if (!o.chart_dir.empty()) {
    std::error_code ec;
    fs::create_directories(o.chart_dir, ec);
    if (ec) throw Error(Errc::Io, "cannot create " + o.chart_dir + ": " + ec.message());
    for (const auto& c : charts) {
      const fs::path stem = fs::path(o.chart_dir) / chart_file_stem(c.team);
      std::ostringstream csv;
      write_chart_csv(csv, {c});
      write_text(stem.string() + ".csv", csv.str());
      if (o.svg) write_text(stem.string() + ".svg", render_svg(c));
    }
  } else if (o.svg && !o.chart_path.empty()) {
    for (const auto& c : charts) {
      const fs::path p = fs::path(o.chart_path).parent_path() / (chart_file_stem(c.team) + ".svg");
      write_text(p, render_svg(c));
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fit, query and assess k-th order mixture-transition Markov chains"};
  app.require_subcommand(1);

  GlobalOptions g;
  auto* states_opt =
      app.add_option("--states", g.states, "State labels, e.g. \"W,D,L\"")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Suppress warnings");

  FitOptions fit_o;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a model to a sequence file")->fallthrough();
  fit_cmd->add_option("input", fit_o.input, "Sequence file")->required();
  fit_cmd->add_option("-k,--order", fit_o.order, "Model order k")->required();
  fit_cmd->add_option("-o,--out", fit_o.out_path, "Write the model document here");

  PredictOptions pred_o;
  auto* pred_cmd = app.add_subcommand("predict", "Next-state distribution")->fallthrough();
  pred_cmd->add_option("model", pred_o.model_path, "Model document")->required();
  pred_cmd->add_option("--history", pred_o.history, "Most recent state first, e.g. \"W,L\"")
      ->required();
  pred_cmd->add_option("--digits", pred_o.digits, "Fixed decimals (default: full precision)");

  AssessOptions as_o;
  auto* as_cmd = app.add_subcommand("assess", "Rank orders by prediction accuracy")->fallthrough();
  as_cmd->add_option("input", as_o.input, "Sequence file");
  as_cmd->add_option("--ledger", as_o.ledger, "Game ledger CSV (date,team,opponent,result)");
  as_cmd->add_option("--team", as_o.team, "Team to assess (ledger) or report name");
  as_cmd->add_option("--k-min", as_o.k_min)->capture_default_str();
  as_cmd->add_option("--k-max", as_o.k_max)->capture_default_str();
  as_cmd->add_option("--n-eval", as_o.n_eval, "Evaluation games per repetition")
      ->capture_default_str();
  as_cmd->add_option("--window", as_o.window, "Most recent games used")->capture_default_str();
  as_cmd->add_option("--last", as_o.last, "Games kept per team from the ledger")
      ->capture_default_str();
  as_cmd->add_option("--reps", as_o.reps, "Independent repetitions")->capture_default_str();
  as_cmd->add_option("--jobs", as_o.jobs, "Teams assessed concurrently")->capture_default_str();
  as_cmd->add_option("--report", as_o.report_path, "Per-repetition accuracy CSV");
  as_cmd->add_option("--chart", as_o.chart_path, "Chart data CSV for all teams");
  as_cmd->add_option("--chart-dir", as_o.chart_dir, "One chart CSV per team in this directory");
  as_cmd->add_flag("--svg", as_o.svg, "Also render an SVG bar chart per team");
  as_cmd->add_option("--trace", as_o.trace_path, "Per-prediction trace CSV");

  SimulateOptions sim_o;
  auto* sim_cmd = app.add_subcommand("simulate", "Sample a trajectory")->fallthrough();
  sim_cmd->add_option("model", sim_o.model_path, "Model document")->required();
  sim_cmd->add_option("--init", sim_o.init, "Initial history, most recent first")->required();
  sim_cmd->add_option("--steps", sim_o.steps)->required();

  std::vector<std::string> reversed(args.size() > 0 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  g.states_explicit = states_opt->count() > 0;

  try {
    if (fit_cmd->parsed()) return cmd_fit(fit_o, g, out);
    if (pred_cmd->parsed()) return cmd_predict(pred_o, out);
    if (as_cmd->parsed()) return cmd_assess(as_o, g, out, err);
    if (sim_cmd->parsed()) return cmd_simulate(sim_o, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitInput : kExitCompute;
  }
  return kExitInput;
}

}  // namespace mtdchain
