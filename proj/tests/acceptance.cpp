// Acceptance suite: one line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "json.hpp"
#include "mtdchain/assessment.hpp"
#include "mtdchain/chain.hpp"
#include "mtdchain/cli.hpp"
#include "mtdchain/ledger.hpp"
#include "mtdchain/lp.hpp"
#include "mtdchain/model.hpp"
#include "mtdchain/model_io.hpp"
#include "oracles.hpp"

using namespace mtdchain;
namespace fs = std::filesystem;

namespace {

const StateSpace kWdl{{"W", "D", "L"}};
const std::string kLedger = MTDCHAIN_DATA_DIR "/kbo2018_synthetic_ledger.csv";
const std::string kDoosan = MTDCHAIN_DATA_DIR "/doosan_2018_synthetic.txt";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "mtdchain");
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

Sequence alternating(std::size_t n) {
  std::vector<State> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i % 2 == 0 ? 0 : 2;
  return Sequence(kWdl, s);
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("mtdchain_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// ---------------------------------------------------------------------------

Outcome table1_reproduction() {
  Outcome o;
  const std::string text = slurp(kDoosan);
  const auto seq = parse_sequence(text, *read_states_header(text));
  const auto dist = empirical_distribution(seq);
  o.require(seq.size() == 113, "record length is not 113");
  o.require(std::abs(dist[0] - 0.646) <= 0.001, "W share differs from 0.646 by more than 0.001");
  o.require(dist[1] == 0.0, "record has draws");
  o.detail = o.pass ? "W share " + fmt("%.6f", dist[0]) + " vs published 0.646" : o.detail;
  return o;
}

Outcome lp_oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(1982);
  double worst_grid = 0.0, worst_vertex = 0.0;
  const int instances = 21;
  for (int t = 0; t < instances; ++t) {
    const std::size_t k = 2 + static_cast<std::size_t>(t % 3);
    std::vector<TransitionMatrix> qs;
    for (std::size_t l = 1; l <= k; ++l) qs.push_back(testing::random_stochastic(rng, 3, l));
    std::vector<double> x(3);
    double sum = 0.0;
    for (auto& v : x) {
      v = static_cast<double>(rng() % 1000 + 1);
      sum += v;
    }
    for (auto& v : x) v /= sum;
    const Distribution xhat(x);

    const LinearProgram lp = lag_weight_program(qs, xhat);
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal) {
      o.require(false, "solver did not reach an optimum");
      break;
    }
    const double grid = testing::grid_search_lambda(testing::lag_projections(qs, x), x, 1000);
    const auto vertex = testing::vertex_enumeration_min(lp);
    o.require(vertex.has_value(), "vertex enumeration found no feasible vertex");
    worst_grid = std::max(worst_grid, std::abs(sol.objective_value - grid));
    if (vertex) worst_vertex = std::max(worst_vertex, std::abs(sol.objective_value - *vertex));
  }
  const double elapsed = seconds_since(start);
  o.require(worst_grid <= 1e-3, "grid-search gap " + fmt("%.3g", worst_grid) + " > 1e-3");
  o.require(worst_vertex <= 1e-6, "vertex-enumeration gap " + fmt("%.3g", worst_vertex) + " > 1e-6");
  o.require(elapsed < 5.0, "took " + fmt("%.2f", elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances, max |grid gap| " + fmt("%.2e", worst_grid) +
               ", max |vertex gap| " + fmt("%.2e", worst_vertex) + ", " + fmt("%.2f s", elapsed);
  }
  return o;
}

std::vector<Sequence> test_corpus() {
  std::vector<Sequence> corpus;
  const std::string text = slurp(kDoosan);
  corpus.push_back(parse_sequence(text, *read_states_header(text)));
  const auto ledger = Ledger::read_file(kLedger, kWdl);
  for (const auto& team : ledger.teams()) corpus.push_back(ingest_ledger(ledger, team, 100).sequence);
  corpus.push_back(alternating(100));
  corpus.push_back(Sequence(kWdl, std::vector<State>(100, 0)));
  corpus.push_back(Sequence(kWdl, {0, 0, 2, 0, 2}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) corpus.push_back(testing::random_sequence(rng, kWdl, 30 + rng() % 90, 2 + i % 2));
  return corpus;
}

Outcome constraint_suite() {
  Outcome o;
  std::size_t models = 0;
  for (const auto& seq : test_corpus()) {
    for (std::size_t k = 1; k <= 13 && k + 1 <= seq.size(); ++k) {
      const MtdModel model = fit(seq, k);
      ++models;
      double sum = 0.0;
      for (double w : model.lambda()) {
        o.require(w >= 0.0, "negative lag weight");
        sum += w;
      }
      o.require(std::abs(sum - 1.0) <= 1e-9, "lag weights do not sum to 1");
      for (const auto& q : model.transition_matrices()) {
        for (State from = 0; from < 3; ++from) {
          if (q.column_is_zero(from)) continue;
          double s = 0.0;
          for (double p : q.probs.column(from)) s += p;
          o.require(std::abs(s - 1.0) <= 1e-9, "transition column neither stochastic nor zero");
        }
      }
      const auto& qs = model.transition_matrices();
      const auto xhat = model.stationary_hat().probs();
      const double res = model.lp_residual();
      o.require(std::abs(testing::l1_mismatch(qs, model.lambda(), xhat) - res) <= 1e-8,
                "lp_residual differs from recomputed L1 mismatch");
      o.require(res <= testing::l1_mismatch(qs, std::vector<double>(k, 1.0 / k), xhat) + 1e-12,
                "worse than uniform weights");
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<double> vertex(k, 0.0);
        vertex[l] = 1.0;
        o.require(res <= testing::l1_mismatch(qs, vertex, xhat) + 1e-12,
                  "worse than a single-lag vertex");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(models) + " fitted models checked";
  return o;
}

Outcome deterministic_chain_accuracy() {
  Outcome o;
  const auto start = Clock::now();
  for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 42ULL, 2018ULL}) {
    AssessmentConfig cfg;
    cfg.k_values = {1};
    cfg.seed = seed;
    o.require(run_assessment(alternating(100), cfg).per_k.at(1) == 1.0,
              "alternating k=1 accuracy below 1.0 for seed " + std::to_string(seed));
    AssessmentConfig all;
    all.seed = seed;
    for (const auto& [k, acc] : run_assessment(Sequence(kWdl, std::vector<State>(100, 0)), all).per_k) {
      o.require(acc == 1.0, "constant sequence accuracy below 1.0 at k=" + std::to_string(k));
    }
  }
  const double elapsed = seconds_since(start) / 5.0;
  o.require(elapsed < 1.0, "per-seed run took " + fmt("%.2f", elapsed) + " s");
  if (o.pass) o.detail = "5 seeds, " + fmt("%.3f s per seed", elapsed);
  return o;
}

Outcome stationary_check() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 gen(5);
  double worst_residual = 0.0, worst_freq = 0.0;
  for (int t = 0; t < 4; ++t) {
    const std::size_t k = 1 + static_cast<std::size_t>(t);
    std::vector<TransitionMatrix> qs;
    std::vector<double> lambda(k);
    double sum = 0.0;
    for (std::size_t l = 1; l <= k; ++l) {
      qs.push_back(testing::random_stochastic(gen, 3, l, 0.05));
      lambda[l - 1] = static_cast<double>(gen() % 100 + 1);
      sum += lambda[l - 1];
    }
    for (auto& w : lambda) w /= sum;
    const MtdModel model(kWdl, qs, lambda, Distribution({1.0 / 3, 1.0 / 3, 1.0 / 3}), 0.0);
    const auto mix = model.mixture_matrix();
    for (double v : mix.data()) o.require(v > 0.0, "mixture matrix not strictly positive");

    const auto x = stationary_distribution(model);
    double residual = 0.0;
    for (State i = 0; i < 3; ++i) {
      double mx = 0.0;
      for (State j = 0; j < 3; ++j) mx += mix(i, j) * x[j];
      residual += std::abs(mx - x[i]);
    }
    worst_residual = std::max(worst_residual, residual);

    Rng rng(100 + static_cast<std::uint64_t>(t));
    const auto path = simulate(model, History{std::vector<State>(k, 0)}, 100000, rng);
    std::vector<double> freq(3, 0.0);
    for (State s : path) freq[s] += 1e-5;
    for (State i = 0; i < 3; ++i) worst_freq = std::max(worst_freq, std::abs(freq[i] - x[i]));
  }
  const double elapsed = seconds_since(start);
  o.require(worst_residual <= 1e-8, "||MX - X||_1 = " + fmt("%.3g", worst_residual));
  o.require(worst_freq <= 0.02, "simulation frequency gap " + fmt("%.4f", worst_freq));
  o.require(elapsed < 5.0, "took " + fmt("%.2f", elapsed) + " s");
  if (o.pass) {
    o.detail = "4 models, max residual " + fmt("%.2e", worst_residual) + ", max frequency gap " +
               fmt("%.4f", worst_freq) + ", " + fmt("%.2f s", elapsed);
  }
  return o;
}

Outcome assess_determinism(const fs::path& dir) {
  Outcome o;
  auto run_once = [&](const std::string& tag) {
    const auto sub = dir / ("det_" + tag);
    std::string out;
    const int code = cli({"assess", "--ledger", kLedger, "--seed", "7", "--reps", "2", "--quiet",
                          "--report", (sub.string() + "_report.csv"), "--chart",
                          (sub.string() + "_chart.csv"), "--trace", (sub.string() + "_trace.csv")},
                         &out);
    o.require(code == 0, "assess exited with " + std::to_string(code));
    return out + slurp(sub.string() + "_report.csv") + slurp(sub.string() + "_chart.csv") +
           slurp(sub.string() + "_trace.csv");
  };
  const auto a = run_once("a");
  const auto b = run_once("b");
  o.require(!a.empty() && a == b, "outputs differ between identical runs");
  if (o.pass) o.detail = std::to_string(a.size()) + " bytes identical across two runs";
  return o;
}

Outcome full_pipeline(const fs::path& dir) {
  Outcome o;
  const auto start = Clock::now();
  const auto charts = dir / "charts";
  const auto report = dir / "pipeline_report.csv";
  const int code = cli({"assess", "--ledger", kLedger, "--k-max", "13", "--last", "100", "--seed",
                        "2018", "--chart-dir", charts.string(), "--svg", "--report",
                        report.string(), "--quiet"});
  const double elapsed = seconds_since(start);
  o.require(code == 0, "assess exited with " + std::to_string(code));
  std::size_t chart_files = 0;
  if (fs::exists(charts)) {
    for (const auto& e : fs::directory_iterator(charts)) chart_files += e.path().extension() == ".csv";
  }
  o.require(chart_files == 10, "expected 10 chart files, found " + std::to_string(chart_files));

  std::istringstream in(slurp(report));
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      o.require(false, "bad report row: " + line);
      break;
    }
    const double acc = std::stod(fields[3]);
    o.require(std::abs(acc * 10 - std::round(acc * 10)) <= 1e-9, "accuracy not a multiple of 0.1: " + line);
    ++rows;
  }
  o.require(rows == 10 * 13, "expected 130 report rows, found " + std::to_string(rows));
  o.require(elapsed < 10.0, "took " + fmt("%.2f", elapsed) + " s");
  if (o.pass) o.detail = "10 teams x 13 orders, 10 chart files, " + fmt("%.2f s", elapsed);
  return o;
}

Outcome parameter_count() {
  Outcome o;
  std::mt19937_64 rng(144);
  for (std::size_t m : {3u, 4u}) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back(std::string(1, static_cast<char>('A' + i)));
    const StateSpace space(labels);
    const auto seq = testing::random_sequence(rng, space, 100, m);
    for (std::size_t k = 1; k <= 13; ++k) {
      const auto doc = nlohmann::json::parse(model_to_json(fit(seq, k)));
      std::size_t matrix_entries = 0;
      for (const auto& q : doc.at("transition_matrices")) {
        o.require(q.at("values").size() == m * m, "matrix is not m x m");
        matrix_entries += q.at("values").size();
      }
      o.require(doc.at("lambda").size() == k, "lambda count differs from k");
      o.require(doc.at("transition_matrices").size() == k, "matrix count differs from k");
      o.require(doc.at("lambda").size() + matrix_entries == k + k * m * m,
                "parameter count differs from k + k m^2");
    }
  }
  if (o.pass) o.detail = "k = 1..13, m in {3, 4}: k weights + k m^2 matrix entries";
  return o;
}

}  // namespace

int main() {
  const fs::path dir = scratch_dir();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table1-reproduction", table1_reproduction},
      {"lp-oracle-equivalence", lp_oracle_equivalence},
      {"constraint-suite", constraint_suite},
      {"deterministic-chain-accuracy", deterministic_chain_accuracy},
      {"stationary-check", stationary_check},
      {"assess-determinism", [&] { return assess_determinism(dir); }},
      {"full-pipeline-ten-teams", [&] { return full_pipeline(dir); }},
      {"parameter-count", parameter_count},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  fs::remove_all(dir);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
