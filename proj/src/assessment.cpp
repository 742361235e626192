#include "mtdchain/assessment.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "mtdchain/ledger.hpp"
#include "mtdchain/model.hpp"
#include "mtdchain/random.hpp"

namespace mtdchain {

std::vector<std::size_t> AssessmentConfig::default_k_values() {
  std::vector<std::size_t> ks(13);
  std::iota(ks.begin(), ks.end(), std::size_t{1});
  return ks;
}

std::size_t AssessmentConfig::max_k() const {
  return k_values.empty() ? 0 : *std::max_element(k_values.begin(), k_values.end());
}

void AssessmentConfig::validate() const {
  if (k_values.empty()) throw Error(Errc::ConfigInvalid, "no orders to assess");
  if (std::set<std::size_t>(k_values.begin(), k_values.end()).size() != k_values.size()) {
    throw Error(Errc::ConfigInvalid, "duplicate order in k list");
  }
  if (std::find(k_values.begin(), k_values.end(), std::size_t{0}) != k_values.end()) {
    throw Error(Errc::ConfigInvalid, "order must be >= 1");
  }
  if (n_eval == 0) throw Error(Errc::ConfigInvalid, "n_eval must be >= 1");
  if (repetitions == 0) throw Error(Errc::ConfigInvalid, "repetitions must be >= 1");
  if (window <= max_k()) {
    throw Error(Errc::ConfigInvalid, "window must exceed the largest order");
  }
  if (window - max_k() < n_eval) {
    throw Error(Errc::ConfigInvalid, "only " + std::to_string(window - max_k()) +
                                         " eligible positions for n_eval = " +
                                         std::to_string(n_eval));
  }
}

namespace {

// n distinct indices from [lo, hi), in draw order (partial Fisher-Yates).
std::vector<std::size_t> sample_positions(std::size_t lo, std::size_t hi, std::size_t n, Rng& rng) {
  std::vector<std::size_t> pool(hi - lo);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_index(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

}  // namespace

AssessmentReport run_assessment(const Sequence& seq, const AssessmentConfig& cfg,
                                const std::string& team) {
  cfg.validate();
  if (seq.size() < cfg.window) {
    throw Error(Errc::WindowTooShort, "sequence has " + std::to_string(seq.size()) +
                                          " states, window needs " + std::to_string(cfg.window));
  }

  AssessmentReport report;
  report.team = team;
  report.config = cfg;
  report.window_offset = seq.size() - cfg.window;
  const Sequence window = seq.tail(cfg.window);
  const std::uint64_t team_key = fnv1a64(team);

  std::vector<std::size_t> ks = cfg.k_values;
  std::sort(ks.begin(), ks.end());
  std::vector<MtdModel> models;
  models.reserve(ks.size());
  for (std::size_t k : ks) models.push_back(fit(window, k));

  std::map<std::size_t, std::size_t> correct_total;
  for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
    Rng position_rng(derive_seed(cfg.seed, team_key, 0, rep));
    report.eval_positions.push_back(
        sample_positions(cfg.max_k(), cfg.window, cfg.n_eval, position_rng));
    const auto& positions = report.eval_positions.back();

    for (std::size_t i = 0; i < ks.size(); ++i) {
      const std::size_t k = ks[i];
      Rng rng(derive_seed(cfg.seed, team_key, k, rep));
      std::size_t correct = 0;
      for (std::size_t pos : positions) {
        const State predicted = sample_next(models[i], History::before(window, pos, k), rng);
        const State actual = window[pos];
        correct += predicted == actual ? 1 : 0;
        report.trace.push_back({rep, k, pos, predicted, actual});
      }
      report.accuracies.push_back({rep, k, correct,
                                   static_cast<double>(correct) / static_cast<double>(cfg.n_eval)});
      correct_total[k] += correct;
    }
  }

  const double denom = static_cast<double>(cfg.n_eval * cfg.repetitions);
  for (const auto& [k, c] : correct_total) report.per_k[k] = static_cast<double>(c) / denom;
  return report;
}

std::vector<std::pair<std::size_t, double>> rank_orders(const AssessmentReport& report) {
  std::vector<std::pair<std::size_t, double>> ranked(report.per_k.begin(), report.per_k.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_report_csv(std::ostream& out, const std::vector<AssessmentReport>& reports) {
  out << "team,k,repetition,accuracy,seed\n";
  for (const auto& r : reports) {
    for (const auto& a : r.accuracies) {
      out << csv_escape(r.team) << ',' << a.k << ',' << a.repetition << ',' << format_double(a.accuracy) << ','
          << r.config.seed << '\n';
    }
  }
}

void write_trace_csv(std::ostream& out, const std::vector<AssessmentReport>& reports,
                     const StateSpace& space) {
  out << "team,repetition,k,position,predicted,actual\n";
  for (const auto& r : reports) {
    for (const auto& p : r.trace) {
      out << csv_escape(r.team) << ',' << p.repetition << ',' << p.k << ',' << p.position << ','
          << space.label(p.predicted) << ',' << space.label(p.actual) << '\n';
    }
  }
}

}  // namespace mtdchain
