#ifndef MTDCHAIN_ASSESSMENT_HPP
#define MTDCHAIN_ASSESSMENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mtdchain/chain.hpp"

namespace mtdchain {

struct AssessmentConfig {
  std::vector<std::size_t> k_values = default_k_values();
  std::size_t n_eval = 10;
  std::size_t window = 100;
  std::uint64_t seed = 0;
  std::size_t repetitions = 1;

  static std::vector<std::size_t> default_k_values();

  /// Throws ConfigInvalid on an empty/duplicate/zero k list, n_eval == 0,
  /// repetitions == 0, window <= max k, or fewer eligible positions than
  /// n_eval.
  void validate() const;
  std::size_t max_k() const;
};

struct PredictionRecord {
  std::size_t repetition = 0;
  std::size_t k = 0;
  std::size_t position = 0;  // index within the window
  State predicted = 0;
  State actual = 0;
};

struct RepetitionAccuracy {
  std::size_t repetition = 0;
  std::size_t k = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;  // correct / n_eval
};

struct AssessmentReport {
  std::string team;
  AssessmentConfig config;
  std::size_t window_offset = 0;  // index of the window's first state in the input
  std::map<std::size_t, double> per_k;  // mean accuracy over repetitions
  std::vector<std::vector<std::size_t>> eval_positions;  // per repetition
  std::vector<RepetitionAccuracy> accuracies;  // ordered by (repetition, k)
  std::vector<PredictionRecord> trace;
};

/// In-sample order assessment. The most recent `window` states are used both
/// to fit an order-k model for every k and as the pool of evaluation games.
/// Each repetition draws n_eval distinct positions from [max_k, window), shared
/// by all k, then predicts every position with one categorical draw from the
/// order-k model given the true preceding states.
///
/// Random streams come from derive_seed(cfg.seed, fnv1a64(team), k, rep), with
/// k = 0 for position sampling, so results do not depend on how teams or
/// orders are scheduled. Throws WindowTooShort or ConfigInvalid.
AssessmentReport run_assessment(const Sequence& seq, const AssessmentConfig& cfg,
                                const std::string& team = "sequence");

/// Orders by descending accuracy; ties go to the smaller k.
std::vector<std::pair<std::size_t, double>> rank_orders(const AssessmentReport& report);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// CSV with header "team,k,repetition,accuracy,seed", one row per
/// (repetition, k).
void write_report_csv(std::ostream& out, const std::vector<AssessmentReport>& reports);

/// CSV with header "team,repetition,k,position,predicted,actual".
void write_trace_csv(std::ostream& out, const std::vector<AssessmentReport>& reports,
                     const StateSpace& space);

}  // namespace mtdchain

#endif  // MTDCHAIN_ASSESSMENT_HPP
